// csl: exact coincidence-site computations for lattices and modules.
//
// Subcommands: index, enumerate, count, verify, classify, hierarchy.
// Single results print as JSON, tables as CSV (or JSON with --format json).
// Exit codes: 0 success, 2 parse error, 3 not a coincidence isometry,
// 4 resource cap exceeded (a resume token is reported).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csl/counting.hpp"
#include "csl/engine.hpp"
#include "csl/enumerate.hpp"
#include "csl/errors.hpp"
#include "csl/textio.hpp"

using json = nlohmann::ordered_json;
using namespace csl;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_infinite = 3;
constexpr int exit_cap = 4;

struct Options {
    std::string structure;
    std::string matrix, quaternion, pair, quotient;
    long long max = 0;
    long long sigma = 0;
    std::string format = "csv";
    std::uint64_t cap = 0;
    unsigned threads = 1;
};

StructureId require_structure(const std::string& name) {
    auto id = structure_by_name(name);
    if (!id) throw std::invalid_argument("unknown structure \"" + name + "\"");
    return *id;
}

std::uint64_t effective_cap(const Options& o, std::uint64_t fallback) {
    if (o.cap) return o.cap;
    if (const char* env = std::getenv("CSL_DEFAULT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

IsometryHandle parse_handle(StructureId id, const Options& o) {
    const auto& inf = structure_info(id);
    int given = !o.matrix.empty() + !o.quaternion.empty() + !o.pair.empty() + !o.quotient.empty();
    if (given != 1)
        throw std::invalid_argument("give exactly one of --matrix/--quaternion/--pair/--quotient");
    if (!o.quotient.empty()) {
        size_t slash = o.quotient.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("--quotient needs the form num/den");
        std::string num = o.quotient.substr(0, slash), den = o.quotient.substr(slash + 1);
        if (id == StructureId::M10)
            return IsometryHandle::from_cyclo_quotient(parse_cyclo(num), parse_cyclo(den));
        if (id == StructureId::Z2)
            return IsometryHandle::from_gauss_quotient(parse_gauss(num), parse_gauss(den));
        throw std::invalid_argument("--quotient applies to Z2 and M10 only");
    }
    if (!o.quaternion.empty()) {
        if (inf.golden_field)
            return IsometryHandle::from_golden_quaternion(parse_golden_quaternion(o.quaternion));
        return IsometryHandle::from_quaternion(parse_quaternion(o.quaternion));
    }
    if (!o.pair.empty()) {
        size_t semi = o.pair.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("--pair needs the form (..);(..)");
        std::string first = o.pair.substr(0, semi), second = o.pair.substr(semi + 1);
        if (inf.golden_field)
            return IsometryHandle::from_golden_pair(parse_golden_quaternion(first),
                                                    parse_golden_quaternion(second));
        return IsometryHandle::from_pair(parse_quaternion(first), parse_quaternion(second));
    }
    // matrices with a golden-ratio symbol go through the Q(tau) path; they are
    // legal input for any structure (and report an infinite index where the
    // entries leave the structure's coincidence field)
    if (inf.golden_field || o.matrix.find('t') != std::string::npos)
        return IsometryHandle::from_golden_matrix(parse_golden_matrix(o.matrix));
    return IsometryHandle::from_matrix(parse_matrix(o.matrix));
}

std::string handle_param_text(const IsometryHandle& h) {
    if (h.quat) return format_quaternion(*h.quat);
    if (h.quat_pair)
        return format_quaternion(h.quat_pair->first) + ";" + format_quaternion(h.quat_pair->second);
    if (h.golden_quat) return format_golden_quaternion(*h.golden_quat);
    if (h.golden_pair)
        return format_golden_quaternion(h.golden_pair->first) + ";" +
               format_golden_quaternion(h.golden_pair->second);
    if (h.gauss_quotient)
        return format_gauss(h.gauss_quotient->first) + "/" + format_gauss(h.gauss_quotient->second);
    if (h.cyclo_quotient)
        return format_cyclo(h.cyclo_quotient->first) + "/" + format_cyclo(h.cyclo_quotient->second);
    if (h.rational) return format_matrix(*h.rational);
    if (h.golden) return format_golden_matrix(*h.golden);
    return "";
}

int cmd_index(const Options& o) {
    StructureId id = require_structure(o.structure);
    IsometryHandle h = parse_handle(id, o);

    json out;
    out["structure"] = o.structure;
    auto res = sigma_oracle(id, h);
    if (!res.finite) {
        out["sigma"] = "infinite";
        std::cout << out.dump() << "\n";
        return exit_infinite;
    }
    std::string method = "oracle";
    try {
        Int formula = sigma_closed_form(id, h);
        if (formula != res.sigma)
            throw std::logic_error("closed form disagrees with the oracle; please report");
        method = "closed-form";
    } catch (const std::domain_error&) {
        // no formula for this handle/structure; the oracle value stands
    }
    out["sigma"] = res.sigma.str();
    if (h.rational) out["denominator"] = matrix_denominator(*h.rational).str();
    else if (h.golden) out["denominator"] = format_golden(matrix_denominator_golden(*h.golden));
    out["method"] = method;
    if (res.csl_basis) out["csl_basis"] = format_matrix(*res.csl_basis);
    if (h.rational && h.rational->rows() == 3 && h.rational->det() == 1) {
        Quat<Rat> q = cayley_invert(*h.rational);
        Int d = 1;
        for (const Rat& c : q.components()) d = lcm(d, denominator(c));
        QuatZ qi{numerator(q.w * d), numerator(q.x * d), numerator(q.y * d), numerator(q.z * d)};
        auto [qp, content] = make_primitive(qi);
        out["axis"] = "(" + qp.x.str() + "," + qp.y.str() + "," + qp.z.str() + ")";
        Rat cosv = Rat(qp.w * qp.w - qp.x * qp.x - qp.y * qp.y - qp.z * qp.z) / Rat(qp.norm());
        out["cos_angle"] = format_rational(cosv);
    }
    std::cout << out.dump() << "\n";
    return exit_ok;
}

int cmd_enumerate(const Options& o) {
    StructureId id = require_structure(o.structure);
    if (o.max < 1) throw std::invalid_argument("--max must be at least 1");
    auto entries =
        enumerate_rotations(id, Int(o.max), o.threads, effective_cap(o, 2'000'000));
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& e : entries)
            arr.push_back({{"sigma", e.sigma.str()}, {"param", handle_param_text(e.handle)}});
        std::cout << json{{"structure", o.structure}, {"rotations", arr}}.dump() << "\n";
    } else {
        std::cout << "sigma,param\n";
        for (const auto& e : entries)
            std::cout << e.sigma.str() << ",\"" << handle_param_text(e.handle) << "\"\n";
    }
    return exit_ok;
}

int cmd_count(const Options& o) {
    StructureId id = require_structure(o.structure);
    if (o.max < 1) throw std::invalid_argument("--max must be at least 1");
    const auto& f = structure_counting_function(id);
    auto coeffs = f.table(std::uint64_t(o.max));
    if (o.format == "json") {
        json arr = json::array();
        for (long long m = 1; m <= o.max; ++m) arr.push_back(coeffs[m - 1].str());
        std::cout << json{{"structure", o.structure}, {"function", f.name()}, {"coefficients", arr}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "m,f\n";
        for (long long m = 1; m <= o.max; ++m)
            std::cout << m << "," << coeffs[m - 1].str() << "\n";
    }
    return exit_ok;
}

int cmd_hierarchy(const Options& o) {
    if (o.max < 1) throw std::invalid_argument("--max must be at least 1");
    if (o.format == "json") {
        json arr = json::array();
        for (long long m = 1; m <= o.max; ++m) {
            auto h = hierarchy_counts(Int(m));
            arr.push_back({{"m", m},
                           {"all", h.all.str()},
                           {"square", h.square.str()},
                           {"primitive_square", h.primitive_square.str()},
                           {"csl", h.csl.str()}});
        }
        std::cout << json{{"hierarchy", arr}}.dump() << "\n";
    } else {
        std::cout << "m,all,square,primitive_square,csl\n";
        for (long long m = 1; m <= o.max; ++m) {
            auto h = hierarchy_counts(Int(m));
            std::cout << m << "," << h.all.str() << "," << h.square.str() << ","
                      << h.primitive_square.str() << "," << h.csl.str() << "\n";
        }
    }
    return exit_ok;
}

int cmd_classify(const Options& o) {
    StructureId id = require_structure(o.structure);
    if (o.sigma < 1) throw std::invalid_argument("--sigma must be at least 1");
    auto orbits = classify_csls(id, Int(o.sigma), effective_cap(o, 1'000'000));
    json out;
    out["structure"] = o.structure;
    out["sigma"] = o.sigma;
    out["csl_count"] = orbits.csls.size();
    out["orbit_count"] = orbits.orbits.size();
    json arr = json::array();
    for (const auto& orbit : orbits.orbits) {
        json rep;
        rep["size"] = orbit.size();
        rep["representative"] = format_matrix(orbits.csls[orbit.front()]);
        arr.push_back(rep);
    }
    out["orbits"] = arr;
    std::cout << out.dump() << "\n";
    return exit_ok;
}

int verify_failure(const std::string& what) {
    std::cerr << "verify: mismatch: " << what << "\n";
    return 1;
}

int cmd_verify(const Options& o) {
    StructureId id = require_structure(o.structure);
    long long max = o.max > 0 ? o.max : 20;
    const auto& inf = structure_info(id);
    const auto& f = structure_counting_function(id);

    if (id == StructureId::H4) {
        // no closed index formula; check the convolution identity of the
        // counting function and the unit pairs instead
        auto fi = SeriesTable::materialize(f_h4(), std::uint64_t(max));
        auto fo = SeriesTable::materialize(f_icosahedral(), std::uint64_t(max));
        auto conv = fo.convolve(fo.shifted());
        if (!(fi == conv)) return verify_failure("H4 counting function vs convolution");
        std::cout << "verified H4 counting identity up to " << max << "\n";
        return exit_ok;
    }

    auto entries = enumerate_rotations(id, Int(max), o.threads, effective_cap(o, 2'000'000));
    std::map<Int, Int> counts;
    for (const auto& e : entries) {
        counts[e.sigma] += 1;
        auto oracle = sigma_oracle(id, e.handle);
        if (!oracle.finite || oracle.sigma != e.sigma)
            return verify_failure("oracle index at " + handle_param_text(e.handle));
        Int formula = sigma_closed_form(id, e.handle);
        if (formula != oracle.sigma)
            return verify_failure("closed form at " + handle_param_text(e.handle));
    }
    // enumeration concordance with the counting function (complete ranges only)
    if (id != StructureId::MC && id != StructureId::H4) {
        for (long long m = 1; m <= max; ++m) {
            Int expected = f(Int(m)) * inf.rotation_group_order;
            Int got = counts.count(Int(m)) ? counts[Int(m)] : Int(0);
            if (expected != got)
                return verify_failure("rotation count at index " + std::to_string(m) + ": got " +
                                      got.str() + ", expected " + expected.str());
        }
    }
    std::cout << "verified " << entries.size() << " rotations of " << o.structure
              << " up to index " << max << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coincidence-site lattice and module computations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_structure) {
        if (needs_structure)
            cmd->add_option("--structure", o.structure, "structure name")->required();
        cmd->add_option("--format", o.format, "csv or json");
        cmd->add_option("--cap", o.cap, "resource cap (default from CSL_DEFAULT_CAP)");
        cmd->add_option("--threads", o.threads, "worker threads for enumerations");
    };

    auto* index = app.add_subcommand("index", "coincidence index of one isometry");
    add_common(index, true);
    index->add_option("--matrix", o.matrix, "matrix text, rows ';', entries ','");
    index->add_option("--quaternion", o.quaternion, "quaternion (k,l,m,n)");
    index->add_option("--pair", o.pair, "quaternion pair (..);(..)");
    index->add_option("--quotient", o.quotient, "ring quotient num/den");

    auto* enumerate = app.add_subcommand("enumerate", "all rotations up to an index bound");
    add_common(enumerate, true);
    enumerate->add_option("--max", o.max, "largest index")->required();

    auto* count = app.add_subcommand("count", "counting-function table");
    add_common(count, true);
    count->add_option("--max", o.max, "table bound")->required();

    auto* verify = app.add_subcommand("verify", "closed forms against the oracle");
    add_common(verify, true);
    verify->add_option("--max", o.max, "largest index");

    auto* classify = app.add_subcommand("classify", "CSL orbits under the point group");
    add_common(classify, true);
    classify->add_option("--sigma", o.sigma, "coincidence index")->required();

    auto* hierarchy = app.add_subcommand("hierarchy", "sublattice counting hierarchy");
    add_common(hierarchy, false);
    hierarchy->add_option("--max", o.max, "table bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_parse;
    }

    try {
        if (app.got_subcommand(index)) return cmd_index(o);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
        if (app.got_subcommand(count)) return cmd_count(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(classify)) return cmd_classify(o);
        if (app.got_subcommand(hierarchy)) return cmd_hierarchy(o);
    } catch (const resource_cap_error& e) {
        std::cout << json{{"error", "resource cap exceeded"}, {"resume", e.resume_token()}}.dump()
                  << "\n";
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_parse;
}
