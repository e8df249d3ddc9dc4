// Integration checks for the csl command line: exit codes, output shapes,
// run-to-run determinism.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CSL_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

} // namespace

int main() {
    using nlohmann::json;

    auto idx = run("index --structure Z3 --quaternion \"(0,1,1,1)\"");
    expect(idx.exit_code == 0, "index exit code");
    auto j = json::parse(idx.out);
    expect(j["sigma"] == "3", "index sigma 3");
    expect(j["denominator"] == "3", "index denominator");
    expect(j["axis"] == "(1,1,1)", "index axis");
    expect(j["cos_angle"] == "-1", "index angle");
    expect(j["method"] == "closed-form", "index method");

    auto ident = run("index --structure Z2 --matrix \"1,0;0,1\"");
    expect(json::parse(ident.out)["sigma"] == "1", "identity sigma 1");

    // a fivefold icosahedral rotation is irrational on the cubic lattice
    auto inf = run("index --structure Z3 --matrix \"1/2t,1/2-1/2t,-1/2;1/2-1/2t,1/2,-1/2t;"
                   "1/2,1/2t,-1/2+1/2t\"");
    expect(inf.exit_code == 3, "non-coincidence exit code 3");
    expect(json::parse(inf.out)["sigma"] == "infinite", "infinite sigma report");

    auto bad = run("index --structure Z3 --quaternion \"(0,1,1\"");
    expect(bad.exit_code == 2, "parse error exit code 2");

    auto unknown = run("index --structure WAT --quaternion \"(0,1,1,1)\"");
    expect(unknown.exit_code == 2, "unknown structure exit code 2");

    auto d4 = run("count --structure D4 --max 23");
    std::vector<long> expect_f = {1, 0, 16, 0, 36, 0, 64, 0, 168, 0, 144, 0,
                                  196, 0, 576, 0, 324, 0, 400, 0, 1024, 0, 576};
    std::string want = "m,f\n";
    for (size_t i = 0; i < expect_f.size(); ++i)
        want += std::to_string(i + 1) + "," + std::to_string(expect_f[i]) + "\n";
    expect(d4.out == want, "D4 counting table");

    auto cls = run("classify --structure Z3 --sigma 13");
    auto cj = json::parse(cls.out);
    expect(cj["csl_count"] == 14, "classify CSL count");
    expect(cj["orbit_count"] >= 2, "classify orbit count");

    auto en = run("enumerate --structure Z2 --max 1");
    expect(en.exit_code == 0, "enumerate exit");
    int lines = 0;
    for (char c : en.out)
        if (c == '\n') ++lines;
    expect(lines == 5, "enumerate Z2 max 1: header + 4 rotations");

    auto hi = run("hierarchy --max 2");
    expect(hi.out == "m,all,square,primitive_square,csl\n1,1,1,1,1\n2,3,1,1,0\n",
           "hierarchy table");

    auto ver = run("verify --structure Z3 --max 9");
    expect(ver.exit_code == 0, "verify Z3 exit");

    auto capped = run("enumerate --structure Z3 --max 15 --cap 10");
    expect(capped.exit_code == 4, "cap exit code 4");
    auto cap_j = json::parse(capped.out);
    expect(cap_j.contains("resume"), "resume token present");

    // byte-identical reruns
    auto again = run("enumerate --structure Z2 --max 1");
    expect(en.out == again.out, "deterministic output");
    auto d4_again = run("count --structure D4 --max 23");
    expect(d4.out == d4_again.out, "deterministic count");

    auto quot = run("index --structure M10 --quotient \"2+x/2+x^4\"");
    expect(json::parse(quot.out)["sigma"] == "11", "tenfold quotient index");

    auto pair = run("index --structure D4 --pair \"(0,1,1,1);(0,1,1,1)\"");
    expect(json::parse(pair.out)["sigma"] == "3", "pair index");

    if (failures) {
        std::cerr << failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
