#include "csl/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace csl {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

[[noreturn]] void parse_fail(const std::string& what, const std::string& text) {
    throw std::invalid_argument("parse error: " + what + " in \"" + text + "\"");
}

// split "a+b-c" into signed terms "a", "+b", "-c"
std::vector<std::string> signed_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '/' && s[i - 1] != '+' &&
            s[i - 1] != '-' && s[i - 1] != '*' && s[i - 1] != '^') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

Int parse_integer(const std::string& s, const std::string& ctx) {
    if (s.empty()) parse_fail("empty integer", ctx);
    size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (pos == s.size()) parse_fail("sign without digits", ctx);
    for (size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) parse_fail("bad digit", ctx);
    return Int(s);
}

Rat parse_rat_token(const std::string& s, const std::string& ctx) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(s, ctx));
    Int num = parse_integer(s.substr(0, slash), ctx);
    Int den = parse_integer(s.substr(slash + 1), ctx);
    if (den == 0) parse_fail("zero denominator", ctx);
    return Rat(num, den);
}

// term of the form [coef][*]sym or plain coef; returns (coef, has_sym)
std::pair<Rat, bool> parse_symbol_term(std::string term, char sym, const std::string& ctx) {
    size_t at = term.find(sym);
    if (at == std::string::npos) return {parse_rat_token(term, ctx), false};
    if (at + 1 != term.size()) parse_fail("trailing characters after symbol", ctx);
    term.erase(at);
    if (!term.empty() && term.back() == '*') term.pop_back();
    if (term.empty() || term == "+") return {Rat(1), true};
    if (term == "-") return {Rat(-1), true};
    return {parse_rat_token(term, ctx), true};
}

std::string format_int(const Int& v) { return v.str(); }

} // namespace

Rat parse_rational(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) parse_fail("empty rational", text);
    return parse_rat_token(s, text);
}

std::string format_rational(const Rat& v) {
    if (denominator(v) == 1) return format_int(numerator(v));
    return format_int(numerator(v)) + "/" + format_int(denominator(v));
}

GaussInt parse_gauss(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) parse_fail("empty value", text);
    Int re = 0, im = 0;
    for (const std::string& term : signed_terms(s)) {
        auto [coef, has_i] = parse_symbol_term(term, 'i', text);
        if (denominator(coef) != 1) parse_fail("non-integer coefficient", text);
        (has_i ? im : re) += numerator(coef);
    }
    return {re, im};
}

std::string format_gauss(const GaussInt& v) {
    if (v.is_zero()) return "0";
    std::string out;
    if (v.re() != 0) out = format_int(v.re());
    if (v.im() != 0) {
        std::string coef = format_int(v.im());
        if (coef == "1") coef.clear();
        else if (coef == "-1") coef = "-";
        if (!out.empty() && !coef.empty() && coef[0] != '-') out += "+";
        else if (!out.empty() && coef.empty()) out += "+";
        out += coef + "i";
    }
    return out;
}

GoldenInt parse_golden(const std::string& text) {
    GoldenRat g = parse_golden_rat(text);
    if (!g.is_integral()) parse_fail("non-integer golden coefficients", text);
    return g.to_integer();
}

std::string format_golden(const GoldenInt& v) { return format_golden_rat(GoldenRat(v)); }

GoldenRat parse_golden_rat(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) parse_fail("empty value", text);
    Rat a = 0, b = 0;
    for (const std::string& term : signed_terms(s)) {
        auto [coef, has_t] = parse_symbol_term(term, 't', text);
        (has_t ? b : a) += coef;
    }
    return {a, b};
}

std::string format_golden_rat(const GoldenRat& v) {
    if (v.is_zero()) return "0";
    std::string out;
    if (v.a() != 0) out = format_rational(v.a());
    if (v.b() != 0) {
        std::string coef = format_rational(v.b());
        if (coef == "1") coef.clear();
        else if (coef == "-1") coef = "-";
        if (!out.empty() && (coef.empty() || coef[0] != '-')) out += "+";
        out += coef + "t";
    }
    return out;
}

CycloInt parse_cyclo(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.empty()) parse_fail("empty value", text);
    Int c[4] = {Int(0), Int(0), Int(0), Int(0)};
    for (std::string term : signed_terms(s)) {
        size_t at = term.find('x');
        int power = 0;
        if (at != std::string::npos) {
            std::string tail = term.substr(at + 1);
            term.erase(at);
            if (!term.empty() && term.back() == '*') term.pop_back();
            if (tail.empty()) power = 1;
            else if (tail[0] == '^') power = (int)parse_integer(tail.substr(1), text).convert_to<long>();
            else parse_fail("bad power", text);
            if (power < 0 || power > 4) parse_fail("power out of range", text);
        }
        Rat coef;
        if (at == std::string::npos) coef = parse_rat_token(term, text);
        else if (term.empty() || term == "+") coef = 1;
        else if (term == "-") coef = -1;
        else coef = parse_rat_token(term, text);
        if (denominator(coef) != 1) parse_fail("non-integer coefficient", text);
        if (power == 4) {
            // reduce with x^4 = -(1 + x + x^2 + x^3)
            for (int k = 0; k < 4; ++k) c[k] -= numerator(coef);
        } else {
            c[power] += numerator(coef);
        }
    }
    return {c[0], c[1], c[2], c[3]};
}

std::string format_cyclo(const CycloInt& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (v[k] == 0) continue;
        std::string coef = format_int(v[k]);
        if (k > 0) {
            if (coef == "1") coef.clear();
            else if (coef == "-1") coef = "-";
            else coef += "*";
        }
        if (!out.empty() && (coef.empty() || coef[0] != '-')) out += "+";
        out += coef;
        if (k == 1) out += "x";
        else if (k == 2) out += "x^2";
        else if (k == 3) out += "x^3";
    }
    return out;
}

namespace {

template <typename T, typename ParseEntry>
Mat<T> parse_matrix_generic(const std::string& text, ParseEntry parse_entry) {
    std::string s = strip_ws(text);
    if (s.empty()) parse_fail("empty matrix", text);
    std::vector<std::vector<T>> rows;
    std::istringstream row_stream(s);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<T> entries;
        std::istringstream entry_stream(row);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) entries.push_back(parse_entry(entry));
        if (entries.empty()) parse_fail("empty matrix row", text);
        rows.push_back(std::move(entries));
    }
    size_t cols = rows.at(0).size();
    for (const auto& r : rows)
        if (r.size() != cols) parse_fail("ragged matrix rows", text);
    Mat<T> m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

template <typename T, typename FormatEntry>
std::string format_matrix_generic(const Mat<T>& m, FormatEntry format_entry) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ";";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += format_entry(m(i, j));
        }
    }
    return out;
}

} // namespace

RatMat parse_matrix(const std::string& text) {
    return parse_matrix_generic<Rat>(text, [&](const std::string& e) { return parse_rational(e); });
}

std::string format_matrix(const RatMat& m) {
    return format_matrix_generic(m, [](const Rat& v) { return format_rational(v); });
}

IntMat parse_int_matrix(const std::string& text) {
    return parse_matrix_generic<Int>(text,
                                     [&](const std::string& e) { return parse_integer(strip_ws(e), text); });
}

std::string format_matrix(const IntMat& m) {
    return format_matrix_generic(m, [](const Int& v) { return v.str(); });
}

Mat<GoldenRat> parse_golden_matrix(const std::string& text) {
    return parse_matrix_generic<GoldenRat>(
        text, [&](const std::string& e) { return parse_golden_rat(e); });
}

std::string format_golden_matrix(const Mat<GoldenRat>& m) {
    return format_matrix_generic(m, [](const GoldenRat& v) { return format_golden_rat(v); });
}

namespace {

std::vector<std::string> quaternion_parts(const std::string& text) {
    std::string s = strip_ws(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        parse_fail("quaternion needs the form (k,l,m,n)", text);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    std::istringstream stream(s);
    std::string part;
    while (std::getline(stream, part, ',')) parts.push_back(part);
    if (parts.size() != 4) parse_fail("quaternion needs 4 components", text);
    return parts;
}

} // namespace

QuatZ parse_quaternion(const std::string& text) {
    auto parts = quaternion_parts(text);
    std::array<Int, 4> c;
    for (int i = 0; i < 4; ++i) {
        Rat v = parse_rational(parts[i]);
        if (denominator(v) != 1) parse_fail("integer quaternion has fractions", text);
        c[i] = numerator(v);
    }
    return {c[0], c[1], c[2], c[3]};
}

std::string format_quaternion(const QuatZ& q) {
    return "(" + q.w.str() + "," + q.x.str() + "," + q.y.str() + "," + q.z.str() + ")";
}

QuatG parse_golden_quaternion(const std::string& text) {
    auto parts = quaternion_parts(text);
    std::array<GoldenRat, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = parse_golden_rat(parts[i]);
    return {c[0], c[1], c[2], c[3]};
}

std::string format_golden_quaternion(const QuatG& q) {
    return "(" + format_golden_rat(q.w) + "," + format_golden_rat(q.x) + "," +
           format_golden_rat(q.y) + "," + format_golden_rat(q.z) + ")";
}

} // namespace csl
