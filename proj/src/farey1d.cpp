#include "tt/farey1d.hpp"

#include <algorithm>
#include <sstream>

namespace tt {

Frac make_frac(const Int& p, const Int& q) {
    if (q <= 0) fail_domain("BadFraction", "non-positive denominator");
    if (p < 0 || p > q) fail_domain("BadFraction", "value outside [0,1]");
    Int g = gcd(p, q);
    return {p / g, q / g};
}

Frac frac_of(const Rat& x) { return make_frac(x.get_num(), x.get_den()); }

bool frac_less(const Frac& a, const Frac& b) { return a.p * b.q < b.p * a.q; }

CF cf_zero() { return {CF::Kind::zero, {}}; }
CF cf_one() { return {CF::Kind::one, {}}; }

CF cf_digits(std::vector<Int> digits) {
    if (digits.empty()) fail_domain("BadCF", "empty digit list");
    for (const Int& d : digits)
        if (d < 1) fail_domain("BadCF", "digits must be >= 1");
    if (digits.back() < 2) fail_domain("BadCF", "last digit must be > 1");
    return {CF::Kind::digits, std::move(digits)};
}

CF cf_expand(const Frac& x) {
    if (x.p == 0) return cf_zero();
    if (x.p == x.q) return cf_one();
    // Euclid on (q, p); the final quotient is automatically > 1.
    std::vector<Int> digits;
    Int a = x.q, b = x.p;
    while (b != 0) {
        digits.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    return cf_digits(std::move(digits));
}

Frac cf_eval_digits(const std::vector<Int>& digits) {
    Rat v(0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        Rat d(*it);
        v = Rat(1) / (d + v);
    }
    return frac_of(v);
}

Frac cf_eval(const CF& cf) {
    switch (cf.kind) {
        case CF::Kind::zero: return {0, 1};
        case CF::Kind::one: return {1, 1};
        case CF::Kind::digits: return cf_eval_digits(cf.digits);
    }
    fail_domain("BadCF", "unreachable");
}

std::vector<Int> cf_normalize_digits(std::vector<Int> digits) {
    if (digits.size() > 1 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
    return digits;
}

Int cf_digit_sum(const CF& cf) {
    Int s = 0;
    for (const Int& d : cf.digits) s += d;
    return s;
}

Rat farey_map(const Rat& x) {
    if (x < 0 || x > 1) fail_domain("BadFraction", "value outside [0,1]");
    if (x <= Rat(1, 2)) return x / (Rat(1) - x);
    return (Rat(1) - x) / x;
}

Rat psi0(const Rat& x) { return x / (Rat(1) + x); }
Rat psi1(const Rat& x) { return Rat(1) / (Rat(1) + x); }

std::vector<Frac> stern_brocot(long n) {
    if (n < -1) fail_domain("BadLevel", "stern_brocot needs n >= -1");
    std::vector<Frac> cur = {{0, 1}, {1, 1}};
    for (long i = 0; i <= n; ++i) {
        std::vector<Frac> next;
        next.reserve(cur.size() * 2 - 1);
        for (size_t j = 0; j + 1 < cur.size(); ++j) {
            next.push_back(cur[j]);
            next.push_back({cur[j].p + cur[j + 1].p, cur[j].q + cur[j + 1].q});
        }
        next.push_back(cur.back());
        cur = std::move(next);
    }
    return cur;
}

std::vector<Frac> farey_level(long n) {
    if (n < 0) fail_domain("BadLevel", "farey_level needs n >= 0");
    std::vector<Frac> prev = stern_brocot(n - 1);
    std::vector<Frac> cur = stern_brocot(n);
    std::vector<Frac> out;
    std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(),
                        std::back_inserter(out),
                        [](const Frac& a, const Frac& b) { return frac_less(a, b); });
    return out;
}

Int farey_rank(const Frac& x) {
    if (x.p == 0 || x.p == x.q) fail_domain("RootOrVertex", "rank undefined for 0 and 1");
    CF cf = cf_expand(x);
    return cf_digit_sum(cf) - 2;
}

namespace {

const Mat2& mat_l() {
    static Mat2 m = [] {
        Mat2 v;
        v.at(0, 0) = 1; v.at(0, 1) = 0;
        v.at(1, 0) = 1; v.at(1, 1) = 1;
        return v;
    }();
    return m;
}

const Mat2& mat_r() {
    static Mat2 m = [] {
        Mat2 v;
        v.at(0, 0) = 1; v.at(0, 1) = 1;
        v.at(1, 0) = 0; v.at(1, 1) = 1;
        return v;
    }();
    return m;
}

// Run-length exponents of the {L,R} walk below the root: L^(a1-1) R^(a2) ...
// with the final exponent reduced by one.
std::vector<std::pair<char, Int>> path_runs(const CF& cf) {
    std::vector<std::pair<char, Int>> runs;
    size_t n = cf.digits.size();
    for (size_t i = 0; i < n; ++i) {
        Int e = cf.digits[i];
        if (i == 0) e -= 1;
        if (i + 1 == n) e -= 1;
        runs.emplace_back(i % 2 == 0 ? 'L' : 'R', e);
    }
    return runs;
}

} // namespace

Mat2 farey_matrix(const Frac& x) {
    if (x.p == 0 || x.p == x.q) fail_domain("RootOrVertex", "matrix undefined for 0 and 1");
    Mat2 m = mat_l();
    for (auto& [c, e] : path_runs(cf_expand(x))) {
        const Mat2& g = (c == 'L') ? mat_l() : mat_r();
        for (Int i = 0; i < e; ++i) m = mat2_mul(m, g);
    }
    return m;
}

LRWord farey_path(const Frac& x) {
    if (x.p == 0 || x.p == x.q) fail_domain("RootOrVertex", "path undefined for 0 and 1");
    LRWord w;
    for (auto& [c, e] : path_runs(cf_expand(x)))
        for (Int i = 0; i < e; ++i) w.prefix.push_back(c);
    return w;
}

LRWord farey_code(const CF& cf) {
    LRWord w;
    if (cf.kind == CF::Kind::zero) {
        w.tail = LRWord::Tail::Linf;
        return w;
    }
    if (cf.kind == CF::Kind::one) {
        w.tail = LRWord::Tail::Rinf;
        return w;
    }
    for (size_t i = 0; i < cf.digits.size(); ++i) {
        char c = (i % 2 == 0) ? 'L' : 'R';
        for (Int j = 0; j < cf.digits[i]; ++j) w.prefix.push_back(c);
    }
    w.tail = (cf.digits.size() % 2 == 0) ? LRWord::Tail::Linf : LRWord::Tail::Rinf;
    return w;
}

std::pair<Frac, Frac> farey_parents(const Frac& x) {
    if (x.p == 0 || x.p == x.q) fail_domain("RootOrVertex", "parents undefined for 0 and 1");
    Mat2 m = farey_matrix(x);
    Frac right = make_frac(m.at(0, 0), m.at(1, 0));
    Frac left = make_frac(m.at(0, 1), m.at(1, 1));
    return {left, right};
}

std::string format_frac(const Frac& x) { return x.p.get_str() + "/" + x.q.get_str(); }

std::string format_cf(const CF& cf) {
    if (cf.kind == CF::Kind::zero) return "[0]";
    if (cf.kind == CF::Kind::one) return "[1]";
    std::string out = "[";
    for (size_t i = 0; i < cf.digits.size(); ++i) {
        if (i) out += ",";
        out += cf.digits[i].get_str();
    }
    return out + "]";
}

CF parse_cf(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail_parse("BadCF", "expected '[a1,...,an]' in '" + s + "'");
    std::string body = s.substr(1, s.size() - 2);
    if (body == "0") return cf_zero();
    if (body == "1") return cf_one();
    std::vector<Int> digits;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) digits.push_back(parse_int(item));
    if (digits.empty()) fail_parse("BadCF", "empty digit list in '" + s + "'");
    for (const Int& d : digits)
        if (d < 1) fail_parse("BadCF", "digits must be >= 1 in '" + s + "'");
    if (digits.back() < 2) fail_parse("BadCF", "last digit must be > 1 in '" + s + "'");
    return cf_digits(std::move(digits));
}

namespace {

// Compress runs of length >= 4 as X^k for readable repeating blocks.
std::string compress_runs(const std::string& w) {
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        size_t len = j - i;
        if (len >= 4)
            out += std::string(1, w[i]) + "^" + std::to_string(len);
        else
            out += std::string(len, w[i]);
        i = j;
    }
    return out;
}

} // namespace

std::string format_lrword(const LRWord& w) {
    std::string out = w.prefix;
    switch (w.tail) {
        case LRWord::Tail::none: break;
        case LRWord::Tail::Linf: out += "L^inf"; break;
        case LRWord::Tail::Rinf: out += "R^inf"; break;
        case LRWord::Tail::block: out += "(" + compress_runs(w.block) + ")^inf"; break;
    }
    return out;
}

} // namespace tt
