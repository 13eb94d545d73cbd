#include "tt/verified_reals.hpp"

#include <algorithm>
#include <sstream>

namespace tt {

Dyadic dyadic_normalize(Int m, long e) {
    if (m == 0) return {Int(0), 0};
    unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    if (s > 0) {
        m >>= s;
        e += static_cast<long>(s);
    }
    return {m, e};
}

Rat dyadic_value(const Dyadic& d) {
    Rat v(d.m);
    Rat two(2);
    if (d.e >= 0) {
        Int p(1);
        p <<= static_cast<unsigned long>(d.e);
        return v * Rat(p);
    }
    Int p(1);
    p <<= static_cast<unsigned long>(-d.e);
    return v / Rat(p);
}

namespace {

// floor(x * 2^prec) as an integer.
Int scaled_floor(const Rat& x, long prec) {
    Int num = x.get_num(), den = x.get_den();
    if (prec >= 0)
        num <<= static_cast<unsigned long>(prec);
    else
        den <<= static_cast<unsigned long>(-prec);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int scaled_ceil(const Rat& x, long prec) {
    Int num = x.get_num(), den = x.get_den();
    if (prec >= 0)
        num <<= static_cast<unsigned long>(prec);
    else
        den <<= static_cast<unsigned long>(-prec);
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int pow2(long e) {
    Int p(1);
    p <<= static_cast<unsigned long>(e);
    return p;
}

} // namespace

Dyadic dyadic_floor(const Rat& x, long prec) {
    return dyadic_normalize(scaled_floor(x, prec), -prec);
}

Dyadic dyadic_ceil(const Rat& x, long prec) {
    return dyadic_normalize(scaled_ceil(x, prec), -prec);
}

Interval make_interval(const Rat& lo, const Rat& hi, long prec) {
    if (lo > hi) fail_domain("BadInterval", "lower endpoint above upper");
    return {dyadic_floor(lo, prec), dyadic_ceil(hi, prec)};
}

Interval interval_point(const Rat& x, long prec) { return make_interval(x, x, prec); }

Rat iv_lo(const Interval& a) { return dyadic_value(a.lo); }
Rat iv_hi(const Interval& a) { return dyadic_value(a.hi); }
Rat iv_width(const Interval& a) { return iv_hi(a) - iv_lo(a); }
Rat iv_mid(const Interval& a) { return (iv_lo(a) + iv_hi(a)) / 2; }

bool iv_contains(const Interval& a, const Rat& x) {
    return iv_lo(a) <= x && x <= iv_hi(a);
}

Interval iv_add(const Interval& a, const Interval& b, long prec) {
    return make_interval(iv_lo(a) + iv_lo(b), iv_hi(a) + iv_hi(b), prec);
}

Interval iv_sub(const Interval& a, const Interval& b, long prec) {
    return make_interval(iv_lo(a) - iv_hi(b), iv_hi(a) - iv_lo(b), prec);
}

Interval iv_mul(const Interval& a, const Interval& b, long prec) {
    Rat c1 = iv_lo(a) * iv_lo(b), c2 = iv_lo(a) * iv_hi(b);
    Rat c3 = iv_hi(a) * iv_lo(b), c4 = iv_hi(a) * iv_hi(b);
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return make_interval(lo, hi, prec);
}

Interval iv_div(const Interval& a, const Interval& b, long prec) {
    if (iv_lo(b) <= 0 && iv_hi(b) >= 0)
        fail_precision("DivisionByZeroPossible", "divisor interval straddles zero");
    Rat c1 = iv_lo(a) / iv_lo(b), c2 = iv_lo(a) / iv_hi(b);
    Rat c3 = iv_hi(a) / iv_lo(b), c4 = iv_hi(a) / iv_hi(b);
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return make_interval(lo, hi, prec);
}

Interval iv_neg(const Interval& a) {
    return {dyadic_normalize(-a.hi.m, a.hi.e), dyadic_normalize(-a.lo.m, a.lo.e)};
}

Interval iv_abs(const Interval& a) {
    Rat lo = iv_lo(a), hi = iv_hi(a);
    if (lo >= 0) return a;
    if (hi <= 0) return iv_neg(a);
    Dyadic top = (-lo > hi) ? dyadic_normalize(-a.lo.m, a.lo.e) : a.hi;
    return {Dyadic{Int(0), 0}, top};
}

Cmp iv_cmp(const Interval& a, const Interval& b) {
    if (iv_hi(a) < iv_lo(b)) return Cmp::Less;
    if (iv_lo(a) > iv_hi(b)) return Cmp::Greater;
    return Cmp::Uncertain;
}

Cmp iv_cmp(const Interval& a, const Rat& x) {
    if (iv_hi(a) < x) return Cmp::Less;
    if (iv_lo(a) > x) return Cmp::Greater;
    return Cmp::Uncertain;
}

namespace {

// Enclosure of atanh(t) for |t| <= 1/2 via the odd power series with an
// explicit geometric tail bound.
std::pair<Rat, Rat> atanh_enclosure(const Rat& t, long prec) {
    long n = prec / 2 + 8;
    Rat t2 = t * t;
    Rat term = t;
    Rat sum = 0;
    for (long k = 0; k < n; ++k) {
        sum += term / Rat(2 * k + 1);
        term *= t2;
    }
    Rat tail = abs(term) / (Rat(2 * n + 1) * (Rat(1) - t2));
    return {sum - tail, sum + tail};
}

// Enclosure of ln 2 = 2 atanh(1/3).
std::pair<Rat, Rat> ln2_enclosure(long prec) {
    auto [lo, hi] = atanh_enclosure(Rat(1, 3), prec + 4);
    return {2 * lo, 2 * hi};
}

// Enclosure of ln x for rational x > 0.
std::pair<Rat, Rat> ln_enclosure(const Rat& x, long prec) {
    if (x <= 0) fail_domain("BadLogArgument", "log of a non-positive value");
    long j = 0;
    Rat y = x;
    while (y > Rat(3, 2)) { y /= 2; ++j; }
    while (y < Rat(3, 4)) { y *= 2; --j; }
    Rat t = (y - 1) / (y + 1);
    auto [alo, ahi] = atanh_enclosure(t, prec + 4);
    auto [l2lo, l2hi] = ln2_enclosure(prec + 4);
    Rat lo = 2 * alo + (j >= 0 ? Rat(j) * l2lo : Rat(j) * l2hi);
    Rat hi = 2 * ahi + (j >= 0 ? Rat(j) * l2hi : Rat(j) * l2lo);
    return {lo, hi};
}

} // namespace

Interval iv_log(const Interval& a, long prec) {
    if (iv_lo(a) <= 0) fail_domain("BadLogArgument", "log needs a positive interval");
    Rat lo = ln_enclosure(iv_lo(a), prec).first;
    Rat hi = ln_enclosure(iv_hi(a), prec).second;
    return make_interval(lo, hi, prec);
}

namespace {

// Largest r with r^k <= n, for n >= 0.
Int trunc_root(const Int& n, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

} // namespace

Interval iv_root(const Interval& a, unsigned long k, long prec) {
    if (k == 0) fail_domain("BadRoot", "zeroth root");
    if (iv_lo(a) < 0) fail_domain("BadRoot", "root of a negative interval");
    long g = prec + 2;
    // Lower: r = trunc k-th root of floor(lo * 2^(k g)); (r/2^g)^k <= lo.
    Int nlo = scaled_floor(iv_lo(a), static_cast<long>(k) * g);
    Rat lo = Rat(trunc_root(nlo, k)) / Rat(pow2(g));
    // Upper: (r+1)/2^g with r from ceil(hi * 2^(k g)); (r+1)^k > that scale.
    Int nhi = scaled_ceil(iv_hi(a), static_cast<long>(k) * g);
    Rat hi = Rat(trunc_root(nhi, k) + 1) / Rat(pow2(g));
    return make_interval(lo, hi, prec);
}

Interval iv_pow(const Interval& a, long n, long prec) {
    if (n < 0) {
        Interval p = iv_pow(a, -n, prec + 8);
        return iv_div(interval_point(Rat(1), prec + 8), p, prec);
    }
    Interval acc = interval_point(Rat(1), prec + 8);
    for (long i = 0; i < n; ++i) acc = iv_mul(acc, a, prec + 8);
    return make_interval(iv_lo(acc), iv_hi(acc), prec);
}

int poly_sign(const std::vector<Int>& coeffs, const Rat& x) {
    Rat v(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + Rat(*it);
    return sgn(v);
}

RealScalar scalar_rational(const Rat& v) { return {v}; }

namespace {

Rat decimal_to_rat(const std::string& text) {
    std::string s = text;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = -1;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (frac_len >= 0) fail_parse("BadDecimal", "'" + text + "'");
            frac_len = 0;
        } else if (isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            if (frac_len >= 0) ++frac_len;
        } else {
            fail_parse("BadDecimal", "'" + text + "'");
        }
    }
    if (digits.empty()) fail_parse("BadDecimal", "'" + text + "'");
    Int num(digits, 10);  // explicit base: leading zeros must not trigger octal
    Int den(1);
    for (long k = 0; k < std::max(frac_len, 0L); ++k) den *= 10;
    Rat v = make_rat(num, den);
    return neg ? -v : v;
}

} // namespace

RealScalar scalar_decimal(const std::string& text, long guard_bits) {
    if (guard_bits < 1) fail_domain("BadGuardBits", "guard precision must be >= 1 bit");
    return {Decimal{text, guard_bits, decimal_to_rat(text)}};
}

RealScalar scalar_algebraic(std::vector<Int> coeffs, const Rat& lo, const Rat& hi) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2) fail_domain("BadPolynomial", "degree must be >= 1");
    if (lo > hi) fail_domain("BadInterval", "lower endpoint above upper");
    int slo = poly_sign(coeffs, lo);
    int shi = poly_sign(coeffs, hi);
    if (lo == hi) {
        if (slo != 0) fail_domain("NoRootInInterval", "degenerate interval misses the root");
        return {AlgebraicRoot{std::move(coeffs), lo, hi}};
    }
    if (slo == 0 || shi == 0 || slo == shi)
        fail_domain("NoRootInInterval", "no sign change across the isolating interval");
    return {AlgebraicRoot{std::move(coeffs), lo, hi}};
}

namespace {

// Bisect until the rational width drops below 2^-(prec). Collapses onto an
// exact rational root if one is hit.
AlgebraicRoot bisect_to(const AlgebraicRoot& r, long prec) {
    AlgebraicRoot out = r;
    Rat eps = Rat(1) / Rat(pow2(prec));
    int slo = poly_sign(out.coeffs, out.lo);
    while (out.hi - out.lo > eps) {
        Rat mid = (out.lo + out.hi) / 2;
        int sm = poly_sign(out.coeffs, mid);
        if (sm == 0) {
            out.lo = out.hi = mid;
            break;
        }
        if (sm == slo)
            out.lo = mid;
        else
            out.hi = mid;
    }
    return out;
}

} // namespace

Interval enclose(const RealScalar& s, long precision_bits) {
    if (precision_bits < 4) fail_domain("BadPrecision", "need at least 4 bits");
    if (const Rat* v = std::get_if<Rat>(&s.rep))
        return interval_point(*v, precision_bits + 1);
    if (const Decimal* d = std::get_if<Decimal>(&s.rep)) {
        if (precision_bits > d->guard_bits)
            fail_precision("PrecisionExhausted",
                           "decimal '" + d->text + "' declares only " +
                               std::to_string(d->guard_bits) + " guard bits");
        Rat eps = Rat(1) / Rat(pow2(d->guard_bits));
        return make_interval(d->value - eps, d->value + eps, d->guard_bits + 2);
    }
    const AlgebraicRoot& r = std::get<AlgebraicRoot>(s.rep);
    AlgebraicRoot t = bisect_to(r, precision_bits + 2);
    return make_interval(t.lo, t.hi, precision_bits + 3);
}

RealScalar refine(const RealScalar& s) {
    if (std::holds_alternative<Rat>(s.rep)) return s;
    if (std::holds_alternative<Decimal>(s.rep))
        fail_precision("NotRefinable", "decimal inputs carry fixed guard precision");
    AlgebraicRoot r = std::get<AlgebraicRoot>(s.rep);
    if (r.lo == r.hi) return {r};
    Rat mid = (r.lo + r.hi) / 2;
    int sm = poly_sign(r.coeffs, mid);
    if (sm == 0) {
        r.lo = r.hi = mid;
    } else if (sm == poly_sign(r.coeffs, r.lo)) {
        r.lo = mid;
    } else {
        r.hi = mid;
    }
    return {r};
}

RealPair fixed_point(const Int& d) {
    if (d < 1) fail_domain("BadParameter", "d must be >= 1");
    std::vector<Int> coeffs = {Int(-1), Int(1), d, Int(1)};
    RealScalar x = scalar_algebraic(coeffs, Rat(0), Rat(1));
    RealScalar y = x;  // same root; the pair flag records y = x^2
    return {x, y, true};
}

RealScalar parse_scalar(const std::string& s) {
    if (s.rfind("poly:", 0) == 0) {
        auto sep = s.find(";iv:");
        if (sep == std::string::npos)
            fail_parse("BadScalar", "expected 'poly:c0,...;iv:lo,hi' in '" + s + "'");
        std::string clist = s.substr(5, sep - 5);
        std::string ivs = s.substr(sep + 4);
        std::vector<Int> coeffs;
        std::stringstream ss(clist);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_int(item));
        auto comma = ivs.find(',');
        if (comma == std::string::npos)
            fail_parse("BadScalar", "expected 'iv:lo,hi' in '" + s + "'");
        Rat lo = parse_rat(ivs.substr(0, comma));
        Rat hi = parse_rat(ivs.substr(comma + 1));
        return scalar_algebraic(std::move(coeffs), lo, hi);
    }
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string text = s.substr(0, colon);
        Int guard = parse_int(s.substr(colon + 1));
        return scalar_decimal(text, guard.get_si());
    }
    if (s.find('.') != std::string::npos) return scalar_rational(decimal_to_rat(s));
    return scalar_rational(parse_rat(s));
}

std::string format_scalar(const RealScalar& s) {
    if (const Rat* v = std::get_if<Rat>(&s.rep))
        return v->get_num().get_str() + "/" + v->get_den().get_str();
    if (const Decimal* d = std::get_if<Decimal>(&s.rep))
        return d->text + ":" + std::to_string(d->guard_bits);
    const AlgebraicRoot& r = std::get<AlgebraicRoot>(s.rep);
    std::string out = "poly:";
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i) out += ",";
        out += r.coeffs[i].get_str();
    }
    out += ";iv:" + r.lo.get_num().get_str() + "/" + r.lo.get_den().get_str() + "," +
           r.hi.get_num().get_str() + "/" + r.hi.get_den().get_str();
    return out;
}

std::string decimal_string(const Rat& x, int digits, bool round_up) {
    Rat v = x;
    std::string sign;
    if (v < 0) {
        sign = "-";
        v = -v;
        round_up = !round_up;
    }
    Int scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int n;
    if (round_up)
        mpz_cdiv_q(n.get_mpz_t(), Int(v.get_num() * scale).get_mpz_t(), v.get_den().get_mpz_t());
    else
        mpz_fdiv_q(n.get_mpz_t(), Int(v.get_num() * scale).get_mpz_t(), v.get_den().get_mpz_t());
    Int ip = n / scale;
    if (digits == 0) return sign + ip.get_str();
    Int fp = n % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return sign + ip.get_str() + "." + frac;
}

std::string decimal_string(const Rat& x, int digits) { return decimal_string(x, digits, false); }

std::string format_interval(const Interval& a, int digits) {
    return "[" + decimal_string(iv_lo(a), digits, false) + ", " +
           decimal_string(iv_hi(a), digits, true) + "]";
}

} // namespace tt
