#include "tt/approximation.hpp"

#include <algorithm>
#include <memory>

namespace tt {

namespace {

const Triple& root_triple() {
    static Triple r{Int(2), Int(1), Int(1)};
    return r;
}

std::string repeat(char c, const Int& n) {
    if (n < 0) fail_domain("BadDigit", "negative repeat count");
    return std::string(n.get_ui(), c);
}

// L-run/I blocks of a finite triangle sequence; the last run is shortened
// by one because the final I lands on the bottom side.
std::string ts_word(const std::vector<Int>& tseq) {
    std::string w;
    for (size_t i = 0; i + 1 < tseq.size(); ++i) w += repeat('L', tseq[i]) + "I";
    w += repeat('L', tseq.back() - 1) + "I";
    return w;
}

// phi-word blocks 1^{alpha_i} 0 of a digit prefix.
std::string phi_blocks(const std::vector<Int>& digits) {
    std::string w;
    for (const Int& a : digits) w += repeat('1', a) + "0";
    return w;
}

void check_tseq(const std::vector<Int>& tseq) {
    if (tseq.empty() || tseq.back() <= 0)
        fail_domain("BadDigit", "finite triangle sequence must end with a positive digit");
    for (const Int& a : tseq)
        if (a < 0) fail_domain("BadDigit", "negative triangle-sequence digit");
}

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}

// Certified continued-fraction digits of an interval enclosure in (0,1].
std::pair<std::vector<Int>, Interval> cf_digits_interval(Interval x, long n, long prec) {
    std::vector<Int> out;
    Interval one = interval_point(Rat(1), prec);
    for (long i = 0; i < n; ++i) {
        if (iv_cmp(x, Rat(0)) != Cmp::Greater)
            fail_precision("AmbiguousBoundary", "cf remainder sign not certified");
        Interval inv = iv_div(one, x, prec);
        Int a_lo = rat_floor(iv_lo(inv)), a_hi = rat_floor(iv_hi(inv));
        if (a_lo != a_hi)
            fail_precision("AmbiguousBoundary", "cf digit straddles an integer");
        out.push_back(a_lo);
        x = iv_sub(inv, interval_point(Rat(a_lo), prec), prec);
    }
    return {out, x};
}

// Continued-fraction digits of a scalar in (0,1); `finite` reports that the
// full (rational) expansion fit in the request.
std::vector<Int> scalar_cf_digits(const RealScalar& xi, long count, long prec, bool& finite) {
    finite = false;
    if (const Rat* r = std::get_if<Rat>(&xi.rep)) {
        if (*r <= 0 || *r >= 1) fail_domain("BadXi", "cf tail value must lie in (0,1)");
        CF cf = cf_expand(frac_of(*r));
        std::vector<Int> d = cf.digits;
        if (static_cast<long>(d.size()) <= count) {
            finite = true;
            return d;
        }
        d.resize(static_cast<size_t>(count));
        return d;
    }
    if (const AlgebraicRoot* ar = std::get_if<AlgebraicRoot>(&xi.rep)) {
        AlgebraicField f = field_of_root(*ar);
        AlgebraicCF res = cf_digits_algebraic(f, f.gen(), count);
        finite = res.terminated;
        return res.digits;
    }
    return cf_digits_interval(enclose(xi, prec), count, prec).first;
}

Interval rat_iv(const Rat& x, long prec) { return interval_point(x, prec); }

// s^eta for integer s >= 1 and rational eta > 0.
Interval pow_eta(const Int& s, const Rat& eta, long prec) {
    if (eta <= 0) fail_domain("BadExponent", "speed exponent must be positive");
    Int num = eta.get_num(), den = eta.get_den();
    Int sp;
    mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), num.get_ui());
    return iv_root(interval_point(Rat(sp), prec), den.get_ui(), prec);
}

// Digit provider over a CFTail or a scalar remainder: nullopt past the end
// of a finite expansion.
using CFProvider = std::function<std::optional<Int>(long)>;

CFProvider cf_provider(const FiniteTS& t) {
    if (t.cf.source) {
        DigitFn s = t.cf.source;
        return [s](long i) { return std::optional<Int>(s(i)); };
    }
    if (!t.cf.head.empty() || !t.cf.period.empty()) {
        auto head = t.cf.head;
        auto per = t.cf.period;
        return [head, per](long i) -> std::optional<Int> {
            if (i < static_cast<long>(head.size())) return head[static_cast<size_t>(i)];
            if (per.empty()) return std::nullopt;
            return per[static_cast<size_t>((i - head.size()) % per.size())];
        };
    }
    if (!t.xi) fail_domain("MissingCFTail", "finite target needs a cf tail or a remainder value");
    struct Cache {
        std::vector<Int> digits;
        bool finite = false;
    };
    auto cache = std::make_shared<Cache>();
    RealScalar xi = *t.xi;
    return [cache, xi](long i) -> std::optional<Int> {
        if (static_cast<long>(cache->digits.size()) <= i && !cache->finite) {
            bool fin = false;
            cache->digits = scalar_cf_digits(xi, i + 8, kDefaultPrecision, fin);
            cache->finite = fin;
        }
        if (i < static_cast<long>(cache->digits.size())) return cache->digits[static_cast<size_t>(i)];
        return std::nullopt;
    };
}

} // namespace

DigitFn digits_fixed(std::vector<Int> digits) {
    return [digits](long i) -> Int {
        if (i < 0 || i >= static_cast<long>(digits.size()))
            fail_domain("DigitIndex", "digit source exhausted");
        return digits[static_cast<size_t>(i)];
    };
}

DigitFn digits_periodic(std::vector<Int> head, std::vector<Int> period) {
    if (period.empty()) fail_domain("BadDigit", "period must be non-empty");
    return [head, period](long i) -> Int {
        if (i < static_cast<long>(head.size())) return head[static_cast<size_t>(i)];
        return period[static_cast<size_t>((i - head.size()) % period.size())];
    };
}

LazyWord approximation_word(const ApproximationTarget& target) {
    if (const FiniteTS* ft = std::get_if<FiniteTS>(&target)) {
        check_tseq(ft->tseq);
        std::string head = ts_word(ft->tseq);
        CFProvider prov = cf_provider(*ft);
        return {[head, prov](long j) {
            std::string w = head;
            std::optional<Int> cur = prov(0);
            long i = 0;
            while (static_cast<long>(w.size()) < j && cur) {
                std::optional<Int> next = prov(i + 1);
                Int e = *cur;
                if (i == 0) e -= 1;
                if (!next) e -= 1;
                w += repeat(i % 2 == 0 ? 'L' : 'R', e);
                cur = next;
                ++i;
            }
            if (static_cast<long>(w.size()) > j) w.resize(static_cast<size_t>(j));
            return w;
        }};
    }
    if (const ConvergentTS* ct = std::get_if<ConvergentTS>(&target)) {
        DigitFn dig = ct->digits;
        return {[dig](long j) {
            std::string w;
            for (long i = 0; static_cast<long>(w.size()) < j; ++i) {
                w += repeat('L', dig(i));
                w += 'I';
            }
            w.resize(static_cast<size_t>(j));
            return w;
        }};
    }
    fail_domain("UnsupportedTarget", "only finite and convergent targets have a word");
}

std::vector<Approximant> approximants(const ApproximationTarget& target, long j_max) {
    if (j_max < 0) fail_domain("BadIndex", "j_max must be >= 0");
    LazyWord word = approximation_word(target);
    std::vector<Approximant> rows;
    rows.reserve(static_cast<size_t>(j_max) + 1);
    for (long j = 0; j <= j_max; ++j) {
        std::string w = word.prefix(j);
        auto [mat, t] = walk(root_triple(), w);
        rows.push_back({w, t, representation_of_word(w)});
    }
    return rows;
}

namespace {

NonconvergentRow make_nc_row(const std::vector<Int>& digits, const std::vector<Int>& cfd,
                             const Interval& ax, const Interval& ay, long prec) {
    Frac conv = cf_eval_digits(cfd);
    Triple lam = canonicalize(Vec3{conv.q, conv.p, Int(0)});
    Triple t = phi_word(phi_blocks(digits), lam);
    Representation rep;
    rep.tseq.digits = digits;
    rep.cf.kind = CF::Kind::digits;
    rep.cf.digits = cfd;
    rep.kind = PairKind::interior;
    Interval ex = iv_abs(iv_sub(ax, rat_iv(t.x(), prec), prec));
    Interval ey = iv_abs(iv_sub(ay, rat_iv(t.y(), prec), prec));
    return {rep, t, ex, ey};
}

} // namespace

std::vector<NonconvergentRow> approximants_nonconvergent(const NonConvergent& target,
                                                         long j_max, long prec) {
    if (j_max < 0) fail_domain("BadIndex", "j_max must be >= 0");
    Interval ax = enclose(target.point.x, prec);
    Interval ay = target.point.y_is_x_squared ? iv_mul(ax, ax, prec)
                                              : enclose(target.point.y, prec);
    std::vector<NonconvergentRow> rows;

    const Rat* rx = std::get_if<Rat>(&target.point.x.rep);
    const Rat* ry = std::get_if<Rat>(&target.point.y.rep);
    Rat yval;
    bool rational = false;
    if (rx && target.point.y_is_x_squared) {
        yval = (*rx) * (*rx);
        rational = true;
    } else if (rx && ry) {
        yval = *ry;
        rational = true;
    }
    if (rational) {
        Rat x = *rx, y = yval;
        std::vector<Int> digits;
        for (long j = 0; j <= j_max; ++j) {
            if (y == 0 || x == 0)
                fail_domain("FiniteExpansion", "orbit reached the boundary before j_max");
            Int k = rat_floor((1 - x) / y);
            digits.push_back(k);
            CF cf = cf_expand(frac_of(x));
            std::vector<Int> cfd =
                cf.kind == CF::Kind::one ? std::vector<Int>{Int(1)} : cf.digits;
            long want = std::max(j, 1L);
            if (static_cast<long>(cfd.size()) > want) cfd.resize(static_cast<size_t>(want));
            if (cfd.empty()) fail_domain("FiniteExpansion", "remainder has no cf digits");
            rows.push_back(make_nc_row(digits, cfd, ax, ay, prec));
            Rat nx = y / x, ny = (1 - x - Rat(k) * y) / x;
            x = nx;
            y = ny;
        }
        return rows;
    }

    for (long j = 0; j <= j_max; ++j) {
        RealExpansion dig = triangle_sequence_real(target.point, j + 1);
        if (static_cast<long>(dig.seq.digits.size()) < j + 1)
            fail_domain("FiniteExpansion", "orbit reached the boundary before j_max");
        Interval xi_j =
            j == 0 ? enclose(target.point.x, prec)
                   : triangle_sequence_real(target.point, j).remainder.x;
        auto [cfd, rest] = cf_digits_interval(xi_j, std::max(j, 1L), prec);
        rows.push_back(make_nc_row(dig.seq.digits, cfd, ax, ay, prec));
    }
    return rows;
}

std::pair<Mat3, Mat3> m0_m1() {
    return {Mat3::from_rows({{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}}),
            Mat3::from_rows({{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}})};
}

Mat3 branch_matrix(const std::string& omega) {
    auto [m0, m1] = m0_m1();
    Mat3 m = Mat3::identity();
    for (char c : omega) {
        if (c != '0' && c != '1')
            fail_parse("MalformedWord", "branch symbol '" + std::string(1, c) + "'");
        m = mat3_mul(m, c == '0' ? m0 : m1);
    }
    return m;
}

Int denominator_of_image(const Mat3& m, const Triple& t) {
    return m.at(0, 0) * t.q + m.at(0, 1) * t.p + m.at(0, 2) * t.r;
}

std::vector<ErrorRow> finite_ts_speed(const std::string& omega, const RealScalar& xi,
                                      long j_max, const Rat& eta, long prec) {
    if (j_max < 1) fail_domain("BadIndex", "j_max must be >= 1");
    if (std::holds_alternative<Rat>(xi.rep))
        fail_domain("RationalXi", "speed rows need an irrational remainder");
    Mat3 m = branch_matrix(omega);
    bool finite = false;
    std::vector<Int> cfd = scalar_cf_digits(xi, j_max, prec, finite);
    if (finite) fail_domain("RationalXi", "remainder expansion terminated");

    Interval xiv = enclose(xi, prec);
    // Exact difference formula: with approximants phi_omega(p/q, 0), the
    // error in each coordinate is A_i (xi q - p) / ((rho + sigma xi) s)
    // with integer A_i from the matrix entries. Evaluating it this way keeps
    // a vanishing coefficient certified exactly zero.
    const Int &rho = m.at(0, 0), &sigma = m.at(0, 1);
    Int ca = m.at(1, 1) * rho - sigma * m.at(1, 0);
    Int cb = m.at(2, 1) * rho - sigma * m.at(2, 0);
    Interval u0 = iv_add(rat_iv(Rat(rho), prec), iv_mul(rat_iv(Rat(sigma), prec), xiv, prec),
                         prec);

    std::vector<ErrorRow> rows;
    for (long j = 1; j <= j_max; ++j) {
        std::vector<Int> pre(cfd.begin(), cfd.begin() + j);
        Frac c = cf_eval_digits(pre);
        Vec3 v = mat3_vec(m, Vec3{c.q, c.p, Int(0)});
        Interval gap = iv_sub(iv_mul(xiv, rat_iv(Rat(c.q), prec), prec),
                              rat_iv(Rat(c.p), prec), prec);
        Interval den = iv_mul(u0, rat_iv(Rat(v.q), prec), prec);
        Interval ea = iv_abs(iv_div(iv_mul(rat_iv(Rat(ca), prec), gap, prec), den, prec));
        Interval eb = iv_abs(iv_div(iv_mul(rat_iv(Rat(cb), prec), gap, prec), den, prec));
        Interval prod = iv_mul(iv_mul(pow_eta(v.q, eta, prec), ea, prec), eb, prec);
        rows.push_back({j, v.q, v.p, v.r, ea, eb, prod});
    }
    return rows;
}

SpectralData spectral(long d, long prec) {
    if (d < 3) fail_domain("BadD", "spectral data needs d >= 3");
    std::vector<Int> P = {Int(-1), Int(1), Int(d), Int(1)};     // t^3 + dt^2 + t - 1
    std::vector<Int> Q = {Int(-1), Int(-d), Int(-1), Int(1)};   // t^3 - t^2 - dt - 1
    SpectralData sp;
    sp.d = d;
    sp.alpha = scalar_algebraic(P, Rat(0), Rat(1));
    sp.alpha1 = scalar_algebraic(P, Rat(-d - 1), Rat(-3) / 2);
    sp.alpha2 = d == 3 ? scalar_rational(Rat(-1)) : scalar_algebraic(P, Rat(-3) / 2, Rat(0));
    sp.lambda1 = d == 3 ? scalar_rational(Rat(-1)) : scalar_algebraic(Q, Rat(-d - 1), Rat(-1));
    sp.lambda2 = scalar_algebraic(Q, Rat(-9) / 10, Rat(0));
    sp.lambda3 = scalar_algebraic(Q, Rat(1), Rat(d + 2));

    Interval a = enclose(sp.alpha, prec);
    Interval da = iv_add(rat_iv(Rat(d), prec), a, prec);
    Interval h2 = iv_sub(iv_mul(da, da, prec), iv_div(rat_iv(Rat(4), prec), a, prec), prec);
    sp.h = iv_root(h2, 2, prec);

    Interval l1 = iv_abs(enclose(sp.lambda1, prec));
    Interval l2 = iv_abs(enclose(sp.lambda2, prec));
    Interval l3 = enclose(sp.lambda3, prec);
    if (iv_cmp(l3, l1) != Cmp::Greater || iv_cmp(l2, Rat(1)) != Cmp::Less ||
        (d > 3 && iv_cmp(l1, Rat(1)) != Cmp::Greater))
        fail_domain("SpectralOrdering", "eigenvalue ordering not certified");
    return sp;
}

namespace {

Mat3 period_matrix(long d) {
    auto [m0, m1] = m0_m1();
    return mat3_mul(mat3_pow(m1, static_cast<unsigned long>(d)), m0);
}

} // namespace

std::vector<Triple> periodic_approximants(long d, long k_max, const Triple& seed) {
    if (d < 3) fail_domain("BadD", "periodic pairs need d >= 3");
    if (k_max < 0) fail_domain("BadIndex", "k_max must be >= 0");
    Mat3 md = period_matrix(d);
    std::vector<Triple> out;
    Vec3 v = seed.vec();
    out.push_back(canonicalize(v));
    for (long k = 1; k <= k_max; ++k) {
        v = mat3_vec(md, v);
        out.push_back(canonicalize(v));
    }
    return out;
}

CubicErrorModel::CubicErrorModel(long d, const Triple& seed, long prec)
    : prec_(prec), d_(d), seed_(seed), sp_(spectral(d, prec)), md_(period_matrix(d)) {
    a_ = enclose(sp_.alpha, prec_);
    b_ = iv_mul(a_, a_, prec_);
    h_ = sp_.h;
    l1_ = enclose(sp_.lambda1, prec_);
    l2_ = enclose(sp_.lambda2, prec_);
    l3_ = enclose(sp_.lambda3, prec_);

    long p = prec_;
    auto iv = [&](const Rat& x) { return rat_iv(x, p); };
    auto add = [&](const Interval& x, const Interval& y) { return iv_add(x, y, p); };
    auto sub = [&](const Interval& x, const Interval& y) { return iv_sub(x, y, p); };
    auto mul = [&](const Interval& x, const Interval& y) { return iv_mul(x, y, p); };
    auto div = [&](const Interval& x, const Interval& y) { return iv_div(x, y, p); };
    Interval q = iv(Rat(seed.q)), pp = iv(Rat(seed.p)), r = iv(Rat(seed.r));
    Interval dd = iv(Rat(d_)), two = iv(Rat(2)), three = iv(Rat(3)), four = iv(Rat(4));
    Interval a2 = mul(a_, a_);

    // Shared prefactor h(1 + alpha^2(d + 2 alpha))/(4 alpha).
    Interval common = div(mul(h_, add(iv(Rat(1)), mul(a2, add(dd, mul(two, a_))))),
                          mul(four, a_));
    Interval d3a = add(dd, mul(three, a_));
    Interval lin1 = add(add(mul(q, add(sub(three, a_), mul(a2, h_))),
                            mul(pp, sub(sub(iv(Rat(-2)), mul(mul(two, dd), a_)),
                                        mul(mul(two, a_), h_)))),
                        mul(r, add(sub(mul(iv(Rat(-3)), a_), dd), h_)));
    Interval lin2 = add(add(mul(q, sub(sub(three, a_), mul(a2, h_))),
                            mul(pp, add(sub(iv(Rat(-2)), mul(mul(two, dd), a_)),
                                        mul(mul(two, a_), h_)))),
                        mul(r, sub(sub(mul(iv(Rat(-3)), a_), dd), h_)));
    f1_ = mul(mul(common, add(d3a, h_)), lin1);
    f2_ = iv_neg(mul(mul(common, sub(d3a, h_)), lin2));

    Interval half = iv(Rat(1) / 2);
    Interval dpa = add(dd, a_), dma = sub(dd, a_);
    g1_ = mul(mul(half, add(d3a, h_)),
              add(add(mul(q, mul(iv_neg(a_), mul(half, add(dpa, h_)))),
                      mul(pp, mul(half, add(dma, h_)))),
                  r));
    g2_ = mul(mul(half, add(iv_neg(d3a), h_)),
              add(add(mul(q, mul(iv_neg(a_), mul(half, sub(dpa, h_)))),
                      mul(pp, mul(half, sub(dma, h_)))),
                  r));
    g3_ = iv_neg(mul(h_, add(add(div(q, a_), mul(pp, dpa)), r)));

    // Calibrate the constant against the exact alpha difference at k = 1.
    Vec3 v1 = mat3_vec(md_, seed_.vec());
    Interval delta1 = sub(a_, iv(make_rat(v1.p, v1.q)));
    Interval num1 = add(mul(f1_, l1_), mul(f2_, l2_));
    Interval den1 = add(add(mul(g1_, l1_), mul(g2_, l2_)), mul(g3_, l3_));
    c_ = div(mul(delta1, den1), num1);
}

std::pair<Interval, Interval> CubicErrorModel::predict(long k) const {
    if (k < 1) fail_domain("BadIndex", "prediction needs k >= 1");
    long p = prec_;
    Interval l1k = iv_pow(l1_, k, p), l2k = iv_pow(l2_, k, p), l3k = iv_pow(l3_, k, p);
    Interval den = iv_add(iv_add(iv_mul(g1_, l1k, p), iv_mul(g2_, l2k, p), p),
                          iv_mul(g3_, l3k, p), p);
    Interval f1k = iv_mul(f1_, l1k, p), f2k = iv_mul(f2_, l2k, p);
    Interval pa = iv_mul(c_, iv_div(iv_add(f1k, f2k, p), den, p), p);
    Interval dd = rat_iv(Rat(d_), p);
    Interval amdph = iv_add(iv_sub(a_, dd, p), h_, p);
    Interval amdmh = iv_sub(iv_sub(a_, dd, p), h_, p);
    Interval numb = iv_add(iv_mul(amdph, f1k, p), iv_mul(amdmh, f2k, p), p);
    Interval pb = iv_mul(iv_mul(c_, rat_iv(Rat(1) / 2, p), p), iv_div(numb, den, p), p);
    return {pa, pb};
}

std::pair<Interval, Interval> CubicErrorModel::exact(long k) const {
    if (k < 0) fail_domain("BadIndex", "k must be >= 0");
    Vec3 v = seed_.vec();
    for (long i = 0; i < k; ++i) v = mat3_vec(md_, v);
    Interval ea = iv_sub(a_, rat_iv(make_rat(v.p, v.q), prec_), prec_);
    Interval eb = iv_sub(b_, rat_iv(make_rat(v.r, v.q), prec_), prec_);
    return {ea, eb};
}

std::pair<Interval, Interval> cubic_error_predicted(long d, long k, const Triple& seed,
                                                    long prec) {
    return CubicErrorModel(d, seed, prec).predict(k);
}

Interval exponent_bound(long d, long prec) {
    if (d < 3) fail_domain("BadD", "exponent bound needs d >= 3");
    if (d == 3) return interval_point(Rat(4), prec);
    SpectralData sp = spectral(d, prec);
    Interval l1 = iv_abs(enclose(sp.lambda1, prec));
    Interval l3 = enclose(sp.lambda3, prec);
    Interval ratio = iv_div(iv_log(l1, prec), iv_log(l3, prec), prec);
    return iv_mul(rat_iv(Rat(2), prec), iv_sub(rat_iv(Rat(1), prec), ratio, prec), prec);
}

std::vector<ErrorRow> speed_table(const ApproximationTarget& target, const Rat& eta,
                                  long k_max, long prec) {
    if (const PeriodicD* pd = std::get_if<PeriodicD>(&target)) {
        long d = pd->d.get_si();
        if (pd->d < 3) fail_domain("BadD", "periodic pairs need d >= 3");
        RealScalar alpha = scalar_algebraic({Int(-1), Int(1), Int(d), Int(1)}, Rat(0), Rat(1));
        Interval av = enclose(alpha, prec);
        Interval bv = iv_mul(av, av, prec);
        Mat3 md = period_matrix(d);
        Vec3 v = pd->seed.vec();
        std::vector<ErrorRow> rows;
        for (long k = 1; k <= k_max; ++k) {
            v = mat3_vec(md, v);
            Interval ea = iv_abs(iv_sub(av, rat_iv(make_rat(v.p, v.q), prec), prec));
            Interval eb = iv_abs(iv_sub(bv, rat_iv(make_rat(v.r, v.q), prec), prec));
            Interval prod = iv_mul(iv_mul(pow_eta(v.q, eta, prec), ea, prec), eb, prec);
            rows.push_back({k, v.q, v.p, v.r, ea, eb, prod});
        }
        return rows;
    }
    if (const FiniteTS* ft = std::get_if<FiniteTS>(&target)) {
        check_tseq(ft->tseq);
        if (!ft->xi) fail_domain("MissingXi", "speed rows need a numeric remainder");
        return finite_ts_speed(phi_blocks(ft->tseq), *ft->xi, k_max, eta, prec);
    }
    fail_domain("UnsupportedTarget", "speed tables need a certified numeric target");
}

} // namespace tt
