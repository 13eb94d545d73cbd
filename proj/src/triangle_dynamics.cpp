#include "tt/triangle_dynamics.hpp"

#include <optional>
#include <sstream>

namespace tt {

std::string format_tseq(const TriangleSeq& ts) {
    std::string out = "[";
    for (size_t i = 0; i < ts.digits.size(); ++i) {
        if (i) out += ",";
        out += ts.digits[i].get_str();
    }
    if (!ts.complete) {
        if (!ts.digits.empty()) out += ",";
        out += "...";
    }
    return out + "]";
}

TriangleSeq parse_tseq(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail_parse("BadTriangleSeq", "expected '[a,b,...]' in '" + s + "'");
    std::string body = s.substr(1, s.size() - 2);
    TriangleSeq ts;
    if (body.empty()) return ts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "...") {
            ts.complete = false;
            if (ss.rdbuf()->in_avail() > 0)
                fail_parse("BadTriangleSeq", "'...' must be last in '" + s + "'");
            return ts;
        }
        Int d = parse_int(item);
        if (d < 0) fail_parse("BadTriangleSeq", "negative digit in '" + s + "'");
        ts.digits.push_back(d);
    }
    return ts;
}

PairKind classify(const Triple& t) {
    bool y0 = t.r == 0;
    bool diag = t.p == t.r;
    bool x1 = t.p == t.q;
    if (y0 && (t.p == 0 || x1)) return PairKind::vertex;  // (0,0) or (1,0)
    if (x1 && diag) return PairKind::vertex;              // (1,1)
    if (y0) return PairKind::lambda;
    if (diag) return PairKind::sigma;
    if (x1) return PairKind::upsilon;
    return PairKind::interior;
}

Int sector_index(const Triple& t) {
    if (t.r == 0) fail_domain("OnLambda", "sector index undefined on y = 0");
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), Int(t.q - t.p).get_mpz_t(), t.r.get_mpz_t());
    return k;
}

Triple triangle_map(const Triple& t) {
    Int k = sector_index(t);
    return canonicalize(Vec3{t.p, t.r, t.q - t.p - k * t.r});
}

int slow_branch(const Triple& t) { return (t.p + t.r > t.q) ? 0 : 1; }

Triple slow_map(const Triple& t) {
    if (slow_branch(t) == 0) return canonicalize(Vec3{t.p, t.r, t.q - t.p});
    return canonicalize(Vec3{t.q - t.r, t.p, t.r});
}

Triple phi0(const Triple& t) { return canonicalize(Vec3{t.q + t.r, t.q, t.p}); }

Triple phi1(const Triple& t) { return canonicalize(Vec3{t.q + t.r, t.p, t.r}); }

Triple phi2(const Triple& t) {
    if (t.p != t.r) fail_domain("NotOnSigma", "projection needs a diagonal point");
    return Triple{t.q, t.p, Int(0)};
}

Triple phi_word(const std::string& w, const Triple& t) {
    Triple cur = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
            case '0': cur = phi0(cur); break;
            case '1': cur = phi1(cur); break;
            case '2': cur = phi2(cur); break;
            default: fail_parse("MalformedWord", "symbol '" + std::string(1, *it) + "'");
        }
    }
    return cur;
}

RationalExpansion triangle_sequence_rational(const Triple& t) {
    RationalExpansion out;
    out.kind = classify(t);
    Triple cur = t;
    while (cur.r > 0) {
        out.seq.digits.push_back(sector_index(cur));
        cur = triangle_map(cur);
    }
    out.seq.complete = true;
    switch (out.kind) {
        case PairKind::interior:
        case PairKind::lambda:
            out.xi = make_frac(cur.p, cur.q);
            break;
        case PairKind::sigma:
            out.xi = make_frac(t.p, t.q);
            break;
        case PairKind::upsilon:
            out.xi = make_frac(t.r, t.q);
            break;
        case PairKind::vertex:
            out.xi = (t.p == 0) ? Frac{Int(0), Int(1)} : Frac{Int(1), Int(1)};
            break;
    }
    return out;
}

namespace {

struct ExactLane {
    AlgebraicField field;
    AlgebraicField::Elem x, y;
};

// Decimal text denotes an exact rational; treat it as one here.
const Rat* rational_value(const RealScalar& s) {
    if (const Rat* v = std::get_if<Rat>(&s.rep)) return v;
    if (const Decimal* d = std::get_if<Decimal>(&s.rep)) return &d->value;
    return nullptr;
}

// Tries to place both coordinates in one algebraic field.
std::optional<ExactLane> exact_lane(const RealPair& p) {
    const Rat* xr = rational_value(p.x);
    const Rat* yr = rational_value(p.y);
    const AlgebraicRoot* xa = std::get_if<AlgebraicRoot>(&p.x.rep);
    const AlgebraicRoot* ya = std::get_if<AlgebraicRoot>(&p.y.rep);
    if (xr && (yr || p.y_is_x_squared)) {
        AlgebraicField f({Int(0), Int(1)}, Rat(-1, 2), Rat(1, 2));  // theta = 0
        auto x = f.from_rat(*xr);
        auto y = p.y_is_x_squared ? f.from_rat(*xr * *xr) : f.from_rat(*yr);
        return ExactLane{std::move(f), std::move(x), std::move(y)};
    }
    if (xa) {
        AlgebraicField f = field_of_root(*xa);
        auto x = f.gen();
        if (p.y_is_x_squared) {
            auto y = f.mul(x, x);  // before the move below: init order is left to right
            return ExactLane{std::move(f), std::move(x), std::move(y)};
        }
        if (yr) {
            auto y = f.from_rat(*yr);
            return ExactLane{std::move(f), std::move(x), std::move(y)};
        }
        if (ya && ya->coeffs == xa->coeffs && ya->lo == xa->lo && ya->hi == xa->hi) {
            auto y = f.gen();
            return ExactLane{std::move(f), std::move(x), std::move(y)};
        }
        return std::nullopt;
    }
    if (ya && xr) {
        AlgebraicField f = field_of_root(*ya);
        auto x = f.from_rat(*xr);
        auto y = f.gen();
        return ExactLane{std::move(f), std::move(x), std::move(y)};
    }
    return std::nullopt;
}

// Certified floor of num/den in the field (den of positive sign).
Int field_floor(AlgebraicField& f, const AlgebraicField::Elem& num,
                const AlgebraicField::Elem& den) {
    AlgebraicField::Elem ratio = f.div(num, den);
    Interval e = f.enclose_elem(ratio, 48);
    Rat mid = iv_mid(e);
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), mid.get_num().get_mpz_t(), mid.get_den().get_mpz_t());
    while (f.sign(f.sub(ratio, f.from_rat(Rat(k)))) < 0) k -= 1;
    while (f.sign(f.sub(ratio, f.from_rat(Rat(k + 1)))) >= 0) k += 1;
    return k;
}

RealExpansion expand_exact(ExactLane lane, long max_digits) {
    AlgebraicField& f = lane.field;
    auto one = f.from_rat(Rat(1));
    RealExpansion out;
    out.seq.complete = false;
    for (long i = 0; i < max_digits; ++i) {
        int sy = f.sign(lane.y);
        if (sy < 0) fail_domain("OutOfTriangle", "negative y during expansion");
        if (sy == 0) {
            out.seq.complete = true;
            break;
        }
        if (f.sign(lane.x) <= 0) fail_domain("OutOfTriangle", "non-positive x with y > 0");
        auto onemx = f.sub(one, lane.x);
        Int k = field_floor(f, onemx, lane.y);
        if (k < 0) fail_domain("OutOfTriangle", "x above 1 during expansion");
        out.seq.digits.push_back(k);
        auto newx = f.div(lane.y, lane.x);
        auto newy = f.div(f.sub(onemx, f.mul_rat(lane.y, Rat(k))), lane.x);
        lane.x = std::move(newx);
        lane.y = std::move(newy);
    }
    out.remainder = {f.enclose_elem(lane.x, 128), f.enclose_elem(lane.y, 128)};
    return out;
}

std::optional<RealExpansion> try_expand_interval(const RealPair& p, long max_digits,
                                                long prec) {
    Interval x = enclose(p.x, prec);
    Interval y = p.y_is_x_squared ? iv_mul(x, x, prec) : enclose(p.y, prec);
    Interval onef = interval_point(Rat(1), prec);
    RealExpansion out;
    out.seq.complete = false;
    for (long i = 0; i < max_digits; ++i) {
        if (iv_cmp(y, Rat(0)) != Cmp::Greater) return std::nullopt;
        if (iv_cmp(x, Rat(0)) != Cmp::Greater)
            fail_domain("OutOfTriangle", "non-positive x with y > 0");
        Interval onemx = iv_sub(onef, x, prec);
        Interval q = iv_div(onemx, y, prec);
        Rat flo = iv_lo(q);
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), flo.get_num().get_mpz_t(), flo.get_den().get_mpz_t());
        // Certify 1-x-ky >= 0 and 1-x-(k+1)y < 0.
        Interval kk = interval_point(Rat(k), prec);
        Interval rem = iv_sub(onemx, iv_mul(kk, y, prec), prec);
        if (iv_lo(rem) < 0) return std::nullopt;
        Interval rem2 = iv_sub(rem, y, prec);
        if (iv_hi(rem2) >= 0) return std::nullopt;
        if (k < 0) fail_domain("OutOfTriangle", "x above 1 during expansion");
        out.seq.digits.push_back(k);
        Interval newx = iv_div(y, x, prec);
        Interval newy = iv_div(rem, x, prec);
        x = newx;
        y = newy;
    }
    out.remainder = {x, y};
    return out;
}

} // namespace

RealExpansion triangle_sequence_real(const RealPair& p, long max_digits, int budget) {
    if (auto lane = exact_lane(p)) return expand_exact(std::move(*lane), max_digits);
    long prec = 64;
    for (int i = 0; i < budget; ++i) {
        try {
            if (auto out = try_expand_interval(p, max_digits, prec)) return *out;
        } catch (const Error& e) {
            if (e.name() != "DivisionByZeroPossible") throw;
        }
        prec *= 2;
    }
    fail_precision("AmbiguousBoundary",
                   "expansion digit undecidable within the refinement budget");
}

std::vector<Vec3> vertex_recurrence(const std::vector<Int>& digits) {
    std::vector<Vec3> xs = {{Int(0), Int(0), Int(1)}, {Int(1), Int(0), Int(0)},
                            {Int(1), Int(1), Int(0)}};
    for (const Int& a : digits) {
        if (a < 0) fail_domain("BadTriangleSeq", "negative digit");
        size_t n = xs.size();
        const Vec3& x3 = xs[n - 3];
        const Vec3& x2 = xs[n - 2];
        const Vec3& x1 = xs[n - 1];
        xs.push_back(Vec3{x3.q + x1.q + a * x2.q, x3.p + x1.p + a * x2.p,
                          x3.r + x1.r + a * x2.r});
    }
    return xs;
}

std::array<Triple, 3> nested_triangle(const std::vector<Int>& digits) {
    if (digits.empty()) fail_domain("BadTriangleSeq", "need at least one digit");
    std::vector<Vec3> xs = vertex_recurrence(digits);
    size_t n = xs.size();
    Vec3 third{xs[n - 3].q + xs[n - 1].q, xs[n - 3].p + xs[n - 1].p,
               xs[n - 3].r + xs[n - 1].r};
    return {canonicalize(xs[n - 2]), canonicalize(xs[n - 1]), canonicalize(third)};
}

std::vector<Rat> lambda_seq(const std::vector<Int>& digits) {
    std::vector<Vec3> xs = vertex_recurrence(digits);
    std::vector<Rat> out;
    // lambda_k needs q_{k+1}, i.e. xs[k+4].
    for (size_t k = 0; k + 4 < xs.size(); ++k)
        out.push_back(make_rat(xs[k + 1].q + xs[k + 3].q, xs[k + 4].q));
    return out;
}

ConvergenceDiagnostics convergence_diagnostics(const std::vector<Int>& digits) {
    if (digits.size() < 3) fail_domain("BadTriangleSeq", "need at least three digits");
    ConvergenceDiagnostics out;
    out.lambdas = lambda_seq(digits);
    long z = 0;
    for (size_t i = 0; i < digits.size(); ++i)
        if (digits[i] == 0) z = static_cast<long>(i);
    out.product_start = z;
    Rat prod(1);
    for (size_t j = static_cast<size_t>(z); j < out.lambdas.size(); ++j) {
        prod *= (Rat(1) - out.lambdas[j]);
        out.partial_products.push_back(prod);
    }
    std::vector<Vec3> xs = vertex_recurrence(digits);
    for (size_t k = 3; k < xs.size(); ++k)
        out.vertex_gaps.push_back(sq_dist(canonicalize(xs[k - 1]), canonicalize(xs[k])));
    return out;
}

} // namespace tt
