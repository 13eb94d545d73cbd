#include <doctest.h>

#include "tt/verified_reals.hpp"

using namespace tt;

TEST_CASE("dyadic normalization keeps odd mantissa") {
    Dyadic d = dyadic_normalize(Int(12), -2);
    CHECK(d.m == 3);
    CHECK(d.e == 0);
    CHECK(dyadic_value(d) == 3);
    CHECK(dyadic_normalize(Int(0), 7).e == 0);
}

TEST_CASE("grid rounding brackets the value") {
    Rat x(1, 3);
    for (long prec : {4L, 16L, 80L}) {
        Rat lo = dyadic_value(dyadic_floor(x, prec));
        Rat hi = dyadic_value(dyadic_ceil(x, prec));
        CHECK(lo <= x);
        CHECK(hi >= x);
        Rat gap = hi - lo;
        CHECK(gap * (Int(1) << prec) <= 1);
    }
    // exact grid points are fixed
    Rat g(3, 16);
    CHECK(dyadic_value(dyadic_floor(g, 8)) == g);
    CHECK(dyadic_value(dyadic_ceil(g, 8)) == g);
}

TEST_CASE("interval arithmetic encloses rational arithmetic") {
    long p = 64;
    Interval a = make_interval(Rat(1, 3), Rat(1, 2), p);
    Interval b = make_interval(Rat(-1, 4), Rat(1, 5), p);
    CHECK(iv_contains(a, Rat(2, 5)));
    CHECK(iv_lo(a) <= Rat(1, 3));
    CHECK(iv_hi(a) >= Rat(1, 2));

    Interval s = iv_add(a, b, p);
    CHECK(iv_contains(s, Rat(1, 3) + Rat(-1, 4)));
    CHECK(iv_contains(s, Rat(1, 2) + Rat(1, 5)));
    Interval m = iv_mul(a, b, p);
    CHECK(iv_contains(m, Rat(1, 2) * Rat(-1, 4)));
    CHECK(iv_contains(m, Rat(1, 2) * Rat(1, 5)));
    Interval n = iv_neg(a);
    CHECK(iv_lo(n) == -iv_hi(a));
    Interval ab = iv_abs(b);
    CHECK(iv_lo(ab) == 0);

    CHECK_THROWS_AS(iv_div(a, b, p), Error);  // 0 inside b
    Interval c = interval_point(Rat(2), p);
    Interval q = iv_div(a, c, p);
    CHECK(iv_contains(q, Rat(1, 4)));
}

TEST_CASE("interval comparisons") {
    long p = 32;
    Interval a = make_interval(Rat(1), Rat(2), p);
    Interval b = make_interval(Rat(3), Rat(4), p);
    CHECK(iv_cmp(a, b) == Cmp::Less);
    CHECK(iv_cmp(b, a) == Cmp::Greater);
    CHECK(iv_cmp(a, make_interval(Rat(2), Rat(3), p)) == Cmp::Uncertain);
    CHECK(iv_cmp(a, Rat(5)) == Cmp::Less);
    CHECK(iv_cmp(a, Rat(3, 2)) == Cmp::Uncertain);
}

TEST_CASE("logarithm enclosure") {
    long p = 128;
    Interval two = interval_point(Rat(2), p);
    Interval l2 = iv_log(two, p);
    CHECK(iv_lo(l2) > Rat(69314718, 100000000));
    CHECK(iv_hi(l2) < Rat(69314719, 100000000));
    Interval l4 = iv_log(interval_point(Rat(4), p), p);
    Interval twice = iv_mul(interval_point(Rat(2), p), l2, p);
    // log 4 = 2 log 2: the enclosures must overlap
    CHECK(iv_lo(l4) <= iv_hi(twice));
    CHECK(iv_lo(twice) <= iv_hi(l4));
    CHECK(iv_contains(iv_log(interval_point(Rat(1), p), p), Rat(0)));
    CHECK_THROWS_AS(iv_log(make_interval(Rat(-1), Rat(1), p), p), Error);
}

TEST_CASE("roots and powers") {
    long p = 128;
    Interval r2 = iv_root(interval_point(Rat(2), p), 2, p);
    CHECK(iv_lo(r2) > Rat(141421356, 100000000));
    CHECK(iv_hi(r2) < Rat(141421357, 100000000));
    Interval r9 = iv_root(interval_point(Rat(9), p), 2, p);
    CHECK(iv_contains(r9, Rat(3)));
    Interval cube = iv_pow(make_interval(Rat(-2), Rat(-2), p), 3, p);
    CHECK(iv_contains(cube, Rat(-8)));
    Interval inv = iv_pow(interval_point(Rat(4), p), -2, p);
    CHECK(iv_contains(inv, Rat(1, 16)));
    CHECK_THROWS_AS(iv_root(make_interval(Rat(-1), Rat(1), p), 2, p), Error);
}

TEST_CASE("algebraic scalar enclosure") {
    RealScalar r2 = scalar_algebraic({Int(-2), Int(0), Int(1)}, Rat(1), Rat(2));
    Interval e = enclose(r2, 100);
    CHECK(iv_lo(e) > Rat(141421356, 100000000));
    CHECK(iv_hi(e) < Rat(141421357, 100000000));
    CHECK(iv_width(e) * (Int(1) << 100) <= 2);
    // no sign change across the interval
    CHECK_THROWS_AS(scalar_algebraic({Int(-2), Int(0), Int(1)}, Rat(2), Rat(3)), Error);
    // refinement shrinks the isolating interval
    RealScalar finer = refine(r2);
    const auto& a0 = std::get<AlgebraicRoot>(r2.rep);
    const auto& a1 = std::get<AlgebraicRoot>(finer.rep);
    CHECK(a1.hi - a1.lo < a0.hi - a0.lo);
}

TEST_CASE("decimal scalar guard bits") {
    RealScalar d = scalar_decimal("0.414", 64);
    Interval e = enclose(d, 32);
    CHECK(iv_contains(e, Rat(414, 1000)));
    CHECK_THROWS_AS(enclose(d, 128), Error);
    CHECK_THROWS_AS(refine(d), Error);
}

TEST_CASE("fixed point pair of the cubic") {
    RealPair p = fixed_point(3);
    CHECK(p.y_is_x_squared);
    Interval e = enclose(p.x, 80);
    // alpha(3) = sqrt(2) - 1
    CHECK(iv_lo(e) > Rat(41421356, 100000000));
    CHECK(iv_hi(e) < Rat(41421357, 100000000));
    CHECK_THROWS_AS(fixed_point(0), Error);
}

TEST_CASE("scalar text forms") {
    RealScalar r = parse_scalar("3/7");
    CHECK(std::get<Rat>(r.rep) == Rat(3, 7));
    RealScalar d = parse_scalar("0.414:128");
    CHECK(std::get<Decimal>(d.rep).guard_bits == 128);
    RealScalar a = parse_scalar("poly:-2,0,1;iv:1,2");
    CHECK(std::get<AlgebraicRoot>(a.rep).coeffs.size() == 3);
    CHECK(parse_scalar(format_scalar(a)) == a);
    CHECK(parse_scalar(format_scalar(r)) == r);
    CHECK_THROWS_AS(parse_scalar("poly:1,2"), Error);
}

TEST_CASE("interval rendering rounds outward") {
    Interval a = make_interval(Rat(1, 3), Rat(1, 3), 64);
    std::string s = format_interval(a, 10);
    CHECK(s.front() == '[');
    CHECK(s.find("0.3333333333") != std::string::npos);
    CHECK(decimal_string(Rat(-7, 4), 2) == "-1.75");
    CHECK(decimal_string(Rat(5), 0) == "5");
}
