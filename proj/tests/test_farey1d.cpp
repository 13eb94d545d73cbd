#include <doctest.h>

#include "tt/farey1d.hpp"

using namespace tt;

namespace {

Frac fr(long p, long q) { return make_frac(Int(p), Int(q)); }

std::vector<Int> digs(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long d : v) out.emplace_back(d);
    return out;
}

} // namespace

TEST_CASE("continued fraction expansion") {
    CHECK(cf_expand(fr(7, 12)).digits == digs({1, 1, 2, 2}));
    CHECK(cf_expand(fr(2, 5)).digits == digs({2, 2}));
    CHECK(cf_expand(fr(1, 3)).digits == digs({3}));
    CHECK(cf_expand(fr(0, 1)).kind == CF::Kind::zero);
    CHECK(cf_expand(fr(1, 1)).kind == CF::Kind::one);
    // The trailing digit never comes out as 1.
    for (long q = 2; q <= 200; ++q)
        for (long p = 1; p < q; ++p) {
            CF cf = cf_expand(fr(p, q));
            CHECK(cf.digits.back() > 1);
            CHECK(cf_eval(cf) == fr(p, q));
        }
}

TEST_CASE("digit normalization") {
    CHECK(cf_normalize_digits(digs({1, 1, 2, 1})) == digs({1, 1, 3}));
    CHECK(cf_normalize_digits(digs({2, 2})) == digs({2, 2}));
    CHECK(cf_eval_digits(digs({1, 1, 2, 1})) == cf_eval_digits(digs({1, 1, 3})));
}

TEST_CASE("Farey map and inverse branches") {
    CHECK(farey_map(Rat(7, 12)) == Rat(5, 7));
    CHECK(farey_map(Rat(2, 5)) == Rat(2, 3));
    CHECK(psi0(Rat(0)) == Rat(0));
    CHECK(psi1(Rat(0)) == Rat(1));
    CHECK(psi0(Rat(1)) == Rat(1, 2));
    CHECK(psi1(psi0(Rat(0))) == Rat(1));
    // psi0 and psi1 invert the two branches.
    for (long q = 2; q <= 30; ++q)
        for (long p = 1; p < q; ++p) {
            Rat x = make_rat(Int(p), Int(q));
            Rat fx = farey_map(x);
            if (x <= Rat(1, 2))
                CHECK(psi0(fx) == x);
            else
                CHECK(psi1(fx) == x);
        }
}

TEST_CASE("Stern-Brocot sets") {
    std::vector<Frac> f2 = stern_brocot(2);
    std::vector<Frac> expect = {fr(0, 1), fr(1, 4), fr(1, 3), fr(2, 5), fr(1, 2),
                                fr(3, 5), fr(2, 3), fr(3, 4), fr(1, 1)};
    CHECK(f2 == expect);
    // Adjacent elements are unimodular at every level.
    std::vector<Frac> f6 = stern_brocot(6);
    CHECK(f6.size() == 129);
    for (size_t i = 0; i + 1 < f6.size(); ++i)
        CHECK(f6[i + 1].p * f6[i].q - f6[i].p * f6[i + 1].q == 1);
}

TEST_CASE("level sets match rank") {
    std::vector<Frac> l0 = farey_level(0);
    CHECK(l0 == std::vector<Frac>{fr(1, 2)});
    CHECK(farey_level(2).size() == 4);
    // x sits in level n exactly when its rank is n.
    for (long n = 0; n <= 5; ++n)
        for (const Frac& x : farey_level(n)) CHECK(farey_rank(x) == Int(n));
    for (long q = 2; q <= 30; ++q)
        for (long p = 1; p < q; ++p)
            if (gcd(Int(p), Int(q)) == 1) {
                Frac x = fr(p, q);
                Int rank = farey_rank(x);
                CHECK(rank == cf_digit_sum(cf_expand(x)) - 2);
            }
}

TEST_CASE("rank") {
    CHECK(farey_rank(fr(7, 12)) == 4);
    CHECK(farey_rank(fr(1, 2)) == 0);
    CHECK(farey_rank(fr(2, 5)) == 2);
    CHECK_THROWS_AS(farey_rank(fr(0, 1)), Error);
}

TEST_CASE("walk matrix and parents") {
    Mat2 m = farey_matrix(fr(7, 12));
    CHECK(m.at(0, 0) == 3); CHECK(m.at(0, 1) == 4);
    CHECK(m.at(1, 0) == 5); CHECK(m.at(1, 1) == 7);
    CHECK(mat2_det(m) == 1);
    auto [left, right] = farey_parents(fr(7, 12));
    CHECK(left == fr(4, 7));
    CHECK(right == fr(3, 5));
    CHECK(farey_path(fr(7, 12)).prefix == "RLLR");
    CHECK(farey_path(fr(2, 5)).prefix == "LR");
    CHECK(farey_path(fr(1, 2)).prefix == "");
    // Mediant of the parents returns x; parents are Farey neighbors.
    for (long q = 2; q <= 40; ++q)
        for (long p = 1; p < q; ++p)
            if (gcd(Int(p), Int(q)) == 1) {
                Frac x = fr(p, q);
                auto [a, b] = farey_parents(x);
                CHECK(make_frac(a.p + b.p, a.q + b.q) == x);
                Int det = b.p * a.q - a.p * b.q;
                CHECK((det == 1 || det == -1));
            }
}

TEST_CASE("coding of rationals") {
    LRWord w = farey_code(cf_expand(fr(7, 12)));
    CHECK(w.prefix == "LRLLRR");
    CHECK(w.tail == LRWord::Tail::Linf);
    CHECK(format_lrword(w) == "LRLLRRL^inf");
    CHECK(farey_code(cf_zero()).tail == LRWord::Tail::Linf);
    CHECK(farey_code(cf_one()).tail == LRWord::Tail::Rinf);
    LRWord w25 = farey_code(cf_expand(fr(2, 5)));
    CHECK(w25.prefix == "LLRR");
    CHECK(w25.tail == LRWord::Tail::Linf);
    LRWord w13 = farey_code(cf_expand(fr(1, 3)));
    CHECK(w13.prefix == "LLL");
    CHECK(w13.tail == LRWord::Tail::Rinf);
}

TEST_CASE("cf text form") {
    CHECK(format_cf(cf_expand(fr(7, 12))) == "[1,1,2,2]");
    CHECK(format_cf(cf_zero()) == "[0]");
    CHECK(parse_cf("[1,1,2,2]") == cf_expand(fr(7, 12)));
    CHECK(parse_cf("[0]") == cf_zero());
    CHECK(parse_cf("[1]") == cf_one());
    CHECK_THROWS_AS(parse_cf("[2,1]"), Error);
    CHECK_THROWS_AS(parse_cf("[]"), Error);
    CHECK_THROWS_AS(parse_cf("2,3"), Error);
}
