// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tt/algebraic.hpp"
#include "tt/approximation.hpp"
#include "tt/triangular_tree.hpp"

using namespace tt;

namespace {

int g_failures = 0;

class Check {
public:
    explicit Check(std::string label) : label_(std::move(label)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
        }
    }

    void finish(double time_limit_s = 0.0) {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        double secs = std::chrono::duration<double>(elapsed).count();
        if (time_limit_s > 0 && secs > time_limit_s)
            problems_.push_back("took " + std::to_string(secs) + " s, limit " +
                                std::to_string(time_limit_s));
        if (problems_.empty()) {
            std::printf("PASS  %s (%.2f s)\n", label_.c_str(), secs);
        } else {
            ++g_failures;
            std::printf("FAIL  %s (%.2f s)\n", label_.c_str(), secs);
            for (const std::string& p : problems_) std::printf("      - %s\n", p.c_str());
        }
    }

private:
    std::string label_;
    std::vector<std::string> problems_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Triple tr(long q, long p, long r) { return Triple{Int(q), Int(p), Int(r)}; }

void run(const std::string& label, double limit, const std::function<void(Check&)>& body) {
    Check c(label);
    try {
        body(c);
    } catch (const Error& e) {
        c.expect(false, std::string("unexpected error: ") + e.what());
    } catch (const std::exception& e) {
        c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    c.finish(limit);
}

std::vector<std::string> valid_words(int max_len) {
    // L*(IL*)* optionally followed by an alternating L/R tail: R needs an
    // earlier I, and no I may follow an R.
    std::vector<std::string> out = {""};
    struct State {
        std::string w;
        bool has_i, has_r;
    };
    std::vector<State> frontier = {{"", false, false}};
    for (int len = 0; len < max_len; ++len) {
        std::vector<State> next;
        for (const State& s : frontier) {
            next.push_back({s.w + "L", s.has_i, s.has_r});
            if (!s.has_r) next.push_back({s.w + "I", true, false});
            if (s.has_i) next.push_back({s.w + "R", true, true});
        }
        for (const State& s : next) out.push_back(s.w);
        frontier = std::move(next);
    }
    return out;
}

struct TableRow {
    long q, p, r;
    std::vector<Int> ts;
    std::vector<Int> cf;
};

void check_table(Check& c, const ApproximationTarget& target,
                 const std::vector<TableRow>& want, const std::string& name) {
    auto rows = approximants(target, static_cast<long>(want.size()) - 1);
    LazyWord lazy = approximation_word(target);
    c.expect(rows.size() == want.size(), name + ": row count");
    for (size_t j = 0; j < rows.size() && j < want.size(); ++j) {
        const TableRow& w = want[j];
        std::string at = name + " row " + std::to_string(j);
        c.expect(rows[j].triple == tr(w.q, w.p, w.r), at + ": triple");
        c.expect(rows[j].rep.tseq.digits == w.ts, at + ": triangle sequence");
        c.expect(rows[j].rep.cf.digits == w.cf, at + ": continued fraction");
        c.expect(rows[j].word == lazy.prefix(static_cast<long>(j)), at + ": word");
    }
}

} // namespace

int main() {
    run("dual tree constructions agree through level 12", 10.0, [](Check& c) {
        long nmax = 12;
        auto counter = levels_counterimage(nmax);
        auto geo = levels_geometric(nmax);
        c.expect(counter.size() == static_cast<size_t>(nmax) + 2, "counterimage size");
        c.expect(geo.size() == static_cast<size_t>(nmax) + 1, "geometric size");
        c.expect(counter[1].size() == 3, "|T0| = 3");
        c.expect(counter[2].size() == 7, "|T1| = 7");
        c.expect(counter[3].size() == 16, "|T2| = 16");
        auto sorted = [](std::vector<Triple> out) {
            std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
                return std::tie(a.q, a.p, a.r) < std::tie(b.q, b.p, b.r);
            });
            return out;
        };
        for (long n = 0; n <= nmax; ++n) {
            std::vector<Triple> cn;
            for (const TreeNode& node : counter[static_cast<size_t>(n) + 1])
                cn.push_back(node.triple);
            c.expect(sorted(cn) == sorted(geo[static_cast<size_t>(n)]),
                     "level " + std::to_string(n));
        }
    });

    run("denominators through 8 appear once, at their rank", 30.0, [](Check& c) {
        CompletenessReport rep = completeness_check(8, 10);
        c.expect(rep.ok, "report flag");
        c.expect(rep.missing.empty(), "missing points");
        c.expect(rep.duplicated.empty(), "duplicated points");
        c.expect(rep.misplaced.empty(), "points away from their rank");
    });

    run("encode (19/54, 14/54) end to end", 0.0, [](Check& c) {
        Triple t = tr(54, 19, 14);
        Representation rep = representation_of(t);
        c.expect(format_representation(rep) == "[2,0,1,1];[2,2]", "representation");
        AnchoredWord aw = word_of(rep);
        c.expect(aw.word == "LLIILIILR", "word");
        c.expect(aw.anchor == tr(2, 1, 1), "anchor");
        auto [m, end] = walk(aw.anchor, aw.word);
        c.expect(m == Mat3::from_rows({{{23, 31, 11}, {8, 11, 4}, {6, 8, 3}}}), "matrix");
        c.expect(end == t, "walk endpoint");
        c.expect(rank(t) == 9, "rank");
        c.expect(backimage_decomposition(t) == "1100101021002", "branch decomposition");
        c.expect(phi_word(backimage_decomposition(t), tr(2, 1, 1)) == t,
                 "branch decomposition replay");
    });

    run("approximant tables of the two finite targets", 0.0, [](Check& c) {
        ApproximationTarget t1 = FiniteTS{{Int(2), Int(0), Int(1), Int(1)},
                                          CFTail{{Int(2), Int(2)}, {}, {}},
                                          std::nullopt};
        // row 5 carries the corrected representation ([2,1],[3]) for 4/11, 3/11
        check_table(c, t1,
                    {{2, 1, 1, {1}, {2}},
                     {3, 1, 1, {2}, {3}},
                     {4, 1, 1, {3}, {4}},
                     {5, 2, 1, {3}, {2}},
                     {8, 3, 2, {2, 1}, {2}},
                     {11, 4, 3, {2, 1}, {3}},
                     {15, 5, 4, {2, 0, 2}, {2}},
                     {23, 8, 6, {2, 0, 1, 1}, {2}},
                     {31, 11, 8, {2, 0, 1, 1}, {3}},
                     {54, 19, 14, {2, 0, 1, 1}, {2, 2}}},
                    "finite tail");
        c.expect(approximation_word(t1).prefix(100) == "LLIILIILR", "finite word");

        ApproximationTarget t2 = FiniteTS{{Int(1), Int(1)},
                                          CFTail{{}, {Int(4), Int(1)}, {}},
                                          std::nullopt};
        check_table(c, t2,
                    {{2, 1, 1, {1}, {2}},
                     {3, 1, 1, {2}, {3}},
                     {4, 2, 1, {2}, {2}},
                     {6, 3, 2, {1, 1}, {2}},
                     {8, 4, 3, {1, 1}, {3}},
                     {10, 5, 4, {1, 1}, {4}},
                     {12, 6, 5, {1, 1}, {5}},
                     {22, 11, 9, {1, 1}, {4, 2}},
                     {34, 17, 14, {1, 1}, {4, 1, 2}},
                     {46, 23, 19, {1, 1}, {4, 1, 3}}},
                    "periodic tail");
        c.expect(approximation_word(t2).prefix(12) == "LIILLLRLLLLR", "periodic word");
    });

    run("prime-digit table and shrinkage products", 0.0, [](Check& c) {
        std::vector<Int> primes = {Int(1),  Int(2),  Int(3),  Int(5),  Int(7),  Int(11),
                                   Int(13), Int(17), Int(19), Int(23), Int(29), Int(31),
                                   Int(37), Int(41), Int(43), Int(47)};
        ApproximationTarget t = ConvergentTS{digits_fixed(primes)};
        check_table(c, t,
                    {{2, 1, 1, {1}, {2}},
                     {3, 1, 1, {2}, {3}},
                     {4, 2, 1, {2}, {2}},
                     {5, 3, 1, {2}, {3}},
                     {6, 4, 1, {2}, {4}},
                     {8, 5, 2, {1, 3}, {2}},
                     {10, 6, 3, {1, 3}, {3}},
                     {12, 7, 4, {1, 3}, {4}},
                     {14, 8, 5, {1, 3}, {5}},
                     {19, 11, 6, {1, 2, 4}, {2}}},
                    "prime digits");
        ConvergenceDiagnostics diag = convergence_diagnostics(primes);
        c.expect(diag.partial_products.size() >= 12, "enough partial products");
        for (size_t i = 1; i < diag.partial_products.size() && i < 12; ++i)
            c.expect(diag.partial_products[i] < diag.partial_products[i - 1],
                     "product not decreasing at index " + std::to_string(i));
    });

    run("one-dimensional Farey suite", 0.0, [](Check& c) {
        Frac x = make_frac(7, 12);
        c.expect(cf_expand(x).digits == std::vector<Int>{1, 1, 2, 2}, "cf of 7/12");
        c.expect(farey_rank(x) == 4, "rank of 7/12");
        Mat2 m = farey_matrix(x);
        Mat2 want;
        want.at(0, 0) = 3;
        want.at(0, 1) = 4;
        want.at(1, 0) = 5;
        want.at(1, 1) = 7;
        c.expect(m == want, "matrix of 7/12");

        std::vector<Frac> f2 = stern_brocot(2);
        std::vector<Frac> expected = {make_frac(0, 1), make_frac(1, 4), make_frac(1, 3),
                                      make_frac(2, 5), make_frac(1, 2), make_frac(3, 5),
                                      make_frac(2, 3), make_frac(3, 4), make_frac(1, 1)};
        c.expect(f2 == expected, "second Stern-Brocot set");

        std::vector<Frac> f6 = stern_brocot(6);
        for (size_t i = 1; i < f6.size(); ++i) {
            Int det = f6[i].p * f6[i - 1].q - f6[i - 1].p * f6[i].q;
            c.expect(det == 1, "non-unimodular neighbors at index " + std::to_string(i));
        }
    });

    run("iterated-mediant distance identity on random triples", 0.0, [](Check& c) {
        std::mt19937 rng(12345);
        auto random_triple = [&rng]() {
            std::uniform_int_distribution<long> dq(1, 60);
            long q = dq(rng);
            long p = std::uniform_int_distribution<long>(0, q)(rng);
            long r = std::uniform_int_distribution<long>(0, p)(rng);
            return canonicalize(Vec3{Int(q), Int(p), Int(r)});
        };
        long failures = 0;
        for (int i = 0; i < 10000; ++i) {
            Triple x = random_triple(), y = random_triple();
            unsigned long s = std::uniform_int_distribution<unsigned long>(0, 20)(rng);
            Vec3 z = mediant_iter(y, x, s);
            Triple zc = canonicalize(z);
            Rat d = sq_dist(x, y);
            Int denom = z.q;
            if (sq_dist(zc, x) * denom * denom != d * y.q * y.q) ++failures;
            if (sq_dist(zc, y) * denom * denom != d * (Int(s) * x.q) * (Int(s) * x.q))
                ++failures;
        }
        c.expect(failures == 0, std::to_string(failures) + " identity failures");
    });

    run("all word semantics agree through length 10", 60.0, [](Check& c) {
        long mismatches = 0, count = 0;
        for (const std::string& w : valid_words(10)) {
            Triple walked = walk(tr(2, 1, 1), w).second;
            Triple acted = tr(2, 1, 1);
            for (char ch : w) acted = action_semantic(acted, ch);
            Triple decoded = point_of(representation_of_word(w));
            if (walked != acted || walked != decoded) ++mismatches;
            ++count;
        }
        c.expect(count > 9000, "word enumeration too small");
        c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    });

    run("eigenvalue model matches the exact periodic errors", 0.0, [](Check& c) {
        for (long d : {3L, 4L, 5L}) {
            CubicErrorModel model(d, tr(2, 1, 0), 128);
            for (long k = 2; k <= 20; ++k) {
                auto [pa, pb] = model.predict(k);
                auto [ea, eb] = model.exact(k);
                bool ok = iv_lo(pa) <= iv_hi(ea) && iv_lo(ea) <= iv_hi(pa) &&
                          iv_lo(pb) <= iv_hi(eb) && iv_lo(eb) <= iv_hi(pb);
                c.expect(ok, "d=" + std::to_string(d) + " k=" + std::to_string(k));
            }
        }
        // for d = 3 the first numerator coefficient vanishes identically at
        // the seed: 2(3-a+a^2 h) - 2 - 6a - 2ah = 0 with a = sqrt(2)-1, h = sqrt(2)
        AlgebraicField f({Int(-2), Int(0), Int(1)}, Rat(1), Rat(2));
        AlgebraicField::Elem h = f.gen();
        AlgebraicField::Elem a = f.sub(h, f.from_rat(Rat(1)));
        AlgebraicField::Elem a2h = f.mul(f.mul(a, a), h);
        AlgebraicField::Elem term_q =
            f.add(f.sub(f.from_rat(Rat(3)), a), a2h);
        AlgebraicField::Elem term_p =
            f.sub(f.sub(f.from_rat(Rat(-2)), f.mul_rat(a, Rat(6))), f.mul_rat(f.mul(a, h), Rat(2)));
        AlgebraicField::Elem lin = f.add(f.mul_rat(term_q, Rat(2)), term_p);
        c.expect(f.is_zero(lin), "seed coefficient not certified zero");
        CubicErrorModel m3(3, tr(2, 1, 0), 128);
        c.expect(iv_contains(m3.f1(), Rat(0)), "interval coefficient misses zero");
    });

    run("certified approximation-speed decay", 60.0, [](Check& c) {
        // the certified per-step ratio is lambda3^(eta - bound), so passing
        // 1e-6 takes about 140 steps for d=3 and about 65 for d=4; the
        // windows below leave headroom. For d=3 the exact errors decay like
        // 1/q^2, about 2^-380 by k=150, so the alpha enclosure needs more
        // than 256 bits for the rows to stay certified
        auto rows3 = speed_table(ApproximationTarget{PeriodicD{Int(3)}}, Rat(39, 10), 150, 512);
        for (size_t k = 1; k < rows3.size(); ++k)
            c.expect(iv_hi(rows3[k].product) < iv_lo(rows3[k - 1].product),
                     "d=3 product not certified decreasing at k=" + std::to_string(k + 1));
        c.expect(iv_hi(rows3.back().product) < Rat(1, 1000000),
                 "d=3 product not certified below 1e-6 by k=150");

        Interval b4 = exponent_bound(4, 256);
        Rat eta4(31, 25);  // just below bound(4) - 1/10, with a small denominator
        c.expect(iv_lo(b4) - Rat(1, 10) > eta4, "eta not below the exponent bound");
        auto rows4 = speed_table(ApproximationTarget{PeriodicD{Int(4)}}, eta4, 100, 256);
        for (size_t k = 1; k < rows4.size(); ++k)
            c.expect(iv_hi(rows4[k].product) < iv_lo(rows4[k - 1].product),
                     "d=4 product not certified decreasing at k=" + std::to_string(k + 1));
        c.expect(iv_hi(rows4.back().product) < Rat(1, 1000000),
                 "d=4 product not certified below 1e-6 by k=100");

        RealScalar xi = scalar_algebraic({Int(-1), Int(2), Int(1)}, Rat(0), Rat(1));
        // the branch word 110010 sends the whole segment to y = 1/4, so its
        // second-coordinate errors, and hence the products, are exactly zero;
        // the first-coordinate errors must still decrease
        auto rowsf = finite_ts_speed("110010", xi, 15, Rat(39, 10), 256);
        for (size_t j = 0; j < rowsf.size(); ++j) {
            c.expect(iv_hi(rowsf[j].product) == 0,
                     "degenerate product not exactly zero at j=" + std::to_string(j + 1));
            if (j > 0)
                c.expect(iv_hi(rowsf[j].err_alpha) < iv_lo(rowsf[j - 1].err_alpha),
                         "x-error not decreasing at j=" + std::to_string(j + 1));
        }
        // with the trailing digit kept, both coordinates carry error and the
        // certified products themselves decrease
        auto rowsl = finite_ts_speed("11001010", xi, 15, Rat(39, 10), 256);
        for (size_t j = 3; j < rowsl.size(); ++j)
            c.expect(iv_hi(rowsl[j].product) < iv_lo(rowsl[j - 1].product),
                     "finite-target product not decreasing at j=" + std::to_string(j + 1));
    });

    run("verified expansions of irrational pairs", 0.0, [](Check& c) {
        RealExpansion fx = triangle_sequence_real(fixed_point(3), 40);
        c.expect(fx.seq.digits.size() == 40, "digit count");
        for (const Int& d : fx.seq.digits)
            c.expect(d == 3, "digit differs from 3");

        RealPair p{scalar_rational(Rat(1, 2)),
                   scalar_algebraic({Int(-1), Int(2), Int(1)}, Rat(0), Rat(1)), false};
        RealExpansion ex = triangle_sequence_real(p, 10);
        c.expect(ex.seq.digits == std::vector<Int>{1, 1}, "digits of the algebraic pair");
        c.expect(ex.seq.complete, "expansion not complete");
        Rat lo = iv_lo(ex.remainder.x), hi = iv_hi(ex.remainder.x);
        c.expect((2 * lo + 1) * (2 * lo + 1) < 2 && (2 * hi + 1) * (2 * hi + 1) > 2,
                 "remainder does not enclose (sqrt(2)-1)/2");
    });

    if (g_failures == 0) {
        std::printf("all checks passed\n");
        return 0;
    }
    std::printf("%d check(s) failed\n", g_failures);
    return 1;
}
