#include <doctest.h>

#include <vector>

#include "tt/coding.hpp"

using namespace tt;

namespace {

Triple tr(long q, long p, long r) { return Triple{Int(q), Int(p), Int(r)}; }

std::vector<Triple> small_triples(long qmax) {
    std::vector<Triple> out;
    for (long q = 1; q <= qmax; ++q)
        for (long p = 0; p <= q; ++p)
            for (long r = 0; r <= p; ++r) {
                Int g = gcd(gcd(Int(q), Int(p)), Int(r));
                if (g == 1) out.push_back(tr(q, p, r));
            }
    return out;
}

bool grammar_valid(const std::string& w) {
    size_t first_r = w.find('R');
    if (first_r == std::string::npos) return true;
    if (w.find('I') == std::string::npos) return false;
    if (w.find('I') > first_r) return false;
    return w.find('I', first_r) == std::string::npos;
}

} // namespace

TEST_CASE("representation of the worked example") {
    Representation rep = representation_of(tr(54, 19, 14));
    CHECK(rep.tseq.digits == std::vector<Int>{2, 0, 1, 1});
    CHECK(rep.cf == cf_digits({Int(2), Int(2)}));
    CHECK(rep.kind == PairKind::interior);
    CHECK(format_representation(rep) == "[2,0,1,1];[2,2]");
    CHECK(point_of(rep) == tr(54, 19, 14));
}

TEST_CASE("representations by point class") {
    CHECK(format_representation(representation_of(tr(1, 0, 0))) == "[];[0]");
    CHECK(format_representation(representation_of(tr(1, 1, 0))) == "[];[1]");
    CHECK(format_representation(representation_of(tr(1, 1, 1))) == "[0];[1]");
    CHECK(format_representation(representation_of(tr(3, 1, 0))) == "[];[3]");
    CHECK(format_representation(representation_of(tr(3, 3, 2))) == "[0];[1,2]");
    CHECK(format_representation(representation_of(tr(4, 1, 1))) == "[3];[4];sigma");
    CHECK(format_representation(representation_of(tr(2, 1, 1))) == "[1];[2];sigma");
    // long diagonal form: (2/5, 2/5) has xi = [2,2]
    CHECK(format_representation(representation_of(tr(5, 2, 2))) == "[1,0];[2,2]");
}

TEST_CASE("ambiguous text forms") {
    Representation sg = parse_representation("[1];[2]");
    CHECK(sg.kind == PairKind::sigma);
    CHECK(point_of(sg) == tr(2, 1, 1));
    Representation in = parse_representation("[1];[2];interior");
    CHECK(in.kind == PairKind::interior);
    CHECK(point_of(in) == tr(3, 2, 1));
    // unambiguous pairs never carry the tag
    CHECK(format_representation(representation_of(tr(5, 2, 1))) == "[3];[2]");
    CHECK(parse_representation("[3];[2]").kind == PairKind::interior);
    CHECK_THROWS_AS(parse_representation("[1];[2];weird"), Error);
    CHECK_THROWS_AS(parse_representation("[1]"), Error);
}

TEST_CASE("representation round trip") {
    for (const Triple& t : small_triples(7)) {
        Representation rep = representation_of(t);
        CHECK(point_of(rep) == t);
        CHECK(parse_representation(format_representation(rep)) == rep);
    }
}

TEST_CASE("words of the tree points") {
    Representation rep = representation_of(tr(54, 19, 14));
    AnchoredWord aw = word_of(rep);
    CHECK(aw.anchor == tr(2, 1, 1));
    CHECK(aw.word == "LLIILIILR");
    CHECK(word_of(representation_of(tr(2, 1, 1))).word == "");
    AnchoredWord up = word_of(representation_of(tr(3, 3, 1)));
    CHECK(up.anchor == tr(2, 2, 1));
    CHECK(up.word == "L");
    AnchoredWord lm = word_of(representation_of(tr(5, 2, 0)));
    CHECK(lm.anchor == tr(2, 1, 0));
    CHECK(lm.word == "LR");
    CHECK_THROWS_AS(word_of(representation_of(tr(1, 1, 0))), Error);
    // anchored walk lands on the point
    for (const Triple& t : small_triples(6)) {
        if (classify(t) == PairKind::vertex) continue;
        AnchoredWord w = word_of(representation_of(t));
        CHECK(walk(w.anchor, w.word).second == t);
    }
}

TEST_CASE("grammar inversion rules") {
    CHECK(representation_of_word("") == representation_of(tr(2, 1, 1)));
    CHECK(point_of(representation_of_word("L")) == tr(3, 1, 1));
    CHECK(point_of(representation_of_word("LL")) == tr(4, 1, 1));
    Representation r3 = representation_of_word("LLI");
    CHECK(r3.tseq.digits == std::vector<Int>{3});
    CHECK(r3.cf == cf_digits({Int(2)}));
    Representation r5 = representation_of_word("LLIIL");
    CHECK(r5.tseq.digits == std::vector<Int>{2, 1});
    CHECK(r5.cf == cf_digits({Int(3)}));
    CHECK(point_of(r5) == tr(11, 4, 3));
    Representation r7 = representation_of_word("LIILLLR");
    CHECK(r7.tseq.digits == std::vector<Int>{1, 1});
    CHECK(r7.cf == cf_digits({Int(4), Int(2)}));
    CHECK(representation_of_word("LLIILIILR") == representation_of(tr(54, 19, 14)));
    CHECK_THROWS_AS(representation_of_word("R"), Error);
    CHECK_THROWS_AS(representation_of_word("LRI"), Error);
    CHECK_THROWS_AS(representation_of_word("LX"), Error);
}

TEST_CASE("generator matrices") {
    Mat3 l = move_matrix('L'), r = move_matrix('R'), i = move_matrix('I');
    CHECK(mat3_det(l) == 1);
    CHECK(mat3_det(r) == 1);
    CHECK(mat3_det(i) == 1);
    CHECK(i == Mat3::from_rows({{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}}));
    auto [m, t] = walk(tr(2, 1, 1), "LLIILIILR");
    CHECK(m == Mat3::from_rows({{{23, 31, 11}, {8, 11, 4}, {6, 8, 3}}}));
    CHECK(t == tr(54, 19, 14));
    CHECK(matrix_of(tr(54, 19, 14)) == m);
    for (const Triple& t2 : small_triples(6)) {
        if (classify(t2) == PairKind::vertex) continue;
        Int det = mat3_det(matrix_of(t2));
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("mediant action of single moves") {
    CHECK(action_semantic(tr(2, 1, 1), 'L') == tr(3, 1, 1));
    CHECK(action_semantic(tr(2, 1, 1), 'R') == tr(3, 2, 2));
    CHECK(action_semantic(tr(2, 1, 1), 'I') == tr(3, 2, 1));
    CHECK(action_semantic(tr(3, 1, 1), 'I') == tr(4, 2, 1));
    CHECK(action_semantic(tr(4, 1, 1), 'I') == tr(5, 2, 1));
    CHECK_THROWS_AS(action_semantic(tr(5, 2, 2), 'I'), Error);
    CHECK_THROWS_AS(action_semantic(tr(2, 1, 0), 'I'), Error);
}

TEST_CASE("matrix walk, mediant actions and grammar agree") {
    std::vector<std::string> words = {""};
    const char syms[] = {'L', 'R', 'I'};
    for (int len = 0; len < 6; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : words)
            if (static_cast<int>(w.size()) == len)
                for (char c : syms) next.push_back(w + c);
        for (const std::string& w : next) words.push_back(w);
    }
    int checked = 0;
    for (const std::string& w : words) {
        if (!grammar_valid(w)) continue;
        Triple walked = walk(tr(2, 1, 1), w).second;
        Triple acted = tr(2, 1, 1);
        for (char c : w) acted = action_semantic(acted, c);
        CHECK(walked == acted);
        CHECK(point_of(representation_of_word(w)) == walked);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("branch word decomposition") {
    CHECK(backimage_decomposition(tr(54, 19, 14)) == "1100101021002");
    CHECK(backimage_decomposition(tr(5, 2, 0)) == "21002");
    CHECK(backimage_decomposition(tr(2, 1, 1)) == "");
    CHECK_THROWS_AS(backimage_decomposition(tr(1, 1, 1)), Error);
    for (const Triple& t : small_triples(7)) {
        if (classify(t) == PairKind::vertex) continue;
        CHECK(phi_word(backimage_decomposition(t), tr(2, 1, 1)) == t);
    }
}
