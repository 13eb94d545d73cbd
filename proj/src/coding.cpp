#include "tt/coding.hpp"

#include <algorithm>

namespace tt {

namespace {

const Triple& root_triple() {
    static Triple r{Int(2), Int(1), Int(1)};
    return r;
}

std::string repeat(char c, const Int& n) {
    if (n < 0) fail_domain("MalformedRepresentation", "negative repeat count");
    return std::string(n.get_ui(), c);
}

// phi-word of a diagonal point with the given cf digits, applied to the root:
// blocks 1^(a_i - 1) 002 for i < n, then 1^(a_n - 2).
std::string cf_block(const std::vector<Int>& digits) {
    std::string out;
    for (size_t i = 0; i + 1 < digits.size(); ++i) out += repeat('1', digits[i] - 1) + "002";
    out += repeat('1', digits.back() - 2);
    return out;
}

std::string ts_block(const std::vector<Int>& digits) {
    std::string out;
    for (const Int& a : digits) out += repeat('1', a) + "0";
    return out;
}

bool is_ambiguous_pair(const TriangleSeq& ts, const CF& cf) {
    return ts.complete && ts.digits.size() == 1 && ts.digits[0] >= 1 &&
           cf.kind == CF::Kind::digits && cf.digits.size() == 1 &&
           cf.digits[0] == ts.digits[0] + 1;
}

} // namespace

Representation representation_of(const Triple& t) {
    PairKind kind = classify(t);
    Representation rep;
    rep.kind = kind;
    if (kind == PairKind::vertex) {
        if (t.p == 0) {  // (0,0)
            rep.cf = cf_zero();
        } else if (t.r == 0) {  // (1,0)
            rep.cf = cf_one();
        } else {  // (1,1)
            rep.tseq.digits = {Int(0)};
            rep.cf = cf_one();
        }
        return rep;
    }
    RationalExpansion ex = triangle_sequence_rational(t);
    CF cf = cf_expand(ex.xi);
    switch (kind) {
        case PairKind::lambda:
            rep.cf = cf;
            break;
        case PairKind::upsilon:
            rep.tseq.digits = {Int(0)};
            rep.cf = cf;
            break;
        case PairKind::sigma:
            if (cf.digits.size() == 1) {
                rep.tseq.digits = {cf.digits[0] - 1};
                rep.cf = cf;
            } else {
                rep.tseq.digits = {cf.digits[0] - 1, Int(0)};
                rep.cf = cf;
            }
            break;
        case PairKind::interior:
            rep.tseq = ex.seq;
            rep.cf = cf;
            break;
        default:
            break;
    }
    return rep;
}

Triple point_of(const Representation& rep) {
    if (!rep.tseq.complete)
        fail_domain("MalformedRepresentation", "truncated triangle sequence");
    const auto& ts = rep.tseq.digits;
    switch (rep.kind) {
        case PairKind::vertex: {
            if (ts.empty() && rep.cf.kind == CF::Kind::zero)
                return Triple{Int(1), Int(0), Int(0)};
            if (ts.empty() && rep.cf.kind == CF::Kind::one)
                return Triple{Int(1), Int(1), Int(0)};
            if (ts.size() == 1 && ts[0] == 0 && rep.cf.kind == CF::Kind::one)
                return Triple{Int(1), Int(1), Int(1)};
            fail_domain("MalformedRepresentation", "unknown vertex form");
        }
        case PairKind::lambda: {
            if (!ts.empty() || rep.cf.kind != CF::Kind::digits)
                fail_domain("MalformedRepresentation", "bottom-side form is ([], cf)");
            Frac xi = cf_eval(rep.cf);
            return canonicalize(Vec3{xi.q, xi.p, Int(0)});
        }
        case PairKind::upsilon: {
            if (ts.size() != 1 || ts[0] != 0 || rep.cf.kind != CF::Kind::digits)
                fail_domain("MalformedRepresentation", "right-side form is ([0], cf)");
            Frac xi = cf_eval(rep.cf);
            return canonicalize(Vec3{xi.q, xi.q, xi.p});
        }
        case PairKind::sigma: {
            if (rep.cf.kind != CF::Kind::digits || ts.empty() || ts.size() > 2)
                fail_domain("MalformedRepresentation", "diagonal form is ([a1-1],[a1]) or ([a1-1,0], cf)");
            const auto& cfd = rep.cf.digits;
            if (ts.size() == 1) {
                if (cfd.size() != 1 || cfd[0] != ts[0] + 1)
                    fail_domain("MalformedRepresentation",
                                "diagonal short form needs cf [a1] with tseq [a1-1]");
            } else {
                if (ts[1] != 0 || cfd.size() < 2 || cfd[0] != ts[0] + 1)
                    fail_domain("MalformedRepresentation",
                                "diagonal long form needs tseq [a1-1,0]");
            }
            Frac xi = cf_eval(rep.cf);
            return canonicalize(Vec3{xi.q, xi.p, xi.p});
        }
        case PairKind::interior: {
            if (ts.empty() || ts.back() == 0)
                fail_domain("MalformedRepresentation",
                            "interior triangle sequence must end with a positive digit");
            if (rep.cf.kind != CF::Kind::digits)
                fail_domain("MalformedRepresentation", "interior form needs a finite cf");
            std::string w = ts_block(ts) + "2" + cf_block(rep.cf.digits);
            return phi_word(w, root_triple());
        }
    }
    fail_domain("MalformedRepresentation", "unreachable");
}

std::string format_representation(const Representation& rep) {
    std::string out = format_tseq(rep.tseq) + ";" + format_cf(rep.cf);
    if (is_ambiguous_pair(rep.tseq, rep.cf))
        out += (rep.kind == PairKind::sigma) ? ";sigma" : ";interior";
    return out;
}

Representation parse_representation(const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t sep = s.find(';', start);
        if (sep == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, sep - start));
        start = sep + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        fail_parse("MalformedRepresentation", "expected 'TSEQ;CF[;kind]' in '" + s + "'");
    Representation rep;
    rep.tseq = parse_tseq(parts[0]);
    rep.cf = parse_cf(parts[1]);
    const auto& ts = rep.tseq.digits;
    if (parts.size() == 3) {
        if (parts[2] == "sigma")
            rep.kind = PairKind::sigma;
        else if (parts[2] == "interior")
            rep.kind = PairKind::interior;
        else
            fail_parse("MalformedRepresentation", "unknown kind '" + parts[2] + "'");
        return rep;
    }
    if (ts.empty())
        rep.kind = (rep.cf.kind == CF::Kind::digits) ? PairKind::lambda : PairKind::vertex;
    else if (ts.size() == 1 && ts[0] == 0)
        rep.kind = (rep.cf.kind == CF::Kind::one) ? PairKind::vertex : PairKind::upsilon;
    else if (ts.back() == 0 || is_ambiguous_pair(rep.tseq, rep.cf))
        rep.kind = PairKind::sigma;
    else
        rep.kind = PairKind::interior;
    return rep;
}

AnchoredWord word_of(const Representation& rep) {
    switch (rep.kind) {
        case PairKind::vertex:
            fail_domain("RootOrVertex", "corner points have no coding word");
        case PairKind::sigma: {
            Triple p = point_of(rep);
            return {root_triple(), farey_path(make_frac(p.p, p.q)).prefix};
        }
        case PairKind::lambda: {
            Triple p = point_of(rep);
            return {Triple{Int(2), Int(1), Int(0)}, farey_path(make_frac(p.p, p.q)).prefix};
        }
        case PairKind::upsilon: {
            Triple p = point_of(rep);
            return {Triple{Int(2), Int(2), Int(1)}, farey_path(make_frac(p.r, p.q)).prefix};
        }
        case PairKind::interior: {
            point_of(rep);  // validation
            const auto& ts = rep.tseq.digits;
            std::string w;
            for (size_t i = 0; i + 1 < ts.size(); ++i) w += repeat('L', ts[i]) + "I";
            w += repeat('L', ts.back() - 1) + "I";
            w += farey_path(cf_eval(rep.cf)).prefix;
            return {root_triple(), w};
        }
    }
    fail_domain("MalformedRepresentation", "unreachable");
}

Representation representation_of_word(const std::string& w) {
    for (char c : w)
        if (c != 'L' && c != 'R' && c != 'I')
            fail_parse("MalformedWord", "symbol '" + std::string(1, c) + "'");
    size_t last_i = w.find_last_of('I');
    if (last_i == std::string::npos) {
        if (w.find('R') != std::string::npos)
            fail_parse("MalformedWord", "R moves require a preceding I");
        Representation rep;
        rep.kind = PairKind::sigma;
        long j = static_cast<long>(w.size());
        rep.tseq.digits = {Int(j + 1)};
        rep.cf = cf_digits({Int(j + 2)});
        return rep;
    }
    std::string head = w.substr(0, last_i + 1);
    std::string tail = w.substr(last_i + 1);
    if (head.find('R') != std::string::npos)
        fail_parse("MalformedWord", "I moves may not follow R");
    // head = L^{d_0} I L^{d_1} I ... L^{d_r} I
    std::vector<Int> ds;
    long run = 0;
    for (char c : head) {
        if (c == 'L') {
            ++run;
        } else {  // I
            ds.push_back(Int(run));
            run = 0;
        }
    }
    Representation rep;
    rep.kind = PairKind::interior;
    ds.back() += 1;
    rep.tseq.digits = std::move(ds);
    if (tail.find('R') == std::string::npos) {
        rep.cf = cf_digits({Int(static_cast<long>(tail.size()) + 2)});
        return rep;
    }
    // tail = L^{c_0} R^{c_1} L^{c_2} ... with c_0 possibly 0
    std::vector<Int> cs;
    char expect = 'L';
    size_t i = 0;
    while (i < tail.size()) {
        if (tail[i] != expect && !(cs.empty() && expect == 'L')) {
            fail_parse("MalformedWord", "tail must alternate L and R runs");
        }
        char cur = tail[i];
        if (cs.empty() && cur == 'R') cs.push_back(Int(0));  // empty leading L run
        size_t j = i;
        while (j < tail.size() && tail[j] == cur) ++j;
        cs.push_back(Int(static_cast<long>(j - i)));
        expect = (cur == 'L') ? 'R' : 'L';
        i = j;
    }
    cs.front() += 1;
    cs.back() += 1;
    rep.cf = cf_digits(std::move(cs));
    return rep;
}

Mat3 move_matrix(char mv) {
    switch (mv) {
        case 'L': return Mat3::from_rows({{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}});
        case 'R': return Mat3::from_rows({{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
        case 'I': return Mat3::from_rows({{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
    }
    fail_parse("MalformedWord", "symbol '" + std::string(1, mv) + "'");
}

Mat3 anchor_matrix(const Triple& anchor) {
    if (anchor == root_triple())
        return Mat3::from_rows({{{1, 1, 1}, {1, 0, 1}, {1, 0, 0}}});
    if (anchor == Triple{Int(2), Int(1), Int(0)})
        return Mat3::from_rows({{{1, 1, 1}, {1, 0, 1}, {0, 0, 1}}});
    if (anchor == Triple{Int(2), Int(2), Int(1)})
        return Mat3::from_rows({{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}});
    fail_domain("BadAnchor", "anchor must be a side midpoint");
}

Mat3 apply_move(const Mat3& m, char mv) { return mat3_mul(m, move_matrix(mv)); }

std::pair<Mat3, Triple> walk(const Triple& anchor, const std::string& word) {
    Mat3 m = anchor_matrix(anchor);
    for (char mv : word) m = apply_move(m, mv);
    Vec3 a = m.col(0), b = m.col(1);
    return {m, canonicalize(mediant(a, b))};
}

Mat3 matrix_of(const Triple& t) {
    AnchoredWord aw = word_of(representation_of(t));
    return walk(aw.anchor, aw.word).first;
}

Triple action_semantic(const Triple& t, char mv) {
    if (mv == 'L' || mv == 'R') {
        auto [l, r] = parents(t);
        return canonicalize(mediant(t, mv == 'L' ? l : r));
    }
    if (mv != 'I') fail_parse("MalformedWord", "symbol '" + std::string(1, mv) + "'");
    // Peel branch maps down to the root, recording the branch word.
    std::string omega;
    Triple cur = t;
    while (!(cur == root_triple())) {
        PairKind kind = classify(cur);
        if (kind == PairKind::lambda || kind == PairKind::vertex)
            fail_domain("IActionNotAvailable",
                        "point is not a branch-word image of the root");
        // On p + r = q take the diagonal preimage: the other preimage is an
        // upsilon point, which never continues to the root by branch maps.
        if (cur.p + cur.r >= cur.q) {
            omega += '0';
            cur = canonicalize(Vec3{cur.p, cur.r, cur.q - cur.p});
        } else {
            omega += '1';
            cur = canonicalize(Vec3{cur.q - cur.r, cur.p, cur.r});
        }
    }
    Triple ref = phi_word(omega, Triple{Int(1), Int(1), Int(0)});
    return canonicalize(mediant(t, ref));
}

std::string backimage_decomposition(const Triple& t) {
    Representation rep = representation_of(t);
    switch (rep.kind) {
        case PairKind::vertex:
            fail_domain("RootOrVertex", "corner points have no decomposition");
        case PairKind::sigma:
            return cf_block(rep.cf.digits);
        case PairKind::lambda:
            return "2" + cf_block(rep.cf.digits);
        case PairKind::upsilon:
            return "02" + cf_block(rep.cf.digits);
        case PairKind::interior:
            return ts_block(rep.tseq.digits) + "2" + cf_block(rep.cf.digits);
    }
    fail_domain("MalformedRepresentation", "unreachable");
}

} // namespace tt
