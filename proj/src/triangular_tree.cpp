#include "tt/triangular_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace tt {

namespace {

using Key = std::tuple<Int, Int, Int>;

Key key_of(const Triple& t) { return {t.q, t.p, t.r}; }

int kind_order(PairKind k) {
    switch (k) {
        case PairKind::vertex: return 0;
        case PairKind::lambda: return 1;
        case PairKind::sigma: return 2;
        case PairKind::upsilon: return 3;
        case PairKind::interior: return 4;
    }
    return 5;
}

void sort_level(std::vector<TreeNode>& level) {
    std::sort(level.begin(), level.end(), [](const TreeNode& a, const TreeNode& b) {
        int ka = kind_order(a.kind), kb = kind_order(b.kind);
        if (ka != kb) return ka < kb;
        return triple_less(a.triple, b.triple);
    });
}

TreeNode make_node(const Triple& t, long level) { return {t, classify(t), level}; }

// Adds the in-level closure of the freshly created nodes: Sigma points
// project to Lambda via phi2, Lambda points lift to Upsilon via phi0.
void close_level(std::vector<TreeNode>& level, std::set<Key>& seen, long n) {
    for (size_t i = 0; i < level.size(); ++i) {
        const TreeNode node = level[i];
        Triple extra;
        if (node.kind == PairKind::sigma)
            extra = phi2(node.triple);
        else if (node.kind == PairKind::lambda)
            extra = phi0(node.triple);
        else
            continue;
        if (seen.insert(key_of(extra)).second) level.push_back(make_node(extra, n));
    }
}

} // namespace

std::vector<std::vector<TreeNode>> levels_counterimage(long nmax) {
    if (nmax < -1) fail_domain("BadLevel", "levels need n >= -1");
    std::vector<std::vector<TreeNode>> out;
    std::set<Key> seen;
    std::vector<TreeNode> base;
    for (const Triple& v : {Triple{Int(1), Int(0), Int(0)}, Triple{Int(1), Int(1), Int(0)},
                            Triple{Int(1), Int(1), Int(1)}}) {
        seen.insert(key_of(v));
        base.push_back(make_node(v, -1));
    }
    sort_level(base);
    out.push_back(std::move(base));
    if (nmax < 0) return out;

    std::vector<TreeNode> level0;
    Triple root{Int(2), Int(1), Int(1)};
    seen.insert(key_of(root));
    level0.push_back(make_node(root, 0));
    close_level(level0, seen, 0);
    sort_level(level0);
    out.push_back(std::move(level0));

    for (long n = 1; n <= nmax; ++n) {
        std::vector<TreeNode> next;
        for (const TreeNode& node : out.back()) {
            std::vector<Triple> images;
            switch (node.kind) {
                case PairKind::interior:
                case PairKind::upsilon:
                    images = {phi0(node.triple), phi1(node.triple)};
                    break;
                case PairKind::sigma:
                    images = {phi1(node.triple)};
                    break;
                default:
                    break;
            }
            for (const Triple& t : images)
                if (seen.insert(key_of(t)).second) next.push_back(make_node(t, n));
        }
        close_level(next, seen, n);
        sort_level(next);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<TreeNode> level_counterimage(long n) {
    auto all = levels_counterimage(n);
    return all[static_cast<size_t>(n + 1)];
}

namespace {

// Geometric construction state: a partition into labelled triangles plus a
// registry of the points sitting on every side of the partition.
struct GeoTriangle {
    Triple v0, v1, v2;
};

struct SideKey {
    Key a, b;
    bool operator<(const SideKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

SideKey side_key(const Triple& x, const Triple& y) {
    Key kx = key_of(x), ky = key_of(y);
    if (ky < kx) std::swap(kx, ky);
    return {kx, ky};
}

bool on_segment_order(const Triple& a, const Triple& b) { return triple_less(a, b); }

} // namespace

std::vector<std::vector<Triple>> levels_geometric(long nmax) {
    if (nmax < 0) fail_domain("BadLevel", "levels need n >= 0");
    Triple A0{Int(1), Int(0), Int(0)};  // (0,0)
    Triple A1{Int(1), Int(1), Int(0)};  // (1,0)
    Triple A2{Int(1), Int(1), Int(1)};  // (1,1)

    std::vector<GeoTriangle> part = {{A0, A1, A2}};
    std::map<SideKey, std::vector<Triple>> sides;
    auto new_side = [&](const Triple& x, const Triple& y) {
        SideKey k = side_key(x, y);
        if (!sides.count(k)) {
            std::vector<Triple> pts = {x, y};
            std::sort(pts.begin(), pts.end(), on_segment_order);
            sides[k] = std::move(pts);
        }
    };
    new_side(A0, A1);
    new_side(A1, A2);
    new_side(A0, A2);

    std::vector<std::vector<Triple>> out;
    for (long n = 0; n <= nmax; ++n) {
        if (n > 0) {
            // Split every triangle at the mediant of its 0 and 2 vertices,
            // which the previous Farey-sum round placed on that side.
            std::vector<GeoTriangle> next_part;
            std::map<SideKey, std::vector<Triple>> next_sides;
            auto carry = [&](const Triple& x, const Triple& y) {
                SideKey k = side_key(x, y);
                auto it = sides.find(k);
                if (it != sides.end())
                    next_sides[k] = it->second;
                else {
                    std::vector<Triple> pts = {x, y};
                    std::sort(pts.begin(), pts.end(), on_segment_order);
                    next_sides[k] = std::move(pts);
                }
            };
            for (const GeoTriangle& tr : part) {
                Triple m = canonicalize(mediant(tr.v0, tr.v2));
                // Split the 0-2 side's point list at m.
                const std::vector<Triple>& full = sides.at(side_key(tr.v0, tr.v2));
                auto pos = std::find(full.begin(), full.end(), m);
                if (pos == full.end())
                    fail_domain("BadPartition", "split point missing from side registry");
                std::vector<Triple> lowhalf(full.begin(), pos + 1);
                std::vector<Triple> highhalf(pos, full.end());
                next_sides[side_key(tr.v0, m)] =
                    on_segment_order(tr.v0, m) ? lowhalf : highhalf;
                next_sides[side_key(m, tr.v2)] =
                    on_segment_order(tr.v0, m) ? highhalf : lowhalf;
                carry(tr.v0, tr.v1);
                carry(tr.v1, tr.v2);
                // Splitting segment from vertex 1 to m.
                SideKey sk = side_key(tr.v1, m);
                if (!next_sides.count(sk)) {
                    std::vector<Triple> pts = {tr.v1, m};
                    std::sort(pts.begin(), pts.end(), on_segment_order);
                    next_sides[sk] = std::move(pts);
                }
                next_part.push_back({tr.v0, tr.v1, m});
                next_part.push_back({tr.v1, tr.v2, m});
            }
            part = std::move(next_part);
            sides = std::move(next_sides);
        }
        // Farey sum on every side of the current partition.
        std::set<Key> fresh_seen;
        std::vector<Triple> fresh;
        for (auto& [k, pts] : sides) {
            std::vector<Triple> enriched;
            enriched.reserve(pts.size() * 2 - 1);
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                enriched.push_back(pts[i]);
                Triple m = canonicalize(mediant(pts[i], pts[i + 1]));
                enriched.push_back(m);
                if (fresh_seen.insert(key_of(m)).second) fresh.push_back(m);
            }
            enriched.push_back(pts.back());
            pts = std::move(enriched);
        }
        std::sort(fresh.begin(), fresh.end(), triple_less);
        out.push_back(std::move(fresh));
    }
    return out;
}

std::vector<Triple> level_geometric(long n) {
    auto all = levels_geometric(n);
    return all[static_cast<size_t>(n)];
}

namespace {

// 1D parents of the side parameter mapped onto the side.
std::pair<Triple, Triple> boundary_parents(const Triple& t, PairKind kind) {
    Frac xi = (kind == PairKind::upsilon) ? make_frac(t.r, t.q) : make_frac(t.p, t.q);
    auto [l, r] = farey_parents(xi);
    auto lift = [&](const Frac& f) -> Triple {
        switch (kind) {
            case PairKind::sigma: return canonicalize(Vec3{f.q, f.p, f.p});
            case PairKind::lambda: return canonicalize(Vec3{f.q, f.p, Int(0)});
            default: return canonicalize(Vec3{f.q, f.q, f.p});  // upsilon
        }
    };
    return {lift(l), lift(r)};
}

} // namespace

std::pair<Triple, Triple> parents(const Triple& t) {
    PairKind kind = classify(t);
    if (kind == PairKind::vertex) fail_domain("RootOrVertex", "corner points have no parents");
    if (kind != PairKind::interior) return boundary_parents(t, kind);
    int b = slow_branch(t);
    Triple up = slow_map(t);
    auto [l, r] = parents(up);
    if (b == 0) return {phi0(l), phi0(r)};
    return {phi1(l), phi1(r)};
}

std::vector<ChildEdge> children(const Triple& t) {
    switch (classify(t)) {
        case PairKind::interior:
            return {{"phi0", phi0(t), false}, {"phi1", phi1(t), false}};
        case PairKind::sigma:
            return {{"phi2", phi2(t), true}, {"phi1", phi1(t), false}};
        case PairKind::lambda:
            return {{"phi0", phi0(t), true}};
        case PairKind::upsilon:
            return {{"phi0", phi0(t), false}, {"phi1", phi1(t), false}};
        case PairKind::vertex:
            return {};
    }
    return {};
}

Int rank(const Triple& t) {
    PairKind kind = classify(t);
    if (kind == PairKind::vertex) fail_domain("RootOrVertex", "corner points have no rank");
    RationalExpansion ex = triangle_sequence_rational(t);
    Int cf_sum = cf_digit_sum(cf_expand(ex.xi));
    if (kind != PairKind::interior) return cf_sum - 2;
    Int ts_sum = 0;
    for (const Int& a : ex.seq.digits) ts_sum += a;
    Int k(static_cast<long>(ex.seq.digits.size()) - 1);
    return ts_sum + cf_sum + k - 2;
}

CompletenessReport completeness_check(long qmax, long nmax) {
    CompletenessReport rep;
    // The smallest denominator on level n is n + 2, so no triple with
    // q <= qmax sits deeper than level qmax - 2; walking further only
    // inflates the level sets.
    long depth = std::min(nmax, std::max(qmax - 2, -1L));
    auto levels = levels_counterimage(depth);
    std::map<Key, std::pair<long, int>> found;  // triple -> (level, count)
    for (size_t i = 0; i < levels.size(); ++i)
        for (const TreeNode& node : levels[i]) {
            auto [it, fresh] = found.insert({key_of(node.triple), {node.level, 1}});
            if (!fresh) {
                it->second.second += 1;
                rep.duplicated.push_back(node.triple);
            }
        }
    for (long q = 1; q <= qmax; ++q)
        for (long p = 0; p <= q; ++p)
            for (long r = 0; r <= p; ++r) {
                Int g = gcd(gcd(Int(q), Int(p)), Int(r));
                if (g != 1) continue;
                Triple t{Int(q), Int(p), Int(r)};
                rep.checked += 1;
                auto it = found.find(key_of(t));
                if (it == found.end()) {
                    rep.missing.push_back(t);
                    continue;
                }
                long expected = (classify(t) == PairKind::vertex)
                                    ? -1
                                    : rank(t).get_si();
                if (it->second.first != expected) rep.misplaced.push_back(t);
            }
    rep.ok = rep.missing.empty() && rep.duplicated.empty() && rep.misplaced.empty();
    return rep;
}

} // namespace tt
