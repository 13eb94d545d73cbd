#pragma once

#include <string>
#include <vector>

#include "tt/triangle_dynamics.hpp"

namespace tt {

struct TreeNode {
    Triple triple;
    PairKind kind;
    long level;
};

// Levels -1 .. nmax generated by the counterimage rules: cross-level images
// (interior and Upsilon points via phi0/phi1, Sigma points via phi1) followed
// by the in-level closure Sigma -> Lambda (phi2) and Lambda -> Upsilon (phi0).
// Index i of the result holds level i-1.
std::vector<std::vector<TreeNode>> levels_counterimage(long nmax);
std::vector<TreeNode> level_counterimage(long n);

// Same levels from the geometric construction: recursively split triangles by
// the segment from the vertex labelled 1 to the mediant of vertices 0 and 2,
// then Farey-sum every side of the partition. Index i holds level i.
std::vector<std::vector<Triple>> levels_geometric(long nmax);
std::vector<Triple> level_geometric(long n);

// (left, right): t is the mediant of its parents. Boundary points inherit the
// 1D Stern-Brocot parents of their side parameter; interior points peel one
// inverse branch, recurse, and push the parents back through it.
std::pair<Triple, Triple> parents(const Triple& t);

struct ChildEdge {
    std::string move;  // "phi0", "phi1", "phi2"
    Triple child;
    bool same_level;
};

std::vector<ChildEdge> children(const Triple& t);

// Level index of t in the tree; RootOrVertex on the three corners.
Int rank(const Triple& t);

struct CompletenessReport {
    bool ok = true;
    std::vector<Triple> missing;
    std::vector<Triple> duplicated;
    std::vector<Triple> misplaced;  // present but at level != rank
    long checked = 0;
};

// Verifies every canonical triple with q <= qmax appears exactly once in
// levels <= nmax, at level equal to its rank.
CompletenessReport completeness_check(long qmax, long nmax);

} // namespace tt
