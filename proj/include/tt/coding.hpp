#pragma once

#include <string>
#include <utility>

#include "tt/triangle_dynamics.hpp"
#include "tt/triangular_tree.hpp"

namespace tt {

// (triangle sequence, continued fraction) pair identifying a rational point,
// tagged with the point class because the text form ([j],[j+1]) is shared by
// a diagonal point and an interior point.
struct Representation {
    TriangleSeq tseq;
    CF cf;
    PairKind kind = PairKind::interior;
    bool operator==(const Representation&) const = default;
};

Representation representation_of(const Triple& t);
Triple point_of(const Representation& rep);

// Text form "[2,0,1,1];[2,2]"; a third ";sigma" / ";interior" field is
// emitted only when the pair alone is ambiguous. Parsing an ambiguous pair
// without the field defaults to the diagonal reading.
std::string format_representation(const Representation& rep);
Representation parse_representation(const std::string& s);

// Anchor point plus move word over {L,R,I}. Interior points anchor at the
// root; boundary points anchor at their side midpoint with an {L,R} word.
struct AnchoredWord {
    Triple anchor;
    std::string word;
};

AnchoredWord word_of(const Representation& rep);

// Inverse of the word table of the grammar (L-run / I blocks, then an
// optional alternating L/R tail). Words containing R but no I are malformed
// here even though they are walkable from the root.
Representation representation_of_word(const std::string& w);

// Generator matrices of the moves.
Mat3 move_matrix(char mv);
// Matrix of an anchor point (root or a side midpoint).
Mat3 anchor_matrix(const Triple& anchor);

Mat3 apply_move(const Mat3& m, char mv);

// Right-multiplies the move matrices onto the anchor matrix; the point is
// the canonicalized sum of the first two columns.
std::pair<Mat3, Triple> walk(const Triple& anchor, const std::string& word);

// Matrix of a tree node: columns are its right parent, left parent and
// reference vertex.
Mat3 matrix_of(const Triple& t);

// Mediant semantics of one move at a point: L/R are mediants with the left
// or right parent; I is the mediant with the image of (1,0) under the branch
// word that carries the root onto t (IActionNotAvailable when there is none).
Triple action_semantic(const Triple& t, char mv);

// phi-word over {0,1,2} carrying the root onto t.
std::string backimage_decomposition(const Triple& t);

} // namespace tt
