#ifndef RAG_BETTI_HPP
#define RAG_BETTI_HPP

#include <utility>
#include <vector>

#include "rag/cad.hpp"
#include "rag/qmatrix.hpp"

namespace rag {

// ---------------------------------------------------------------------------
// First two Betti numbers of a union of ellipsoids (surfaces P_i = 0) or of
// solid ellipsoids (P_i <= 0), from the Mayer-Vietoris bookkeeping of the
// pairwise and triple intersections:
//   b0 = d0 - rank(A),   b1 = d1 - rank(B) - rank(A)
// where d0 = number of objects, d1 = total number of connected components of
// the pairwise intersections, A maps object generators onto the nonempty
// pairs, and B maps triple-intersection components onto pair components.
// ---------------------------------------------------------------------------

struct BettiResult {
  int b0 = 0, b1 = 0;
  int d0 = 0, d1 = 0;
  size_t rank_a = 0, rank_b = 0;
  QMatrix a, b;
  // one entry per pair (i,j), i<j, lexicographic: component count
  std::vector<int> pair_components;
  // one entry per triple (i,j,k), i<j<k, lexicographic: component count
  std::vector<int> triple_components;
};

// Computes b0 and b1 of the union of the given objects. All objects must use
// the same relation (all surfaces or all solids); proportional duplicate
// polynomials are refused, as are fewer than one object.
BettiResult betti01(const std::vector<ObjectDescriptor>& objects);

// Matrix conventions, exposed for testing:
//  - A has one row per nonempty pair (i,j), i<j in lexicographic order, with
//    -1 in column i and +1 in column j.
//  - B has one row per triple-intersection component and one column per pair
//    component (pairs lexicographic, components in their cad order); the row
//    of a component of S_i^S_j^S_k has +1 at its containing component of
//    (i,j), -1 at its component of (i,k) and +1 at its component of (j,k).

// Independent count of connected components of the union, from the nerve of
// the cover: two objects touch iff their pairwise intersection is nonempty.
// Used to cross-check b0.
int union_components(int d0, const std::vector<std::pair<int, int>>& touching);

}  // namespace rag

#endif
