#ifndef RAG_QUADRIC_HPP
#define RAG_QUADRIC_HPP

#include <array>
#include <utility>
#include <vector>

#include "rag/arrangement.hpp"
#include "rag/refusal.hpp"
#include "rag/tower.hpp"

namespace rag {

// A point of the space intersection. X, Y, Z are exact coordinates in the
// input frame (tower elements).
struct SpacePoint {
  Tower3 X, Y, Z;

  std::array<Interval, 3> box(const Rational& eps) {
    return {field_approx(X, eps), field_approx(Y, eps), field_approx(Z, eps)};
  }
  // Exact sign of g (in input-frame coordinates) at the point.
  int sign_of(const MPoly& g) { return field_sign(g.eval3(X, Y, Z)); }
};

enum class VertexKind { critical, sample };

// The plane curves produced by eliminating X3 from the pivot surface.
struct ProjectionSet {
  MPoly sil;                // silhouette of the pivot
  MPoly cut2, cut3;         // projections of the pairwise intersections
  MPoly G;                  // common part of the cuts (square-free)
  MPoly Gtilde, SilTilde;   // split of G off/under the silhouette
  MPoly H2, H3;             // cut remainders, pairwise coprime and coprime to G
};

struct IntersectionResult {
  bool empty = true;
  std::vector<SpacePoint> isolated;
  std::vector<SpacePoint> vertices;
  std::vector<VertexKind> kinds;  // parallel to vertices
  std::vector<std::pair<int, int>> edges;
  int components = 0;
  long shear_a = 0, shear_b = 0;  // space frame change X1 += a·X3, X2 += b·X3
  long plane_shear = 0;           // frame change used by the plane analysis
  ProjectionSet proj;
};

// Exact real intersection of three quadric surfaces: isolated points plus an
// embedded graph of the one-dimensional part. Throws InputRefusal for plane
// degeneracies (doubled plane, shared plane, coincident surfaces) and inputs
// that are not quadrics.
IntersectionResult intersect_three_quadrics(const MPoly& p1, const MPoly& p2,
                                            const MPoly& p3);

}  // namespace rag

#endif
