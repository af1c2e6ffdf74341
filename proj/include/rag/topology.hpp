#ifndef RAG_TOPOLOGY_HPP
#define RAG_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rag/ext.hpp"
#include "rag/mpoly.hpp"
#include "rag/realroot.hpp"
#include "rag/subresultant.hpp"

namespace rag {

// Smallest j with sRes_j nonvanishing at x; equals the gcd degree of the
// specialized pair. Throws when the whole ladder vanishes (the pair is not
// in generic position over x).
int gcd_degree_at(const SubresultantLadder& lad, AlgebraicNumber& x);

// The X2-coordinate of the unique common root above x when the gcd degree
// is j >= 1:  y = -(1/j) * sRes_{j,j-1}(x) / sRes_j(x).
template <class K>
K shared_root_y_at(const SubresultantLadder& lad, int j, const K& x) {
  if (j < 1) throw std::domain_error("shared_root_y: gcd degree is zero");
  K num = lad.sRes_sub[j].eval3(x, K(0), K(0));
  K den = lad.sRes[j].eval3(x, K(0), K(0));
  return num / den * K(rat(-1, j));
}

struct GenericityVerdict {
  bool ok = false;
  std::string failure;  // empty when ok; otherwise which condition failed
};

// The three conditions of generic position with respect to the projection
// on the first axis: X2-regularity of both curves, coprimality, and at most
// one distinct common root above every abscissa.
GenericityVerdict is_generic_position(const MPoly& p1, const MPoly& p2);

struct PlanarPoint {
  AlgebraicNumber x, y;
};

// Exact common points of two coprime plane curves, sorted by (x, y) in the
// original input coordinates (internal shears are un-applied).
std::vector<PlanarPoint> common_points(const MPoly& p, const MPoly& q);

// Combinatorial topology of a plane curve: critical abscissas, band branch
// counts, fiber sizes and the index of the critical point in each critical
// fiber. The two-curve variant also marks intersection points with a second
// curve as (fiber index, position) pairs.
struct PlanarTopology {
  MPoly curve;                          // sheared, square-free
  long shear_t = 0;                     // applied shear X1 -> X1 + t*X2
  std::vector<AlgebraicNumber> xs;      // special abscissas, increasing
  std::vector<Rational> samples;        // size xs.size()+1, between/beyond
  std::vector<int> m;                   // branch count in each band
  std::vector<int> n;                   // fiber size at each abscissa
  std::vector<int> c;                   // 1-based critical index, 0 = none
  std::vector<std::pair<int, int>> marked;  // (abscissa idx, fiber position)
};

PlanarTopology top(const MPoly& p);
PlanarTopology top_with_respect_to(const MPoly& p, const MPoly& q);

// Explicit graph built from the topology: one vertex per fiber point and
// per band branch, edges per the stack attachment rule (the critical point
// absorbs unmatched branches).
struct PlanarGraph {
  struct Vertex {
    bool band;   // band branch vs fiber point
    int column;  // band index or abscissa index
    int index;   // 1-based vertical position
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  int components = 0;
};

PlanarGraph planar_graph(const PlanarTopology& t);

// Shear budget exhausted or a degenerate configuration was met.
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rag

#endif
