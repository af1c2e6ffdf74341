#ifndef RAG_CAD_HPP
#define RAG_CAD_HPP

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "rag/arrangement.hpp"
#include "rag/mpoly.hpp"
#include "rag/refusal.hpp"
#include "rag/tower.hpp"

namespace rag {

// ---------------------------------------------------------------------------
// Cylindrical decomposition of 3-space adapted to one to three quadric
// surfaces, plus the machinery needed to count connected components of their
// pairwise/triple intersections and to decide which triple component lies in
// which pair component.
// ---------------------------------------------------------------------------

enum class Rel { eq, le };

// A validated input set: either the surface P = 0 or the solid P <= 0 of a
// positive-definite, nonempty quadric (an ellipsoid / solid ellipsoid).
struct ObjectDescriptor {
  MPoly p;
  Rel rel = Rel::eq;
};

// Checks that P is quadratic in (x1,x2,x3) with positive-definite quadratic
// part (leading principal minors of the symmetrized form > 0) and that the
// set it defines is nonempty (the completed-square minimum is <= 0).
// Throws InputRefusal otherwise: the component/loop counting downstream
// assumes each input set is compact, connected and without loops.
ObjectDescriptor validate_object(const MPoly& p, Rel rel);

// Cell labels: (i) level 1, (i,j) level 2, (i,j,k) level 3; unused entries
// are 0. Indices are 1-based; odd = interval/band/sector (one dimension
// contributed), even = point/section. Label order along each axis follows
// the geometric order (left to right, bottom to top).
using CellLabel = std::array<int, 3>;

struct CadCell {
  CellLabel label{0, 0, 0};
  int level = 0;      // 1, 2 or 3
  int dimension = 0;  // number of odd label entries
  // Signs of the projection factors of this level at the cell sample
  // (level 1: factors1, level 2: factors2, level 3: the input polynomials).
  std::vector<int> signs;
  // All input polynomials vanish at the sample (the conjunctive region
  // P_1 = 0 /\ ... /\ P_m = 0 holds on the cell).
  bool truth = false;
};

struct CadResult {
  long plane_shear = 0;            // working frame: x1 -> x1 + t*x2
  long shear_a = 0, shear_b = 0;   // space frame: x1 += a*x3, x2 += b*x3
  // Projection factor sets, in the working frame.
  std::vector<MPoly> factors1, factors2, factors3;
  std::vector<CadCell> level1, level2, level3;
  // {0-cell, 1-cell} adjacencies between level-3 cells lying on the input
  // surfaces (inter-stack, across neighbouring columns).
  std::vector<std::pair<CellLabel, CellLabel>> adjacency;
};

// Sign-invariant decomposition adapted to 1..3 quadrics, with every cell
// carried explicitly. Projection: level-2 factors are the canonical
// discriminants with respect to x3 and pairwise resultants; level-1 factors
// are the discriminants and pairwise resultants (with respect to x2) of the
// square-free coprime basis of the level-2 set.
CadResult cad_quadrics(const std::vector<MPoly>& polys);

// All {0,1}-inter-stack adjacencies plus intra-stack vertical adjacencies
// restricted to cells where every polynomial in `region` (indices into the
// input list) vanishes.
std::vector<std::pair<CellLabel, CellLabel>> adjacency_01(
    const CadResult& c, const std::vector<int>& region);

// Connected components of the common zero set of the region polynomials,
// counted on the cell graph. Valid when that set is at most one-dimensional
// (the case for two or three coprime quadrics). Components are numbered by
// lexicographically least cell label; reps, when given, receives that label
// per component.
int components(const CadResult& c, const std::vector<int>& region,
               std::vector<CellLabel>* reps = nullptr);

// ---------------------------------------------------------------------------
// Lazy decomposition for the component/incidence queries of the Betti
// pipeline: fibers are only lifted over the plane cells that can carry
// points of the common zero set.
// ---------------------------------------------------------------------------

class QuadricCad {
 public:
  // 2 or 3 quadrics, each x3-regular (guaranteed for validated objects).
  explicit QuadricCad(std::vector<MPoly> polys);
  ~QuadricCad();

  // Connected components of the common zero set of all polynomials.
  int component_count();

  // A point on the given component, in the unsheared plane frame: plane
  // coordinates (x, y) plus the fiber root z above them.
  struct RepPoint {
    Tower2 x, y;
    RealRootT<Tower2> z;
  };
  RepPoint representative(int comp);

  // Component containing the point (x, y, z), which must lie on the common
  // zero set. The point may live in a different extension tower; only
  // tower-free comparisons are used across the boundary.
  int locate(const Tower2& x, const Tower2& y, RealRootT<Tower2>& z);

  // Does some point satisfy P <= 0 for every input polynomial?
  bool solid_nonempty();

  const PlanarArrangement& arrangement() const { return arr_; }

 private:
  struct LiftedSpot;  // one plane cell carrying candidate points
  void build();
  LiftedSpot* spot_at(bool band, int col, int idx);

  std::vector<MPoly> polys_;
  std::vector<MPoly> res_;  // pairwise resultants wrt x3, canonical
  PlanarArrangement arr_;
  bool built_ = false;
  int ncomp_ = 0;
  std::vector<std::unique_ptr<LiftedSpot>> spots_;
  std::map<std::array<int, 3>, int> spot_index_;    // (band,col,idx) -> spot
  std::map<CellLabel, int> cell_comp_;              // true cell -> component
  std::vector<CellLabel> comp_rep_;                 // least label per comp
};

}  // namespace rag

#endif
