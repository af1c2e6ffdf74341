#ifndef RAG_ARRANGEMENT_HPP
#define RAG_ARRANGEMENT_HPP

#include <memory>
#include <vector>

#include "rag/ext.hpp"
#include "rag/mpoly.hpp"
#include "rag/realroot.hpp"
#include "rag/topology.hpp"

namespace rag {

// First two stories of the real-algebraic tower used by the arrangement and
// lifting code: numbers over Q, over Q(alpha), over Q(alpha)(beta).
using Tower1 = Ext<Rational>;
using Tower2 = Ext<Tower1>;
using Tower3 = Ext<Tower2>;

// Pairwise coprime, square-free generating set with the same zero set as the
// input family; constants dropped, deterministic order.
std::vector<MPoly> coprime_square_free_basis(std::vector<MPoly> ps);

// P(x, X2) as a univariate polynomial over the field of x.
template <class K>
UPolyT<K> fiber_at(const MPoly& p, const K& x) {
  auto cs = p.coeffs_wrt(1);
  std::vector<K> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].eval3(x, K(0), K(0));
  return UPolyT<K>(std::move(out));
}

// P(x, y, X3) over the field of (x, y).
template <class K>
UPolyT<K> fiber3_at(const MPoly& p, const K& x, const K& y) {
  auto cs = p.coeffs_wrt(2);
  std::vector<K> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].eval3(x, y, K(0));
  return UPolyT<K>(std::move(out));
}

// A root of the product of a family, tagged with which family members
// vanish there.
template <class K>
struct TaggedRoot {
  RealRootT<K> y;
  std::vector<int> members;
};

// Roots of all polynomials in the family merged into one increasing stack.
// Zero polynomials are rejected; constant ones contribute nothing.
template <class K>
std::vector<TaggedRoot<K>> merge_roots(const std::vector<UPolyT<K>>& fs) {
  std::vector<std::vector<RealRootT<K>>> per(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].zero())
      throw std::domain_error("merge_roots: fiber polynomial vanishes");
    if (fs[i].degree() >= 1) per[i] = RealRootT<K>::isolate(fs[i]);
  }
  std::vector<TaggedRoot<K>> out;
  std::vector<size_t> pos(fs.size(), 0);
  while (true) {
    int best = -1;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (pos[i] >= per[i].size()) continue;
      if (best < 0 ||
          RealRootT<K>::compare(per[i][pos[i]], per[best][pos[best]]) < 0)
        best = static_cast<int>(i);
    }
    if (best < 0) break;
    TaggedRoot<K> r{per[best][pos[best]++], {best}};
    for (size_t i = 0; i < fs.size(); ++i) {
      if (pos[i] >= per[i].size()) continue;
      if (RealRootT<K>::compare(per[i][pos[i]], r.y) == 0) {
        r.members.push_back(static_cast<int>(i));
        ++pos[i];
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// A fiber point of the union of the curves above one column of the plane
// decomposition.
struct StackPoint {
  RealRootT<Tower1> y;
  std::vector<int> curves;  // which curves pass through the point
};

// Decomposition of the plane adapted to a family of curves: special
// abscissas (critical points of each curve, pairwise crossings, crossings
// with marker curves), sample abscissas in the open bands, the ordered
// fiber of the curve union above every column, and for each curve arc the
// fiber point its closure reaches at the neighboring special abscissa.
struct PlanarArrangement {
  long shear_t = 0;
  std::vector<MPoly> curves;   // sheared square-free coprime basis
  std::vector<MPoly> markers;  // sheared marker curves (non-constant)
  std::vector<AlgebraicNumber> xs;
  std::vector<std::shared_ptr<ExtContext<Rational>>> xctx;  // null when exact
  std::vector<Rational> samples;              // xs.size() + 1 band samples
  std::vector<std::vector<StackPoint>> band;  // fiber above each band sample
  std::vector<std::vector<StackPoint>> absc;  // fiber above each abscissa
  // phi_left[i][a] = index in absc[i] reached by arc a of band i from the
  // right; phi_right[i][a] = the same for arc a of band i+1 from the left.
  std::vector<std::vector<int>> phi_left, phi_right;
};

// Markers only contribute crossing abscissas (their own geometry is not
// decomposed). fixed_shear >= 0 pins the plane shear; -1 searches 0..32.
PlanarArrangement plane_arrangement(const std::vector<MPoly>& curves,
                                    const std::vector<MPoly>& markers,
                                    long fixed_shear = -1);

}  // namespace rag

#endif
