#include "rag/arrangement.hpp"

#include <algorithm>
#include <map>

namespace rag {

std::vector<MPoly> coprime_square_free_basis(std::vector<MPoly> ps) {
  std::vector<MPoly> work;
  for (const MPoly& p : ps) {
    if (p.zero())
      throw std::domain_error("coprime_square_free_basis: zero polynomial");
    MPoly s = square_free_part_full(p);
    if (!s.is_constant()) work.push_back(s);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size() && !changed; ++i)
      for (size_t j = i + 1; j < work.size() && !changed; ++j) {
        MPoly g = mgcd(work[i], work[j]);
        if (g.is_constant()) continue;
        MPoly a = gcd_free_part(work[i], g);
        MPoly b = gcd_free_part(work[j], g);
        std::vector<MPoly> next;
        for (size_t k = 0; k < work.size(); ++k)
          if (k != i && k != j) next.push_back(work[k]);
        if (!a.is_constant()) next.push_back(a);
        if (!b.is_constant()) next.push_back(b);
        next.push_back(g);
        work = std::move(next);
        changed = true;
      }
  }
  for (MPoly& w : work) w = canonical(w);
  std::sort(work.begin(), work.end(), [](const MPoly& x, const MPoly& y) {
    if (x.total_degree() != y.total_degree())
      return x.total_degree() < y.total_degree();
    return x.str() < y.str();
  });
  work.erase(std::unique(work.begin(), work.end()), work.end());
  return work;
}

namespace {

bool x2_regular(const MPoly& p) {
  auto cs = p.coeffs_wrt(1);
  return cs.size() >= 2 && cs.back().is_constant();
}

struct CurveInfo {
  bool has_crit = false;     // degree >= 2 in X2
  SubresultantLadder lad;    // of (f, df/dX2) when has_crit
  MPoly res;                 // critical-abscissa resultant
};

std::vector<StackPoint> rational_stack(const std::vector<MPoly>& cs,
                                       const Rational& x) {
  std::vector<UPoly> fs;
  fs.reserve(cs.size());
  for (const MPoly& c : cs)
    fs.push_back(c.eval_partial({{0, x}}).to_upoly(1));
  auto merged = merge_roots<Rational>(fs);
  std::vector<StackPoint> out;
  out.reserve(merged.size());
  for (auto& m : merged)
    out.push_back({RealRootT<Tower1>::promote(
                       m.y, [](const Rational& c) { return Tower1(c); }),
                   std::move(m.members)});
  return out;
}

std::vector<StackPoint> tower_stack(const std::vector<MPoly>& cs,
                                    const Tower1& x) {
  std::vector<UPolyT<Tower1>> fs;
  fs.reserve(cs.size());
  for (const MPoly& c : cs) fs.push_back(fiber_at(c, x));
  auto merged = merge_roots<Tower1>(fs);
  std::vector<StackPoint> out;
  out.reserve(merged.size());
  for (auto& m : merged) out.push_back({std::move(m.y), std::move(m.members)});
  return out;
}

}  // namespace

PlanarArrangement plane_arrangement(const std::vector<MPoly>& curves_in,
                                    const std::vector<MPoly>& markers_in,
                                    long fixed_shear) {
  std::vector<MPoly> base = coprime_square_free_basis(curves_in);
  std::vector<MPoly> marks;
  for (const MPoly& m : markers_in) {
    if (m.zero()) continue;
    MPoly s = square_free_part_full(m);
    if (!s.is_constant()) marks.push_back(s);
  }

  long t_first = fixed_shear >= 0 ? fixed_shear : 0;
  long t_last = fixed_shear >= 0 ? fixed_shear : 32;
  for (long t = t_first; t <= t_last; ++t) {
    Rational tr(t);
    std::vector<MPoly> cs, ms;
    for (const MPoly& f : base) cs.push_back(shear(f, 0, 1, tr));
    for (const MPoly& m : marks) ms.push_back(shear(m, 0, 1, tr));

    bool ok = true;
    for (const MPoly& f : cs) ok = ok && x2_regular(f);
    for (const MPoly& m : ms) ok = ok && x2_regular(m);
    for (size_t i = 0; ok && i < cs.size(); ++i)
      if (cs[i].degree(1) >= 2)
        ok = is_generic_position(cs[i], cs[i].derivative(1)).ok;
    for (size_t i = 0; ok && i < cs.size(); ++i)
      for (size_t j = i + 1; ok && j < cs.size(); ++j)
        ok = is_generic_position(cs[i], cs[j]).ok;
    if (!ok) continue;

    int nc = static_cast<int>(cs.size());
    std::vector<CurveInfo> info(nc);
    std::vector<MPoly> abscissa_polys;
    for (int i = 0; i < nc; ++i) {
      if (cs[i].degree(1) < 2) continue;
      info[i].has_crit = true;
      info[i].lad = signed_subresultants(cs[i], cs[i].derivative(1), 1);
      info[i].res = info[i].lad.sRes[0];
      abscissa_polys.push_back(info[i].res);
    }
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j)
        abscissa_polys.push_back(resultant(cs[i], cs[j], 1));
    for (const MPoly& f : cs)
      for (const MPoly& m : ms) {
        if (!mgcd(f, m).is_constant()) continue;  // curve lies on the marker
        abscissa_polys.push_back(resultant(f, m, 1));
      }

    PlanarArrangement arr;
    arr.shear_t = t;
    arr.curves = cs;
    arr.markers = ms;
    for (const MPoly& r : abscissa_polys) {
      if (r.zero()) throw TopologyError("vanishing abscissa resultant");
      if (r.is_constant()) continue;
      for (auto& x : isolate_real_roots(r.to_upoly(0))) {
        bool known = false;
        for (auto& y : arr.xs)
          if (AlgebraicNumber::compare(y, x) == 0) {
            known = true;
            break;
          }
        if (!known) arr.xs.push_back(x);
      }
    }
    std::sort(arr.xs.begin(), arr.xs.end(),
              [](AlgebraicNumber& a, AlgebraicNumber& b) {
                return AlgebraicNumber::compare(a, b) < 0;
              });
    arr.samples = sample_between(arr.xs);

    size_t r = arr.xs.size();
    arr.xctx.resize(r);
    arr.band.resize(r + 1);
    arr.absc.resize(r);
    for (size_t i = 0; i <= r; ++i) arr.band[i] = rational_stack(cs, arr.samples[i]);
    for (size_t i = 0; i < r; ++i) {
      if (arr.xs[i].is_exact()) {
        arr.absc[i] = rational_stack(cs, arr.xs[i].value());
      } else {
        arr.xctx[i] = std::make_shared<ExtContext<Rational>>(arr.xs[i]);
        arr.absc[i] = tower_stack(cs, Tower1::generator(arr.xctx[i]));
      }
    }
    for (size_t i = 0; i <= r; ++i)
      for (const StackPoint& sp : arr.band[i])
        if (sp.curves.size() != 1)
          throw TopologyError("curves meet above a band sample");

    // closure map of each band arc into the neighboring special fiber,
    // computed per curve (1-1 away from its critical point, the unmatched
    // middle arcs absorbed by it) and merged
    auto attach = [&](size_t i, const std::vector<StackPoint>& bandf) {
      std::vector<int> phi(bandf.size(), -1);
      for (int f = 0; f < nc; ++f) {
        std::vector<int> arcs, pts;
        for (size_t a = 0; a < bandf.size(); ++a)
          if (bandf[a].curves == std::vector<int>{f}) arcs.push_back(int(a));
        for (size_t p = 0; p < arr.absc[i].size(); ++p)
          for (int c : arr.absc[i][p].curves)
            if (c == f) pts.push_back(int(p));
        int m = static_cast<int>(arcs.size());
        int n = static_cast<int>(pts.size());
        bool crit = info[f].has_crit && !info[f].res.is_constant() &&
                    arr.xs[i].sign_at(info[f].res.to_upoly(0)) == 0;
        if (!crit) {
          if (m != n)
            throw TopologyError("fiber count changed at a regular abscissa");
          for (int k = 0; k < m; ++k) phi[arcs[k]] = pts[k];
          continue;
        }
        int j = gcd_degree_at(info[f].lad, arr.xs[i]);
        Tower1 xt = arr.xctx[i] ? Tower1::generator(arr.xctx[i])
                                : Tower1(arr.xs[i].value());
        Tower1 ystar = shared_root_y_at(info[f].lad, j, xt);
        UPolyT<Tower1> probe(std::vector<Tower1>{-ystar, Tower1(1)});
        int c = 1;
        for (int p : pts)
          if (arr.absc[i][p].y.sign_at(probe) < 0) ++c;
        int low = c - 1, high = n - c, mid = m - low - high;
        if (low < 0 || high < 0 || mid < 0)
          throw TopologyError("inconsistent counts at a critical abscissa");
        for (int k = 0; k < low; ++k) phi[arcs[k]] = pts[k];
        for (int k = 0; k < mid; ++k) phi[arcs[low + k]] = pts[c - 1];
        for (int k = 0; k < high; ++k) phi[arcs[low + mid + k]] = pts[c + k];
      }
      for (size_t a = 0; a < phi.size(); ++a)
        if (phi[a] < 0) throw TopologyError("unattached curve arc");
      for (size_t a = 1; a < phi.size(); ++a)
        if (phi[a] < phi[a - 1])
          throw TopologyError("non-monotone arc attachment");
      return phi;
    };
    arr.phi_left.resize(r);
    arr.phi_right.resize(r);
    for (size_t i = 0; i < r; ++i) {
      arr.phi_left[i] = attach(i, arr.band[i]);
      arr.phi_right[i] = attach(i, arr.band[i + 1]);
    }
    return arr;
  }
  throw TopologyError("no generic position within the shear budget");
}

}  // namespace rag
