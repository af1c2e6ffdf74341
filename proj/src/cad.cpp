#include "rag/cad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rag/subresultant.hpp"
#include "rag/topology.hpp"

namespace rag {

namespace {

// ---------------------------------------------------------------------------
// small helpers
// ---------------------------------------------------------------------------

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int i) { return up[i] == i ? i : up[i] = find(up[i]); }
  void join(int i, int j) { up[find(i)] = find(j); }
};

// Rational values interleaving a strictly increasing list of roots:
// result[0] < roots[0] < result[1] < ... < roots[n-1] < result[n].
template <class K>
std::vector<Rational> interleave(std::vector<RealRootT<K>*> roots) {
  if (roots.empty()) return {Rational(0)};
  for (auto* r : roots) r->refine_to(rat(1, 4));
  std::vector<Rational> out;
  out.push_back(roots.front()->lo() - 1);
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    RealRootT<K>&a = *roots[i], &b = *roots[i + 1];
    while (!(a.hi() < b.lo()) && !(a.is_exact() && b.is_exact())) {
      a.refine();
      b.refine();
    }
    if (a.hi() < b.lo())
      out.push_back((a.hi() + b.lo()) / 2);
    else  // both exact
      out.push_back((a.value() + b.value()) / 2);
  }
  out.push_back(roots.back()->hi() + 1);
  return out;
}

bool x3_regular(const MPoly& p) {
  auto cs = p.coeffs_wrt(2);
  return cs.size() == 3 && cs.back().is_constant() && !cs.back().zero();
}

MPoly disc3(const MPoly& p) {
  return canonical(resultant(p, p.derivative(2), 2));
}

MPoly res3(const MPoly& p, const MPoly& q) {
  return canonical(resultant(p, q, 2));
}

// Shear schedule for making every polynomial x3-regular.
const long kShearVals[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8};

}  // namespace

// ---------------------------------------------------------------------------
// validate_object
// ---------------------------------------------------------------------------

ObjectDescriptor validate_object(const MPoly& p, Rel rel) {
  if (p.total_degree() != 2)
    throw InputRefusal("object polynomial is not quadratic");
  // symmetrized quadratic part q[i][j], linear part l[i], constant c
  Rational q[3][3], l[3], c;
  for (int i = 0; i < 3; ++i) {
    l[i] = 0;
    for (int j = 0; j < 3; ++j) q[i][j] = 0;
  }
  for (auto& [e, coef] : p.terms()) {
    int d = e[0] + e[1] + e[2];
    if (d == 0) {
      c = coef;
    } else if (d == 1) {
      for (int i = 0; i < 3; ++i)
        if (e[i] == 1) l[i] = coef;
    } else {
      int a = -1, b = -1;
      for (int i = 0; i < 3; ++i) {
        if (e[i] == 2) a = b = i;
        if (e[i] == 1) (a < 0 ? a : b) = i;
      }
      if (a == b) {
        q[a][a] = coef;
      } else {
        q[a][b] = coef / 2;
        q[b][a] = coef / 2;
      }
    }
  }
  // positive definite: leading principal minors > 0
  Rational m1 = q[0][0];
  Rational m2 = q[0][0] * q[1][1] - q[0][1] * q[1][0];
  Rational m3 = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
  if (!(sgn(m1) > 0 && sgn(m2) > 0 && sgn(m3) > 0))
    throw InputRefusal("object quadratic part is not positive definite");
  // minimum value c - (1/4) l^T q^{-1} l  (x^T q x + l^T x + c); solve
  // 2 q x* = -l by Cramer on det m3.
  Rational x[3];
  for (int k = 0; k < 3; ++k) {
    Rational col[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) col[i][j] = (j == k) ? -l[i] / 2 : q[i][j];
    Rational det = col[0][0] * (col[1][1] * col[2][2] - col[1][2] * col[2][1]) -
                   col[0][1] * (col[1][0] * col[2][2] - col[1][2] * col[2][0]) +
                   col[0][2] * (col[1][0] * col[2][1] - col[1][1] * col[2][0]);
    x[k] = det / m3;
  }
  Rational minval = c;
  for (int i = 0; i < 3; ++i) {
    minval = minval + l[i] * x[i] / 2;  // c + (1/2) l^T x*
  }
  if (sgn(minval) > 0) throw InputRefusal("object set is empty");
  return ObjectDescriptor{p, rel};
}

// ---------------------------------------------------------------------------
// eager decomposition: cad_quadrics
// ---------------------------------------------------------------------------

namespace {

// per level-2 cell bookkeeping needed for level-3 cells and adjacency
struct StackLift {
  std::vector<TaggedRoot<Tower2>> roots;
  std::vector<int> sector_signs_base;  // flattened later
};

}  // namespace

CadResult cad_quadrics(const std::vector<MPoly>& polys_in) {
  if (polys_in.empty() || polys_in.size() > 3)
    throw InputRefusal("expected one to three polynomials");
  for (const MPoly& p : polys_in)
    if (p.zero() || p.total_degree() > 2)
      throw InputRefusal("expected nonzero polynomials of degree at most 2");

  CadResult R;
  // space shear making all inputs x3-regular
  std::vector<MPoly> sp;
  bool found = false;
  for (long a : kShearVals) {
    for (long b : kShearVals) {
      sp.clear();
      for (const MPoly& p : polys_in)
        sp.push_back(shear(shear(p, 0, 2, Rational(a)), 1, 2, Rational(b)));
      bool ok = true;
      for (const MPoly& q : sp) ok = ok && x3_regular(q);
      if (ok) {
        R.shear_a = a;
        R.shear_b = b;
        found = true;
      }
      if (found) break;
    }
    if (found) break;
  }
  if (!found) throw TopologyError("no space frame makes all inputs x3-regular");

  const size_t m = sp.size();
  std::vector<MPoly> lvl2;
  for (size_t i = 0; i < m; ++i) {
    MPoly d = disc3(sp[i]);
    if (!d.is_constant()) lvl2.push_back(d);
    for (size_t j = i + 1; j < m; ++j) {
      MPoly r = res3(sp[i], sp[j]);
      if (r.is_constant()) {
        if (r.zero())
          throw InputRefusal("two input surfaces share a component");
      } else {
        lvl2.push_back(r);
      }
    }
  }
  std::vector<MPoly> basis = coprime_square_free_basis(lvl2);
  if (basis.empty())
    throw TopologyError("projection produced no plane curves");

  PlanarArrangement arr = plane_arrangement(basis, {});
  R.plane_shear = arr.shear_t;
  long t = arr.shear_t;
  // the working frame applies the plane shear to the space polynomials too
  std::vector<MPoly> wp;
  for (const MPoly& q : sp) wp.push_back(shear(q, 0, 1, Rational(t)));
  R.factors3 = wp;
  R.factors2 = arr.curves;

  for (size_t i = 0; i < arr.curves.size(); ++i) {
    if (arr.curves[i].degree(1) >= 2) {
      MPoly d =
          canonical(resultant(arr.curves[i], arr.curves[i].derivative(1), 1));
      if (!d.is_constant()) R.factors1.push_back(d);
    }
    for (size_t j = i + 1; j < arr.curves.size(); ++j) {
      MPoly r = canonical(resultant(arr.curves[i], arr.curves[j], 1));
      if (!r.is_constant()) R.factors1.push_back(r);
    }
  }

  size_t ncols = 2 * arr.xs.size() + 1;  // bands and abscissas interleaved

  // ------- level 1 -------
  for (size_t i = 0; i < ncols; ++i) {
    CadCell c;
    c.label = {static_cast<int>(i) + 1, 0, 0};
    c.level = 1;
    c.dimension = (i % 2 == 0) ? 1 : 0;
    for (const MPoly& f : R.factors1) {
      UPoly u = f.to_upoly(0);
      if (i % 2 == 0)
        c.signs.push_back(sgn(u(arr.samples[i / 2])));
      else
        c.signs.push_back(arr.xs[i / 2].sign_at(u));
    }
    R.level1.push_back(std::move(c));
  }

  // ------- levels 2 and 3 -------
  std::set<std::pair<CellLabel, CellLabel>> adj;
  // remember, per (column, plane stack index), the tags of the level-3
  // sections for the adjacency pass
  std::map<std::array<int, 3>, std::vector<TaggedRoot<Tower2>>> lifted;

  auto do_column = [&](size_t i /*0-based label-1*/, bool band, size_t idx) {
    std::vector<StackPoint>& stack = band ? arr.band[idx] : arr.absc[idx];
    Tower1 x1 = band ? Tower1(arr.samples[idx])
                     : (arr.xctx[idx] ? Tower1::generator(arr.xctx[idx])
                                      : Tower1(arr.xs[idx].value()));
    std::vector<RealRootT<Tower1>*> yroots;
    for (auto& s : stack) yroots.push_back(&s.y);
    std::vector<Rational> ygaps = interleave(yroots);

    size_t ncells2 = 2 * stack.size() + 1;
    for (size_t j = 0; j < ncells2; ++j) {
      bool sector = (j % 2 == 0);
      CadCell c2;
      c2.label = {static_cast<int>(i) + 1, static_cast<int>(j) + 1, 0};
      c2.level = 2;
      c2.dimension = (band ? 1 : 0) + (sector ? 1 : 0);
      for (const MPoly& f : arr.curves) {
        if (sector)
          c2.signs.push_back(
              field_sign(f.eval3(x1, Tower1(ygaps[j / 2]), Tower1())));
        else
          c2.signs.push_back(stack[j / 2].y.sign_at(fiber_at(f, x1)));
      }
      R.level2.push_back(std::move(c2));

      // level-3 stack above this plane cell
      std::shared_ptr<ExtContext<Tower1>> yctx;
      Tower2 y2 = sector ? Tower2::of(Tower1(ygaps[j / 2]))
                         : tower2_value(stack[j / 2].y, yctx);
      Tower2 x2 = Tower2::of(x1);
      std::vector<UPolyT<Tower2>> fibers;
      for (const MPoly& q : wp) fibers.push_back(fiber3_at(q, x2, y2));
      auto merged = merge_roots<Tower2>(fibers);
      std::vector<RealRootT<Tower2>*> zroots;
      for (auto& r : merged) zroots.push_back(&r.y);
      std::vector<Rational> zgaps = interleave(zroots);
      size_t ncells3 = 2 * merged.size() + 1;
      for (size_t k = 0; k < ncells3; ++k) {
        bool zsector = (k % 2 == 0);
        CadCell c3;
        c3.label = {static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                    static_cast<int>(k) + 1};
        c3.level = 3;
        c3.dimension = (band ? 1 : 0) + (sector ? 1 : 0) + (zsector ? 1 : 0);
        bool all0 = true;
        for (size_t q = 0; q < m; ++q) {
          int s;
          if (zsector) {
            s = field_sign(fibers[q](Tower2(zgaps[k / 2])));
          } else {
            auto& mem = merged[k / 2].members;
            s = std::count(mem.begin(), mem.end(), static_cast<int>(q))
                    ? 0
                    : merged[k / 2].y.sign_at(fibers[q]);
          }
          c3.signs.push_back(s);
          all0 = all0 && s == 0;
        }
        c3.truth = all0;
        R.level3.push_back(std::move(c3));
      }
      if (!sector)
        lifted[{band ? 1 : 0, static_cast<int>(idx),
                static_cast<int>(j / 2)}] = std::move(merged);
    }
  };

  for (size_t i = 0; i < ncols; ++i) {
    if (i % 2 == 0)
      do_column(i, true, i / 2);
    else
      do_column(i, false, i / 2);
  }

  // ------- {0,1}-inter-stack adjacency along each input surface -------
  auto qrank = [](const std::vector<TaggedRoot<Tower2>>& v, int q,
                  size_t upto) {
    int r = 0;
    for (size_t s = 0; s < upto; ++s)
      if (std::count(v[s].members.begin(), v[s].members.end(), q)) ++r;
    return r;
  };
  auto qtotal = [&](const std::vector<TaggedRoot<Tower2>>& v, int q) {
    return qrank(v, q, v.size());
  };
  auto qnth = [](const std::vector<TaggedRoot<Tower2>>& v, int q, int n) {
    int r = 0;
    for (size_t s = 0; s < v.size(); ++s)
      if (std::count(v[s].members.begin(), v[s].members.end(), q)) {
        if (r == n) return static_cast<int>(s);
        ++r;
      }
    return -1;
  };

  auto attach = [&](size_t bandi, size_t a, size_t col, size_t p) {
    auto itA = lifted.find({1, static_cast<int>(bandi), static_cast<int>(a)});
    auto itP = lifted.find({0, static_cast<int>(col), static_cast<int>(p)});
    if (itA == lifted.end() || itP == lifted.end()) return;
    const auto &va = itA->second, &vp = itP->second;
    CellLabel arc2{static_cast<int>(2 * bandi + 1),
                   static_cast<int>(2 * a + 2), 0};
    CellLabel pt2{static_cast<int>(2 * col + 2), static_cast<int>(2 * p + 2),
                  0};
    for (size_t s = 0; s < va.size(); ++s) {
      for (int q : va[s].members) {
        int m1 = qtotal(va, q), m0 = qtotal(vp, q);
        if (m0 == 0) continue;  // the surface does not reach the point
        int target;
        if (m1 == 1) {
          if (m0 != 1)
            throw TopologyError(
                "double fiber root splitting at an adjacent column");
          target = qnth(vp, q, 0);
        } else {
          target = (m0 == 1) ? qnth(vp, q, 0)
                             : qnth(vp, q, qrank(va, q, s));
        }
        CellLabel c0 = pt2, c1 = arc2;
        c0[2] = 2 * target + 2;
        c1[2] = static_cast<int>(2 * s + 2);
        adj.insert({c0, c1});
      }
    }
  };

  for (size_t i = 0; i < arr.xs.size(); ++i) {
    for (size_t a = 0; a < arr.band[i].size(); ++a)
      attach(i, a, i, arr.phi_left[i][a]);
    for (size_t a = 0; a < arr.band[i + 1].size(); ++a)
      attach(i + 1, a, i, arr.phi_right[i][a]);
  }
  R.adjacency.assign(adj.begin(), adj.end());
  return R;
}

// ---------------------------------------------------------------------------
// adjacency_01 and components on an eager decomposition
// ---------------------------------------------------------------------------

namespace {

bool region_true(const CadCell& c, const std::vector<int>& region) {
  for (int q : region)
    if (c.signs.at(q) != 0) return false;
  return true;
}

}  // namespace

std::vector<std::pair<CellLabel, CellLabel>> adjacency_01(
    const CadResult& c, const std::vector<int>& region) {
  std::map<CellLabel, const CadCell*> by_label;
  for (const CadCell& x : c.level3) by_label[x.label] = &x;
  std::vector<std::pair<CellLabel, CellLabel>> out;
  for (auto& [l0, l1] : c.adjacency) {
    if (region_true(*by_label.at(l0), region) &&
        region_true(*by_label.at(l1), region))
      out.push_back({l0, l1});
  }
  // intra-stack vertical neighbours
  for (const CadCell& x : c.level3) {
    CellLabel up = x.label;
    up[2] += 1;
    auto it = by_label.find(up);
    if (it == by_label.end()) continue;
    if (region_true(x, region) && region_true(*it->second, region))
      out.push_back({x.label, up});
  }
  return out;
}

int components(const CadResult& c, const std::vector<int>& region,
               std::vector<CellLabel>* reps) {
  std::vector<const CadCell*> cells;
  std::map<CellLabel, int> idx;
  for (const CadCell& x : c.level3)
    if (region_true(x, region)) {
      idx[x.label] = static_cast<int>(cells.size());
      cells.push_back(&x);
    }
  UnionFind uf(static_cast<int>(cells.size()));
  for (auto& [l0, l1] : adjacency_01(c, region)) {
    auto a = idx.find(l0), b = idx.find(l1);
    if (a != idx.end() && b != idx.end()) uf.join(a->second, b->second);
  }
  std::map<int, CellLabel> least;
  for (size_t i = 0; i < cells.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    auto it = least.find(r);
    if (it == least.end() || cells[i]->label < it->second)
      least[r] = cells[i]->label;
  }
  std::vector<CellLabel> rep_list;
  for (auto& [r, lab] : least) rep_list.push_back(lab);
  std::sort(rep_list.begin(), rep_list.end());
  if (reps) *reps = rep_list;
  return static_cast<int>(rep_list.size());
}

// ---------------------------------------------------------------------------
// lazy decomposition: QuadricCad
// ---------------------------------------------------------------------------

struct QuadricCad::LiftedSpot {
  bool band = false;
  int col = 0, idx = 0;  // column (band or abscissa index) and stack index
  Tower2 x, y;           // unsheared plane coordinates
  std::shared_ptr<ExtContext<Tower1>> yctx;
  std::vector<TaggedRoot<Tower2>> roots;  // merged fiber of the quadrics
  std::vector<int> true_idx;              // roots where all inputs vanish
  // lazily algebraized values for cross-tower matching
  std::vector<std::unique_ptr<AlgebraicNumber>> root_alg;
  std::unique_ptr<AlgebraicNumber> y_alg;
};

QuadricCad::~QuadricCad() = default;

QuadricCad::QuadricCad(std::vector<MPoly> polys) : polys_(std::move(polys)) {
  if (polys_.size() < 2 || polys_.size() > 3)
    throw std::invalid_argument("QuadricCad expects two or three surfaces");
  std::vector<MPoly> lvl2;
  for (size_t i = 0; i < polys_.size(); ++i) {
    if (!x3_regular(polys_[i]))
      throw InputRefusal("surface polynomial is not x3-regular quadratic");
    MPoly d = disc3(polys_[i]);
    if (!d.is_constant()) lvl2.push_back(d);
    for (size_t j = i + 1; j < polys_.size(); ++j) {
      MPoly r = res3(polys_[i], polys_[j]);
      if (r.zero())
        throw InputRefusal("two input surfaces share a component");
      res_.push_back(r);
      if (!r.is_constant()) lvl2.push_back(r);
    }
  }
  std::vector<MPoly> basis = coprime_square_free_basis(lvl2);
  if (basis.empty())
    throw TopologyError("projection produced no plane curves");
  arr_ = plane_arrangement(basis, {});
}

QuadricCad::LiftedSpot* QuadricCad::spot_at(bool band, int col, int idx) {
  auto it = spot_index_.find({band ? 1 : 0, col, idx});
  return it == spot_index_.end() ? nullptr : spots_[it->second].get();
}

void QuadricCad::build() {
  if (built_) return;
  built_ = true;
  long t = arr_.shear_t;
  const size_t m = polys_.size();

  // candidate plane spots: stack points / arcs where every pairwise
  // projection of the intersections vanishes
  auto consider = [&](bool band, int col, int idx, Tower1 x1,
                      RealRootT<Tower1>& yr) {
    std::shared_ptr<ExtContext<Tower1>> yctx;
    Tower2 y2 = tower2_value(yr, yctx);
    Tower2 x2 = Tower2::of(x1) + y2 * static_cast<int>(t);
    for (const MPoly& r : res_)
      if (field_sign(r.eval3(x2, y2, Tower2())) != 0) return;
    auto spot = std::make_unique<LiftedSpot>();
    spot->band = band;
    spot->col = col;
    spot->idx = idx;
    spot->x = x2;
    spot->y = y2;
    spot->yctx = yctx;
    std::vector<UPolyT<Tower2>> fibers;
    for (const MPoly& q : polys_) fibers.push_back(fiber3_at(q, x2, y2));
    spot->roots = merge_roots<Tower2>(fibers);
    for (size_t s = 0; s < spot->roots.size(); ++s)
      if (spot->roots[s].members.size() == m)
        spot->true_idx.push_back(static_cast<int>(s));
    spot->root_alg.resize(spot->roots.size());
    spot_index_[{band ? 1 : 0, col, idx}] = static_cast<int>(spots_.size());
    spots_.push_back(std::move(spot));
  };

  for (size_t b = 0; b < arr_.band.size(); ++b)
    for (size_t a = 0; a < arr_.band[b].size(); ++a)
      consider(true, static_cast<int>(b), static_cast<int>(a),
               Tower1(arr_.samples[b]), arr_.band[b][a].y);
  for (size_t i = 0; i < arr_.absc.size(); ++i) {
    Tower1 xi = arr_.xctx[i] ? Tower1::generator(arr_.xctx[i])
                             : Tower1(arr_.xs[i].value());
    for (size_t p = 0; p < arr_.absc[i].size(); ++p)
      consider(false, static_cast<int>(i), static_cast<int>(p), xi,
               arr_.absc[i][p].y);
  }

  // enumerate true cells and union along arc closures
  std::vector<CellLabel> labels;
  std::map<CellLabel, int> cell_id;
  auto label_of = [](const LiftedSpot& s, int zi) {
    return CellLabel{s.band ? 2 * s.col + 1 : 2 * s.col + 2, 2 * s.idx + 2,
                     2 * zi + 2};
  };
  for (auto& sp : spots_)
    for (int zi : sp->true_idx) {
      CellLabel l = label_of(*sp, zi);
      cell_id[l] = static_cast<int>(labels.size());
      labels.push_back(l);
    }
  UnionFind uf(static_cast<int>(labels.size()));

  auto qtotal = [](const std::vector<TaggedRoot<Tower2>>& v, int q) {
    int r = 0;
    for (auto& tr : v)
      if (std::count(tr.members.begin(), tr.members.end(), q)) ++r;
    return r;
  };
  auto qrank = [](const std::vector<TaggedRoot<Tower2>>& v, int q, int upto) {
    int r = 0;
    for (int s = 0; s < upto; ++s)
      if (std::count(v[s].members.begin(), v[s].members.end(), q)) ++r;
    return r;
  };
  auto qnth = [](const std::vector<TaggedRoot<Tower2>>& v, int q, int n) {
    int r = 0;
    for (size_t s = 0; s < v.size(); ++s)
      if (std::count(v[s].members.begin(), v[s].members.end(), q)) {
        if (r == n) return static_cast<int>(s);
        ++r;
      }
    throw TopologyError("fiber root rank out of range");
  };

  auto attach = [&](LiftedSpot& arc, int col, int p) {
    LiftedSpot* pt = spot_at(false, col, p);
    if (!pt)
      throw TopologyError("arc endpoint misses the candidate grid");
    for (int zi : arc.true_idx) {
      int q0 = 0;  // every input vanishes on a true cell
      int m1 = qtotal(arc.roots, q0), m0 = qtotal(pt->roots, q0);
      if (m1 == 1 && m0 != 1)
        throw TopologyError("double fiber root splitting at an endpoint");
      int target = (m0 == 1) ? qnth(pt->roots, q0, 0)
                             : qnth(pt->roots, q0, qrank(arc.roots, q0, zi));
      if (pt->roots[target].members.size() != m)
        throw TopologyError("arc closure leaves the intersection");
      uf.join(cell_id.at(label_of(arc, zi)),
              cell_id.at(label_of(*pt, target)));
    }
  };

  const size_t nx = arr_.xs.size();
  for (auto& sp : spots_) {
    if (!sp->band || sp->true_idx.empty()) continue;
    size_t b = sp->col;
    if (b < nx) attach(*sp, static_cast<int>(b), arr_.phi_left[b][sp->idx]);
    if (b > 0)
      attach(*sp, static_cast<int>(b - 1), arr_.phi_right[b - 1][sp->idx]);
  }

  // number components by least label
  std::map<int, CellLabel> least;
  for (size_t i = 0; i < labels.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    auto it = least.find(r);
    if (it == least.end() || labels[i] < it->second) least[r] = labels[i];
  }
  std::vector<std::pair<CellLabel, int>> order;
  for (auto& [r, lab] : least) order.push_back({lab, r});
  std::sort(order.begin(), order.end());
  std::map<int, int> root_comp;
  for (size_t i = 0; i < order.size(); ++i) {
    root_comp[order[i].second] = static_cast<int>(i);
    comp_rep_.push_back(order[i].first);
  }
  for (size_t i = 0; i < labels.size(); ++i)
    cell_comp_[labels[i]] = root_comp[uf.find(static_cast<int>(i))];
  ncomp_ = static_cast<int>(order.size());
}

int QuadricCad::component_count() {
  build();
  return ncomp_;
}

QuadricCad::RepPoint QuadricCad::representative(int comp) {
  build();
  CellLabel l = comp_rep_.at(comp);
  bool band = (l[0] % 2 == 1);
  int col = band ? (l[0] - 1) / 2 : (l[0] - 2) / 2;
  int idx = (l[1] - 2) / 2;
  int zi = (l[2] - 2) / 2;
  LiftedSpot* sp = spot_at(band, col, idx);
  return RepPoint{sp->x, sp->y, sp->roots[zi].y};
}

int QuadricCad::locate(const Tower2& x, const Tower2& y, RealRootT<Tower2>& z) {
  build();
  long t = arr_.shear_t;
  Tower2 xs = x - y * static_cast<int>(t);  // working-frame abscissa
  AlgebraicNumber ax = algebraize(xs);
  int col = -1;
  for (size_t i = 0; i < arr_.xs.size(); ++i)
    if (AlgebraicNumber::compare(arr_.xs[i], ax) == 0) {
      col = static_cast<int>(i);
      break;
    }

  if (col >= 0) {
    // match the stack point, then the fiber root, via tower-free values
    AlgebraicNumber ay = algebraize(const_cast<Tower2&>(y));
    for (size_t p = 0; p < arr_.absc[col].size(); ++p) {
      LiftedSpot* sp = spot_at(false, col, static_cast<int>(p));
      if (!sp) continue;
      if (!sp->y_alg)
        sp->y_alg = std::make_unique<AlgebraicNumber>(
            algebraize(arr_.absc[col][p].y));
      if (AlgebraicNumber::compare(*sp->y_alg, ay) != 0) continue;
      AlgebraicNumber az = algebraize(z);
      for (int zi : sp->true_idx) {
        if (!sp->root_alg[zi])
          sp->root_alg[zi] =
              std::make_unique<AlgebraicNumber>(algebraize(sp->roots[zi].y));
        if (AlgebraicNumber::compare(*sp->root_alg[zi], az) == 0)
          return cell_comp_.at(CellLabel{2 * col + 2, 2 * static_cast<int>(p) + 2,
                                         2 * zi + 2});
      }
      throw TopologyError("locate: fiber root not on the intersection stack");
    }
    throw TopologyError("locate: point misses the column stack");
  }

  // open band: rank the point among the curve arcs, then among the fiber
  // roots, inside the caller's own tower
  int b = 0;
  for (auto& xv : arr_.xs) {
    if (AlgebraicNumber::compare(xv, ax) < 0) ++b;
  }
  std::vector<UPolyT<Tower2>> cfibers;
  for (const MPoly& c : arr_.curves) cfibers.push_back(fiber_at(c, xs));
  auto arcs = merge_roots<Tower2>(cfibers);
  int a = -1;
  for (size_t s = 0; s < arcs.size(); ++s) {
    UPolyT<Tower2> diff(std::vector<Tower2>{Tower2() - y, Tower2(1)});
    if (arcs[s].y.sign_at(diff) == 0) {
      a = static_cast<int>(s);
      break;
    }
  }
  if (a < 0) throw TopologyError("locate: point misses every curve arc");
  std::vector<UPolyT<Tower2>> fibers;
  for (const MPoly& q : polys_) fibers.push_back(fiber3_at(q, x, y));
  auto roots = merge_roots<Tower2>(fibers);
  for (size_t s = 0; s < roots.size(); ++s)
    if (RealRootT<Tower2>::compare(roots[s].y, z) == 0)
      return cell_comp_.at(
          CellLabel{2 * b + 1, 2 * a + 2, 2 * static_cast<int>(s) + 2});
  throw TopologyError("locate: fiber root not on the intersection stack");
}

bool QuadricCad::solid_nonempty() {
  // every input is positive definite in its quadratic part, so each fiber
  // polynomial opens upward: the solid slice is the closed interval between
  // the fiber roots, and the conjunction holds somewhere on a vertical line
  // iff max(lower roots) <= min(upper roots)
  auto line_ok = [&](const Tower2& x2, const Tower2& y2) {
    std::vector<std::vector<RealRootT<Tower2>>> rts;
    for (const MPoly& q : polys_) {
      auto f = fiber3_at(q, x2, y2);
      auto r = RealRootT<Tower2>::isolate(f);
      if (r.empty()) return false;
      rts.push_back(std::move(r));
    }
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < rts.size(); ++i) {
      if (RealRootT<Tower2>::compare(rts[i].front(), rts[lo].front()) > 0)
        lo = i;
      if (RealRootT<Tower2>::compare(rts[i].back(), rts[hi].back()) < 0)
        hi = i;
    }
    return RealRootT<Tower2>::compare(rts[lo].front(), rts[hi].back()) <= 0;
  };

  long t = arr_.shear_t;
  auto scan_column = [&](Tower1 x1, std::vector<StackPoint>& stack) {
    std::vector<RealRootT<Tower1>*> yroots;
    for (auto& s : stack) yroots.push_back(&s.y);
    std::vector<Rational> ygaps = interleave(yroots);
    for (size_t p = 0; p < stack.size(); ++p) {
      std::shared_ptr<ExtContext<Tower1>> yctx;
      Tower2 y2 = tower2_value(stack[p].y, yctx);
      Tower2 x2 = Tower2::of(x1) + y2 * static_cast<int>(t);
      if (line_ok(x2, y2)) return true;
    }
    for (const Rational& g : ygaps) {
      Tower2 y2 = Tower2(g);
      Tower2 x2 = Tower2::of(x1) + y2 * static_cast<int>(t);
      if (line_ok(x2, y2)) return true;
    }
    return false;
  };

  for (size_t b = 0; b < arr_.band.size(); ++b)
    if (scan_column(Tower1(arr_.samples[b]), arr_.band[b])) return true;
  for (size_t i = 0; i < arr_.absc.size(); ++i) {
    Tower1 xi = arr_.xctx[i] ? Tower1::generator(arr_.xctx[i])
                             : Tower1(arr_.xs[i].value());
    if (scan_column(xi, arr_.absc[i])) return true;
  }
  return false;
}

}  // namespace rag
