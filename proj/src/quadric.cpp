#include "rag/quadric.hpp"

#include <algorithm>
#include <numeric>

namespace rag {
namespace {

MPoly space_shear(const MPoly& p, long a, long b) {
  if (a == 0 && b == 0) return p;
  std::array<MPoly, 3> im = {MPoly::var(0) + MPoly::var(2) * Rational(a),
                             MPoly::var(1) + MPoly::var(2) * Rational(b),
                             MPoly::var(2)};
  return p.subst(im);
}

struct Prepared {
  MPoly q1, q2, q3;
  long a = 0, b = 0;
};

bool x3_regular2(const MPoly& p) {
  auto cs = p.coeffs_wrt(2);
  return cs.size() == 3 && cs[2].is_constant() && !cs[2].zero();
}

Prepared prepare(MPoly p1, MPoly p2, MPoly p3) {
  for (const MPoly* p : {&p1, &p2, &p3}) {
    if (p->zero() || p->total_degree() != 2)
      throw InputRefusal("not a quadric: total degree is not 2");
    if (!(canonical(*p) == square_free_part_full(*p)))
      throw InputRefusal(
          "degenerate quadric: squared linear form (single plane)");
  }
  MPoly g12 = mgcd(p1, p2), g13 = mgcd(p1, p3), g23 = mgcd(p2, p3);
  for (const MPoly* g : {&g12, &g13, &g23})
    if (!g->is_constant() && g->total_degree() == 1)
      throw InputRefusal(
          "degenerate pair: two surfaces share a plane (shared plane)");
  bool prop12 = !g12.is_constant() && g12.total_degree() == 2;
  bool prop13 = !g13.is_constant() && g13.total_degree() == 2;
  if (prop12 && prop13)
    throw InputRefusal(
        "coincident surfaces: the intersection is the quadric itself");
  // a surface proportional to the pivot adds no constraint
  if (prop12)
    p2 = p3;
  else if (prop13)
    p3 = p2;

  std::vector<long> vals{0};
  for (long k = 1; k <= 8; ++k) {
    vals.push_back(k);
    vals.push_back(-k);
  }
  for (long a : vals)
    for (long b : vals) {
      Prepared t;
      t.q1 = space_shear(p1, a, b);
      t.q2 = space_shear(p2, a, b);
      t.q3 = space_shear(p3, a, b);
      if (!x3_regular2(t.q1) || !x3_regular2(t.q2) || !x3_regular2(t.q3))
        continue;
      t.a = a;
      t.b = b;
      return t;
    }
  throw TopologyError("no X3-regular space frame in the shear schedule");
}

ProjectionSet project(const Prepared& t) {
  ProjectionSet P;
  MPoly one{Rational(1)};
  P.sil = canonical(resultant(t.q1, t.q1.derivative(2), 2));
  P.cut2 = canonical(resultant(t.q1, t.q2, 2));
  P.cut3 = canonical(resultant(t.q1, t.q3, 2));
  if (P.cut2.zero() || P.cut3.zero())
    throw TopologyError("vanishing cut resultant");
  MPoly g0 = mgcd(P.cut2, P.cut3);
  P.G = g0.is_constant() ? one : square_free_part_full(g0);
  auto hpart = [&](const MPoly& c) {
    if (c.is_constant()) return one;
    MPoly h = square_free_part_full(c);
    MPoly g = mgcd(h, P.G);
    if (!g.is_constant()) h = gcd_free_part(h, g);
    return h.is_constant() ? one : canonical(h);
  };
  P.H2 = hpart(P.cut2);
  P.H3 = hpart(P.cut3);
  if (P.G.is_constant()) {
    P.Gtilde = one;
    P.SilTilde = one;
    return P;
  }
  MPoly st = mgcd(P.G, P.sil);
  if (st.is_constant()) {
    P.SilTilde = one;
    P.Gtilde = canonical(P.G);
  } else {
    P.SilTilde = canonical(st);
    MPoly gt = gcd_free_part(P.G, st);
    P.Gtilde = gt.is_constant() ? one : canonical(gt);
  }
  return P;
}

// Common points of two coprime plane curves with both coordinates in one
// field Q(alpha), via the gcd-degree certificate of their subresultant
// ladder over each abscissa.
struct Candidate {
  std::shared_ptr<ExtContext<Rational>> c1;
  Tower1 x, y;  // original-plane coordinates
};

std::vector<Candidate> point_candidates(const MPoly& h2, const MPoly& h3) {
  if (h2.is_constant() || h3.is_constant()) return {};
  for (long t = 0; t <= 32; ++t) {
    MPoly a = shear(h2, 0, 1, Rational(t));
    MPoly b = shear(h3, 0, 1, Rational(t));
    if (!is_generic_position(a, b).ok) continue;
    SubresultantLadder lad = signed_subresultants(a, b, 1);
    std::vector<Candidate> out;
    MPoly res = lad.sRes[0];
    if (res.is_constant()) return out;
    for (auto& x : isolate_real_roots(res.to_upoly(0))) {
      int j = gcd_degree_at(lad, x);
      Candidate c;
      Tower1 xi;
      if (x.is_exact()) {
        xi = Tower1(x.value());
      } else {
        c.c1 = std::make_shared<ExtContext<Rational>>(x);
        xi = Tower1::generator(c.c1);
      }
      c.y = shared_root_y_at(lad, j, xi);
      c.x = xi + c.y * static_cast<int>(t);
      out.push_back(std::move(c));
    }
    return out;
  }
  throw TopologyError("no generic position for the point candidates");
}

// One lift of the pivot fiber over a plane point (x, y).
struct Lift {
  Tower2 x, y;  // original-plane coordinates (space-sheared frame)
  bool field_z = false;      // z representable as a field element
  Tower2 z_val;              // when field_z
  UPolyT<Tower1> zdef;       // small annihilator of z over the base field
  RealRootT<Tower2> z_root;  // when not field_z
  std::shared_ptr<ExtContext<Tower2>> c3;
  Tower3 z3;
  bool pass = false;
};

std::vector<Lift> lift_fiber(const Prepared& t, const Tower2& x,
                             const Tower2& y) {
  // When both coordinates live one level down, solve the quadratic fiber
  // there: two real roots become field elements of an explicit square-root
  // extension, which keeps every later sign test and enclosure cheap.
  if (x.constant() && y.constant()) {
    Tower1 x1 = x.base_value(), y1 = y.base_value();
    UPolyT<Tower1> f1 = fiber3_at(t.q1, x1, y1);
    Tower1 aa = f1.coeff(2), bb = f1.coeff(1), cc = f1.coeff(0);
    Tower1 D = bb * bb - aa * cc * 4;
    int sD = field_sign(D);
    std::vector<Lift> out;
    if (sD < 0) return out;
    auto push = [&](Tower2 z, UPolyT<Tower1> zdef) {
      Lift L;
      L.x = x;
      L.y = y;
      L.field_z = true;
      L.z_val = std::move(z);
      L.zdef = std::move(zdef);
      L.z3 = Tower3::of(L.z_val);
      out.push_back(std::move(L));
    };
    Tower1 inv2a = (aa * 2).inverse();
    if (sD == 0) {
      push(Tower2::of(-bb * inv2a),
           UPolyT<Tower1>(std::vector<Tower1>{bb, aa * 2}));
      return out;
    }
    UPolyT<Tower1> sq(std::vector<Tower1>{-D, Tower1(0), Tower1(1)});
    auto roots = RealRootT<Tower1>::isolate(sq);
    if (roots.size() != 2)
      throw TopologyError("positive discriminant without two fiber roots");
    RealRootT<Tower1> g = roots.back();  // +sqrt(D)
    Tower2 lo, hi;
    if (g.is_exact() || g.defining().degree() == 1) {
      Tower1 gv = g.is_exact()
                      ? Tower1(g.value())
                      : -g.defining().coeff(0) / g.defining().coeff(1);
      lo = Tower2::of((-bb - gv) * inv2a);
      hi = Tower2::of((-bb + gv) * inv2a);
    } else {
      auto ctx = std::make_shared<ExtContext<Tower1>>(g);
      Tower2 gv = Tower2::generator(ctx);
      lo = (Tower2::of(-bb) - gv) * Tower2::of(inv2a);
      hi = (Tower2::of(-bb) + gv) * Tower2::of(inv2a);
    }
    if (field_sign(aa) < 0) std::swap(lo, hi);
    UPolyT<Tower1> zdef(std::vector<Tower1>{cc, bb, aa});
    push(std::move(lo), zdef);
    push(std::move(hi), std::move(zdef));
    return out;
  }

  UPolyT<Tower2> f1 = fiber3_at(t.q1, x, y);
  Tower2 aa = f1.coeff(2), bb = f1.coeff(1), cc = f1.coeff(0);
  Tower2 D = bb * bb - aa * cc * 4;
  int sD = field_sign(D);
  std::vector<Lift> out;
  if (sD < 0) return out;
  if (sD == 0) {
    Lift L;
    L.x = x;
    L.y = y;
    L.field_z = true;
    L.z_val = -bb / (aa * 2);
    L.z3 = Tower3::of(L.z_val);
    out.push_back(std::move(L));
    return out;
  }
  for (auto& r : RealRootT<Tower2>::isolate(f1)) {
    Lift L;
    L.x = x;
    L.y = y;
    if (r.is_exact()) {
      L.field_z = true;
      L.z_val = Tower2(r.value());
    } else if (r.defining().degree() == 1) {
      L.field_z = true;
      L.z_val = -r.defining().coeff(0) / r.defining().coeff(1);
    } else {
      L.z_root = r;
      L.c3 = std::make_shared<ExtContext<Tower2>>(L.z_root);
    }
    L.z3 = L.field_z ? Tower3::of(L.z_val) : Tower3::generator(L.c3);
    out.push_back(std::move(L));
  }
  if (out.size() != 2)
    throw TopologyError("positive discriminant without two fiber roots");
  return out;
}

int sign_at_lift(Lift& L, const MPoly& q) {
  UPolyT<Tower2> f = fiber3_at(q, L.x, L.y);
  if (L.field_z) return field_sign(f(L.z_val));
  return L.z_root.sign_at(f);
}

AlgebraicNumber z_key(Lift& L) {
  if (L.field_z && L.zdef.degree() >= 1) {
    // annihilate z through the small fiber polynomial it satisfies instead
    // of its (much bigger) square-root representation
    using namespace tower_detail;
    auto c1 = ctx1_of(L.zdef);
    MPoly a1 = c1 ? mpoly_from_upoly(c1->alpha.defining(), 0) : MPoly::var(0);
    MPoly ann = eliminate_var(a1, encode2(L.zdef, 0, 2), 0);
    return pick_root(ann.to_upoly(2), [&](const Rational& eps) {
      return field_approx(L.z_val, eps);
    });
  }
  return L.field_z ? algebraize(L.z_val) : algebraize(L.z_root);
}

SpacePoint to_space(const Prepared& t, const Lift& L) {
  SpacePoint p;
  p.Z = L.z3;
  p.X = Tower3::of(L.x) + L.z3 * static_cast<int>(t.a);
  p.Y = Tower3::of(L.y) + L.z3 * static_cast<int>(t.b);
  return p;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int i) { return up[i] == i ? i : up[i] = find(up[i]); }
  void join(int i, int j) { up[find(i)] = find(j); }
};

// One column position of the plane decomposition with its fiber lifts.
struct Loc {
  bool band = false;
  size_t col = 0, idx = 0;
  Tower2 x, y;
  std::shared_ptr<ExtContext<Tower1>> c2;
  int vbase = 0;
  std::vector<Lift> lifts;
};

}  // namespace

IntersectionResult intersect_three_quadrics(const MPoly& p1m, const MPoly& p2m,
                                            const MPoly& p3m) {
  Prepared t = prepare(p1m, p2m, p3m);
  IntersectionResult R;
  R.shear_a = t.a;
  R.shear_b = t.b;
  R.proj = project(t);

  std::vector<SpacePoint> iso;

  // ---------- one-dimensional part ----------
  std::vector<MPoly> curve_polys;
  if (!R.proj.Gtilde.is_constant()) curve_polys.push_back(R.proj.Gtilde);
  if (!R.proj.SilTilde.is_constant()) curve_polys.push_back(R.proj.SilTilde);

  PlanarArrangement arr;
  bool have_arr = !curve_polys.empty();
  std::vector<Loc> locs;
  std::vector<std::vector<int>> band_loc, absc_loc;
  std::vector<std::pair<int, int>> edges_pre;
  std::vector<char> alive;
  int pre_n = 0;

  if (have_arr) {
    arr = plane_arrangement(curve_polys,
                            {R.proj.sil, R.proj.H2, R.proj.H3});
    R.plane_shear = arr.shear_t;
    int pt = static_cast<int>(arr.shear_t);

    auto make_loc = [&](bool band, size_t col, size_t idx, const Tower1& xi,
                        RealRootT<Tower1> yr) {
      Loc L;
      L.band = band;
      L.col = col;
      L.idx = idx;
      Tower2 yv = tower2_value(yr, L.c2);
      L.y = yv;
      L.x = Tower2::of(xi) + yv * pt;  // undo the plane frame change
      L.lifts = lift_fiber(t, L.x, L.y);
      for (auto& lf : L.lifts)
        lf.pass = sign_at_lift(lf, t.q2) == 0 && sign_at_lift(lf, t.q3) == 0;
      L.vbase = pre_n;
      pre_n += static_cast<int>(L.lifts.size());
      locs.push_back(std::move(L));
      return static_cast<int>(locs.size()) - 1;
    };

    band_loc.resize(arr.band.size());
    absc_loc.resize(arr.absc.size());
    for (size_t i = 0; i < arr.band.size(); ++i)
      for (size_t a = 0; a < arr.band[i].size(); ++a)
        band_loc[i].push_back(
            make_loc(true, i, a, Tower1(arr.samples[i]), arr.band[i][a].y));
    for (size_t i = 0; i < arr.absc.size(); ++i) {
      Tower1 xi = arr.xctx[i] ? Tower1::generator(arr.xctx[i])
                              : Tower1(arr.xs[i].value());
      for (size_t p = 0; p < arr.absc[i].size(); ++p)
        absc_loc[i].push_back(make_loc(false, i, p, xi, arr.absc[i][p].y));
    }

    auto connect = [&](Loc& A, Loc& B) {
      size_t ka = A.lifts.size(), kb = B.lifts.size();
      if (ka == 0 || kb == 0) return;
      if (ka == 2 && kb == 2) {
        edges_pre.push_back({A.vbase, B.vbase});
        edges_pre.push_back({A.vbase + 1, B.vbase + 1});
      } else {
        for (size_t i = 0; i < ka; ++i)
          for (size_t j = 0; j < kb; ++j)
            edges_pre.push_back({A.vbase + static_cast<int>(i),
                                 B.vbase + static_cast<int>(j)});
      }
    };
    for (size_t i = 0; i < arr.xs.size(); ++i) {
      for (size_t a = 0; a < arr.band[i].size(); ++a)
        connect(locs[band_loc[i][a]], locs[absc_loc[i][arr.phi_left[i][a]]]);
      for (size_t a = 0; a < arr.band[i + 1].size(); ++a)
        connect(locs[band_loc[i + 1][a]],
                locs[absc_loc[i][arr.phi_right[i][a]]]);
    }

    alive.assign(pre_n, 0);
    for (Loc& L : locs)
      for (size_t k = 0; k < L.lifts.size(); ++k)
        alive[L.vbase + k] = L.lifts[k].pass ? 1 : 0;
  }

  std::vector<int> degree(pre_n, 0);
  std::vector<std::pair<int, int>> edges_kept;
  for (auto& e : edges_pre)
    if (alive[e.first] && alive[e.second]) {
      edges_kept.push_back(e);
      ++degree[e.first];
      ++degree[e.second];
    }

  // surviving fiber-column lifts of degree zero are isolated points of the
  // intersection, not graph vertices
  std::vector<char> reclassified(pre_n, 0);
  for (Loc& L : locs) {
    if (L.band) continue;
    for (size_t k = 0; k < L.lifts.size(); ++k) {
      int v = L.vbase + static_cast<int>(k);
      if (alive[v] && degree[v] == 0) reclassified[v] = 1;
    }
  }

  // ---------- isolated-point candidates ----------
  std::vector<SpacePoint> cand;
  MPoly curve_prod = R.proj.Gtilde * R.proj.SilTilde;
  for (auto& c : point_candidates(R.proj.H2, R.proj.H3)) {
    Tower2 xv = Tower2::of(c.x), yv = Tower2::of(c.y);
    auto lifts = lift_fiber(t, xv, yv);
    for (auto& L : lifts) {
      if (sign_at_lift(L, t.q2) != 0 || sign_at_lift(L, t.q3) != 0) continue;
      bool duplicate = false;
      if (have_arr &&
          field_sign(curve_prod.eval3(c.x, c.y, Tower1())) == 0) {
        // the candidate sits on the projected curve: it coincides with a
        // stack point of the plane decomposition (the curve/marker
        // resultants put its abscissa on the grid)
        int pt = static_cast<int>(arr.shear_t);
        Tower1 xsheared = c.x - c.y * pt;
        AlgebraicNumber cx = algebraize(xsheared);
        int col = -1;
        for (size_t i = 0; i < arr.xs.size(); ++i)
          if (AlgebraicNumber::compare(arr.xs[i], cx) == 0) {
            col = static_cast<int>(i);
            break;
          }
        if (col < 0)
          throw std::logic_error("curve candidate off the abscissa grid");
        AlgebraicNumber cy = algebraize(c.y);
        AlgebraicNumber cw = z_key(L);
        for (size_t p = 0; p < arr.absc[col].size() && !duplicate; ++p) {
          AlgebraicNumber sy = algebraize(arr.absc[col][p].y);
          if (AlgebraicNumber::compare(sy, cy) != 0) continue;
          Loc& SL = locs[absc_loc[col][p]];
          for (size_t k = 0; k < SL.lifts.size() && !duplicate; ++k) {
            if (!alive[SL.vbase + static_cast<int>(k)]) continue;
            AlgebraicNumber sw = z_key(SL.lifts[k]);
            if (AlgebraicNumber::compare(sw, cw) == 0) duplicate = true;
          }
        }
      }
      if (duplicate) continue;
      cand.push_back(to_space(t, L));
    }
  }

  // ---------- assembly ----------
  std::vector<int> vmap(pre_n, -1);
  for (Loc& L : locs)
    for (size_t k = 0; k < L.lifts.size(); ++k) {
      int v = L.vbase + static_cast<int>(k);
      if (!alive[v]) continue;
      if (reclassified[v]) {
        iso.push_back(to_space(t, L.lifts[k]));
        continue;
      }
      vmap[v] = static_cast<int>(R.vertices.size());
      R.vertices.push_back(to_space(t, L.lifts[k]));
      R.kinds.push_back(L.band ? VertexKind::sample : VertexKind::critical);
    }
  for (auto& e : edges_kept)
    R.edges.push_back({vmap[e.first], vmap[e.second]});

  UnionFind uf(static_cast<int>(R.vertices.size()));
  for (auto& e : R.edges) uf.join(e.first, e.second);
  std::vector<char> seen(R.vertices.size(), 0);
  for (size_t i = 0; i < R.vertices.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!seen[r]) {
      seen[r] = 1;
      ++R.components;
    }
  }

  // deterministic order: fiber-column survivors first (in column/stack
  // enumeration order), then the zero-dimensional candidates (in root
  // enumeration order, lowest z first within a fiber)
  iso.insert(iso.end(), std::make_move_iterator(cand.begin()),
             std::make_move_iterator(cand.end()));
  R.isolated = std::move(iso);
  R.empty = R.isolated.empty() && R.vertices.empty();
  return R;
}

}  // namespace rag
