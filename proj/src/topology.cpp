#include "rag/topology.hpp"

#include <algorithm>
#include <numeric>

namespace rag {

namespace {

constexpr long kShearBudget = 32;

// P(x, X2) as a univariate polynomial with coefficients in the field of x.
template <class K>
UPolyT<K> specialize(const MPoly& p, const K& x) {
  auto cs = p.coeffs_wrt(1);
  std::vector<K> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i)
    out[i] = cs[i].eval3(x, K(0), K(0));
  return UPolyT<K>(std::move(out));
}

// Does the specialized subresultant sResP_j collapse to a single point,
// i.e. is it a constant times a j-th power of a linear polynomial?
template <class K>
bool single_root_fiber(const MPoly& sresp, const K& x) {
  UPolyT<K> s = specialize(sresp, x);
  if (s.degree() <= 1) return true;
  return square_free_part(s).degree() <= 1;
}

}  // namespace

int gcd_degree_at(const SubresultantLadder& lad, AlgebraicNumber& x) {
  if (lad.proportional)
    throw TopologyError("gcd_degree_at: proportional pair, ladder vanishes");
  for (int j = 0; j <= lad.q; ++j) {
    const MPoly& s = lad.sRes[j];
    if (s.zero()) continue;
    if (x.sign_at(s.to_upoly(0)) != 0) return j;
  }
  throw TopologyError("gcd_degree_at: whole ladder vanishes at x");
}

GenericityVerdict is_generic_position(const MPoly& p1, const MPoly& p2) {
  auto regular = [](const MPoly& p) {
    auto cs = p.coeffs_wrt(1);
    return !cs.empty() && cs.size() >= 2 && cs.back().is_constant();
  };
  if (!regular(p1)) return {false, "first curve not X2-regular"};
  if (!regular(p2)) return {false, "second curve not X2-regular"};
  if (!mgcd(p1, p2).is_constant()) return {false, "curves share a factor"};

  SubresultantLadder lad = signed_subresultants(p1, p2, 1);
  if (lad.proportional) return {false, "curves share a factor"};
  MPoly res = lad.sRes[0];
  if (res.is_constant()) return {true, ""};
  auto xs = isolate_real_roots(res.to_upoly(0));
  for (auto& x : xs) {
    int j;
    try {
      j = gcd_degree_at(lad, x);
    } catch (const TopologyError&) {
      return {false, "whole subresultant ladder vanishes over an abscissa"};
    }
    if (j <= 1) continue;
    bool ok;
    if (x.is_exact()) {
      ok = single_root_fiber(lad.sResP[j], x.value());
    } else {
      auto ctx = std::make_shared<ExtContext<Rational>>(x);
      ok = single_root_fiber(lad.sResP[j], Ext<Rational>::generator(ctx));
    }
    if (!ok) return {false, "two distinct common roots above one abscissa"};
  }
  return {true, ""};
}

namespace {

// 1-based position of y among the roots of the fiber polynomial f.
template <class K>
int fiber_position(const UPolyT<K>& f, const K& y) {
  auto roots = RealRootT<K>::isolate(f);
  UPolyT<K> probe(std::vector<K>{-y, K(1)});  // X2 - y
  int below = 0;
  for (auto& r : roots)
    if (r.sign_at(probe) < 0) ++below;
  return below + 1;
}

template <class K>
int position_of_shared_root(const MPoly& curve, const SubresultantLadder& lad,
                            int j, const K& x) {
  K y = shared_root_y_at(lad, j, x);
  return fiber_position(specialize(curve, x), y);
}

int position_dispatch(const MPoly& curve, const SubresultantLadder& lad,
                      int j, AlgebraicNumber& x) {
  if (x.is_exact())
    return position_of_shared_root(curve, lad, j, x.value());
  auto ctx = std::make_shared<ExtContext<Rational>>(x);
  return position_of_shared_root(curve, lad, j, Ext<Rational>::generator(ctx));
}

PlanarTopology build_top(const MPoly& p_in, const MPoly* q_in) {
  MPoly P = square_free_part_full(p_in);
  if (P.is_constant()) throw TopologyError("curve polynomial is constant");
  MPoly Q;
  if (q_in) {
    Q = square_free_part_full(*q_in);
    if (Q.is_constant()) throw TopologyError("second curve is constant");
    if (!mgcd(P, Q).is_constant())
      throw TopologyError("curves share a common factor");
  }

  for (long t = 0; t <= kShearBudget; ++t) {
    MPoly Ps = shear(P, 0, 1, Rational(t));
    MPoly dPs = Ps.derivative(1);
    if (dPs.zero()) continue;
    if (!is_generic_position(Ps, dPs).ok) continue;
    MPoly Qs;
    if (q_in) {
      Qs = shear(Q, 0, 1, Rational(t));
      if (!is_generic_position(Ps, Qs).ok) continue;
    }

    PlanarTopology top;
    top.curve = Ps;
    top.shear_t = t;

    SubresultantLadder crit = signed_subresultants(Ps, dPs, 1);
    MPoly res_crit = crit.sRes[0];
    std::vector<AlgebraicNumber> xs;
    std::vector<bool> is_crit, is_inter;
    if (!res_crit.is_constant())
      for (auto& x : isolate_real_roots(res_crit.to_upoly(0))) {
        xs.push_back(x);
        is_crit.push_back(true);
        is_inter.push_back(false);
      }
    SubresultantLadder inter;
    if (q_in) {
      inter = signed_subresultants(Ps, Qs, 1);
      MPoly res_inter = inter.sRes[0];
      if (!res_inter.is_constant())
        for (auto& x : isolate_real_roots(res_inter.to_upoly(0))) {
          bool merged = false;
          for (size_t i = 0; i < xs.size(); ++i)
            if (AlgebraicNumber::compare(xs[i], x) == 0) {
              is_inter[i] = true;
              merged = true;
              break;
            }
          if (!merged) {
            xs.push_back(x);
            is_crit.push_back(false);
            is_inter.push_back(true);
          }
        }
    }
    std::vector<size_t> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return AlgebraicNumber::compare(xs[a], xs[b]) < 0;
    });
    {
      std::vector<AlgebraicNumber> x2;
      std::vector<bool> c2, i2;
      for (size_t i : order) {
        x2.push_back(xs[i]);
        c2.push_back(is_crit[i]);
        i2.push_back(is_inter[i]);
      }
      xs = std::move(x2);
      is_crit = std::move(c2);
      is_inter = std::move(i2);
    }

    top.samples = sample_between(xs);
    auto ladder = sturm_habicht_coeffs(Ps, 1);
    for (const Rational& s : top.samples) {
      AlgebraicNumber a = AlgebraicNumber::from_rational(s);
      top.m.push_back(count_real_roots_in_fiber(ladder, a));
    }
    for (size_t i = 0; i < xs.size(); ++i) {
      top.n.push_back(count_real_roots_in_fiber(ladder, xs[i]));
      int ci = 0;
      if (is_crit[i]) {
        int j = gcd_degree_at(crit, xs[i]);
        ci = position_dispatch(Ps, crit, j, xs[i]);
      }
      top.c.push_back(ci);
      if (q_in && is_inter[i]) {
        int j = gcd_degree_at(inter, xs[i]);
        if (j >= 1)
          top.marked.emplace_back(static_cast<int>(i),
                                  position_dispatch(Ps, inter, j, xs[i]));
      }
    }
    top.xs = std::move(xs);
    return top;
  }
  throw TopologyError("no generic position within the shear budget");
}

}  // namespace

PlanarTopology top(const MPoly& p) { return build_top(p, nullptr); }

PlanarTopology top_with_respect_to(const MPoly& p, const MPoly& q) {
  return build_top(p, &q);
}

std::vector<PlanarPoint> common_points(const MPoly& p_in, const MPoly& q_in) {
  MPoly P = square_free_part_full(p_in);
  MPoly Q = square_free_part_full(q_in);
  if (P.is_constant() || Q.is_constant()) return {};
  if (!mgcd(P, Q).is_constant())
    throw TopologyError("curves share a common factor");

  for (long t = 0; t <= kShearBudget; ++t) {
    MPoly Ps = shear(P, 0, 1, Rational(t));
    MPoly Qs = shear(Q, 0, 1, Rational(t));
    if (!is_generic_position(Ps, Qs).ok) continue;

    SubresultantLadder lad = signed_subresultants(Ps, Qs, 1);
    std::vector<PlanarPoint> out;
    MPoly res = lad.sRes[0];
    if (!res.is_constant()) {
      for (auto& x : isolate_real_roots(res.to_upoly(0))) {
        int j = gcd_degree_at(lad, x);
        if (j < 1) continue;
        if (x.is_exact()) {
          Rational y = shared_root_y_at(lad, j, x.value());
          out.push_back({AlgebraicNumber::from_rational(x.value() + Rational(t) * y),
                         AlgebraicNumber::from_rational(y)});
        } else {
          auto ctx = std::make_shared<ExtContext<Rational>>(x);
          using K = Ext<Rational>;
          K xe = K::generator(ctx);
          K y = shared_root_y_at(lad, j, xe);
          K x_orig = xe + y * Rational(t);
          out.push_back({to_algebraic(x_orig), to_algebraic(y)});
        }
      }
    }
    std::sort(out.begin(), out.end(), [](PlanarPoint& a, PlanarPoint& b) {
      int cx = AlgebraicNumber::compare(a.x, b.x);
      if (cx != 0) return cx < 0;
      return AlgebraicNumber::compare(a.y, b.y) < 0;
    });
    return out;
  }
  throw TopologyError("no generic position within the shear budget");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarGraph planar_graph(const PlanarTopology& t) {
  PlanarGraph g;
  size_t r = t.xs.size();
  // vertex ids: bands then fibers, interleaved left to right
  std::vector<int> band_base(r + 1), fiber_base(r);
  for (size_t i = 0; i <= r; ++i) {
    band_base[i] = static_cast<int>(g.vertices.size());
    for (int k = 1; k <= t.m[i]; ++k)
      g.vertices.push_back({true, static_cast<int>(i), k});
    if (i < r) {
      fiber_base[i] = static_cast<int>(g.vertices.size());
      for (int k = 1; k <= t.n[i]; ++k)
        g.vertices.push_back({false, static_cast<int>(i), k});
    }
  }
  auto attach = [&](size_t band, size_t fiber) {
    int m = t.m[band], n = t.n[fiber], c = t.c[fiber];
    if (c == 0) {
      if (m != n)
        throw TopologyError("band/fiber count mismatch at a regular abscissa");
      for (int k = 0; k < m; ++k)
        g.edges.emplace_back(band_base[band] + k, fiber_base[fiber] + k);
      return;
    }
    int low = c - 1, high = n - c, mid = m - low - high;
    if (mid < 0) throw TopologyError("band/fiber count mismatch at a critical abscissa");
    for (int k = 0; k < low; ++k)
      g.edges.emplace_back(band_base[band] + k, fiber_base[fiber] + k);
    for (int k = 0; k < mid; ++k)
      g.edges.emplace_back(band_base[band] + low + k, fiber_base[fiber] + c - 1);
    for (int k = 0; k < high; ++k)
      g.edges.emplace_back(band_base[band] + low + mid + k, fiber_base[fiber] + c + k);
  };
  for (size_t i = 0; i < r; ++i) {
    attach(i, i);      // band left of abscissa i
    attach(i + 1, i);  // band right of abscissa i
  }
  UnionFind uf(static_cast<int>(g.vertices.size()));
  for (auto& [a, b] : g.edges) uf.unite(a, b);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (uf.find(v) == v) ++g.components;
  return g;
}

}  // namespace rag
