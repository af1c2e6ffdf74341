#include "rag/betti.hpp"

#include <memory>
#include <numeric>

namespace rag {

namespace {

int pair_index(int m, int i, int j) {  // (i<j) -> lexicographic rank
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

}  // namespace

BettiResult betti01(const std::vector<ObjectDescriptor>& objects) {
  const int m = static_cast<int>(objects.size());
  if (m < 1) throw InputRefusal("no objects given");
  for (const ObjectDescriptor& o : objects)
    if (o.rel != objects.front().rel)
      throw InputRefusal("mixed surface and solid objects");
  const bool solids = objects.front().rel == Rel::le;
  std::vector<MPoly> ps;
  for (const ObjectDescriptor& o : objects) ps.push_back(canonical(o.p));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if ((ps[i] - ps[j]).zero())
        throw InputRefusal("two objects have the same zero set");

  BettiResult R;
  R.d0 = m;
  const int npairs = m * (m - 1) / 2;

  // ---- pairwise intersections ----
  std::vector<std::unique_ptr<QuadricCad>> pair_cad(npairs);
  R.pair_components.assign(npairs, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int pi = pair_index(m, i, j);
      pair_cad[pi] = std::make_unique<QuadricCad>(
          std::vector<MPoly>{objects[i].p, objects[j].p});
      R.pair_components[pi] = solids ? (pair_cad[pi]->solid_nonempty() ? 1 : 0)
                                     : pair_cad[pi]->component_count();
      R.d1 += R.pair_components[pi];
    }

  // ---- matrix A: object generators -> nonempty pairs ----
  std::vector<std::pair<int, int>> nonempty;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (R.pair_components[pair_index(m, i, j)] > 0) nonempty.push_back({i, j});
  R.a = QMatrix(nonempty.size(), m);
  for (size_t r = 0; r < nonempty.size(); ++r) {
    R.a.at(r, nonempty[r].first) = -1;
    R.a.at(r, nonempty[r].second) = 1;
  }
  R.rank_a = R.a.rank();

  // ---- matrix B: triple components -> pair components ----
  std::vector<int> pair_col(npairs, 0);  // column offset of each pair's comps
  int ncols = 0;
  for (int p = 0; p < npairs; ++p) {
    pair_col[p] = ncols;
    ncols += R.pair_components[p];
  }
  struct BRow {
    int c_ij, c_il, c_jl;  // column indices (+1, -1, +1)
  };
  std::vector<BRow> brows;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int l = j + 1; l < m; ++l) {
        int pij = pair_index(m, i, j), pil = pair_index(m, i, l),
            pjl = pair_index(m, j, l);
        if (R.pair_components[pij] == 0 || R.pair_components[pil] == 0 ||
            R.pair_components[pjl] == 0) {
          R.triple_components.push_back(0);
          continue;
        }
        if (solids) {
          QuadricCad tc({objects[i].p, objects[j].p, objects[l].p});
          int t = tc.solid_nonempty() ? 1 : 0;
          R.triple_components.push_back(t);
          if (t)
            brows.push_back(
                {pair_col[pij], pair_col[pil], pair_col[pjl]});
          continue;
        }
        QuadricCad tc({objects[i].p, objects[j].p, objects[l].p});
        int t = tc.component_count();
        R.triple_components.push_back(t);
        for (int c = 0; c < t; ++c) {
          QuadricCad::RepPoint rp = tc.representative(c);
          int cij = pair_cad[pij]->locate(rp.x, rp.y, rp.z);
          int cil = pair_cad[pil]->locate(rp.x, rp.y, rp.z);
          int cjl = pair_cad[pjl]->locate(rp.x, rp.y, rp.z);
          brows.push_back({pair_col[pij] + cij, pair_col[pil] + cil,
                           pair_col[pjl] + cjl});
        }
      }
  R.b = QMatrix(brows.size(), ncols);
  for (size_t r = 0; r < brows.size(); ++r) {
    R.b.at(r, brows[r].c_ij) = R.b.at(r, brows[r].c_ij) + 1;
    R.b.at(r, brows[r].c_il) = R.b.at(r, brows[r].c_il) - 1;
    R.b.at(r, brows[r].c_jl) = R.b.at(r, brows[r].c_jl) + 1;
  }
  R.rank_b = R.b.rank();

  R.b0 = R.d0 - static_cast<int>(R.rank_a);
  R.b1 = R.d1 - static_cast<int>(R.rank_b) - static_cast<int>(R.rank_a);
  return R;
}

int union_components(int d0,
                     const std::vector<std::pair<int, int>>& touching) {
  std::vector<int> up(d0);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int i) {
    while (up[i] != i) i = up[i] = up[up[i]];
    return i;
  };
  for (auto& [i, j] : touching) up[find(i)] = find(j);
  int n = 0;
  for (int i = 0; i < d0; ++i)
    if (find(i) == i) ++n;
  return n;
}

}  // namespace rag
