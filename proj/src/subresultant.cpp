#include "rag/subresultant.hpp"

#include <cassert>

namespace rag {

namespace {

// Coefficient lists (index = degree) of p viewed univariately in var.
std::vector<MPoly> coeff_list(const MPoly& p, int var) { return p.coeffs_wrt(var); }

}  // namespace

std::vector<std::vector<MPoly>> sylvester_habicht_poly(
    const std::vector<MPoly>& pc, const std::vector<MPoly>& qc, int j) {
  int p = static_cast<int>(pc.size()) - 1;
  int q = static_cast<int>(qc.size()) - 1;
  if (p < 1 || q < 0 || j < 0 || j > q)
    throw std::domain_error("sylvester_habicht: bad degrees or index");
  int rows = p + q - 2 * j;
  int cols = p + q - j;
  std::vector<std::vector<MPoly>> m(rows, std::vector<MPoly>(cols));
  auto put = [&](int row, const std::vector<MPoly>& cf, int shift) {
    // row = X^shift * poly; column c holds the coefficient of X^(cols-1-c)
    for (int c = 0; c < cols; ++c) {
      int deg = cols - 1 - c - shift;
      if (deg >= 0 && deg < static_cast<int>(cf.size())) m[row][c] = cf[deg];
    }
  };
  int r = 0;
  for (int k = q - j - 1; k >= 0; --k) put(r++, pc, k);  // X^{q-j-1}P ... P
  for (int k = 0; k <= p - j - 1; ++k) put(r++, qc, k);  // Q ... X^{p-j-1}Q
  return m;
}

QMatrix sylvester_habicht(const UPoly& p, const UPoly& q, int j) {
  auto lift = [](const UPoly& u) {
    std::vector<MPoly> v;
    for (const Rational& c : u.coeffs()) v.push_back(MPoly(c));
    return v;
  };
  auto m = sylvester_habicht_poly(lift(p), lift(q), j);
  QMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t c = 0; c < m[i].size(); ++c) out.at(i, c) = m[i][c].constant_value();
  return out;
}

MPoly det_poly_matrix(std::vector<std::vector<MPoly>> m) {
  size_t n = m.size();
  if (n == 0) return MPoly(Rational(1));
  assert(m[0].size() == n);
  MPoly prev{Rational(1)};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto d = divexact(num, prev);
        assert(d.has_value());
        m[i][j] = std::move(*d);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

// Determinant-polynomial of an m x n matrix (n >= m): sum over k of
// det(first m-1 columns | column of X^k) * X^k, k = 0..n-m.
MPoly det_pol(const std::vector<std::vector<MPoly>>& m, int var) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (rows == 0) return MPoly(Rational(1));
  MPoly out;
  for (int k = 0; k <= cols - rows; ++k) {
    std::vector<std::vector<MPoly>> sq(rows, std::vector<MPoly>(rows));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j + 1 < rows; ++j) sq[i][j] = m[i][j];
      sq[i][rows - 1] = m[i][cols - 1 - k];
    }
    Exp e{0, 0, 0};
    e[var] = k;
    out = out + MPoly::term(Rational(1), e) * det_poly_matrix(std::move(sq));
  }
  return out;
}

MPoly pow_mp(const MPoly& b, int e) {
  MPoly r{Rational(1)};
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  auto pc = coeff_list(p, var);
  auto qc = coeff_list(q, var);
  int dp = static_cast<int>(pc.size()) - 1;
  int dq = static_cast<int>(qc.size()) - 1;
  if (dp < 1 || dq < 1)
    throw DegenerateResultant("resultant: input has degree < 1 in variable");
  if (dp == dq) {
    // footnote reduction Q <- a_p Q - b_q P
    std::vector<MPoly> rc(pc.size());
    for (size_t i = 0; i < pc.size(); ++i) rc[i] = pc.back() * qc[i] - qc.back() * pc[i];
    while (!rc.empty() && rc.back().zero()) rc.pop_back();
    qc = std::move(rc);
    dq = static_cast<int>(qc.size()) - 1;
    if (dq < 0) return {};              // proportional: resultant vanishes
    if (dq == 0) return pow_mp(qc[0], dp);
  }
  if (dp < dq) {
    std::swap(pc, qc);
    std::swap(dp, dq);
  }
  return det_pol(sylvester_habicht_poly(pc, qc, 0), var);
}

SubresultantLadder signed_subresultants(const MPoly& p, const MPoly& q, int var) {
  SubresultantLadder lad;
  lad.var = var;
  auto pc = coeff_list(p, var);
  auto qc = coeff_list(q, var);
  int dp = static_cast<int>(pc.size()) - 1;
  int dq = static_cast<int>(qc.size()) - 1;
  if (dp < 1 || dq < 0)
    throw std::domain_error("signed_subresultants: degree in var too small");
  if (dp == dq) {
    std::vector<MPoly> rc(pc.size());
    for (size_t i = 0; i < pc.size(); ++i) rc[i] = pc.back() * qc[i] - qc.back() * pc[i];
    while (!rc.empty() && rc.back().zero()) rc.pop_back();
    qc = std::move(rc);
    dq = static_cast<int>(qc.size()) - 1;
    if (dq < 0) {
      lad.proportional = true;
      lad.p = dp;
      lad.q = -1;
      return lad;
    }
  }
  if (dp < dq) {
    std::swap(pc, qc);
    std::swap(dp, dq);
  }
  lad.p = dp;
  lad.q = dq;
  lad.lead_p = pc.back();
  lad.lead_q = qc.back();
  lad.sResP.resize(dq + 1);
  lad.sRes.resize(dq + 1);
  lad.sRes_sub.resize(dq + 1);
  if (dq == 0) {
    // constant Q: sResP_0 = b_0^p by convention. Wherever that constant
    // (as a polynomial in the other variables) vanishes, the specialized
    // pair had proportional images and the gcd is the whole of P, so the
    // ladder is capped with P itself at index p.
    lad.q = dp;
    lad.sResP.assign(dp + 1, MPoly());
    lad.sRes.assign(dp + 1, MPoly());
    lad.sRes_sub.assign(dp + 1, MPoly());
    lad.sResP[0] = pow_mp(qc[0], dp);
    lad.sRes[0] = lad.sResP[0];
    lad.sResP[dp] = MPoly::from_coeffs_wrt(var, pc);
    lad.sRes[dp] = pc.back();
    lad.sRes_sub[dp] = pc[dp - 1];
    return lad;
  }
  for (int j = 0; j <= dq; ++j) {
    MPoly sp = det_pol(sylvester_habicht_poly(pc, qc, j), var);
    auto cs = sp.coeffs_wrt(var);
    lad.sResP[j] = sp;
    lad.sRes[j] = (j < static_cast<int>(cs.size())) ? cs[j] : MPoly();
    if (j >= 1)
      lad.sRes_sub[j] = (j - 1 < static_cast<int>(cs.size())) ? cs[j - 1] : MPoly();
  }
  return lad;
}

std::vector<MPoly> sturm_habicht_coeffs(const MPoly& p, int var) {
  auto pc = coeff_list(p, var);
  int dp = static_cast<int>(pc.size()) - 1;
  if (dp < 1) throw std::domain_error("sturm_habicht_coeffs: constant in var");
  std::vector<MPoly> seq;
  seq.push_back(pc.back());  // sRes_p
  if (dp == 1) {
    // linear: one distinct root always; sRes_0 = derivative constant
    seq.push_back(pc.back());
    return seq;
  }
  SubresultantLadder lad = signed_subresultants(p, p.derivative(var), var);
  for (int j = lad.q; j >= 0; --j) seq.push_back(lad.sRes[j]);
  return seq;
}

int sturm_habicht_count(const std::vector<int>& signs) {
  // drop trailing zeros
  size_t end = signs.size();
  while (end > 0 && signs[end - 1] == 0) --end;
  int count = 0;
  int prev_sign = 0;
  int zeros = 0;
  for (size_t i = 0; i < end; ++i) {
    int s = signs[i];
    if (s == 0) {
      ++zeros;
      continue;
    }
    if (prev_sign != 0) {
      if (zeros % 2 == 0) {
        int c = (prev_sign == s) ? 1 : -1;
        if ((zeros / 2) % 2 == 1) c = -c;
        count += c;
      }
    }
    prev_sign = s;
    zeros = 0;
  }
  return count;
}

}  // namespace rag
