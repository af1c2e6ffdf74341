#ifndef RAG_SUBRESULTANT_HPP
#define RAG_SUBRESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "rag/mpoly.hpp"
#include "rag/qmatrix.hpp"

namespace rag {

// j-th Sylvester-Habicht matrix of univariate P, Q (deg P > deg Q >= 1),
// rows X^{q-j-1}P,...,P,Q,...,X^{p-j-1}Q in the basis X^{p+q-j-1},...,X,1.
// Size (p+q-2j) x (p+q-j).
QMatrix sylvester_habicht(const UPoly& p, const UPoly& q, int j);

// Same matrix with polynomial entries: P, Q given as coefficient lists
// wrt the eliminated variable (index = degree).
std::vector<std::vector<MPoly>> sylvester_habicht_poly(
    const std::vector<MPoly>& p, const std::vector<MPoly>& q, int j);

// Determinant by fraction-free elimination; entries exact polynomials.
MPoly det_poly_matrix(std::vector<std::vector<MPoly>> m);

struct DegenerateResultant : std::domain_error {
  using std::domain_error::domain_error;
};

// Resultant of P and Q wrt var: det(SyHa_0). Throws DegenerateResultant when
// either input has degree 0 in var. Raw value; callers canonicalize.
MPoly resultant(const MPoly& p, const MPoly& q, int var);

// Signed subresultant sequence of (P,Q) wrt `var`: for each j = 0..q the
// polynomial sResP_j (as MPoly) plus the coefficient ladder entries
// sRes_j = coeff of var^j and sRes_{j,j-1}. When deg P = deg Q the pair is
// first reduced by Q <- a_p*Q - b_q*P.
struct SubresultantLadder {
  int var = 0;
  int p = 0, q = 0;           // degrees after reduction
  MPoly lead_p, lead_q;       // leading coefficients (in the other vars)
  std::vector<MPoly> sResP;   // index j = 0..q
  std::vector<MPoly> sRes;    // principal coefficients, index j = 0..q
  std::vector<MPoly> sRes_sub;  // sRes_{j,j-1}, index j = 1..q (index 0 unused)
  bool proportional = false;  // P and Q proportional: whole ladder vanishes
};

SubresultantLadder signed_subresultants(const MPoly& p, const MPoly& q, int var);

// Sturm-Habicht principal-coefficient sequence of P wrt var:
// lc(P), lc(P'), sRes_{q-1},...,sRes_0 of (P, dP/dvar). Evaluating its signs
// at a point and applying sturm_habicht_count gives the number of distinct
// real roots of the specialized polynomial.
std::vector<MPoly> sturm_habicht_coeffs(const MPoly& p, int var);

// Generalized sign-variation count on a Sturm-Habicht sign sequence
// (leading entry nonzero; trailing zeros ignored).
int sturm_habicht_count(const std::vector<int>& signs);

}  // namespace rag

#endif
