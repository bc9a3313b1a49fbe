// Univariate polynomials over F_p, coefficients stored low degree first.

#pragma once

#include <utility>
#include <vector>

#include "deltafn/ff.hpp"

namespace deltafn {

using Poly = std::vector<int>;

/// Strip trailing zero coefficients (the zero polynomial becomes empty).
void poly_trim(Poly& f);
int poly_degree(const Poly& f);
Poly poly_mul(const Poly& a, const Poly& b, int p);
Poly poly_sub(const Poly& a, const Poly& b, int p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, int p);
Poly poly_monic_gcd(Poly a, Poly b, int p);

/// All monic irreducible polynomials of degree k over F_p.
const std::vector<Poly>& irreducibles(int k, int p);

/// Factorization into monic irreducibles of degree <= max_degree, with
/// multiplicities. Whatever remains is returned in `rest` (1 when the
/// factorization is complete).
struct Factorization {
  std::vector<std::pair<Poly, int>> factors;
  Poly rest;
};
Factorization factor_small(Poly f, int p, int max_degree);

/// f(m) by Horner evaluation.
Matrix poly_eval(const Poly& f, const Matrix& m);

}  // namespace deltafn
