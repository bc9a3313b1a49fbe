// Graded modules built from the mod p cohomology of V = F_p^n: H*V itself,
// J(V), I(V), Gr(V), the free H-module I(V) (x) H*V and the family of
// cohomologies of the hyperplanes Ker(mu).
//
// H^1 V = V^* has basis t_1..t_n (coordinate functions) and a matrix phi acts
// on the right by x . phi = phi^*(x), so t_i . phi = sum_j phi_ij t_j. At odd
// p, H*V = Lambda(t_1..t_n) (x) F_p[bt_1..bt_n] with |t| = 1, |bt| = 2.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltafn/rep.hpp"

namespace deltafn {

/// A monomial of H*V: exterior part (bit mask, odd p only) and polynomial
/// exponents (of t_i at p = 2, of bt_i at odd p).
struct Monomial {
  std::uint32_t mask = 0;
  std::vector<int> exps;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class MonomialKind {
  Cohomology,  // H*V
  Truncated,   // F_p[t_1..t_n]/(t_i^p)
};

/// Degree-d monomial basis for `vars` variables, sorted.
class MonomialBasis {
 public:
  MonomialBasis(int vars, int degree, int p, MonomialKind kind = MonomialKind::Cohomology);
  int vars() const { return vars_; }
  int p() const { return p_; }
  MonomialKind kind() const { return kind_; }
  /// Generators t_i are polynomial (p = 2 or truncated) rather than exterior.
  bool polynomial() const { return p_ == 2 || kind_ == MonomialKind::Truncated; }
  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& at(std::size_t i) const { return monos_[i]; }
  std::size_t index_of(const Monomial& m) const;
  std::string label(std::size_t i) const;

 private:
  int vars_, degree_, p_;
  MonomialKind kind_;
  std::vector<Monomial> monos_;
};

/// dim H^d(V_n).
std::size_t hstar_dim(int n, int d, int p);

/// Matrix (src.size() x dst.size()) of the algebra map induced by the linear
/// substitution t_i -> sum_j S_ij t'_j (and bt_i -> sum_j S_ij bt'_j), where
/// S is src.vars() x dst.vars().
Matrix substitution_matrix(const Matrix& S, const MonomialBasis& src, const MonomialBasis& dst);

/// Multiplication by a linear form (row vector of length vars) from degree d
/// to degree d+1 (the form sits on the left, which fixes exterior signs).
Matrix multiply_by_form(std::span<const std::uint8_t> form, const MonomialBasis& src, const MonomialBasis& dst);
/// Multiplication by the Bockstein image of a linear form, degree d -> d+2
/// (odd p only).
Matrix multiply_by_bockstein_form(std::span<const std::uint8_t> form, const MonomialBasis& src,
                                  const MonomialBasis& dst);

struct GradedRep {
  TablePtr base;
  std::vector<Rep> degrees;  // index = degree
  std::string label;

  int max_degree() const { return static_cast<int>(degrees.size()) - 1; }
  const Rep& operator[](int d) const { return degrees.at(static_cast<std::size_t>(d)); }
  std::vector<std::size_t> dims() const;
};

/// H*V_n in degrees 0..D over `base` (a table of n x n matrices).
GradedRep build_hstar(const TablePtr& base, int D);
/// J(V): set maps V -> F_p modulo constants.
Rep build_J(const TablePtr& base);
/// I(V): augmentation ideal of F_p[V^*], basis (mu) = [mu] - [0], mu != 0.
Rep build_I(const TablePtr& base);
/// Gr(V): positive-degree part of F_p[t_1..t_n]/(t_i^p), graded pieces summed.
Rep build_Gr(const TablePtr& base);
/// M (x) H^d for d = 0..D.
GradedRep tensor_graded(const Rep& m, const GradedRep& h, const std::string& label);

/// Nonzero linear forms mu in V^* (row vectors), ordered by vector_index.
std::vector<std::vector<std::uint8_t>> nonzero_forms(int n, int p);

/// I(V) (x) H*V with its H-module structure.
struct HModule {
  GradedRep carrier;          // I (x) H^d
  std::vector<Matrix> mult_t;   // degree d -> d+1, index d (d < D)
  std::vector<Matrix> mult_bt;  // degree d -> d+2 at odd p, index d (d + 1 < D)
  /// dim of F_p (x)_H in degree d.
  std::vector<std::size_t> quotient_dims;
};
HModule build_IH(const TablePtr& base, int D);

/// The direct sum over mu != 0 of H*(Ker mu), with x . phi = 0 when
/// mu phi = 0 and phi^*(x) in H*(Ker(mu phi)) otherwise. Each Ker mu carries
/// the basis kernel_basis(mu).
GradedRep build_kernel_family(const TablePtr& base, int D);

/// Degree-d matrix of (mu) (x) x -> x restricted to Ker mu, from I (x) H^d to
/// the degree-d kernel family.
Matrix quotient_map(const TablePtr& base, int d);

struct QuotientIsoReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::size_t> map_rank;
  std::vector<std::size_t> family_dim;
};
/// Checks, per degree d <= D: the map is onto, its kernel is exactly the
/// image of the augmentation ideal of H, and it is equivariant for every
/// generator of base.
QuotientIsoReport verify_quotient_iso(const TablePtr& base, int D);

/// Freeness over H: dim_d (I (x) H*V) = sum_{a+b=d} dim H^a * dim_b(F_p (x)_H ...).
bool verify_freeness(const HModule& m, int p);
/// Equivariance of mult_t (and mult_bt) with the action of every generator.
bool verify_h_equivariance(const HModule& m);

/// Sq^i : H^d V_n -> H^{d+i} V_n at p = 2.
Matrix steenrod_square(int n, int i, int d);

}  // namespace deltafn
