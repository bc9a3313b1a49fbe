// Brauer characters with exact values in cyclotomic integers.
//
// Eigenvalues in F_{p^k} are lifted through the Conway generator of
// F_{p^k}^x: alpha_k^e -> exp(2 pi i e / (p^k - 1)). Conway polynomials form
// a compatible family, so the lift does not depend on the field an
// eigenvalue is computed in.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltafn/monoid.hpp"
#include "deltafn/poly.hpp"
#include "deltafn/rep.hpp"

namespace deltafn {

/// Element of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.
class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(int order, long long value = 0);
  /// zeta_order^e.
  static CyclotomicInt root_of_unity(int order, long long e);

  int order() const { return order_; }
  const std::vector<long long>& coefficients() const { return coeffs_; }
  /// Same number written over zeta_{new_order}; order must divide new_order.
  CyclotomicInt lift(int new_order) const;
  /// Rational integer value when the number lies in Z.
  bool is_integer() const;
  long long integer_value() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
  /// Exact division by a rational integer; throws when not divisible.
  CyclotomicInt divide_exact(long long d) const;
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);
  std::string to_string() const;

 private:
  void reduce();
  int order_;
  std::vector<long long> coeffs_;  // length phi(order)
};

/// m-th cyclotomic polynomial over Z, low degree first.
std::vector<long long> cyclotomic_polynomial(int m);

/// Conway polynomial of F_{p^k}, p in {2, 3}, 1 <= k <= 6.
const Poly& conway_polynomial(int p, int k);

/// F_{p^k} as powers of the Conway generator, elements encoded as base-p
/// integers of their coefficient vectors.
class FiniteField {
 public:
  FiniteField(int p, int k);
  int p() const { return p_; }
  int k() const { return k_; }
  int size() const { return q_; }
  int exp(int e) const { return exp_[static_cast<std::size_t>(((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1))]; }
  int log(int x) const;  // x != 0
  int add(int a, int b) const;
  int mul(int a, int b) const;
  int from_prime_field(int c) const { return c % p_; }
  /// Evaluate an F_p polynomial at an element.
  int eval(const Poly& f, int x) const;
  /// Multiplicative order of the generator (q - 1) when it is primitive.
  bool generator_is_primitive() const;

 private:
  int p_, k_, q_;
  std::vector<int> exp_, log_;
};

/// Brauer character value of a at the p-regular element s, written over
/// zeta_{ord(s)}.
CyclotomicInt brauer_value(const Rep& a, ElemId s);

/// Brauer character on the p-regular classes of a group table.
struct BrauerTable {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // element id -> class index, -1 if not p-regular
};
BrauerTable brauer_classes(const MonoidTable& G);
std::vector<CyclotomicInt> brauer_character(const Rep& a, const BrauerTable& t);

struct ClassCheck {
  ElemId representative = 0;
  int element_order = 1;
  int fixed_dim = 0;
  std::string lhs, rhs;
  bool ok = true;
};
struct KeyReport {
  bool ok = true;
  std::vector<ClassCheck> rows;
};

/// St_n(sigma) = p^(i-1) St_{n-1}(sigma) for p-regular sigma in GL_{n-1},
/// i = dim Ker(sigma - 1) on V_n.
KeyReport verify_key_fact1(const Rep& st_n, const Rep& st_lower, const ParabolicChain& ch);
/// J(V_n)^#(s) = p^i - 1 on every p-regular class of GL_n.
KeyReport verify_key_fact2(const Rep& j_dual, const MonoidTable& G);
/// #{g : g s g^-1 in GL_{n-1}} = |GL_{n-1}| (p^i - 1) p^(i-1).
KeyReport verify_key_fact3(const ParabolicChain& ch);
/// Induced Brauer character of St_{n-1} from GL_{n-1}, by the class-sum
/// formula with exact division by |GL_{n-1}|, against (J^# (x) St_n).
KeyReport verify_key_characters(const Rep& st_n, const Rep& st_lower, const Rep& j_dual, const ParabolicChain& ch);

}  // namespace deltafn
