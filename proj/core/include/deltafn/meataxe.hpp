// Composition factors, isomorphism tests, direct-sum splitting and
// identification of projective modules.
//
// Searches are randomized from a caller-supplied seeded generator; every
// positive answer comes with a certificate (a proper invariant subspace, an
// invertible intertwiner, complementary summands) that is checked exactly.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "deltafn/rep.hpp"

namespace deltafn {

using Rng = std::mt19937_64;

struct MeatAxeOptions {
  int split_budget = 200;     // random algebra elements per split attempt
  int fitting_rounds = 50;    // failed endomorphism samples before a summand is declared indecomposable
  std::size_t max_fitting_dim = 512;
  int iso_budget = 400;       // random hom-space combinations in is_isomorphic
};

/// Thrown when a randomized search runs out of budget. Never a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proper nonzero submodule (echelon basis rows), or nullopt when the module
/// is certified irreducible by Norton's criterion.
std::optional<Matrix> find_submodule(const Rep& a, Rng& rng, const MeatAxeOptions& opt = {});
bool is_irreducible(const Rep& a, Rng& rng, const MeatAxeOptions& opt = {});

/// Characteristic polynomials of a fixed list of probe elements; an
/// isomorphism invariant used to key and order simple modules.
using Fingerprint = std::vector<std::vector<int>>;
std::vector<ElemId> probe_elements(const MonoidTable& base);
Fingerprint fingerprint(const Rep& a);

class SimpleRegistry {
 public:
  explicit SimpleRegistry(TablePtr base);

  const TablePtr& base() const { return base_; }
  std::size_t size() const { return simples_.size(); }
  const Rep& simple(std::size_t i) const { return simples_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  void set_name(std::size_t i, std::string name) { names_.at(i) = std::move(name); }
  std::optional<std::size_t> find_by_name(const std::string& name) const;

  /// Index of a registered simple isomorphic to s (s must be simple).
  std::optional<std::size_t> lookup(const Rep& s) const;
  /// lookup, registering s when new.
  std::size_t intern(const Rep& s);

  /// Sort by (dimension, fingerprint) and assign default names L<dim>.<k>.
  /// Ids handed out before this call are invalidated.
  void canonicalize();
  bool saturated() const { return saturated_; }
  void mark_saturated() { saturated_ = true; }

 private:
  TablePtr base_;
  std::vector<Rep> simples_;
  std::vector<Fingerprint> prints_;
  std::vector<std::string> names_;
  bool saturated_ = false;
};

/// Multiset of simple ids with multiplicities.
struct FactorMultiset {
  std::map<std::size_t, int> mult;

  FactorMultiset& operator+=(const FactorMultiset& o);
  friend FactorMultiset operator+(FactorMultiset a, const FactorMultiset& b) { return a += b; }
  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;
  int count(std::size_t id) const;
  std::size_t total_dim(const SimpleRegistry& reg) const;
  std::string to_string(const SimpleRegistry& reg) const;
};

FactorMultiset chop(const Rep& a, SimpleRegistry& reg, Rng& rng, const MeatAxeOptions& opt = {});

/// Chop modules until the registry holds `target` simples (0: chop only the
/// given seeds once). Tensor products of known simples with the seeds are
/// added while the count is short.
void saturate(SimpleRegistry& reg, const std::vector<Rep>& seeds, std::size_t target, Rng& rng,
              const MeatAxeOptions& opt = {});

struct IsoResult {
  bool isomorphic = false;
  bool conclusive = true;
  Matrix witness;  // invertible intertwiner a -> b when isomorphic
};
IsoResult is_isomorphic(const Rep& a, const Rep& b, Rng& rng, const MeatAxeOptions& opt = {});

struct Summand {
  Rep module;
  Matrix inclusion;   // dim(summand) x dim(a), rows span the summand
  Matrix projection;  // dim(a) x dim(summand)
  bool certified = false;  // indecomposability proven exhaustively
};
struct Decomposition {
  std::vector<Summand> summands;
  bool complete = true;  // false when the size bound stopped the search
};
Decomposition fitting_split(const Rep& a, Rng& rng, const MeatAxeOptions& opt = {});
/// Inclusions and projections compose to the identity and are equivariant.
bool check_certificates(const Rep& a, const Decomposition& d);
/// End(a) is local: exhaustive when dim End <= 6, else nullopt.
std::optional<bool> endomorphism_ring_is_local(const Rep& a);

class PimRegistry {
 public:
  /// Projective covers from splitting `free_module` (the regular module or
  /// another projective containing every PIM). Requires a saturated registry.
  PimRegistry(SimpleRegistry& simples, const Rep& free_module, Rng& rng, const MeatAxeOptions& opt = {});
  /// Registry from known covers (pims[s] covers simple s), e.g. read from a
  /// cache. Heads are re-checked and factors recomputed.
  PimRegistry(SimpleRegistry& simples, std::vector<Rep> pims, std::vector<int> multiplicities, Rng& rng,
              const MeatAxeOptions& opt = {});

  std::size_t size() const { return pims_.size(); }
  const Rep& pim(std::size_t simple_id) const { return pims_.at(simple_id); }
  /// Multiplicity of P_S in the split module.
  int multiplicity(std::size_t simple_id) const { return mult_.at(simple_id); }
  /// cartan()[S][T] = [P_S : T].
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const FactorMultiset& factors(std::size_t simple_id) const { return factors_.at(simple_id); }
  std::string name(std::size_t simple_id) const;
  const SimpleRegistry& simples() const { return *simples_; }

 private:
  SimpleRegistry* simples_;
  std::vector<Rep> pims_;
  std::vector<int> mult_;
  std::vector<FactorMultiset> factors_;
  std::vector<std::vector<int>> cartan_;
};

/// Multiplicity of each P_S (indexed by simple id) with factors(a) equal to
/// the sum of c_S factors(P_S). Throws AlgebraError("input not projective")
/// when no nonnegative integral solution exists.
std::vector<int> solve_projective_multiplicities(const FactorMultiset& f, const PimRegistry& pims);
std::vector<int> identify_projective(const Rep& a, const PimRegistry& pims, SimpleRegistry& reg, Rng& rng,
                                     const MeatAxeOptions& opt = {});
std::string expansion_to_string(const std::vector<int>& mult, const PimRegistry& pims);
/// direct sum of c_S copies of P_S.
Rep assemble_projective(const std::vector<int>& mult, const PimRegistry& pims);

}  // namespace deltafn
