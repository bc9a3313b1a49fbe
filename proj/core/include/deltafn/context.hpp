// Lazily built per-(p, n) data: tables, parabolic chains, named simples,
// projective covers, Steinberg modules and graded targets.
//
// Every randomized step draws from a generator owned by its context and
// seeded from the catalog seed and (p, n, kind), so results are reproducible.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "deltafn/cohomology.hpp"
#include "deltafn/meataxe.hpp"

namespace deltafn {

struct CatalogOptions {
  std::uint64_t seed = 1;
  MeatAxeOptions meataxe;
  /// Largest table whose regular module is split for simples and PIMs.
  std::size_t regular_limit = 2000;
};

/// Graded targets over one base table: H*V, J (x) H*V, I (x) H*V, Gr (x) H*V.
struct GradedTargets {
  GradedRep H, JH, IH, GrH;
};

class Catalog;

class Context {
 public:
  Context(Catalog& cat, TablePtr table, Context* lower);

  const TablePtr& table() const { return table_; }
  int n() const { return table_->n(); }
  int p() const { return table_->p(); }
  bool is_group() const { return table_->is_group(); }
  std::string label() const { return table_->name(); }
  Rng& rng() { return rng_; }
  const MeatAxeOptions& meataxe() const;

  /// Parabolic chain of a general linear group, n >= 1, sharing lower().table().
  const ParabolicChain& chain();
  /// GL_{n-1} context (general linear groups with n >= 1 only).
  Context& lower();

  /// Saturated, canonicalized registry with standard names where they apply:
  /// triv, St_n, V_n, V_n#, det.
  SimpleRegistry& simples();
  /// Number of simples expected from the count of p-regular classes.
  std::size_t expected_simple_count() const;
  bool pims_feasible() const;
  /// Projective covers; throws BudgetExceeded when the group is too large.
  PimRegistry& pims();

  /// The Steinberg module (general linear groups only).
  const Rep& steinberg();
  /// Cached graded targets in degrees 0..D (rebuilt when D grows).
  const GradedTargets& targets(int D);
  /// Cached H*V in degrees 0..D.
  const GradedRep& hstar(int D);

  /// Resolve triv, St, V, V#, det, regular, a simple name, P_<simple>,
  /// St*<simple> (tensor with the Steinberg module).
  Rep named_module(const std::string& name);
  std::optional<std::size_t> simple_id(const std::string& name);

  /// Install registries read from a cache; `pims` may be null.
  void install(std::unique_ptr<SimpleRegistry> simples, std::unique_ptr<PimRegistry> pims);
  bool has_simples() const { return simples_ != nullptr; }
  bool has_pims() const { return pims_ != nullptr; }

 private:
  Catalog* cat_;
  TablePtr table_;
  Context* lower_;
  Rng rng_;
  std::optional<ParabolicChain> chain_;
  std::unique_ptr<SimpleRegistry> simples_;
  std::unique_ptr<PimRegistry> pims_;
  std::optional<Rep> steinberg_;
  std::optional<GradedTargets> targets_;
  int targets_degree_ = -1;
  std::optional<GradedRep> hstar_;
};

class Catalog {
 public:
  explicit Catalog(CatalogOptions opt = {}) : opt_(opt) {}
  Catalog(const Catalog&) = delete;
  Catalog& operator=(const Catalog&) = delete;

  const CatalogOptions& options() const { return opt_; }
  /// GL_n(F_p), n >= 0; contexts for all smaller n are created on the way.
  Context& gl(int n, int p);
  /// M_n(F_p), n >= 1.
  Context& monoid(int n, int p);

 private:
  CatalogOptions opt_;
  std::map<std::tuple<int, int, bool>, std::unique_ptr<Context>> contexts_;
};

/// 1-dimensional module g -> det(g) over a table of invertible matrices.
Rep determinant_module(const TablePtr& G);

}  // namespace deltafn
