// Right modules over an enumerated monoid, carried by generator images.

#pragma once

#include <functional>
#include <vector>

#include "deltafn/ff.hpp"
#include "deltafn/monoid.hpp"

namespace deltafn {

class Rep {
 public:
  Rep() = default;
  /// Validates that there is one square image per generator of `base`, all of
  /// the same size, and that images are invertible when `base` is a group.
  Rep(TablePtr base, std::vector<Matrix> gen_images);
  /// A module of dimension `dim` with no generators checked; used when `base`
  /// has no generators (trivial group).
  static Rep trivial(TablePtr base, std::size_t copies = 1);

  const TablePtr& base() const { return base_; }
  int p() const { return base_->p(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& gen_images() const { return gens_; }

  /// Action matrix of an arbitrary element (product along its generator word).
  Matrix act(ElemId id) const;
  /// Action matrices of all elements, indexed by element id.
  std::vector<Matrix> all_actions() const;

  /// Spot-check that the generator images respect the table multiplication.
  bool check_relations(std::size_t samples, std::uint64_t seed) const;

 private:
  TablePtr base_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
};

bool same_base(const Rep& a, const Rep& b);
/// Rep from generator images, or the trivial module of dimension `dim` when
/// base has no generators.
Rep make_rep(const TablePtr& base, std::vector<Matrix> images, std::size_t dim);

Rep tensor(const Rep& a, const Rep& b);
Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const std::vector<Rep>& parts);
/// g -> transpose(a(g^-1)). Requires invertible generator images.
Rep contragredient(const Rep& a);

/// Restriction to a sub-table H sharing the root of a.base().
Rep restrict(const Rep& a, const TablePtr& H);
/// Re-express a module on an isomorphic table: `to_source[i]` is the id in
/// a.base() corresponding to element i of `target`.
Rep transport(const Rep& a, const TablePtr& target, const std::vector<ElemId>& to_source);
/// Same as transport along equal element order (e.g. embedded GL_{n-1} and
/// the standalone GL_{n-1}); checks that sizes agree.
Rep transport_aligned(const Rep& a, const TablePtr& target);

/// a (x)_{F_p[H]} F_p[G], on right cosets H g with minimal-id representatives.
Rep induce(const Rep& a, const TablePtr& G);

/// Right cosets of H in G: coset index per element of G, and representatives.
struct CosetData {
  std::vector<int> coset_of;
  std::vector<ElemId> reps;
};
CosetData right_cosets(const MonoidTable& H, const MonoidTable& G);

/// Inflate along a surjection target -> a.base() given as an id map.
Rep inflate(const Rep& a, const TablePtr& target, const std::vector<ElemId>& projection);

struct Coinvariants {
  Rep module;
  /// dim(a) x dim(quotient) matrix of the quotient map.
  Matrix projection;
  /// Coordinates of a kept as the quotient basis (non-pivot columns).
  std::vector<std::size_t> kept;
};
/// M_U = M / span{m u - m}, as a module over `acting`, which must normalise U.
/// U and acting are sub-tables of a.base()'s root contained in a.base().
Coinvariants coinvariants(const Rep& a, const TablePtr& U, const TablePtr& acting);

struct HomSpace {
  std::size_t dim = 0;
  /// dim(a) x dim(b) matrices F with a(g) F = F b(g). Empty if not requested.
  std::vector<Matrix> basis;
};
/// Hom_G(a, b) by spinning a standard basis of a and solving for the images
/// of its cyclic generators.
HomSpace hom_space(const Rep& a, const Rep& b, bool want_basis = true);
std::size_t hom_dim(const Rep& a, const Rep& b);
/// Direct Sylvester solve over all generators (oracle for hom_space).
std::vector<Matrix> hom_space_direct(const Rep& a, const Rep& b);
bool is_homomorphism(const Rep& a, const Rep& b, const Matrix& f);

/// Module on the span of invariant rows W of a (W has independent rows).
Rep submodule(const Rep& a, const Matrix& W);
/// a / span(W) on the non-pivot coordinates of rref(W).
Rep quotient(const Rep& a, const Matrix& W);
/// Smallest submodule containing the given rows (echelon basis rows).
Matrix spin(const Rep& a, const Matrix& seeds);
/// Same, for the dual action (transposed generator images).
Matrix spin_transposed(const Rep& a, const Matrix& seeds);

/// Permutation module: `image(point, generator_index)` gives point . g.
Rep perm_module(const TablePtr& base, std::size_t points,
                const std::function<std::size_t(std::size_t, std::size_t)>& image);
Rep regular(const TablePtr& base);
/// F_p-valued functions on V = F_p^n: (f . phi)(v) = f(phi v). Basis vectors
/// are indicator functions, ordered like the vectors of V (base-p digits,
/// first coordinate most significant).
Rep function_module(const TablePtr& base);
/// The natural right module V_n: g acts on row vectors by transpose(g^-1).
Rep natural_module(const TablePtr& base);
/// H^1 = V^*: g acts on row vectors by g itself.
Rep dual_natural_module(const TablePtr& base);

/// Enumerate V = F_p^n as column vectors in the order used by function_module.
std::vector<std::vector<std::uint8_t>> enumerate_vectors(int n, int p);
std::size_t vector_index(std::span<const std::uint8_t> v, int p);

}  // namespace deltafn
