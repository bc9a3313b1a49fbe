// Enumerated matrix monoids: M_n(F_p), GL_n(F_p) and the subgroups used by
// parabolic restriction (parabolic, unipotent radical, Levi, GL_{n-1}).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deltafn/ff.hpp"

namespace deltafn {

enum class MonoidKind {
  FullMonoid,
  GeneralLinear,
  Parabolic,
  Unipotent,
  Levi,
  EmbeddedGL,
  EmbeddedGLU,
  Borel,
  Weyl,
  GL1,
  BlockLevi,
  Subgroup,
};

std::string to_string(MonoidKind k);

using ElemId = std::int32_t;

/// A finite monoid of n x n matrices over F_p with index-based
/// multiplication. Element ids follow lexicographic order of the entries.
///
/// Tables are built once and then shared through shared_ptr<const>. A table
/// is either a root (built from scratch) or a sub-table of a root, in which
/// case `to_root` maps local ids to root ids.
class MonoidTable : public std::enable_shared_from_this<MonoidTable> {
 public:
  int p() const { return p_; }
  int n() const { return n_; }
  MonoidKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return keys_.size(); }
  bool is_group() const { return is_group_; }

  const Matrix& element(ElemId id) const { return elements_[static_cast<std::size_t>(id)]; }
  ElemId identity() const { return identity_; }
  const std::vector<ElemId>& generators() const { return generators_; }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inverse(ElemId a) const;
  /// Id of a matrix, or nullopt when the matrix is not in the table.
  std::optional<ElemId> find(const Matrix& m) const;
  ElemId id_of(const Matrix& m) const;

  /// Generator indices (positions in generators()) whose product is `id`.
  const std::vector<std::uint8_t>& word(ElemId id) const { return words_[static_cast<std::size_t>(id)]; }
  int element_order(ElemId id) const;

  bool has_full_table() const { return !table_.empty(); }

  // Root bookkeeping.
  bool is_root() const { return root_ == nullptr; }
  const MonoidTable& root() const { return root_ ? *root_ : *this; }
  std::shared_ptr<const MonoidTable> root_ptr() const;
  ElemId to_root(ElemId id) const { return root_ ? to_root_[static_cast<std::size_t>(id)] : id; }
  /// Local id of a root element, or -1 when it is not in this table.
  ElemId from_root(ElemId root_id) const {
    return root_ ? from_root_[static_cast<std::size_t>(root_id)] : root_id;
  }
  bool contains_root_id(ElemId root_id) const { return from_root(root_id) >= 0; }

  /// Builds a sub-table of a root table from a set of generators (root ids).
  /// The element set is the closure of the generators.
  static std::shared_ptr<const MonoidTable> generated_by(std::shared_ptr<const MonoidTable> root,
                                                         const std::vector<ElemId>& gens_in_root,
                                                         MonoidKind kind, std::string name);
  /// Sub-table of all root elements satisfying a predicate; generators are
  /// chosen greedily in id order. The predicate must cut out a submonoid.
  template <class Pred>
  static std::shared_ptr<const MonoidTable> filtered(std::shared_ptr<const MonoidTable> root, Pred pred,
                                                     MonoidKind kind, std::string name) {
    std::vector<ElemId> ids;
    for (ElemId i = 0; i < static_cast<ElemId>(root->size()); ++i)
      if (pred(root->element(i))) ids.push_back(i);
    return from_element_set(std::move(root), ids, kind, std::move(name));
  }
  static std::shared_ptr<const MonoidTable> from_element_set(std::shared_ptr<const MonoidTable> root,
                                                             const std::vector<ElemId>& ids_in_root,
                                                             MonoidKind kind, std::string name);

  /// Root-level construction from an explicit element list (any order) and
  /// generator matrices. Used by the builders and the cache loader.
  static std::shared_ptr<const MonoidTable> make_root(int p, int n, MonoidKind kind, std::string name,
                                                      std::vector<Matrix> elements,
                                                      const std::vector<Matrix>& generators);

  std::uint64_t key_of(const Matrix& m) const;

 private:
  friend struct SubTableBuilder;
  MonoidTable() = default;
  void finish_build();
  ElemId mul_by_matrices(ElemId a, ElemId b) const;

  int p_ = 2;
  int n_ = 0;
  MonoidKind kind_ = MonoidKind::GeneralLinear;
  std::string name_;
  bool is_group_ = true;
  std::vector<Matrix> elements_;
  std::vector<std::uint64_t> keys_;
  std::vector<ElemId> key_index_;  // dense key -> id, -1 if absent
  std::unordered_map<std::uint64_t, ElemId> key_map_;
  ElemId identity_ = 0;
  std::vector<ElemId> generators_;
  std::vector<ElemId> table_;  // full multiplication table when small
  std::vector<ElemId> inverse_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::shared_ptr<const MonoidTable> root_;
  std::vector<ElemId> to_root_;
  std::vector<ElemId> from_root_;
};

using TablePtr = std::shared_ptr<const MonoidTable>;

/// Full-table threshold: monoids larger than this compute products on demand.
inline constexpr std::size_t kFullTableLimit = 4096;

TablePtr build_gl(int n, int p);
TablePtr build_m(int n, int p);

/// |GL_n(F_p)| = prod_{i<n} (p^n - p^i).
std::uint64_t gl_order(int n, int p);

/// Closure (root ids, sorted) of a set of root ids under multiplication.
std::vector<ElemId> closure_in_root(const MonoidTable& root, const std::vector<ElemId>& gens);

/// Map each id of `sub` to the id of the same element in `super`. Both must
/// share a root and sub must be contained in super.
std::vector<ElemId> relative_embedding(const MonoidTable& sub, const MonoidTable& super);
bool same_root(const MonoidTable& a, const MonoidTable& b);

/// The parabolic subgroup stabilising the hyperplane of last coordinate zero,
/// with its Levi decomposition P = L U and the subgroup GL_{n-1} embedded as
/// g -> diag(g, 1).
struct ParabolicChain {
  TablePtr G;
  TablePtr P;
  TablePtr U;
  TablePtr L;
  TablePtr GLm;       // GL_{n-1} embedded in G
  TablePtr GLmU;      // GL_{n-1} U
  TablePtr lower;     // standalone GL_{n-1}(F_p), ids aligned with GLm
  std::vector<ElemId> levi_part;  // P id -> L id (x = l u)
  std::vector<ElemId> unipotent_part;  // P id -> U id
  std::vector<ElemId> glmu_to_glm;     // GLmU id -> GLm id
};

/// `lower`, when given, must be a table built by build_gl(n - 1, p); it is
/// used as the standalone GL_{n-1} so that chains of several sizes share it.
ParabolicChain parabolic_chain(const TablePtr& G, TablePtr lower = nullptr);

/// Borel subgroup (upper triangular) and the Weyl group of permutation
/// matrices; sign of each Weyl element as +1/-1 in the same id order.
TablePtr borel_subgroup(const TablePtr& G);
TablePtr weyl_subgroup(const TablePtr& G);
int permutation_sign(const Matrix& perm);

struct ConjClass {
  ElemId representative = 0;
  std::vector<ElemId> members;
  int element_order = 1;
  bool p_regular = true;
};

std::vector<ConjClass> conj_classes(const MonoidTable& G);
std::vector<ConjClass> p_regular_classes(const MonoidTable& G);

/// #{g in G : g s g^-1 in H}. H shares G's root. Full enumeration for small
/// G, class-size formula |C_G(s)| * |cl(s) n H| above kFullTableLimit.
std::uint64_t count_conjugators_into_subgroup(const MonoidTable& G, const MonoidTable& H, ElemId s);
std::uint64_t count_conjugators_enumerate(const MonoidTable& G, const MonoidTable& H, ElemId s);

/// dim Ker(m - 1) for a square matrix.
std::size_t fixed_space_dim(const Matrix& m);

}  // namespace deltafn
