#include "deltafn/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace deltafn {

std::string to_string(MonoidKind k) {
  switch (k) {
    case MonoidKind::FullMonoid: return "FullMonoid";
    case MonoidKind::GeneralLinear: return "GeneralLinear";
    case MonoidKind::Parabolic: return "Parabolic";
    case MonoidKind::Unipotent: return "Unipotent";
    case MonoidKind::Levi: return "Levi";
    case MonoidKind::EmbeddedGL: return "EmbeddedGL";
    case MonoidKind::EmbeddedGLU: return "EmbeddedGLU";
    case MonoidKind::Borel: return "Borel";
    case MonoidKind::Weyl: return "Weyl";
    case MonoidKind::GL1: return "GL1";
    case MonoidKind::BlockLevi: return "BlockLevi";
    case MonoidKind::Subgroup: return "Subgroup";
  }
  return "?";
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

constexpr std::uint64_t kDenseKeyLimit = 1ULL << 22;

}  // namespace

std::uint64_t gl_order(int n, int p) {
  std::uint64_t pn = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n));
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= pn - ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(i));
  return r;
}

std::uint64_t MonoidTable::key_of(const Matrix& m) const {
  std::uint64_t k = 0;
  for (auto v : m.data()) k = k * static_cast<std::uint64_t>(p_) + v;
  return k;
}

std::optional<ElemId> MonoidTable::find(const Matrix& m) const {
  if (m.rows() != static_cast<std::size_t>(n_) || m.cols() != static_cast<std::size_t>(n_) || m.p() != p_)
    return std::nullopt;
  if (root_) {
    auto r = root_->find(m);
    if (!r) return std::nullopt;
    ElemId local = from_root(*r);
    if (local < 0) return std::nullopt;
    return local;
  }
  const std::uint64_t k = key_of(m);
  if (!key_index_.empty()) {
    if (k >= key_index_.size()) return std::nullopt;
    ElemId id = key_index_[k];
    if (id < 0) return std::nullopt;
    return id;
  }
  auto it = key_map_.find(k);
  if (it == key_map_.end()) return std::nullopt;
  return it->second;
}

ElemId MonoidTable::id_of(const Matrix& m) const {
  auto r = find(m);
  if (!r) throw AlgebraError("MonoidTable::id_of: matrix not in " + name_);
  return *r;
}

ElemId MonoidTable::mul_by_matrices(ElemId a, ElemId b) const {
  const auto& x = elements_[static_cast<std::size_t>(a)].data();
  const auto& y = elements_[static_cast<std::size_t>(b)].data();
  const int n = n_;
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int l = 0; l < n; ++l) s += x[static_cast<std::size_t>(i * n + l)] * y[static_cast<std::size_t>(l * n + j)];
      k = k * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(s % p_);
    }
  if (!key_index_.empty()) return key_index_[k];
  auto it = key_map_.find(k);
  return it == key_map_.end() ? -1 : it->second;
}

ElemId MonoidTable::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  if (root_) return from_root(root_->mul(to_root(a), to_root(b)));
  return mul_by_matrices(a, b);
}

ElemId MonoidTable::inverse(ElemId a) const {
  if (!is_group_) throw AlgebraError("MonoidTable::inverse: " + name_ + " is not a group");
  return inverse_[static_cast<std::size_t>(a)];
}

int MonoidTable::element_order(ElemId id) const {
  if (!is_group_) throw AlgebraError("element_order: not a group");
  int k = 1;
  ElemId x = id;
  while (x != identity_) {
    x = mul(x, id);
    ++k;
  }
  return k;
}

std::shared_ptr<const MonoidTable> MonoidTable::root_ptr() const {
  return root_ ? root_ : shared_from_this();
}

void MonoidTable::finish_build() {
  const std::size_t N = elements_.size();
  if (!root_) {
    const std::uint64_t space = ipow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(n_ * n_));
    if (space <= kDenseKeyLimit) {
      key_index_.assign(space, -1);
      for (std::size_t i = 0; i < N; ++i) key_index_[keys_[i]] = static_cast<ElemId>(i);
    } else {
      for (std::size_t i = 0; i < N; ++i) key_map_[keys_[i]] = static_cast<ElemId>(i);
    }
  }
  identity_ = id_of(Matrix::identity(p_, static_cast<std::size_t>(n_)));
  if (N <= kFullTableLimit) {
    std::vector<ElemId> t(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        t[a * N + b] = root_ ? from_root(root_->mul(to_root(static_cast<ElemId>(a)), to_root(static_cast<ElemId>(b))))
                             : mul_by_matrices(static_cast<ElemId>(a), static_cast<ElemId>(b));
    table_ = std::move(t);
  }
  is_group_ = std::ranges::all_of(elements_, [](const Matrix& m) { return is_invertible(m); });
  if (is_group_) {
    inverse_.resize(N);
    for (std::size_t i = 0; i < N; ++i) inverse_[i] = id_of(deltafn::inverse(elements_[i]));
  }
  // Breadth-first generator words.
  words_.assign(N, {});
  std::vector<bool> seen(N, false);
  std::deque<ElemId> queue{identity_};
  seen[static_cast<std::size_t>(identity_)] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    ElemId x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      ElemId y = mul(x, generators_[g]);
      if (y < 0) throw AlgebraError("MonoidTable: table not closed under multiplication (" + name_ + ")");
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      ++reached;
      words_[static_cast<std::size_t>(y)] = words_[static_cast<std::size_t>(x)];
      words_[static_cast<std::size_t>(y)].push_back(static_cast<std::uint8_t>(g));
      queue.push_back(y);
    }
  }
  if (reached != N) throw AlgebraError("MonoidTable: generators do not generate " + name_);
}

TablePtr MonoidTable::make_root(int p, int n, MonoidKind kind, std::string name, std::vector<Matrix> elements,
                                const std::vector<Matrix>& generators) {
  std::shared_ptr<MonoidTable> t(new MonoidTable());
  t->p_ = p;
  t->n_ = n;
  t->kind_ = kind;
  t->name_ = std::move(name);
  std::vector<std::pair<std::uint64_t, Matrix>> keyed;
  keyed.reserve(elements.size());
  for (auto& m : elements) keyed.emplace_back(t->key_of(m), std::move(m));
  std::ranges::sort(keyed, {}, &std::pair<std::uint64_t, Matrix>::first);
  for (auto& [k, m] : keyed) {
    t->keys_.push_back(k);
    t->elements_.push_back(std::move(m));
  }
  // Ids of generators need the key index, which finish_build sets up; do it
  // in two steps.
  const std::uint64_t space = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n * n));
  if (space <= kDenseKeyLimit) {
    t->key_index_.assign(space, -1);
    for (std::size_t i = 0; i < t->keys_.size(); ++i) t->key_index_[t->keys_[i]] = static_cast<ElemId>(i);
  }
  for (const auto& g : generators) {
    auto id = t->find(g);
    if (!id) {
      t->key_map_.clear();
      for (std::size_t i = 0; i < t->keys_.size(); ++i) t->key_map_[t->keys_[i]] = static_cast<ElemId>(i);
      id = t->find(g);
    }
    if (!id) throw AlgebraError("make_root: generator not among elements");
    t->generators_.push_back(*id);
  }
  t->key_index_.clear();
  t->key_map_.clear();
  t->finish_build();
  return t;
}

std::vector<ElemId> closure_in_root(const MonoidTable& root, const std::vector<ElemId>& gens) {
  std::vector<bool> seen(root.size(), false);
  std::vector<ElemId> out{root.identity()};
  seen[static_cast<std::size_t>(root.identity())] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElemId g : gens) {
      ElemId y = root.mul(out[i], g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  std::ranges::sort(out);
  return out;
}

namespace {

TablePtr make_sub(const TablePtr& root, std::vector<ElemId> ids, std::vector<ElemId> gens_in_root, MonoidKind kind,
                  std::string name);

}  // namespace

TablePtr MonoidTable::generated_by(TablePtr root, const std::vector<ElemId>& gens_in_root, MonoidKind kind,
                                   std::string name) {
  if (!root->is_root()) throw AlgebraError("generated_by: expected a root table");
  auto ids = closure_in_root(*root, gens_in_root);
  return make_sub(root, std::move(ids), gens_in_root, kind, std::move(name));
}

TablePtr MonoidTable::from_element_set(TablePtr root, const std::vector<ElemId>& ids_in_root, MonoidKind kind,
                                       std::string name) {
  if (!root->is_root()) throw AlgebraError("from_element_set: expected a root table");
  std::vector<ElemId> ids = ids_in_root;
  std::ranges::sort(ids);
  std::vector<bool> in(root->size(), false);
  for (auto i : ids) in[static_cast<std::size_t>(i)] = true;
  std::vector<ElemId> gens;
  std::vector<bool> covered(root->size(), false);
  covered[static_cast<std::size_t>(root->identity())] = true;
  for (ElemId cand : ids) {
    if (covered[static_cast<std::size_t>(cand)]) continue;
    gens.push_back(cand);
    for (ElemId x : closure_in_root(*root, gens)) {
      if (!in[static_cast<std::size_t>(x)]) throw AlgebraError("from_element_set: set is not closed (" + name + ")");
      covered[static_cast<std::size_t>(x)] = true;
    }
  }
  return make_sub(root, std::move(ids), std::move(gens), kind, std::move(name));
}

struct SubTableBuilder {
  static TablePtr build(const TablePtr& root, std::vector<ElemId> ids, std::vector<ElemId> gens_in_root,
                        MonoidKind kind, std::string name) {
    std::shared_ptr<MonoidTable> t(new MonoidTable());
    t->p_ = root->p();
    t->n_ = root->n();
    t->kind_ = kind;
    t->name_ = std::move(name);
    t->root_ = root;
    t->to_root_ = ids;
    t->from_root_.assign(root->size(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      t->from_root_[static_cast<std::size_t>(ids[i])] = static_cast<ElemId>(i);
      t->elements_.push_back(root->element(ids[i]));
      t->keys_.push_back(root->key_of(root->element(ids[i])));
    }
    for (ElemId g : gens_in_root) {
      ElemId local = t->from_root_[static_cast<std::size_t>(g)];
      if (local < 0) throw AlgebraError("sub-table: generator outside element set");
      t->generators_.push_back(local);
    }
    t->finish_build();
    return t;
  }
};

namespace {

TablePtr make_sub(const TablePtr& root, std::vector<ElemId> ids, std::vector<ElemId> gens_in_root, MonoidKind kind,
                  std::string name) {
  return SubTableBuilder::build(root, std::move(ids), std::move(gens_in_root), kind, std::move(name));
}

std::string gl_name(int n, int p) { return "GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")"; }

std::vector<Matrix> all_matrices(int n, int p) {
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n * n));
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    Matrix m(p, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::uint64_t r = k;
    for (int idx = n * n - 1; idx >= 0; --idx) {
      m.set(static_cast<std::size_t>(idx / n), static_cast<std::size_t>(idx % n), static_cast<long long>(r % static_cast<std::uint64_t>(p)));
      r /= static_cast<std::uint64_t>(p);
    }
    out.push_back(std::move(m));
  }
  return out;
}

int primitive_root(int p) {
  for (int g = 1; g < p; ++g) {
    int x = 1, ord = 0;
    do {
      x = (x * g) % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

std::vector<Matrix> standard_gl_generators(int n, int p, const std::vector<Matrix>& group) {
  const auto N = static_cast<std::size_t>(n);
  if (n == 0) return {};
  if (n == 1) {
    if (p == 2) return {};
    Matrix d(p, 1, 1);
    d.set(0, 0, primitive_root(p));
    return {d};
  }
  Matrix t = Matrix::identity(p, N);
  t.set(0, 1, 1);
  Matrix c(p, N, N);
  for (std::size_t i = 0; i < N; ++i) c.set((i + 1) % N, i, 1);
  Matrix d = Matrix::identity(p, N);
  d.set(0, 0, primitive_root(p));
  std::vector<Matrix> cands{t, c, d, t * c, c * t, d * c, c * d, d * t, d * t * c, t * d * c};
  auto key = [p](const Matrix& m) {
    std::uint64_t k = 0;
    for (auto v : m.data()) k = k * static_cast<std::uint64_t>(p) + v;
    return k;
  };
  auto generates = [&](const std::vector<Matrix>& gens) {
    std::unordered_map<std::uint64_t, bool> seen;
    std::vector<Matrix> queue{Matrix::identity(p, N)};
    seen[key(queue.front())] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        Matrix y = queue[i] * g;
        if (seen.emplace(key(y), true).second) queue.push_back(std::move(y));
      }
    return queue.size() == group.size();
  };
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (generates({cands[i], cands[j]})) return {cands[i], cands[j]};
  return {t, c, d};
}

}  // namespace

TablePtr build_gl(int n, int p) {
  if (!(p == 2 || p == 3) || n < 0 || n > 4 || (n == 4 && p != 2))
    throw DimensionError("build_gl: unsupported (n, p) = (" + std::to_string(n) + ", " + std::to_string(p) + ")");
  std::vector<Matrix> elems;
  for (auto& m : all_matrices(n, p))
    if (is_invertible(m)) elems.push_back(std::move(m));
  auto gens = standard_gl_generators(n, p, elems);
  return MonoidTable::make_root(p, n, n == 1 ? MonoidKind::GL1 : MonoidKind::GeneralLinear, gl_name(n, p),
                                std::move(elems), gens);
}

TablePtr build_m(int n, int p) {
  if (!(p == 2 || p == 3) || n < 0 || n > 3)
    throw DimensionError("build_m: unsupported (n, p) = (" + std::to_string(n) + ", " + std::to_string(p) + ")");
  auto elems = all_matrices(n, p);
  std::vector<Matrix> gl;
  for (const auto& m : elems)
    if (is_invertible(m)) gl.push_back(m);
  auto gens = standard_gl_generators(n, p, gl);
  if (n > 0) {
    Matrix e = Matrix::identity(p, static_cast<std::size_t>(n));
    e.set(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1), 0);
    gens.push_back(e);
  }
  return MonoidTable::make_root(p, n, MonoidKind::FullMonoid,
                                "M_" + std::to_string(n) + "(F_" + std::to_string(p) + ")", std::move(elems), gens);
}

bool same_root(const MonoidTable& a, const MonoidTable& b) { return &a.root() == &b.root(); }

std::vector<ElemId> relative_embedding(const MonoidTable& sub, const MonoidTable& super) {
  if (!same_root(sub, super)) throw AlgebraError("relative_embedding: tables do not share a root");
  std::vector<ElemId> out(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    ElemId r = sub.to_root(static_cast<ElemId>(i));
    ElemId l = super.from_root(r);
    if (l < 0) throw AlgebraError(sub.name() + " is not contained in " + super.name());
    out[i] = l;
  }
  return out;
}

ParabolicChain parabolic_chain(const TablePtr& G, TablePtr lower) {
  if (!G->is_root() || !G->is_group() || G->kind() == MonoidKind::FullMonoid)
    throw AlgebraError("parabolic_chain: expects a root general linear group");
  const int n = G->n();
  const int p = G->p();
  if (n < 1) throw DimensionError("parabolic_chain: n must be at least 1");
  const auto N = static_cast<std::size_t>(n);
  ParabolicChain ch;
  ch.G = G;
  if (lower && (!lower->is_root() || lower->n() != n - 1 || lower->p() != p || lower->size() != gl_order(n - 1, p)))
    throw AlgebraError("parabolic_chain: lower table is not GL_{n-1}(F_p)");
  ch.lower = lower ? std::move(lower) : build_gl(n - 1, p);
  auto embed = [&](const Matrix& g) {
    Matrix m = Matrix::identity(p, N);
    for (std::size_t i = 0; i + 1 < N; ++i)
      for (std::size_t j = 0; j + 1 < N; ++j) m.set(i, j, g(i, j));
    return m;
  };
  std::vector<ElemId> glm_gens;
  for (ElemId g : ch.lower->generators()) glm_gens.push_back(G->id_of(embed(ch.lower->element(g))));
  std::vector<ElemId> u_gens;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    Matrix m = Matrix::identity(p, N);
    m.set(i, N - 1, 1);
    u_gens.push_back(G->id_of(m));
  }
  std::vector<ElemId> torus_gens;
  if (p > 2) {
    Matrix d = Matrix::identity(p, N);
    d.set(N - 1, N - 1, p == 3 ? 2 : primitive_root(p));
    torus_gens.push_back(G->id_of(d));
  }
  auto cat = [](std::initializer_list<const std::vector<ElemId>*> parts) {
    std::vector<ElemId> out;
    for (auto* v : parts) out.insert(out.end(), v->begin(), v->end());
    return out;
  };
  ch.GLm = MonoidTable::generated_by(G, glm_gens, MonoidKind::EmbeddedGL, "GL_" + std::to_string(n - 1) + " in " + G->name());
  ch.U = MonoidTable::generated_by(G, u_gens, MonoidKind::Unipotent, "U in " + G->name());
  ch.L = MonoidTable::generated_by(G, cat({&glm_gens, &torus_gens}), MonoidKind::Levi, "L in " + G->name());
  ch.P = MonoidTable::generated_by(G, cat({&glm_gens, &torus_gens, &u_gens}), MonoidKind::Parabolic, "P in " + G->name());
  ch.GLmU = MonoidTable::generated_by(G, cat({&glm_gens, &u_gens}), MonoidKind::EmbeddedGLU,
                                      "GL_" + std::to_string(n - 1) + "U in " + G->name());
  if (ch.GLm->size() != ch.lower->size()) throw AlgebraError("parabolic_chain: embedding of GL_{n-1} failed");

  // Levi decomposition: x = [[A, b], [0, c]] = diag(A, c) * [[I, A^-1 b], [0, 1]].
  ch.levi_part.resize(ch.P->size());
  ch.unipotent_part.resize(ch.P->size());
  for (std::size_t i = 0; i < ch.P->size(); ++i) {
    const Matrix& x = ch.P->element(static_cast<ElemId>(i));
    Matrix l = x;
    for (std::size_t r = 0; r + 1 < N; ++r) l.set(r, N - 1, 0);
    ElemId lid = ch.L->id_of(l);
    ElemId uid = ch.U->id_of(deltafn::inverse(l) * x);
    ch.levi_part[i] = lid;
    ch.unipotent_part[i] = uid;
  }
  ch.glmu_to_glm.resize(ch.GLmU->size());
  for (std::size_t i = 0; i < ch.GLmU->size(); ++i) {
    Matrix l = ch.GLmU->element(static_cast<ElemId>(i));
    for (std::size_t r = 0; r + 1 < N; ++r) l.set(r, N - 1, 0);
    ch.glmu_to_glm[i] = ch.GLm->id_of(l);
  }
  return ch;
}

TablePtr borel_subgroup(const TablePtr& G) {
  return MonoidTable::filtered(
      G,
      [](const Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (m(i, j)) return false;
        return true;
      },
      MonoidKind::Borel, "B in " + G->name());
}

TablePtr weyl_subgroup(const TablePtr& G) {
  return MonoidTable::filtered(
      G,
      [](const Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          int ones = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) > 1) return false;
            ones += m(i, j);
          }
          if (ones != 1) return false;
        }
        return true;
      },
      MonoidKind::Weyl, "W in " + G->name());
}

int permutation_sign(const Matrix& perm) {
  const std::size_t n = perm.rows();
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (perm(i, j)) img[i] = j;
  int sign = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<ConjClass> conj_classes(const MonoidTable& G) {
  if (!G.is_group()) throw AlgebraError("conj_classes: " + G.name() + " is not a group");
  std::vector<int> cls(G.size(), -1);
  std::vector<ConjClass> out;
  for (ElemId x = 0; x < static_cast<ElemId>(G.size()); ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    ConjClass c;
    c.representative = x;
    c.members.push_back(x);
    cls[static_cast<std::size_t>(x)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (ElemId g : G.generators()) {
        ElemId y = G.mul(G.mul(G.inverse(g), c.members[i]), g);
        if (cls[static_cast<std::size_t>(y)] >= 0) continue;
        cls[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
        c.members.push_back(y);
      }
    }
    std::ranges::sort(c.members);
    c.element_order = G.element_order(x);
    c.p_regular = std::gcd(c.element_order, G.p()) == 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ConjClass> p_regular_classes(const MonoidTable& G) {
  auto all = conj_classes(G);
  std::vector<ConjClass> out;
  for (auto& c : all)
    if (c.p_regular) out.push_back(std::move(c));
  return out;
}

std::uint64_t count_conjugators_enumerate(const MonoidTable& G, const MonoidTable& H, ElemId s) {
  if (!G.is_group()) throw AlgebraError("count_conjugators: not a group");
  std::uint64_t count = 0;
  for (ElemId g = 0; g < static_cast<ElemId>(G.size()); ++g) {
    ElemId c = G.mul(G.mul(g, s), G.inverse(g));
    if (H.from_root(G.to_root(c)) >= 0) ++count;
  }
  return count;
}

std::uint64_t count_conjugators_into_subgroup(const MonoidTable& G, const MonoidTable& H, ElemId s) {
  if (!same_root(G, H)) throw AlgebraError("count_conjugators: subgroup does not share the group's root");
  if (G.size() <= kFullTableLimit) return count_conjugators_enumerate(G, H, s);
  // Each h in cl(s) n H is reached by exactly |C_G(s)| = |G| / |cl(s)| elements g.
  std::vector<ElemId> cl{s};
  std::vector<bool> seen(G.size(), false);
  seen[static_cast<std::size_t>(s)] = true;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (ElemId g : G.generators()) {
      ElemId y = G.mul(G.mul(G.inverse(g), cl[i]), g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        cl.push_back(y);
      }
    }
  std::uint64_t in_h = 0;
  for (ElemId y : cl)
    if (H.from_root(G.to_root(y)) >= 0) ++in_h;
  return G.size() / cl.size() * in_h;
}

std::size_t fixed_space_dim(const Matrix& m) {
  return m.rows() - rank(m - Matrix::identity(m.p(), m.rows()));
}

}  // namespace deltafn
