#include "deltafn/rep.hpp"

#include <algorithm>
#include <random>

namespace deltafn {

Rep::Rep(TablePtr base, std::vector<Matrix> gen_images) : base_(std::move(base)), gens_(std::move(gen_images)) {
  if (!base_) throw DimensionError("Rep: null base");
  if (gens_.size() != base_->generators().size())
    throw DimensionError("Rep: expected " + std::to_string(base_->generators().size()) + " generator images, got " +
                         std::to_string(gens_.size()));
  if (gens_.empty()) throw DimensionError("Rep: use Rep::trivial for bases without generators");
  dim_ = gens_.front().rows();
  for (const auto& g : gens_) {
    if (!g.is_square() || g.rows() != dim_ || g.p() != base_->p())
      throw DimensionError("Rep: generator images must be square of equal size over F_p");
    if (base_->is_group() && !is_invertible(g)) throw AlgebraError("Rep: non-invertible image over a group");
  }
}

Rep Rep::trivial(TablePtr base, std::size_t copies) {
  Rep r;
  r.base_ = std::move(base);
  r.dim_ = copies;
  r.gens_.assign(r.base_->generators().size(), Matrix::identity(r.base_->p(), copies));
  return r;
}

Matrix Rep::act(ElemId id) const {
  Matrix m = Matrix::identity(p(), dim_);
  bool first = true;
  for (auto g : base_->word(id)) {
    if (first) {
      m = gens_[g];
      first = false;
    } else {
      m = m * gens_[g];
    }
  }
  return m;
}

std::vector<Matrix> Rep::all_actions() const {
  const std::size_t N = base_->size();
  std::vector<ElemId> order(N);
  for (std::size_t i = 0; i < N; ++i) order[i] = static_cast<ElemId>(i);
  std::ranges::stable_sort(order, {}, [&](ElemId x) { return base_->word(x).size(); });
  std::vector<Matrix> out(N);
  for (ElemId x : order) {
    const auto& w = base_->word(x);
    if (w.empty()) {
      out[static_cast<std::size_t>(x)] = Matrix::identity(p(), dim_);
      continue;
    }
    // The prefix word names an element reached earlier in the BFS.
    ElemId prefix = base_->identity();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) prefix = base_->mul(prefix, base_->generators()[w[i]]);
    out[static_cast<std::size_t>(x)] = out[static_cast<std::size_t>(prefix)] * gens_[w.back()];
  }
  return out;
}

bool Rep::check_relations(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(base_->size()) - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    ElemId a = pick(rng), b = pick(rng), c = pick(rng);
    if (act(a) * act(b) * act(c) != act(base_->mul(base_->mul(a, b), c))) return false;
  }
  return true;
}

bool same_base(const Rep& a, const Rep& b) { return a.base().get() == b.base().get(); }

static void require_same_base(const Rep& a, const Rep& b, const char* what) {
  if (!same_base(a, b)) throw DimensionError(std::string(what) + ": modules over different monoids");
}

Rep make_rep(const TablePtr& base, std::vector<Matrix> images, std::size_t dim) {
  if (base->generators().empty()) return Rep::trivial(base, dim);
  return Rep(base, std::move(images));
}

static Rep from_images(const TablePtr& base, std::vector<Matrix> images, std::size_t dim) {
  return make_rep(base, std::move(images), dim);
}

Rep tensor(const Rep& a, const Rep& b) {
  require_same_base(a, b, "tensor");
  std::vector<Matrix> imgs;
  for (std::size_t g = 0; g < a.gen_images().size(); ++g) imgs.push_back(kron(a.gen_images()[g], b.gen_images()[g]));
  return from_images(a.base(), std::move(imgs), a.dim() * b.dim());
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require_same_base(a, b, "direct_sum");
  std::vector<Matrix> imgs;
  for (std::size_t g = 0; g < a.gen_images().size(); ++g)
    imgs.push_back(direct_sum(a.gen_images()[g], b.gen_images()[g]));
  return from_images(a.base(), std::move(imgs), a.dim() + b.dim());
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw DimensionError("direct_sum: empty list");
  Rep out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

Rep contragredient(const Rep& a) {
  std::vector<Matrix> imgs;
  for (const auto& g : a.gen_images()) {
    if (!is_invertible(g)) throw AlgebraError("contragredient: non-invertible generator image");
    imgs.push_back(inverse(g).transpose());
  }
  return from_images(a.base(), std::move(imgs), a.dim());
}

Rep restrict(const Rep& a, const TablePtr& H) {
  auto emb = relative_embedding(*H, *a.base());
  std::vector<Matrix> imgs;
  for (ElemId g : H->generators()) imgs.push_back(a.act(emb[static_cast<std::size_t>(g)]));
  return from_images(H, std::move(imgs), a.dim());
}

Rep transport(const Rep& a, const TablePtr& target, const std::vector<ElemId>& to_source) {
  if (to_source.size() != target->size()) throw DimensionError("transport: map size mismatch");
  std::vector<Matrix> imgs;
  for (ElemId g : target->generators()) imgs.push_back(a.act(to_source[static_cast<std::size_t>(g)]));
  return from_images(target, std::move(imgs), a.dim());
}

Rep transport_aligned(const Rep& a, const TablePtr& target) {
  if (target->size() != a.base()->size()) throw DimensionError("transport_aligned: tables differ in size");
  std::vector<ElemId> ids(target->size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<ElemId>(i);
  return transport(a, target, ids);
}

CosetData right_cosets(const MonoidTable& H, const MonoidTable& G) {
  if (!G.is_group()) throw AlgebraError("right_cosets: " + G.name() + " is not a group");
  auto emb = relative_embedding(H, G);
  CosetData cd;
  cd.coset_of.assign(G.size(), -1);
  std::vector<ElemId> hgens;
  for (ElemId g : H.generators()) hgens.push_back(emb[static_cast<std::size_t>(g)]);
  for (ElemId x = 0; x < static_cast<ElemId>(G.size()); ++x) {
    if (cd.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int label = static_cast<int>(cd.reps.size());
    cd.reps.push_back(x);
    std::vector<ElemId> queue{x};
    cd.coset_of[static_cast<std::size_t>(x)] = label;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (ElemId h : hgens) {
        ElemId y = G.mul(h, queue[i]);
        if (cd.coset_of[static_cast<std::size_t>(y)] < 0) {
          cd.coset_of[static_cast<std::size_t>(y)] = label;
          queue.push_back(y);
        }
      }
    if (queue.size() != H.size()) throw AlgebraError("right_cosets: coset size mismatch");
  }
  return cd;
}

Rep induce(const Rep& a, const TablePtr& G) {
  const TablePtr& H = a.base();
  if (!H->is_group()) throw AlgebraError("induce: source is not a group");
  const auto cd = right_cosets(*H, *G);
  std::vector<ElemId> g_to_h(G->size(), -1);
  {
    auto emb = relative_embedding(*H, *G);
    for (std::size_t i = 0; i < emb.size(); ++i) g_to_h[static_cast<std::size_t>(emb[i])] = static_cast<ElemId>(i);
  }
  const std::size_t m = cd.reps.size();
  const std::size_t d = a.dim();
  std::vector<Matrix> imgs;
  for (ElemId gamma : G->generators()) {
    Matrix big(a.p(), m * d, m * d);
    for (std::size_t i = 0; i < m; ++i) {
      ElemId y = G->mul(cd.reps[i], gamma);
      const auto j = static_cast<std::size_t>(cd.coset_of[static_cast<std::size_t>(y)]);
      ElemId h = g_to_h[static_cast<std::size_t>(G->mul(y, G->inverse(cd.reps[j])))];
      if (h < 0) throw AlgebraError("induce: coset arithmetic left the subgroup");
      Matrix block = a.act(h);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) big.set(i * d + r, j * d + c, block(r, c));
    }
    imgs.push_back(std::move(big));
  }
  return from_images(G, std::move(imgs), m * d);
}

Rep inflate(const Rep& a, const TablePtr& target, const std::vector<ElemId>& projection) {
  if (projection.size() != target->size()) throw AlgebraError("inflate: quotient data missing or wrong size");
  std::vector<Matrix> imgs;
  for (ElemId g : target->generators()) imgs.push_back(a.act(projection[static_cast<std::size_t>(g)]));
  return from_images(target, std::move(imgs), a.dim());
}

namespace {

// Quotient by the row space of `relations`: keep non-pivot coordinates.
struct QuotientMap {
  RrefResult rr;
  std::vector<std::size_t> kept;

  QuotientMap(const Matrix& relations, std::size_t dim) : rr(relations.rows() ? rref(relations) : RrefResult{}) {
    std::vector<bool> piv(dim, false);
    for (std::size_t i = 0; i < rr.rank; ++i) piv[rr.pivots[i]] = true;
    for (std::size_t c = 0; c < dim; ++c)
      if (!piv[c]) kept.push_back(c);
  }

  std::vector<std::uint8_t> project(std::span<const std::uint8_t> v, int p) const {
    std::vector<std::uint8_t> tmp(v.begin(), v.end());
    for (std::size_t i = 0; i < rr.rank; ++i) {
      const auto c = tmp[rr.pivots[i]];
      if (c) axpy(tmp, rr.reduced.row(i), p - c, p);
    }
    std::vector<std::uint8_t> out(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) out[k] = tmp[kept[k]];
    return out;
  }

  Matrix matrix(std::size_t dim, int p) const {
    Matrix pm(p, dim, kept.size());
    std::vector<std::uint8_t> e(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      e[i] = 1;
      auto r = project(e, p);
      std::ranges::copy(r, pm.row(i).begin());
      e[i] = 0;
    }
    return pm;
  }

  Matrix induced(const Matrix& action, int p) const {
    Matrix out(p, kept.size(), kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      auto r = project(action.row(kept[k]), p);
      std::ranges::copy(r, out.row(k).begin());
    }
    return out;
  }
};

}  // namespace

Coinvariants coinvariants(const Rep& a, const TablePtr& U, const TablePtr& acting) {
  const TablePtr& base = a.base();
  auto u_emb = relative_embedding(*U, *base);
  auto h_emb = relative_embedding(*acting, *base);
  // acting must normalise U: h^-1 u h in U for generators.
  if (base->is_group()) {
    for (ElemId h : acting->generators())
      for (ElemId u : U->generators()) {
        ElemId hb = h_emb[static_cast<std::size_t>(h)];
        ElemId c = base->mul(base->mul(base->inverse(hb), u_emb[static_cast<std::size_t>(u)]), hb);
        if (U->from_root(base->to_root(c)) < 0)
          throw AlgebraError("coinvariants: " + acting->name() + " does not normalise " + U->name());
      }
  }
  std::vector<Matrix> rel_blocks;
  const Matrix I = Matrix::identity(a.p(), a.dim());
  for (ElemId u : U->generators()) rel_blocks.push_back(a.act(u_emb[static_cast<std::size_t>(u)]) - I);
  Matrix relations = rel_blocks.empty() ? Matrix(a.p(), 0, a.dim()) : Matrix::vstack(rel_blocks);
  QuotientMap q(relations, a.dim());
  std::vector<Matrix> imgs;
  for (ElemId h : acting->generators()) imgs.push_back(q.induced(a.act(h_emb[static_cast<std::size_t>(h)]), a.p()));
  Coinvariants out{from_images(acting, std::move(imgs), q.kept.size()), q.matrix(a.dim(), a.p()), q.kept};
  return out;
}

// ---------------------------------------------------------------------------

HomSpace hom_space(const Rep& a, const Rep& b, bool want_basis) {
  require_same_base(a, b, "hom_space");
  const int p = a.p();
  const std::size_t r = a.dim();
  const std::size_t s = b.dim();
  HomSpace out;
  if (r == 0 || s == 0) return out;
  const auto& A = a.gen_images();
  const auto& B = b.gen_images();
  EchelonBasis eb(p, r, true);
  std::vector<std::vector<std::uint8_t>> vecs;
  std::vector<Matrix> img;  // img[j]: k x s, row t = image of vecs[j] under solution t
  std::size_t k = 0;
  std::vector<std::uint8_t> coeffs;

  auto shrink = [&](const Matrix& D) {
    if (D.is_zero()) return;
    Matrix X = left_kernel(D);
    for (auto& m : img) m = X * m;
    k = X.rows();
  };

  std::size_t processed = 0;
  while (!eb.full()) {
    // New cyclic generator: first unit vector outside the current span.
    std::vector<std::uint8_t> e(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      e[i] = 1;
      if (!eb.contains(e)) break;
      e[i] = 0;
    }
    eb.insert(e);
    vecs.push_back(e);
    for (auto& m : img) {
      Matrix padded(p, k + s, s);
      for (std::size_t i = 0; i < k; ++i) std::ranges::copy(m.row(i), padded.row(i).begin());
      m = std::move(padded);
    }
    Matrix root(p, k + s, s);
    for (std::size_t i = 0; i < s; ++i) root.set(k + i, i, 1);
    img.push_back(std::move(root));
    k += s;

    for (; processed < vecs.size(); ++processed) {
      for (std::size_t g = 0; g < A.size(); ++g) {
        auto v = vec_mul(vecs[processed], A[g]);
        Matrix iv = img[processed] * B[g];
        if (eb.express(v, coeffs)) {
          Matrix D = iv;
          for (std::size_t l = 0; l < coeffs.size(); ++l)
            if (coeffs[l]) D = D - img[l].scaled(coeffs[l]);
          shrink(D);
        } else {
          eb.insert(v);
          vecs.push_back(std::move(v));
          img.push_back(std::move(iv));
        }
      }
    }
  }
  out.dim = k;
  if (!want_basis || k == 0) return out;
  Matrix spin_basis(p, r, r);
  for (std::size_t j = 0; j < r; ++j) std::ranges::copy(vecs[j], spin_basis.row(j).begin());
  Matrix binv = inverse(spin_basis);
  for (std::size_t t = 0; t < k; ++t) {
    Matrix images(p, r, s);
    for (std::size_t j = 0; j < r; ++j) std::ranges::copy(img[j].row(t), images.row(j).begin());
    out.basis.push_back(binv * images);
  }
  return out;
}

std::size_t hom_dim(const Rep& a, const Rep& b) { return hom_space(a, b, false).dim; }

std::vector<Matrix> hom_space_direct(const Rep& a, const Rep& b) {
  require_same_base(a, b, "hom_space_direct");
  if (a.gen_images().empty()) {
    std::vector<std::pair<Matrix, Matrix>> pairs{{Matrix::identity(a.p(), a.dim()), Matrix::identity(a.p(), b.dim())}};
    return solve_all(pairs);
  }
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (std::size_t g = 0; g < a.gen_images().size(); ++g) pairs.emplace_back(a.gen_images()[g], b.gen_images()[g]);
  return solve_all(pairs);
}

bool is_homomorphism(const Rep& a, const Rep& b, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != b.dim()) return false;
  for (std::size_t g = 0; g < a.gen_images().size(); ++g)
    if (a.gen_images()[g] * f != f * b.gen_images()[g]) return false;
  return true;
}

Rep submodule(const Rep& a, const Matrix& W) {
  EchelonBasis eb(a.p(), a.dim(), true);
  for (std::size_t i = 0; i < W.rows(); ++i)
    if (!eb.insert(W.row(i))) throw AlgebraError("submodule: basis rows are dependent");
  std::vector<Matrix> imgs;
  std::vector<std::uint8_t> coeffs;
  for (const auto& g : a.gen_images()) {
    Matrix img = W * g;
    Matrix c(a.p(), W.rows(), W.rows());
    for (std::size_t i = 0; i < W.rows(); ++i) {
      if (!eb.express(img.row(i), coeffs)) throw AlgebraError("submodule: subspace is not invariant");
      std::ranges::copy(coeffs, c.row(i).begin());
    }
    imgs.push_back(std::move(c));
  }
  return from_images(a.base(), std::move(imgs), W.rows());
}

Rep quotient(const Rep& a, const Matrix& W) {
  QuotientMap q(W, a.dim());
  std::vector<Matrix> imgs;
  for (const auto& g : a.gen_images()) imgs.push_back(q.induced(g, a.p()));
  return from_images(a.base(), std::move(imgs), q.kept.size());
}

static Matrix spin_with(const std::vector<Matrix>& gens, int p, std::size_t dim, const Matrix& seeds) {
  EchelonBasis eb(p, dim);
  std::vector<std::vector<std::uint8_t>> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i)
    if (eb.insert(seeds.row(i))) queue.emplace_back(seeds.row(i).begin(), seeds.row(i).end());
  for (std::size_t i = 0; i < queue.size() && !eb.full(); ++i)
    for (const auto& g : gens) {
      auto v = vec_mul(queue[i], g);
      if (eb.insert(v)) queue.push_back(std::move(v));
    }
  return eb.echelon_rows();
}

Matrix spin(const Rep& a, const Matrix& seeds) { return spin_with(a.gen_images(), a.p(), a.dim(), seeds); }

Matrix spin_transposed(const Rep& a, const Matrix& seeds) {
  std::vector<Matrix> t;
  for (const auto& g : a.gen_images()) t.push_back(g.transpose());
  return spin_with(t, a.p(), a.dim(), seeds);
}

Rep perm_module(const TablePtr& base, std::size_t points,
                const std::function<std::size_t(std::size_t, std::size_t)>& image) {
  std::vector<Matrix> imgs;
  for (std::size_t g = 0; g < base->generators().size(); ++g) {
    Matrix m(base->p(), points, points);
    for (std::size_t i = 0; i < points; ++i) {
      std::size_t j = image(i, g);
      if (j >= points) throw AlgebraError("perm_module: action not closed");
      m.set(i, j, 1);
    }
    imgs.push_back(std::move(m));
  }
  return from_images(base, std::move(imgs), points);
}

Rep regular(const TablePtr& base) {
  return perm_module(base, base->size(), [&](std::size_t x, std::size_t g) {
    return static_cast<std::size_t>(base->mul(static_cast<ElemId>(x), base->generators()[g]));
  });
}

std::vector<std::vector<std::uint8_t>> enumerate_vectors(int n, int p) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::size_t>(p);
  std::vector<std::vector<std::uint8_t>> out(count, std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t r = k;
    for (int i = n - 1; i >= 0; --i) {
      out[k][static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r % static_cast<std::size_t>(p));
      r /= static_cast<std::size_t>(p);
    }
  }
  return out;
}

std::size_t vector_index(std::span<const std::uint8_t> v, int p) {
  std::size_t k = 0;
  for (auto x : v) k = k * static_cast<std::size_t>(p) + x;
  return k;
}

Rep function_module(const TablePtr& base) {
  const int n = base->n();
  const int p = base->p();
  auto vs = enumerate_vectors(n, p);
  std::vector<Matrix> imgs;
  for (ElemId g : base->generators()) {
    const Matrix& phi = base->element(g);
    Matrix m(p, vs.size(), vs.size());
    // delta_w . phi = sum over v with phi v = w of delta_v.
    for (std::size_t v = 0; v < vs.size(); ++v) {
      std::vector<std::uint8_t> w(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += phi(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * vs[v][static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s % p);
      }
      m.set(vector_index(w, p), v, 1);
    }
    imgs.push_back(std::move(m));
  }
  return from_images(base, std::move(imgs), vs.size());
}

Rep natural_module(const TablePtr& base) {
  std::vector<Matrix> imgs;
  for (ElemId g : base->generators()) imgs.push_back(inverse(base->element(g)).transpose());
  return from_images(base, std::move(imgs), static_cast<std::size_t>(base->n()));
}

Rep dual_natural_module(const TablePtr& base) {
  std::vector<Matrix> imgs;
  for (ElemId g : base->generators()) imgs.push_back(base->element(g));
  return from_images(base, std::move(imgs), static_cast<std::size_t>(base->n()));
}

}  // namespace deltafn
