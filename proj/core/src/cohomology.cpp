#include "deltafn/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace deltafn {

namespace {

using Element = std::map<Monomial, int>;

void add_term(Element& e, const Monomial& m, int c, int p) {
  c %= p;
  if (c < 0) c += p;
  if (!c) return;
  int& slot = e[m];
  slot = (slot + c) % p;
  if (!slot) e.erase(m);
}

// Sign of moving generator j from the far right of the ordered product
// `mask` into its sorted position.
int wedge_right_sign(std::uint32_t mask, int j) {
  const std::uint32_t above = mask & ~((2u << j) - 1u);
  return (std::popcount(above) % 2) ? -1 : 1;
}

int wedge_left_sign(std::uint32_t mask, int j) {
  const std::uint32_t below = mask & ((1u << j) - 1u);
  return (std::popcount(below) % 2) ? -1 : 1;
}

void enumerate_exps(int vars, int total, int cap, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out) {
  if (pos == vars) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int e = std::min(total, cap); e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate_exps(vars, total - e, cap, cur, pos + 1, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

int binom_mod2(int a, int b) { return (b & ~a) == 0 ? 1 : 0; }

}  // namespace

MonomialBasis::MonomialBasis(int vars, int degree, int p, MonomialKind kind)
    : vars_(vars), degree_(degree), p_(p), kind_(kind) {
  if (vars < 0 || vars > 16) throw DimensionError("MonomialBasis: unsupported number of variables");
  if (degree < 0) return;
  std::vector<int> cur(static_cast<std::size_t>(vars), 0);
  std::vector<std::vector<int>> exps;
  if (polynomial()) {
    const int cap = kind == MonomialKind::Truncated ? p - 1 : degree;
    enumerate_exps(vars, degree, cap, cur, 0, exps);
    for (auto& e : exps) monos_.push_back({0, e});
  } else {
    for (std::uint32_t mask = 0; mask < (1u << vars); ++mask) {
      const int a = std::popcount(mask);
      if (a > degree || (degree - a) % 2) continue;
      exps.clear();
      enumerate_exps(vars, (degree - a) / 2, (degree - a) / 2, cur, 0, exps);
      for (auto& e : exps) monos_.push_back({mask, e});
    }
  }
  std::ranges::sort(monos_);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = std::ranges::lower_bound(monos_, m);
  if (it == monos_.end() || *it != m) throw DimensionError("MonomialBasis: monomial not in basis");
  return static_cast<std::size_t>(it - monos_.begin());
}

std::string MonomialBasis::label(std::size_t i) const {
  const Monomial& m = monos_.at(i);
  std::ostringstream os;
  bool any = false;
  for (int j = 0; j < vars_; ++j)
    if (m.mask >> j & 1u) {
      os << (any ? "*" : "") << "t" << j + 1;
      any = true;
    }
  for (int j = 0; j < vars_; ++j) {
    const int e = m.exps[static_cast<std::size_t>(j)];
    if (!e) continue;
    os << (any ? "*" : "") << (polynomial() ? "t" : "bt") << j + 1;
    if (e > 1) os << "^" << e;
    any = true;
  }
  return any ? os.str() : "1";
}

std::size_t hstar_dim(int n, int d, int p) { return MonomialBasis(n, d, p).size(); }

Matrix substitution_matrix(const Matrix& S, const MonomialBasis& src, const MonomialBasis& dst) {
  const int p = src.p();
  if (static_cast<int>(S.rows()) != src.vars() || static_cast<int>(S.cols()) != dst.vars())
    throw DimensionError("substitution_matrix: shape mismatch");
  const auto m = static_cast<std::size_t>(dst.vars());
  const bool truncated = dst.kind() == MonomialKind::Truncated;
  Matrix out(p, src.size(), dst.size());
  for (std::size_t r = 0; r < src.size(); ++r) {
    const Monomial& mono = src.at(r);
    Element cur;
    cur[Monomial{0, std::vector<int>(m, 0)}] = 1;
    // exterior generators in increasing order, each appended on the right
    for (int i = 0; i < src.vars(); ++i) {
      if (!(mono.mask >> i & 1u)) continue;
      Element next;
      for (const auto& [mon, c] : cur)
        for (std::size_t j = 0; j < m; ++j) {
          const int s = S(static_cast<std::size_t>(i), j);
          if (!s || (mon.mask >> j & 1u)) continue;
          Monomial nm = mon;
          nm.mask |= 1u << j;
          add_term(next, nm, c * s * wedge_right_sign(mon.mask, static_cast<int>(j)), p);
        }
      cur = std::move(next);
    }
    for (int i = 0; i < src.vars(); ++i) {
      for (int e = 0; e < mono.exps[static_cast<std::size_t>(i)]; ++e) {
        Element next;
        for (const auto& [mon, c] : cur)
          for (std::size_t j = 0; j < m; ++j) {
            const int s = S(static_cast<std::size_t>(i), j);
            if (!s) continue;
            Monomial nm = mon;
            if (++nm.exps[j] >= p && truncated) continue;
            add_term(next, nm, c * s, p);
          }
        cur = std::move(next);
      }
    }
    for (const auto& [mon, c] : cur) out.set(r, dst.index_of(mon), c);
  }
  return out;
}

Matrix multiply_by_form(std::span<const std::uint8_t> form, const MonomialBasis& src, const MonomialBasis& dst) {
  const int p = src.p();
  Matrix out(p, src.size(), dst.size());
  for (std::size_t r = 0; r < src.size(); ++r) {
    const Monomial& mono = src.at(r);
    for (std::size_t j = 0; j < form.size(); ++j) {
      if (!form[j]) continue;
      Monomial nm = mono;
      int sign = 1;
      if (src.polynomial()) {
        if (++nm.exps[j] >= p && src.kind() == MonomialKind::Truncated) continue;
      } else {
        if (mono.mask >> j & 1u) continue;
        sign = wedge_left_sign(mono.mask, static_cast<int>(j));
        nm.mask |= 1u << j;
      }
      const std::size_t c = dst.index_of(nm);
      out.set(r, c, out(r, c) + sign * form[j]);
    }
  }
  return out;
}

Matrix multiply_by_bockstein_form(std::span<const std::uint8_t> form, const MonomialBasis& src,
                                  const MonomialBasis& dst) {
  if (src.polynomial()) throw DimensionError("multiply_by_bockstein_form: odd p only");
  const int p = src.p();
  Matrix out(p, src.size(), dst.size());
  for (std::size_t r = 0; r < src.size(); ++r)
    for (std::size_t j = 0; j < form.size(); ++j) {
      if (!form[j]) continue;
      Monomial nm = src.at(r);
      ++nm.exps[j];
      const std::size_t c = dst.index_of(nm);
      out.set(r, c, out(r, c) + form[j]);
    }
  return out;
}

std::vector<std::size_t> GradedRep::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : degrees) out.push_back(r.dim());
  return out;
}

GradedRep build_hstar(const TablePtr& base, int D) {
  GradedRep g{base, {}, "H*V_" + std::to_string(base->n())};
  for (int d = 0; d <= D; ++d) {
    MonomialBasis B(base->n(), d, base->p());
    std::vector<Matrix> imgs;
    for (ElemId x : base->generators()) imgs.push_back(substitution_matrix(base->element(x), B, B));
    g.degrees.push_back(make_rep(base, std::move(imgs), B.size()));
  }
  return g;
}

Rep build_J(const TablePtr& base) {
  Rep f = function_module(base);
  Matrix ones(base->p(), 1, f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) ones.set(0, i, 1);
  return quotient(f, ones);
}

std::vector<std::vector<std::uint8_t>> nonzero_forms(int n, int p) {
  auto all = enumerate_vectors(n, p);
  all.erase(all.begin());
  return all;
}

Rep build_I(const TablePtr& base) {
  const int n = base->n(), p = base->p();
  auto forms = nonzero_forms(n, p);
  std::vector<Matrix> imgs;
  for (ElemId x : base->generators()) {
    const Matrix& phi = base->element(x);
    Matrix m(p, forms.size(), forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k) {
      auto img = vec_mul(forms[k], phi);
      const std::size_t idx = vector_index(img, p);
      if (idx) m.set(k, idx - 1, 1);
    }
    imgs.push_back(std::move(m));
  }
  return make_rep(base, std::move(imgs), forms.size());
}

Rep build_Gr(const TablePtr& base) {
  const int n = base->n(), p = base->p();
  std::vector<MonomialBasis> parts;
  std::size_t total = 0;
  for (int d = 1; d <= n * (p - 1); ++d) {
    parts.emplace_back(n, d, p, MonomialKind::Truncated);
    total += parts.back().size();
  }
  std::vector<Matrix> imgs;
  for (ElemId x : base->generators()) {
    Matrix m(p, total, total);
    std::size_t off = 0;
    for (const auto& B : parts) {
      Matrix blk = substitution_matrix(base->element(x), B, B);
      for (std::size_t r = 0; r < B.size(); ++r)
        for (std::size_t c = 0; c < B.size(); ++c) m.set(off + r, off + c, blk(r, c));
      off += B.size();
    }
    imgs.push_back(std::move(m));
  }
  return make_rep(base, std::move(imgs), total);
}

GradedRep tensor_graded(const Rep& m, const GradedRep& h, const std::string& label) {
  GradedRep g{h.base, {}, label};
  for (const auto& r : h.degrees) g.degrees.push_back(tensor(m, r));
  return g;
}

namespace {

Matrix block_diagonal(const std::vector<Matrix>& blocks, int p) {
  std::size_t R = 0, C = 0;
  for (const auto& b : blocks) {
    R += b.rows();
    C += b.cols();
  }
  Matrix out(p, R, C);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b(r, c));
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

// Image of the augmentation ideal of H inside degree d.
Matrix augmentation_image(const HModule& h, int d, int p) {
  std::vector<Matrix> rows;
  if (d >= 1) rows.push_back(h.mult_t[static_cast<std::size_t>(d - 1)]);
  if (d >= 2 && !h.mult_bt.empty()) rows.push_back(h.mult_bt[static_cast<std::size_t>(d - 2)]);
  if (rows.empty()) return Matrix(p, 0, h.carrier[d].dim());
  return Matrix::vstack(rows);
}

struct KernelData {
  std::vector<std::vector<std::uint8_t>> forms;
  std::vector<Matrix> bases;  // K_mu, (n-1) x n
  std::vector<EchelonBasis> expr;
};

KernelData kernel_data(int n, int p) {
  KernelData kd;
  kd.forms = nonzero_forms(n, p);
  for (const auto& mu : kd.forms) {
    Matrix row(p, 1, static_cast<std::size_t>(n));
    std::ranges::copy(mu, row.row(0).begin());
    Matrix K = kernel_basis(row);
    EchelonBasis eb(p, static_cast<std::size_t>(n), true);
    for (std::size_t i = 0; i < K.rows(); ++i) eb.insert(K.row(i));
    kd.bases.push_back(std::move(K));
    kd.expr.push_back(std::move(eb));
  }
  return kd;
}

}  // namespace

HModule build_IH(const TablePtr& base, int D) {
  const int n = base->n(), p = base->p();
  HModule h;
  h.carrier = tensor_graded(build_I(base), build_hstar(base, D), "I(V)*H*V");
  auto forms = nonzero_forms(n, p);
  std::vector<MonomialBasis> B;
  for (int d = 0; d <= D + 2; ++d) B.emplace_back(n, d, p);
  for (int d = 0; d < D; ++d) {
    std::vector<Matrix> blocks;
    for (const auto& mu : forms)
      blocks.push_back(multiply_by_form(mu, B[static_cast<std::size_t>(d)], B[static_cast<std::size_t>(d + 1)]));
    h.mult_t.push_back(block_diagonal(blocks, p));
  }
  if (p != 2)
    for (int d = 0; d + 1 < D; ++d) {
      std::vector<Matrix> blocks;
      for (const auto& mu : forms)
        blocks.push_back(
            multiply_by_bockstein_form(mu, B[static_cast<std::size_t>(d)], B[static_cast<std::size_t>(d + 2)]));
      h.mult_bt.push_back(block_diagonal(blocks, p));
    }
  for (int d = 0; d <= D; ++d) h.quotient_dims.push_back(h.carrier[d].dim() - rank(augmentation_image(h, d, p)));
  return h;
}

GradedRep build_kernel_family(const TablePtr& base, int D) {
  const int n = base->n(), p = base->p();
  if (n < 1) throw DimensionError("build_kernel_family: n must be at least 1");
  auto kd = kernel_data(n, p);
  const std::size_t F = kd.forms.size();
  // Substitution on H*(Ker mu) -> H*(Ker mu phi) per generator and form.
  struct Move {
    std::size_t target;  // F when mu phi = 0
    Matrix S;
  };
  std::vector<std::vector<Move>> moves;
  for (ElemId x : base->generators()) {
    const Matrix& phi = base->element(x);
    std::vector<Move> mv;
    for (std::size_t k = 0; k < F; ++k) {
      auto img = vec_mul(kd.forms[k], phi);
      const std::size_t idx = vector_index(img, p);
      if (!idx) {
        mv.push_back({F, Matrix()});
        continue;
      }
      const std::size_t t = idx - 1;
      // phi maps Ker(mu phi) into Ker mu: write phi k' in the basis of Ker mu.
      const Matrix& Kt = kd.bases[t];
      Matrix M(p, Kt.rows(), Kt.rows());
      std::vector<std::uint8_t> coeffs;
      Matrix images = Kt * phi.transpose();
      for (std::size_t j = 0; j < Kt.rows(); ++j) {
        if (!kd.expr[k].express(images.row(j), coeffs)) throw AlgebraError("kernel family: phi does not preserve kernels");
        std::ranges::copy(coeffs, M.row(j).begin());
      }
      mv.push_back({t, M.transpose()});
    }
    moves.push_back(std::move(mv));
  }
  GradedRep g{base, {}, "kernel family"};
  for (int d = 0; d <= D; ++d) {
    MonomialBasis B(n - 1, d, p);
    const std::size_t b = B.size();
    std::vector<Matrix> imgs;
    for (const auto& mv : moves) {
      Matrix A(p, F * b, F * b);
      for (std::size_t k = 0; k < F; ++k) {
        if (mv[k].target == F) continue;
        Matrix blk = substitution_matrix(mv[k].S, B, B);
        for (std::size_t r = 0; r < b; ++r)
          for (std::size_t c = 0; c < b; ++c) A.set(k * b + r, mv[k].target * b + c, blk(r, c));
      }
      imgs.push_back(std::move(A));
    }
    g.degrees.push_back(make_rep(base, std::move(imgs), F * b));
  }
  return g;
}

Matrix quotient_map(const TablePtr& base, int d) {
  const int n = base->n(), p = base->p();
  auto kd = kernel_data(n, p);
  MonomialBasis src(n, d, p), dst(n - 1, d, p);
  std::vector<Matrix> blocks;
  for (const auto& K : kd.bases) blocks.push_back(substitution_matrix(K.transpose(), src, dst));
  return block_diagonal(blocks, p);
}

QuotientIsoReport verify_quotient_iso(const TablePtr& base, int D) {
  const int p = base->p();
  QuotientIsoReport rep;
  auto h = build_IH(base, D);
  auto fam = build_kernel_family(base, D);
  for (int d = 0; d <= D; ++d) {
    Matrix Q = quotient_map(base, d);
    const std::size_t rk = rank(Q);
    rep.map_rank.push_back(rk);
    rep.family_dim.push_back(fam[d].dim());
    auto fail = [&](const std::string& what) {
      rep.ok = false;
      rep.failures.push_back("degree " + std::to_string(d) + ": " + what);
    };
    if (rk != fam[d].dim()) fail("map is not onto");
    Matrix aug = augmentation_image(h, d, p);
    if (aug.rows() && !(aug * Q).is_zero()) fail("map does not vanish on the augmentation image");
    if (h.carrier[d].dim() - rk != rank(aug)) fail("kernel is larger than the augmentation image");
    for (std::size_t g = 0; g < base->generators().size(); ++g)
      if (h.carrier[d].gen_images()[g] * Q != Q * fam[d].gen_images()[g]) fail("not equivariant");
  }
  return rep;
}

bool verify_freeness(const HModule& m, int p) {
  const int D = m.carrier.max_degree();
  for (int d = 0; d <= D; ++d) {
    std::size_t rhs = 0;
    for (int a = 0; a <= d; ++a) rhs += hstar_dim(1, a, p) * m.quotient_dims[static_cast<std::size_t>(d - a)];
    if (rhs != m.carrier[d].dim()) return false;
  }
  return true;
}

bool verify_h_equivariance(const HModule& m) {
  const auto& C = m.carrier;
  for (std::size_t g = 0; g < C.base->generators().size(); ++g) {
    for (std::size_t d = 0; d < m.mult_t.size(); ++d)
      if (C.degrees[d].gen_images()[g] * m.mult_t[d] != m.mult_t[d] * C.degrees[d + 1].gen_images()[g]) return false;
    for (std::size_t d = 0; d < m.mult_bt.size(); ++d)
      if (C.degrees[d].gen_images()[g] * m.mult_bt[d] != m.mult_bt[d] * C.degrees[d + 2].gen_images()[g])
        return false;
  }
  return true;
}

Matrix steenrod_square(int n, int i, int d) {
  MonomialBasis src(n, d, 2), dst(n, d + i, 2);
  Matrix out(2, src.size(), dst.size());
  for (std::size_t r = 0; r < src.size(); ++r) {
    const auto& a = src.at(r).exps;
    std::vector<std::vector<int>> splits;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    enumerate_exps(n, i, i, cur, 0, splits);
    for (const auto& iv : splits) {
      int c = 1;
      Monomial m{0, a};
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (iv[j] > a[j]) {
          c = 0;
          break;
        }
        c &= binom_mod2(a[j], iv[j]);
        m.exps[j] += iv[j];
      }
      if (c) {
        const std::size_t col = dst.index_of(m);
        out.set(r, col, out(r, col) + 1);
      }
    }
  }
  return out;
}

}  // namespace deltafn
