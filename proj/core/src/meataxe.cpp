#include "deltafn/meataxe.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "deltafn/poly.hpp"

namespace deltafn {

namespace {

int rand_scalar(Rng& rng, int p) { return static_cast<int>(rng() % static_cast<std::uint64_t>(p)); }

std::vector<std::uint8_t> random_combination(const Matrix& rows, Rng& rng) {
  std::vector<std::uint8_t> v(rows.cols(), 0);
  for (std::size_t i = 0; i < rows.rows(); ++i) axpy(v, rows.row(i), rand_scalar(rng, rows.p()), rows.p());
  return v;
}

Matrix row_of(std::span<const std::uint8_t> v, int p) {
  Matrix m(p, 1, v.size());
  std::ranges::copy(v, m.row(0).begin());
  return m;
}

// Random elements of the acting algebra: products accumulate in a pool and
// each sample is a random linear combination of pool members.
class AlgebraSampler {
 public:
  AlgebraSampler(const Rep& a, Rng& rng) : rng_(rng), p_(a.p()), dim_(a.dim()) {
    pool_ = a.gen_images();
    if (pool_.empty()) pool_.push_back(Matrix::identity(p_, dim_));
  }

  Matrix next() {
    const std::size_t i = rng_() % pool_.size(), j = rng_() % pool_.size();
    Matrix prod = pool_[i] * pool_[j];
    if (pool_.size() < kPoolLimit)
      pool_.push_back(std::move(prod));
    else
      pool_[rng_() % pool_.size()] = std::move(prod);
    Matrix theta = Matrix::identity(p_, dim_).scaled(rand_scalar(rng_, p_));
    for (const auto& m : pool_) {
      const int c = rand_scalar(rng_, p_);
      if (c) theta = theta + m.scaled(c);
    }
    return theta;
  }

 private:
  static constexpr std::size_t kPoolLimit = 12;
  Rng& rng_;
  int p_;
  std::size_t dim_;
  std::vector<Matrix> pool_;
};

Matrix power_of_two_at_least(const Matrix& m, std::size_t n) {
  Matrix r = m;
  for (std::size_t e = 1; e < n; e *= 2) r = r * r;
  return r;
}

Matrix row_space(const Matrix& m) {
  auto rr = rref(m);
  return rr.reduced.rows_range(0, rr.rank);
}

}  // namespace

std::optional<Matrix> find_submodule(const Rep& a, Rng& rng, const MeatAxeOptions& opt) {
  const std::size_t d = a.dim();
  const int p = a.p();
  if (d <= 1) return std::nullopt;
  AlgebraSampler sampler(a, rng);
  for (int attempt = 0; attempt < opt.split_budget; ++attempt) {
    Matrix theta = sampler.next();
    auto fac = factor_small(charpoly(theta), p, 3);
    for (const auto& [g, m] : fac.factors) {
      (void)m;
      Matrix gt = poly_eval(g, theta);
      Matrix K = left_kernel(gt);
      const auto deg = static_cast<std::size_t>(poly_degree(g));
      Matrix S = spin(a, K.row_matrix(0));
      if (S.rows() < d) return S;
      if (K.rows() == deg) {
        Matrix W = kernel_basis(gt);
        Matrix Wd = spin_transposed(a, W.row_matrix(0));
        if (Wd.rows() < d) return row_space(kernel_basis(Wd));
        return std::nullopt;  // Norton: irreducible
      }
      for (int t = 0; t < 3; ++t) {
        auto v = random_combination(K, rng);
        if (std::ranges::all_of(v, [](auto x) { return x == 0; })) continue;
        Matrix S2 = spin(a, row_of(v, p));
        if (S2.rows() < d) return S2;
      }
    }
  }
  throw BudgetExceeded("meataxe: no decision for a module of dimension " + std::to_string(d) + " after " +
                       std::to_string(opt.split_budget) + " random elements");
}

bool is_irreducible(const Rep& a, Rng& rng, const MeatAxeOptions& opt) {
  return a.dim() >= 1 && !find_submodule(a, rng, opt).has_value();
}

std::vector<ElemId> probe_elements(const MonoidTable& base) {
  constexpr std::size_t kProbes = 256;
  std::vector<ElemId> out;
  const std::size_t N = base.size();
  if (N <= kProbes) {
    for (std::size_t i = 0; i < N; ++i) out.push_back(static_cast<ElemId>(i));
    return out;
  }
  std::set<ElemId> s(base.generators().begin(), base.generators().end());
  for (std::size_t i = 0; i < kProbes; ++i) s.insert(static_cast<ElemId>(i * N / kProbes));
  return {s.begin(), s.end()};
}

Fingerprint fingerprint(const Rep& a) {
  Fingerprint fp;
  for (ElemId g : probe_elements(*a.base())) fp.push_back(charpoly(a.act(g)));
  return fp;
}

// ---------------------------------------------------------------------------

SimpleRegistry::SimpleRegistry(TablePtr base) : base_(std::move(base)) {}

std::optional<std::size_t> SimpleRegistry::find_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> SimpleRegistry::lookup(const Rep& s) const {
  if (s.base().get() != base_.get()) throw DimensionError("SimpleRegistry: module over a different monoid");
  Fingerprint fp;
  bool have_fp = false;
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    if (simples_[i].dim() != s.dim()) continue;
    if (!have_fp) {
      fp = fingerprint(s);
      have_fp = true;
    }
    if (prints_[i] != fp) continue;
    if (hom_dim(simples_[i], s) > 0) return i;
  }
  return std::nullopt;
}

std::size_t SimpleRegistry::intern(const Rep& s) {
  if (auto i = lookup(s)) return *i;
  simples_.push_back(s);
  prints_.push_back(fingerprint(s));
  names_.push_back("L" + std::to_string(s.dim()) + "." + std::to_string(simples_.size()));
  return simples_.size() - 1;
}

void SimpleRegistry::canonicalize() {
  std::vector<std::size_t> order(simples_.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::sort(order, [&](std::size_t x, std::size_t y) {
    if (simples_[x].dim() != simples_[y].dim()) return simples_[x].dim() < simples_[y].dim();
    return prints_[x] < prints_[y];
  });
  std::vector<Rep> s;
  std::vector<Fingerprint> f;
  std::vector<std::string> n;
  std::map<std::size_t, int> per_dim;
  for (auto i : order) {
    s.push_back(simples_[i]);
    f.push_back(prints_[i]);
    n.push_back("L" + std::to_string(simples_[i].dim()) + "." + std::to_string(++per_dim[simples_[i].dim()]));
  }
  simples_ = std::move(s);
  prints_ = std::move(f);
  names_ = std::move(n);
}

FactorMultiset& FactorMultiset::operator+=(const FactorMultiset& o) {
  for (auto [k, v] : o.mult) mult[k] += v;
  return *this;
}

int FactorMultiset::count(std::size_t id) const {
  auto it = mult.find(id);
  return it == mult.end() ? 0 : it->second;
}

std::size_t FactorMultiset::total_dim(const SimpleRegistry& reg) const {
  std::size_t t = 0;
  for (auto [k, v] : mult) t += static_cast<std::size_t>(v) * reg.simple(k).dim();
  return t;
}

std::string FactorMultiset::to_string(const SimpleRegistry& reg) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [k, v] : mult) {
    os << (first ? "" : ", ") << reg.name(k) << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

FactorMultiset chop(const Rep& a, SimpleRegistry& reg, Rng& rng, const MeatAxeOptions& opt) {
  FactorMultiset out;
  std::vector<Rep> work{a};
  while (!work.empty()) {
    Rep m = std::move(work.back());
    work.pop_back();
    if (m.dim() == 0) continue;
    auto sub = find_submodule(m, rng, opt);
    if (!sub) {
      out.mult[reg.intern(m)] += 1;
      continue;
    }
    work.push_back(submodule(m, *sub));
    work.push_back(quotient(m, *sub));
  }
  return out;
}

void saturate(SimpleRegistry& reg, const std::vector<Rep>& seeds, std::size_t target, Rng& rng,
              const MeatAxeOptions& opt) {
  constexpr std::size_t kMaxTensorDim = 1500;
  for (const auto& s : seeds) chop(s, reg, rng, opt);
  std::set<std::pair<std::size_t, std::size_t>> done;
  while (target && reg.size() < target) {
    bool progressed = false;
    const std::size_t known = reg.size();
    for (std::size_t i = 0; i < known && reg.size() < target; ++i)
      for (std::size_t j = i; j < known && reg.size() < target; ++j) {
        if (done.count({i, j})) continue;
        if (reg.simple(i).dim() * reg.simple(j).dim() > kMaxTensorDim) continue;
        done.insert({i, j});
        progressed = true;
        chop(tensor(reg.simple(i), reg.simple(j)), reg, rng, opt);
      }
    if (!progressed) throw BudgetExceeded("saturate: tensor closure exhausted before reaching the target count");
  }
  if (target && reg.size() > target) throw AlgebraError("saturate: more simples than expected");
  if (target) reg.mark_saturated();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> quick_print(const Rep& a) {
  std::vector<std::vector<int>> out;
  const auto& g = a.gen_images();
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(charpoly(g[i]));
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) out.push_back(charpoly(g[i] * g[j]));
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<int>& c) {
  Matrix f(basis.front().p(), basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) f = f + basis[i].scaled(c[i]);
  return f;
}

// Calls visit on every coefficient vector of F_p^k until it returns true.
template <class F>
bool for_each_coeffs(std::size_t k, int p, F visit) {
  std::vector<int> c(k, 0);
  for (;;) {
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k) return false;
  }
}

bool is_nilpotent(const Matrix& f) { return power_of_two_at_least(f, f.rows()).is_zero(); }

}  // namespace

namespace {

// Krull-Schmidt matching of indecomposable summands. Random intertwiners
// between two indecomposables are invertible with probability at least
// 1 - 1/p when the modules are isomorphic, unlike for large direct sums.
void match_summands(const Rep& a, const Rep& b, Rng& rng, const MeatAxeOptions& opt, IsoResult& r) {
  auto da = fitting_split(a, rng, opt);
  auto db = fitting_split(b, rng, opt);
  if (!da.complete || !db.complete || da.summands.size() < 2) return;
  bool certified = true;
  for (const auto* d : {&da, &db})
    for (const auto& s : d->summands) certified = certified && s.certified;
  if (da.summands.size() != db.summands.size()) {
    if (certified) r.conclusive = true;
    return;
  }
  std::vector<bool> used(db.summands.size(), false);
  Matrix w(a.p(), a.dim(), b.dim());
  bool every_test_conclusive = true;
  for (const auto& sa : da.summands) {
    bool found = false;
    for (std::size_t j = 0; j < db.summands.size() && !found; ++j) {
      if (used[j] || db.summands[j].module.dim() != sa.module.dim()) continue;
      auto sub = is_isomorphic(sa.module, db.summands[j].module, rng, opt);
      if (!sub.conclusive) every_test_conclusive = false;
      if (!sub.isomorphic) continue;
      w = w + sa.projection * sub.witness * db.summands[j].inclusion;
      used[j] = true;
      found = true;
    }
    if (!found) {
      if (certified && every_test_conclusive) r.conclusive = true;
      return;
    }
  }
  if (is_invertible(w) && is_homomorphism(a, b, w)) {
    r.isomorphic = true;
    r.conclusive = true;
    r.witness = std::move(w);
  }
}

}  // namespace

IsoResult is_isomorphic(const Rep& a, const Rep& b, Rng& rng, const MeatAxeOptions& opt) {
  if (!same_base(a, b)) throw DimensionError("is_isomorphic: modules over different monoids");
  IsoResult r;
  if (a.dim() != b.dim()) return r;
  if (a.dim() == 0) {
    r.isomorphic = true;
    r.witness = Matrix(a.p(), 0, 0);
    return r;
  }
  if (quick_print(a) != quick_print(b)) return r;
  auto H = hom_space(a, b);
  if (H.dim == 0) return r;
  if (hom_dim(a, a) != H.dim) return r;
  auto try_f = [&](const std::vector<int>& c) {
    if (std::ranges::all_of(c, [](int x) { return x == 0; })) return false;
    Matrix f = combine(H.basis, c);
    if (!is_invertible(f)) return false;
    r.isomorphic = true;
    r.witness = std::move(f);
    return true;
  };
  if (H.dim <= 4) {
    for_each_coeffs(H.dim, a.p(), try_f);
    return r;
  }
  std::vector<int> c(H.dim);
  for (int t = 0; t < opt.iso_budget; ++t) {
    for (auto& x : c) x = rand_scalar(rng, a.p());
    if (try_f(c)) return r;
  }
  r.conclusive = false;
  if (a.dim() <= opt.max_fitting_dim) match_summands(a, b, rng, opt, r);
  return r;
}

std::optional<bool> endomorphism_ring_is_local(const Rep& a) {
  auto E = hom_space(a, a).basis;
  if (E.size() > 6) return std::nullopt;
  const bool split_found = for_each_coeffs(E.size(), a.p(), [&](const std::vector<int>& c) {
    Matrix f = combine(E, c);
    return !is_invertible(f) && !is_nilpotent(f);
  });
  return !split_found;
}

namespace {

struct Splitter {
  Rng& rng;
  const MeatAxeOptions& opt;
  Decomposition out;

  // Fitting split along f: kernel and image of (f - lambda)^N.
  bool try_split(const Rep& m, const Matrix& incl, const Matrix& f) {
    const int p = m.p();
    const std::size_t d = m.dim();
    auto fac = factor_small(charpoly(f), p, 1);
    for (const auto& [g, mult] : fac.factors) {
      if (static_cast<std::size_t>(mult) == d) return false;
      const int lambda = (p - g[0]) % p;
      Matrix shifted = f - Matrix::identity(p, d).scaled(lambda);
      Matrix F = power_of_two_at_least(shifted, d);
      Matrix K = row_space(left_kernel(F));
      Matrix I = row_space(F);
      if (K.rows() == 0 || I.rows() == 0) continue;
      if (K.rows() + I.rows() != d) throw AlgebraError("fitting_split: kernel and image are not complementary");
      run(submodule(m, K), K * incl);
      run(submodule(m, I), I * incl);
      return true;
    }
    return false;
  }

  void run(const Rep& m, const Matrix& incl) {
    if (m.dim() <= 1) {
      out.summands.push_back({m, incl, Matrix(), true});
      return;
    }
    auto E = hom_space(m, m).basis;
    if (E.size() == 1) {
      out.summands.push_back({m, incl, Matrix(), true});
      return;
    }
    if (E.size() <= 6) {
      std::optional<Matrix> splitter;
      for_each_coeffs(E.size(), m.p(), [&](const std::vector<int>& c) {
        Matrix f = combine(E, c);
        if (is_invertible(f) || is_nilpotent(f)) return false;
        splitter = std::move(f);
        return true;
      });
      if (!splitter) {
        out.summands.push_back({m, incl, Matrix(), true});
        return;
      }
      if (!try_split(m, incl, *splitter)) throw AlgebraError("fitting_split: non-unit non-nilpotent failed to split");
      return;
    }
    std::vector<int> c(E.size());
    for (int round = 0; round < opt.fitting_rounds; ++round) {
      for (auto& x : c) x = rand_scalar(rng, m.p());
      if (try_split(m, incl, combine(E, c))) return;
    }
    out.summands.push_back({m, incl, Matrix(), false});
  }
};

}  // namespace

Decomposition fitting_split(const Rep& a, Rng& rng, const MeatAxeOptions& opt) {
  Decomposition d;
  const Matrix I = Matrix::identity(a.p(), a.dim());
  if (a.dim() > opt.max_fitting_dim) {
    d.summands.push_back({a, I, I, false});
    d.complete = false;
    return d;
  }
  Splitter s{rng, opt, {}};
  s.run(a, I);
  d = std::move(s.out);
  std::vector<Matrix> blocks;
  for (auto& sm : d.summands) blocks.push_back(sm.inclusion);
  Matrix B = Matrix::vstack(blocks);
  Matrix Binv = inverse(B);
  std::size_t off = 0;
  for (auto& sm : d.summands) {
    std::vector<std::size_t> cols(sm.module.dim());
    std::iota(cols.begin(), cols.end(), off);
    sm.projection = Binv.select_cols(cols);
    off += sm.module.dim();
  }
  return d;
}

bool check_certificates(const Rep& a, const Decomposition& d) {
  const int p = a.p();
  Matrix sum(p, a.dim(), a.dim());
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& si = d.summands[i];
    for (std::size_t j = 0; j < d.summands.size(); ++j) {
      Matrix c = si.inclusion * d.summands[j].projection;
      if (i == j ? !c.is_identity() : !c.is_zero()) return false;
    }
    sum = sum + si.projection * si.inclusion;
    for (std::size_t g = 0; g < a.gen_images().size(); ++g) {
      if (si.inclusion * a.gen_images()[g] != si.module.gen_images()[g] * si.inclusion) return false;
      if (a.gen_images()[g] * si.projection != si.projection * si.module.gen_images()[g]) return false;
    }
  }
  return sum.is_identity();
}

// ---------------------------------------------------------------------------

PimRegistry::PimRegistry(SimpleRegistry& simples, const Rep& free_module, Rng& rng, const MeatAxeOptions& opt)
    : simples_(&simples) {
  if (!simples.saturated()) throw AlgebraError("PimRegistry: simple registry is not saturated");
  const std::size_t ns = simples.size();
  pims_.resize(ns);
  mult_.assign(ns, 0);
  factors_.resize(ns);
  std::vector<bool> have(ns, false);
  auto dec = fitting_split(free_module, rng, opt);
  if (!dec.complete) throw BudgetExceeded("PimRegistry: module too large to split");
  for (const auto& sm : dec.summands) {
    std::optional<std::size_t> head;
    for (std::size_t s = 0; s < ns; ++s) {
      const auto h = hom_dim(sm.module, simples.simple(s));
      if (h == 0) continue;
      if (h != 1 || head) throw AlgebraError("PimRegistry: summand of dimension " + std::to_string(sm.module.dim()) +
                                             " does not have a simple head");
      head = s;
    }
    if (!head) throw AlgebraError("PimRegistry: summand without a head");
    ++mult_[*head];
    if (!have[*head]) {
      have[*head] = true;
      pims_[*head] = sm.module;
      factors_[*head] = chop(sm.module, simples, rng, opt);
    }
  }
  for (std::size_t s = 0; s < ns; ++s)
    if (!have[s]) throw AlgebraError("PimRegistry: no projective cover found for " + simples.name(s));
  cartan_.assign(ns, std::vector<int>(ns, 0));
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < ns; ++t) cartan_[s][t] = factors_[s].count(t);
}

PimRegistry::PimRegistry(SimpleRegistry& simples, std::vector<Rep> pims, std::vector<int> multiplicities, Rng& rng,
                         const MeatAxeOptions& opt)
    : simples_(&simples), pims_(std::move(pims)), mult_(std::move(multiplicities)) {
  const std::size_t ns = simples.size();
  if (pims_.size() != ns || mult_.size() != ns) throw AlgebraError("PimRegistry: one cover per simple expected");
  factors_.resize(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t t = 0; t < ns; ++t)
      if (hom_dim(pims_[s], simples.simple(t)) != (s == t ? 1u : 0u))
        throw AlgebraError("PimRegistry: cover of " + simples.name(s) + " has the wrong head");
    factors_[s] = chop(pims_[s], simples, rng, opt);
  }
  if (simples.size() != ns) throw AlgebraError("PimRegistry: covers have unknown composition factors");
  cartan_.assign(ns, std::vector<int>(ns, 0));
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < ns; ++t) cartan_[s][t] = factors_[s].count(t);
}

std::string PimRegistry::name(std::size_t simple_id) const {
  const auto& nm = simples_->name(simple_id);
  if (pims_.at(simple_id).dim() == simples_->simple(simple_id).dim()) return nm;
  return "P_" + nm;
}

namespace {

struct Rational {
  long long num = 0, den = 1;
  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  Rational operator/(const Rational& o) const { return {num * o.den, den * o.num}; }
  bool zero() const { return num == 0; }
};

}  // namespace

std::vector<int> solve_projective_multiplicities(const FactorMultiset& f, const PimRegistry& pims) {
  const auto& C = pims.cartan();
  const std::size_t n = C.size();
  for (auto [id, m] : f.mult)
    if (id >= n) throw AlgebraError("identify_projective: unknown simple id");
  // Unknown c_S; equation for T: sum_S c_S C[S][T] = m_T.
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) A[t][s] = Rational(C[s][t]);
    A[t][n] = Rational(f.count(t));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col].zero()) ++piv;
    if (piv == n) throw AlgebraError("identify_projective: Cartan matrix is singular");
    std::swap(A[piv], A[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col].zero()) continue;
      Rational k = A[r][col] / A[col][col];
      for (std::size_t c = col; c <= n; ++c) A[r][c] = A[r][c] - k * A[col][c];
    }
  }
  std::vector<int> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    Rational v = A[s][n] / A[s][s];
    if (v.den != 1 || v.num < 0) throw AlgebraError("input not projective");
    out[s] = static_cast<int>(v.num);
  }
  return out;
}

std::vector<int> identify_projective(const Rep& a, const PimRegistry& pims, SimpleRegistry& reg, Rng& rng,
                                     const MeatAxeOptions& opt) {
  if (&reg != &pims.simples()) throw DimensionError("identify_projective: registry mismatch");
  const std::size_t before = reg.size();
  auto f = chop(a, reg, rng, opt);
  if (reg.size() != before) throw AlgebraError("identify_projective: unknown composition factor");
  return solve_projective_multiplicities(f, pims);
}

std::string expansion_to_string(const std::vector<int>& mult, const PimRegistry& pims) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < mult.size(); ++s) {
    if (!mult[s]) continue;
    os << (first ? "" : " + ");
    if (mult[s] > 1) os << mult[s] << "·";
    os << pims.name(s);
    first = false;
  }
  return first ? "0" : os.str();
}

Rep assemble_projective(const std::vector<int>& mult, const PimRegistry& pims) {
  std::vector<Rep> parts;
  for (std::size_t s = 0; s < mult.size(); ++s)
    for (int k = 0; k < mult[s]; ++k) parts.push_back(pims.pim(s));
  if (parts.empty()) throw AlgebraError("assemble_projective: zero module");
  return direct_sum(parts);
}

}  // namespace deltafn
