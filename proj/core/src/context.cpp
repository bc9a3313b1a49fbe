#include "deltafn/context.hpp"

#include "deltafn/functors.hpp"

namespace deltafn {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int p, int n, bool monoid) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(p) * 0xBF58476D1CE4E5B9ULL;
  h ^= static_cast<std::uint64_t>(n + 1) * 0x94D049BB133111EBULL;
  if (monoid) h = ~h;
  return h;
}

int det_mod_p(const Matrix& m) {
  if (m.rows() == 0) return 1;
  const auto cp = charpoly(m);
  const int p = m.p();
  int d = cp.front() % p;
  if (m.rows() % 2) d = (p - d) % p;
  return d;
}

}  // namespace

Rep determinant_module(const TablePtr& G) {
  std::vector<Matrix> imgs;
  for (ElemId g : G->generators()) {
    Matrix m(G->p(), 1, 1);
    m.set(0, 0, det_mod_p(G->element(g)));
    imgs.push_back(m);
  }
  return make_rep(G, std::move(imgs), 1);
}

Context::Context(Catalog& cat, TablePtr table, Context* lower)
    : cat_(&cat),
      table_(std::move(table)),
      lower_(lower),
      rng_(mix_seed(cat.options().seed, table_->p(), table_->n(), !table_->is_group())) {}

const MeatAxeOptions& Context::meataxe() const { return cat_->options().meataxe; }

const ParabolicChain& Context::chain() {
  if (!chain_) {
    if (!is_group() || n() < 1) throw AlgebraError("chain: needs GL_n with n >= 1");
    chain_ = parabolic_chain(table_, lower().table());
  }
  return *chain_;
}

Context& Context::lower() {
  if (!lower_) throw AlgebraError("lower: no GL_{n-1} context for " + label());
  return *lower_;
}

std::size_t Context::expected_simple_count() const {
  if (is_group()) return p_regular_classes(*table_).size();
  std::size_t total = 0;
  for (int k = 0; k <= n(); ++k) total += p_regular_classes(*build_gl(k, p())).size();
  return total;
}

bool Context::pims_feasible() const { return table_->size() <= cat_->options().regular_limit; }

SimpleRegistry& Context::simples() {
  if (simples_) return *simples_;
  auto reg = std::make_unique<SimpleRegistry>(table_);
  std::vector<Rep> seeds;
  if (pims_feasible()) {
    seeds.push_back(regular(table_));
  } else {
    seeds.push_back(Rep::trivial(table_));
    seeds.push_back(natural_module(table_));
    seeds.push_back(dual_natural_module(table_));
  }
  saturate(*reg, seeds, expected_simple_count(), rng_, meataxe());
  reg->canonicalize();
  simples_ = std::move(reg);
  if (is_group()) {
    auto name_if_new = [&](const Rep& m, const std::string& nm) {
      auto id = simples_->lookup(m);
      if (id && simples_->name(*id).front() == 'L') simples_->set_name(*id, nm);
    };
    name_if_new(Rep::trivial(table_), "triv");
    if (n() >= 2) name_if_new(steinberg(), "St_" + std::to_string(n()));
    if (n() == 1) name_if_new(determinant_module(table_), "det");
    if (n() >= 1) {
      name_if_new(natural_module(table_), "V_" + std::to_string(n()));
      name_if_new(dual_natural_module(table_), "V_" + std::to_string(n()) + "#");
      name_if_new(determinant_module(table_), "det");
    }
  }
  return *simples_;
}

PimRegistry& Context::pims() {
  if (pims_) return *pims_;
  if (!pims_feasible())
    throw BudgetExceeded("projective covers of " + label() + " exceed the regular-module limit");
  auto& reg = simples();
  pims_ = std::make_unique<PimRegistry>(reg, regular(table_), rng_, meataxe());
  return *pims_;
}

const Rep& Context::steinberg() {
  if (!steinberg_) {
    if (!is_group()) throw AlgebraError("steinberg: needs a general linear group");
    steinberg_ = steinberg_module(table_, rng_, meataxe(), cat_->options().regular_limit).module;
  }
  return *steinberg_;
}

const GradedTargets& Context::targets(int D) {
  if (!targets_ || targets_degree_ < D) {
    GradedTargets t;
    t.H = build_hstar(table_, D);
    t.JH = tensor_graded(build_J(table_), t.H, "J (x) H*V");
    t.IH = tensor_graded(build_I(table_), t.H, "I (x) H*V");
    t.GrH = tensor_graded(build_Gr(table_), t.H, "Gr (x) H*V");
    targets_ = std::move(t);
    targets_degree_ = D;
  }
  return *targets_;
}

const GradedRep& Context::hstar(int D) {
  if (targets_ && targets_degree_ >= D) return targets_->H;
  if (!hstar_ || hstar_->max_degree() < D) hstar_ = build_hstar(table_, D);
  return *hstar_;
}

std::optional<std::size_t> Context::simple_id(const std::string& name) { return simples().find_by_name(name); }

Rep Context::named_module(const std::string& name) {
  if (name == "triv") return Rep::trivial(table_);
  if (name == "regular") return regular(table_);
  if (name == "St") return steinberg();
  if (name == "V") return natural_module(table_);
  if (name == "V#") return dual_natural_module(table_);
  if (name == "det") return determinant_module(table_);
  for (const std::string sep : {"*", "⊗"}) {
    if (name.rfind("St" + sep, 0) == 0) return tensor(steinberg(), named_module(name.substr(2 + sep.size())));
  }
  if (auto id = simple_id(name)) return simples().simple(*id);
  if (name.rfind("P_", 0) == 0) {
    const std::string head = name.substr(2);
    std::optional<std::size_t> id = simple_id(head);
    if (!id && (head == "nat" || head == "V")) id = simple_id("V_" + std::to_string(n()));
    if (!id && (head == "nat#" || head == "V#")) id = simple_id("V_" + std::to_string(n()) + "#");
    if (id) return pims().pim(*id);
  }
  if (name == "St_" + std::to_string(n())) return steinberg();
  throw AlgebraError("unknown module name '" + name + "' for " + label());
}

void Context::install(std::unique_ptr<SimpleRegistry> simples, std::unique_ptr<PimRegistry> pims) {
  if (!simples || simples->base() != table_) throw AlgebraError("install: registry over a different table");
  pims_.reset();
  simples_ = std::move(simples);
  pims_ = std::move(pims);
}

Context& Catalog::gl(int n, int p) {
  const auto key = std::make_tuple(p, n, false);
  if (auto it = contexts_.find(key); it != contexts_.end()) return *it->second;
  Context* lower = n >= 1 ? &gl(n - 1, p) : nullptr;
  auto ctx = std::make_unique<Context>(*this, build_gl(n, p), lower);
  auto& ref = *ctx;
  contexts_[key] = std::move(ctx);
  return ref;
}

Context& Catalog::monoid(int n, int p) {
  const auto key = std::make_tuple(p, n, true);
  if (auto it = contexts_.find(key); it != contexts_.end()) return *it->second;
  auto ctx = std::make_unique<Context>(*this, build_m(n, p), nullptr);
  auto& ref = *ctx;
  contexts_[key] = std::move(ctx);
  return ref;
}

}  // namespace deltafn
