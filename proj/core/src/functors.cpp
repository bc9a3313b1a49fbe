#include "deltafn/functors.hpp"

#include <algorithm>
#include <sstream>

#include "deltafn/brauer.hpp"

namespace deltafn {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

void VerifyReport::require(bool ok, const std::string& note) {
  if (ok) return;
  if (status == Status::Pass) status = Status::Fail;
  if (!note.empty()) notes.push_back(note);
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string join_ints(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

VerifyReport new_report(const std::string& suite, const std::string& subject, const Context& ctx) {
  VerifyReport r;
  r.suite = suite;
  r.subject = subject;
  r.params = {{"p", std::to_string(ctx.p())}, {"n", std::to_string(ctx.n())}, {"base", ctx.label()}};
  return r;
}

// dim Hom(P, H^d V) for d <= D; GL_0 and M_0 only have degree 0.
PoincareProfile hstar_profile(const Rep& P, Context& ctx, int D, const std::string& label) {
  if (ctx.n() == 0) {
    PoincareProfile f{label, std::vector<long long>(static_cast<std::size_t>(D) + 1, 0)};
    f.coefficients[0] = static_cast<long long>(P.dim());
    return f;
  }
  auto f = graded_LP(P, ctx.hstar(D), D);
  f.label = label;
  return f;
}

// Group-algebra element as a coefficient vector over element ids.
using AlgebraElement = std::vector<int>;

AlgebraElement convolve_elements(const MonoidTable& G, const AlgebraElement& a, const AlgebraElement& b) {
  const int p = G.p();
  AlgebraElement out(G.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (!b[y]) continue;
      auto& slot = out[static_cast<std::size_t>(G.mul(static_cast<ElemId>(x), static_cast<ElemId>(y)))];
      slot = (slot + a[x] * b[y]) % p;
    }
  }
  return out;
}

}  // namespace

SteinbergModule steinberg_module(const TablePtr& G, Rng& rng, const MeatAxeOptions& opt, std::size_t regular_limit) {
  SteinbergModule out;
  const int n = G->n(), p = G->p();
  if (n <= 1) {
    out.module = Rep::trivial(G);
    return out;
  }
  const auto target_dim = static_cast<std::size_t>(ipow(p, n * (n - 1) / 2));
  TablePtr B = borel_subgroup(G);
  Rep flag = induce(Rep::trivial(B), G);
  SimpleRegistry reg(G);
  const auto f = chop(flag, reg, rng, opt);
  std::optional<std::size_t> st;
  for (const auto& [id, mult] : f.mult) {
    if (reg.simple(id).dim() != target_dim) continue;
    if (st || mult != 1) throw AlgebraError("steinberg: flag module has no unique factor of dimension p^{n(n-1)/2}");
    st = id;
  }
  if (!st) throw AlgebraError("steinberg: flag module has no factor of dimension p^{n(n-1)/2}");
  out.module = reg.simple(*st);

  if (G->size() > regular_limit) return out;
  TablePtr W = weyl_subgroup(G);
  AlgebraElement t(G->size(), 0);
  for (ElemId b = 0; b < static_cast<ElemId>(B->size()); ++b)
    for (ElemId w = 0; w < static_cast<ElemId>(W->size()); ++w) {
      const int sgn = permutation_sign(W->element(w));
      auto& slot = t[static_cast<std::size_t>(G->mul(B->to_root(b), W->to_root(w)))];
      slot = ((slot + sgn) % p + p) % p;
    }
  const auto t2 = convolve_elements(*G, t, t);
  // t^2 = c t; c is read off the first nonzero coordinate and checked everywhere.
  int c = -1;
  for (std::size_t i = 0; i < t.size() && c < 0; ++i)
    if (t[i]) {
      for (int k = 0; k < p; ++k)
        if ((k * t[i]) % p == t2[i]) c = k;
    }
  for (std::size_t i = 0; i < t.size(); ++i)
    if ((c * t[i]) % p != t2[i]) throw AlgebraError("steinberg: t^2 is not a multiple of t");
  out.scalar = c;
  if (c == 0) return out;
  out.idempotent_route = true;
  Rep R = regular(G);
  Matrix seed(p, 1, G->size());
  for (std::size_t i = 0; i < t.size(); ++i) seed.set(0, i, t[i]);
  Rep ideal = submodule(R, spin(R, seed));
  out.routes_agree = ideal.dim() == target_dim && is_isomorphic(ideal, out.module, rng, opt).isomorphic;
  if (!out.routes_agree) throw AlgebraError("steinberg: flag-module and idempotent constructions disagree");
  return out;
}

Rep delta_module(const Rep& P, const ParabolicChain& ch) {
  Rep res = restrict(P, ch.GLmU);
  return transport_aligned(coinvariants(res, ch.U, ch.GLm).module, ch.lower);
}

DeltaResult delta(const Rep& P, Context& ctx) {
  DeltaResult r;
  r.input = P;
  r.output = delta_module(P, ctx.chain());
  Context& low = ctx.lower();
  r.pim_expansion = identify_projective(r.output, low.pims(), low.simples(), low.rng(), low.meataxe());
  r.expansion = expansion_to_string(r.pim_expansion, low.pims());
  return r;
}

Rep hc_restrict_levi(const Rep& X, const ParabolicChain& ch) {
  return coinvariants(restrict(X, ch.P), ch.U, ch.L).module;
}

Rep hc_restrict(const Rep& X, const ParabolicChain& ch) {
  return transport_aligned(restrict(hc_restrict_levi(X, ch), ch.GLm), ch.lower);
}

Rep hc_induce(const Rep& a, const ParabolicChain& ch) { return induce(inflate(a, ch.P, ch.levi_part), ch.G); }

PoincareProfile graded_LP(const Rep& P, const GradedRep& target, int D) {
  if (P.base() != target.base) throw AlgebraError("graded_LP: module and target live over different tables");
  if (target.max_degree() < D) throw DimensionError("graded_LP: target has too few degrees");
  PoincareProfile f{target.label, {}};
  for (int d = 0; d <= D; ++d) f.coefficients.push_back(static_cast<long long>(hom_dim(P, target[d])));
  return f;
}

PoincareProfile convolve(const PoincareProfile& a, const PoincareProfile& b, int D) {
  PoincareProfile f{a.label + " * " + b.label, std::vector<long long>(static_cast<std::size_t>(D) + 1, 0)};
  for (int i = 0; i <= D && i < static_cast<int>(a.coefficients.size()); ++i)
    for (int j = 0; i + j <= D && j < static_cast<int>(b.coefficients.size()); ++j)
      f.coefficients[static_cast<std::size_t>(i + j)] +=
          a.coefficients[static_cast<std::size_t>(i)] * b.coefficients[static_cast<std::size_t>(j)];
  return f;
}

PoincareProfile h_profile(int D) { return {"H", std::vector<long long>(static_cast<std::size_t>(D) + 1, 1)}; }

PoincareProfile profile_sum(const std::vector<PoincareProfile>& parts, int D) {
  PoincareProfile f{"sum", std::vector<long long>(static_cast<std::size_t>(D) + 1, 0)};
  for (const auto& part : parts)
    for (int d = 0; d <= D && d < static_cast<int>(part.coefficients.size()); ++d)
      f.coefficients[static_cast<std::size_t>(d)] += part.coefficients[static_cast<std::size_t>(d)];
  return f;
}

std::string to_string(const PoincareProfile& f) { return f.label + ": " + join_ints(f.coefficients); }

// ---------------------------------------------------------------------------

VerifyReport verify_main1(const Rep& P, const std::string& name, Context& ctx, int D) {
  auto r = new_report("main1", name + " over " + ctx.label(), ctx);
  r.params.push_back({"D", std::to_string(D)});
  const auto& t = ctx.targets(D);
  const auto fj = graded_LP(P, t.JH, D), fi = graded_LP(P, t.IH, D), fg = graded_LP(P, t.GrH, D);
  r.columns = {"d", "Hom(P, J(x)H^d)", "Hom(P, I(x)H^d)", "Hom(P, Gr(x)H^d)", "ok"};
  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    const bool ok = fj.coefficients[i] == fi.coefficients[i] && fi.coefficients[i] == fg.coefficients[i];
    r.rows.push_back({std::to_string(d), std::to_string(fj.coefficients[i]), std::to_string(fi.coefficients[i]),
                      std::to_string(fg.coefficients[i]), ok ? "yes" : "no"});
    r.require(ok, "profiles differ in degree " + std::to_string(d));
  }
  return r;
}

VerifyReport verify_delta_theorem(const Rep& P, const std::string& name, Context& ctx, int D) {
  auto r = new_report("delta", name + " over " + ctx.label(), ctx);
  r.params.push_back({"D", std::to_string(D)});
  const auto lhs = graded_LP(P, ctx.targets(D).JH, D);
  const auto dres = delta(P, ctx);
  r.notes.push_back("delta(" + name + ") = " + dres.expansion);
  const auto inner = hstar_profile(dres.output, ctx.lower(), D, "Hom(delta P, H*V_{n-1})");
  const auto rhs = convolve(h_profile(D), inner, D);
  r.columns = {"d", "Hom(P, J(x)H^d V_n)", "Hom(delta P, H^d V_{n-1})", "sum_{a+b=d} H^a * Hom", "ok"};
  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    const bool ok = lhs.coefficients[i] == rhs.coefficients[i];
    r.rows.push_back({std::to_string(d), std::to_string(lhs.coefficients[i]), std::to_string(inner.coefficients[i]),
                      std::to_string(rhs.coefficients[i]), ok ? "yes" : "no"});
    r.require(ok, "degree " + std::to_string(d) + " differs");
  }
  return r;
}

VerifyReport verify_functor_end(Context& mctx, int D) {
  auto r = new_report("functor-end", "regular module of " + mctx.label(), mctx);
  r.params.push_back({"D", std::to_string(D)});
  const TablePtr& M = mctx.table();
  const auto lhs = graded_LP(regular(M), mctx.targets(D).JH, D);
  const auto family = build_kernel_family(M, D);
  PoincareProfile fam{"kernel family", {}};
  for (int d = 0; d <= D; ++d) fam.coefficients.push_back(static_cast<long long>(family[d].dim()));
  const auto rhs = convolve(h_profile(D), fam, D);
  // The kernel family is Hom(delta(F_p M_n), H*V_{n-1}) with delta(F_p M_n)
  // free of rank p^n - 1 over M_{n-1}.
  const long long copies = ipow(M->p(), M->n()) - 1;
  r.columns = {"d", "Hom(F_p M_n, J(x)H^d)", "dim family_d", "(p^n-1) dim H^d V_{n-1}", "H * family", "ok"};
  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    const long long free_rank = copies * static_cast<long long>(M->n() >= 1 ? hstar_dim(M->n() - 1, d, M->p()) : 0);
    const bool ok = lhs.coefficients[i] == rhs.coefficients[i] && fam.coefficients[i] == free_rank;
    r.rows.push_back({std::to_string(d), std::to_string(lhs.coefficients[i]), std::to_string(fam.coefficients[i]),
                      std::to_string(free_rank), std::to_string(rhs.coefficients[i]), ok ? "yes" : "no"});
    r.require(ok, "degree " + std::to_string(d) + " differs");
  }
  const auto qi = verify_quotient_iso(M, D);
  r.require(qi.ok, "quotient map onto the kernel family failed");
  for (const auto& f : qi.failures) r.notes.push_back(f);
  return r;
}

VerifyReport verify_main2(const Rep& X, const std::string& name, Context& ctx) {
  auto r = new_report("main2", "X = " + name + " over " + ctx.label(), ctx);
  const auto& ch = ctx.chain();
  Context& low = ctx.lower();
  const auto lhs = delta(tensor(ctx.steinberg(), X), ctx);
  Rep rhs_mod = tensor(low.steinberg(), transport_aligned(restrict(X, ch.GLm), ch.lower));
  const auto rhs = identify_projective(rhs_mod, low.pims(), low.simples(), low.rng(), low.meataxe());
  const auto rhs_str = expansion_to_string(rhs, low.pims());
  const auto iso = is_isomorphic(lhs.output, rhs_mod, low.rng(), low.meataxe());
  r.columns = {"side", "dim", "expansion"};
  r.rows.push_back({"delta(St (x) X)", std::to_string(lhs.output.dim()), lhs.expansion});
  r.rows.push_back({"St_{n-1} (x) Res X", std::to_string(rhs_mod.dim()), rhs_str});
  r.require(lhs.pim_expansion == rhs, "projective expansions differ");
  if (iso.conclusive) {
    r.require(iso.isomorphic, "no isomorphism between the two sides");
    r.notes.push_back(iso.isomorphic ? "explicit isomorphism found" : "modules are not isomorphic");
  } else {
    r.notes.push_back("isomorphism search inconclusive; projectives identified by composition factors");
  }
  return r;
}

VerifyReport verify_key_lemma(Context& ctx) {
  auto r = new_report("key-lemma", ctx.label(), ctx);
  const auto& ch = ctx.chain();
  const Rep& st = ctx.steinberg();
  const Rep& st_low = ctx.lower().steinberg();
  const Rep j_dual = contragredient(build_J(ctx.table()));
  r.columns = {"check", "class rep", "order", "i", "lhs", "rhs", "ok"};
  auto add = [&](const std::string& what, const KeyReport& k) {
    for (const auto& row : k.rows)
      r.rows.push_back({what, std::to_string(row.representative), std::to_string(row.element_order),
                        std::to_string(row.fixed_dim), row.lhs, row.rhs, row.ok ? "yes" : "no"});
    r.require(k.ok, what + " failed");
  };
  add("St_n(s) = p^(i-1) St_{n-1}(s)", verify_key_fact1(st, st_low, ch));
  add("J^#(s) = p^i - 1", verify_key_fact2(j_dual, *ctx.table()));
  add("#{g : g s g^-1 in GL_{n-1}}", verify_key_fact3(ch));
  add("Ind St_{n-1} = J^# St_n (characters)", verify_key_characters(st, st_low, j_dual, ch));

  Rep induced = induce(transport_aligned(st_low, ch.GLm), ctx.table());
  Rep product = tensor(j_dual, st);
  if (induced.dim() != product.dim()) r.require(false, "dimensions differ");
  if (ctx.pims_feasible()) {
    auto& pims = ctx.pims();
    const auto a = identify_projective(induced, pims, ctx.simples(), ctx.rng(), ctx.meataxe());
    const auto b = identify_projective(product, pims, ctx.simples(), ctx.rng(), ctx.meataxe());
    r.rows.push_back({"modules", "-", "-", "-", expansion_to_string(a, pims), expansion_to_string(b, pims),
                      a == b ? "yes" : "no"});
    r.require(a == b, "module-level identification differs");
  } else {
    const auto a = chop(induced, ctx.simples(), ctx.rng(), ctx.meataxe());
    const auto b = chop(product, ctx.simples(), ctx.rng(), ctx.meataxe());
    r.rows.push_back({"modules (factors)", "-", "-", "-", a.to_string(ctx.simples()), b.to_string(ctx.simples()),
                      a == b ? "yes" : "no"});
    r.require(a == b, "composition factors differ");
    r.notes.push_back("projective covers not built; projectives compared by composition factors");
  }
  return r;
}

VerifyReport verify_hc(const Rep& P, const std::string& name, Context& ctx) {
  auto r = new_report("hc", name + " over " + ctx.label(), ctx);
  const auto& ch = ctx.chain();
  Context& low = ctx.lower();
  Rep d = delta_module(P, ch);
  Rep h = hc_restrict(P, ch);
  const auto iso = is_isomorphic(d, h, low.rng(), low.meataxe());
  r.columns = {"module", "dim delta", "dim hc_restrict", "isomorphic", "conclusive"};
  r.rows.push_back({name, std::to_string(d.dim()), std::to_string(h.dim()), iso.isomorphic ? "yes" : "no",
                    iso.conclusive ? "yes" : "no"});
  if (iso.conclusive) {
    r.require(iso.isomorphic, "delta and Harish-Chandra restriction differ");
  } else {
    const auto a = identify_projective(d, low.pims(), low.simples(), low.rng(), low.meataxe());
    const auto b = identify_projective(h, low.pims(), low.simples(), low.rng(), low.meataxe());
    r.require(a == b, "delta and Harish-Chandra restriction differ");
    r.notes.push_back("isomorphism search inconclusive; compared as projectives");
  }
  return r;
}

VerifyReport verify_hc_structure(Context& ctx) {
  auto r = new_report("hc", "induction and inflation over " + ctx.label(), ctx);
  const auto& ch = ctx.chain();
  r.columns = {"check", "lhs", "rhs", "ok"};
  auto row = [&](const std::string& what, const std::string& a, const std::string& b, bool ok) {
    r.rows.push_back({what, a, b, ok ? "yes" : "no"});
    r.require(ok, what + " failed");
  };
  Rep triv_glm = Rep::trivial(ch.GLm);
  Rep lhs = inflate(induce(triv_glm, ch.L), ch.P, ch.levi_part);
  Rep rhs = induce(inflate(triv_glm, ch.GLmU, ch.glmu_to_glm), ch.P);
  const auto iso = is_isomorphic(lhs, rhs, ctx.rng(), ctx.meataxe());
  row("Inf Ind(triv) = Ind Inf(triv)", std::to_string(lhs.dim()), std::to_string(rhs.dim()),
      iso.isomorphic && iso.conclusive);

  const std::size_t index = ch.G->size() / ch.P->size();
  std::vector<std::pair<std::string, Rep>> levi_modules = {{"triv_L", Rep::trivial(ch.L)},
                                                           {"Res_L V_n", restrict(natural_module(ch.G), ch.L)}};
  std::vector<std::pair<std::string, Rep>> tests;
  auto& reg = ctx.simples();
  for (std::size_t s = 0; s < reg.size(); ++s) tests.push_back({reg.name(s), reg.simple(s)});
  if (ctx.pims_feasible())
    for (std::size_t s = 0; s < reg.size(); ++s) tests.push_back({ctx.pims().name(s), ctx.pims().pim(s)});
  for (const auto& [an, a] : levi_modules) {
    Rep ind = hc_induce(a, ch);
    row("dim hc_induce(" + an + ") = [G:P] dim", std::to_string(ind.dim()), std::to_string(index * a.dim()),
        ind.dim() == index * a.dim());
    for (const auto& [xn, X] : tests) {
      const auto left = hom_dim(hc_restrict_levi(X, ch), a);
      const auto right = hom_dim(X, ind);
      row("Hom_L(R " + xn + ", " + an + ") = Hom_G(" + xn + ", I " + an + ")", std::to_string(left),
          std::to_string(right), left == right);
    }
  }
  return r;
}

VerifyReport verify_induction_prop(Context& ctx, int D) {
  auto r = new_report("induction-prop", ctx.label(), ctx);
  r.params.push_back({"D", std::to_string(D)});
  const auto& ch = ctx.chain();
  Context& low = ctx.lower();
  const auto family = build_kernel_family(ctx.table(), D);
  r.columns = {"d", "dim Ind Inf H^d V_{n-1}", "dim family_d", "isomorphic", "conclusive"};
  for (int d = 0; d <= D; ++d) {
    Rep h = low.n() == 0 ? Rep::trivial(low.table(), d == 0 ? 1 : 0) : low.hstar(D)[d];
    Rep ind = induce(inflate(transport_aligned(h, ch.GLm), ch.GLmU, ch.glmu_to_glm), ctx.table());
    const Rep& fam = family[d];
    IsoResult iso;
    if (ind.dim() != fam.dim()) {
      iso.isomorphic = false;
    } else if (ind.dim() == 0) {
      iso.isomorphic = true;
    } else {
      iso = is_isomorphic(ind, fam, ctx.rng(), ctx.meataxe());
    }
    r.rows.push_back({std::to_string(d), std::to_string(ind.dim()), std::to_string(fam.dim()),
                      iso.isomorphic ? "yes" : "no", iso.conclusive ? "yes" : "no"});
    r.require(iso.isomorphic && iso.conclusive, "degree " + std::to_string(d) + " not matched");
  }
  return r;
}

Rep induce_outer_tensor(const Rep& P, const Rep& Q, const TablePtr& total) {
  const TablePtr& A = P.base();
  const TablePtr& B = Q.base();
  const auto r = static_cast<std::size_t>(A->n()), s = static_cast<std::size_t>(B->n());
  if (r + s != static_cast<std::size_t>(total->n()) || !total->is_root())
    throw DimensionError("induce_outer_tensor: sizes do not add up");
  const int p = total->p();
  auto block = [&](const Matrix& a, const Matrix& b) {
    Matrix m(p, r + s, r + s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m.set(i, j, a(i, j));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m.set(r + i, r + j, b(i, j));
    return m;
  };
  std::vector<ElemId> gens;
  for (ElemId g : A->generators()) gens.push_back(total->id_of(block(A->element(g), Matrix::identity(p, s))));
  for (ElemId h : B->generators()) gens.push_back(total->id_of(block(Matrix::identity(p, r), B->element(h))));
  TablePtr levi = MonoidTable::generated_by(total, gens, MonoidKind::BlockLevi,
                                            "GL_" + std::to_string(r) + " x GL_" + std::to_string(s));
  std::vector<Matrix> imgs;
  for (ElemId x : levi->generators()) {
    const Matrix& m = levi->element(x);
    Matrix a(p, r, r), b(p, s, s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a.set(i, j, m(i, j));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) b.set(i, j, m(r + i, r + j));
    imgs.push_back(kron(P.act(A->id_of(a)), Q.act(B->id_of(b))));
  }
  return induce(make_rep(levi, std::move(imgs), P.dim() * Q.dim()), total);
}

VerifyReport verify_prop_tensor(Context& er, const Rep& P, const std::string& pname, Context& fs, const Rep& Q,
                                const std::string& qname, Context& total, int D) {
  auto r = new_report("prop-tensor", "E = M_" + pname + " over " + er.label() + ", F = M_" + qname + " over " +
                                         fs.label(),
                      total);
  r.params.push_back({"D", std::to_string(D)});
  const auto E = hstar_profile(P, er, D, "E");
  const auto F = hstar_profile(Q, fs, D, "F");
  const auto dE = hstar_profile(delta(P, er).output, er.lower(), D, "dE");
  const auto dF = hstar_profile(delta(Q, fs).output, fs.lower(), D, "dF");
  Rep outer = induce_outer_tensor(P, Q, total.table());
  const auto EF = hstar_profile(outer, total, D, "E(x)F");
  const auto dres = delta(outer, total);
  r.notes.push_back("delta(Ind(P (x) Q)) = " + dres.expansion);
  const auto lhs = hstar_profile(dres.output, total.lower(), D, "delta(E(x)F)");
  const auto rhs = profile_sum({convolve(E, dF, D), convolve(dE, F, D), convolve(h_profile(D), convolve(dE, dF, D), D)}, D);
  // E (x) F itself is M of the induced module (Frobenius reciprocity).
  const auto EF_direct = convolve(E, F, D);
  r.columns = {"d", "E", "F", "dE", "dF", "E(x)F", "delta(E(x)F)", "rhs", "ok"};
  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    const bool ok = lhs.coefficients[i] == rhs.coefficients[i] && EF.coefficients[i] == EF_direct.coefficients[i];
    r.rows.push_back({std::to_string(d), std::to_string(E.coefficients[i]), std::to_string(F.coefficients[i]),
                      std::to_string(dE.coefficients[i]), std::to_string(dF.coefficients[i]),
                      std::to_string(EF.coefficients[i]), std::to_string(lhs.coefficients[i]),
                      std::to_string(rhs.coefficients[i]), ok ? "yes" : "no"});
    r.require(ok, "degree " + std::to_string(d) + " differs");
  }
  return r;
}

VerifyReport verify_hmodule(Context& mctx, int D) {
  auto r = new_report("hmodule", "I(V) (x) H*V over " + mctx.label(), mctx);
  r.params.push_back({"D", std::to_string(D)});
  const TablePtr& M = mctx.table();
  const HModule hm = build_IH(M, D);
  const bool free_ok = verify_freeness(hm, M->p());
  const bool equiv_ok = verify_h_equivariance(hm);
  const auto qi = verify_quotient_iso(M, D);
  r.columns = {"d", "dim I(x)H^d", "dim F_p (x)_H", "quotient map rank", "dim family_d"};
  for (int d = 0; d <= D; ++d) {
    const auto i = static_cast<std::size_t>(d);
    r.rows.push_back({std::to_string(d), std::to_string(hm.carrier[d].dim()),
                      i < hm.quotient_dims.size() ? std::to_string(hm.quotient_dims[i]) : "-",
                      i < qi.map_rank.size() ? std::to_string(qi.map_rank[i]) : "-",
                      i < qi.family_dim.size() ? std::to_string(qi.family_dim[i]) : "-"});
  }
  r.require(free_ok, "freeness Poincare identity fails");
  r.require(equiv_ok, "H-action is not equivariant");
  r.require(qi.ok, "quotient map is not an equivariant bijection");
  for (const auto& f : qi.failures) r.notes.push_back(f);
  r.notes.push_back(std::string("free over H: ") + (free_ok ? "yes" : "no") +
                    ", equivariant: " + (equiv_ok ? "yes" : "no"));
  return r;
}

}  // namespace deltafn
