#include "deltafn/suites.hpp"

#include <chrono>
#include <functional>

namespace deltafn {

namespace {

VerifyReport skipped(const std::string& suite, const SuiteParams& pr, const std::string& why) {
  VerifyReport r;
  r.suite = suite;
  r.subject = "GL_" + std::to_string(pr.n) + "(F_" + std::to_string(pr.p) + ")";
  r.params = {{"p", std::to_string(pr.p)}, {"n", std::to_string(pr.n)}};
  r.status = Status::Skipped;
  r.notes.push_back(why);
  return r;
}

// Run f, turning a budget overrun into a report.
void guarded(std::vector<VerifyReport>& out, const std::string& suite, const SuiteParams& pr,
             const std::function<void()>& f) {
  try {
    f();
  } catch (const BudgetExceeded& e) {
    auto r = skipped(suite, pr, e.what());
    r.status = Status::BudgetExceeded;
    out.push_back(r);
  }
}

std::vector<std::pair<std::string, Rep>> pim_list(Context& ctx) {
  std::vector<std::pair<std::string, Rep>> out;
  auto& pims = ctx.pims();
  for (std::size_t i = 0; i < pims.size(); ++i) out.push_back({pims.name(i), pims.pim(i)});
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main1",    "delta", "functor-end", "functor-gl",
                                                 "induction-prop", "hc", "main2", "key-lemma",
                                                 "prop-tensor", "examples", "hmodule"};
  return names;
}

const std::vector<DeltaExample>& delta_examples() {
  static const std::vector<DeltaExample> ex = {
      {3, "P_triv", {{"P_triv", 2}, {"St_2", 2}}},
      {3, "P_V_3", {{"P_triv", 1}, {"St_2", 1}}},
      {3, "P_V_3#", {{"P_triv", 1}, {"St_2", 1}}},
      {3, "St_3", {{"St_2", 1}}},
      {2, "St_2", {{"triv", 1}}},
  };
  return ex;
}

VerifyReport verify_example(const DeltaExample& ex, Catalog& cat) {
  Context& ctx = cat.gl(ex.n, 2);
  VerifyReport r;
  r.suite = "examples";
  r.subject = "delta_" + std::to_string(ex.n) + "(" + ex.input + ")";
  r.params = {{"p", "2"}, {"n", std::to_string(ex.n)}};
  Context& low = ctx.lower();
  auto& lp = low.pims();
  std::vector<int> expected(lp.size(), 0);
  for (const auto& [name, mult] : ex.expected) {
    bool found = false;
    for (std::size_t i = 0; i < lp.size(); ++i)
      if (lp.name(i) == name) {
        expected[i] = mult;
        found = true;
      }
    if (!found) throw AlgebraError("examples: unknown projective " + name);
  }
  const auto d = delta(ctx.named_module(ex.input), ctx);
  std::size_t expected_dim = 0;
  for (std::size_t i = 0; i < lp.size(); ++i) expected_dim += static_cast<std::size_t>(expected[i]) * lp.pim(i).dim();
  r.columns = {"input", "expected", "computed", "expected dim", "computed dim"};
  r.rows.push_back({ex.input, expansion_to_string(expected, lp), d.expansion, std::to_string(expected_dim),
                    std::to_string(d.output.dim())});
  r.require(d.pim_expansion == expected, "computed expansion differs from the expected one");
  return r;
}

VerifyReport verify_functor_gl(Context& ctx, int D) {
  VerifyReport r;
  r.suite = "functor-gl";
  r.subject = ctx.label();
  r.params = {{"p", std::to_string(ctx.p())}, {"n", std::to_string(ctx.n())}, {"D", std::to_string(D)}};
  r.columns = {"module", "dim", "dim delta", "expansion"};
  auto& pims = ctx.pims();
  std::vector<int> total(ctx.lower().pims().size(), 0);
  Rep sum;
  bool first = true;
  for (std::size_t i = 0; i < pims.size(); ++i) {
    const auto d = delta(pims.pim(i), ctx);
    r.rows.push_back({pims.name(i), std::to_string(pims.pim(i).dim()), std::to_string(d.output.dim()), d.expansion});
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += d.pim_expansion[k];
    sum = first ? pims.pim(i) : direct_sum(sum, pims.pim(i));
    first = false;
  }
  const auto ds = delta(sum, ctx);
  r.rows.push_back({"sum of all PIMs", std::to_string(sum.dim()), std::to_string(ds.output.dim()), ds.expansion});
  r.require(ds.pim_expansion == total, "delta is not additive on the sum of the PIMs");
  const auto reg = verify_delta_theorem(regular(ctx.table()), "regular", ctx, D);
  for (const auto& row : reg.rows)
    if (row.back() != "yes") r.require(false, "graded identity fails for the regular module in degree " + row.front());
  r.notes.push_back("regular module: " + reg.notes.front());
  return r;
}

std::vector<VerifyReport> run_suite(const std::string& suite, Catalog& cat, const SuiteParams& pr) {
  std::vector<VerifyReport> out;
  const int D = pr.degree();
  auto timed = [&](VerifyReport r, std::chrono::steady_clock::time_point t0) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  auto now = [] { return std::chrono::steady_clock::now(); };
  if (pr.p != 2 && pr.p != 3) throw DimensionError("only p = 2 and p = 3 are supported");
  if (pr.n < 1 || pr.n > 3) throw DimensionError("only 1 <= n <= 3 is supported");

  if (suite == "main1") {
    guarded(out, suite, pr, [&] {
      Context& ctx = cat.gl(pr.n, pr.p);
      for (const auto& [name, P] : pim_list(ctx)) {
        auto t0 = now();
        timed(verify_main1(P, name, ctx, D), t0);
      }
    });
    if (pr.n <= 2) {
      auto t0 = now();
      Context& m = cat.monoid(pr.n, pr.p);
      timed(verify_main1(regular(m.table()), "regular", m, D), t0);
    }
  } else if (suite == "delta") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    guarded(out, suite, pr, [&] {
      Context& ctx = cat.gl(pr.n, pr.p);
      for (const auto& [name, P] : pim_list(ctx)) {
        auto t0 = now();
        timed(verify_delta_theorem(P, name, ctx, D), t0);
      }
    });
  } else if (suite == "functor-end") {
    if (pr.n > 2) return {skipped(suite, pr, "regular module of M_3 is not split; n <= 2 only")};
    auto t0 = now();
    timed(verify_functor_end(cat.monoid(pr.n, pr.p), D), t0);
  } else if (suite == "functor-gl") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    guarded(out, suite, pr, [&] {
      auto t0 = now();
      timed(verify_functor_gl(cat.gl(pr.n, pr.p), D), t0);
    });
  } else if (suite == "induction-prop") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    auto t0 = now();
    timed(verify_induction_prop(cat.gl(pr.n, pr.p), D), t0);
  } else if (suite == "hc") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    Context& ctx = cat.gl(pr.n, pr.p);
    if (!ctx.pims_feasible())
      return {skipped(suite, pr, "projective covers of " + ctx.label() + " are over the regular-module budget")};
    for (const auto& [name, P] : pim_list(ctx)) {
      auto t0 = now();
      timed(verify_hc(P, name, ctx), t0);
    }
    auto t0 = now();
    timed(verify_hc_structure(ctx), t0);
  } else if (suite == "main2") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    guarded(out, suite, pr, [&] {
      Context& ctx = cat.gl(pr.n, pr.p);
      auto& reg = ctx.simples();
      for (std::size_t i = 0; i < reg.size(); ++i) {
        auto t0 = now();
        timed(verify_main2(reg.simple(i), reg.name(i), ctx), t0);
      }
    });
  } else if (suite == "key-lemma") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    auto t0 = now();
    timed(verify_key_lemma(cat.gl(pr.n, pr.p)), t0);
  } else if (suite == "prop-tensor") {
    if (pr.n < 2) return {skipped(suite, pr, "needs n >= 2")};
    guarded(out, suite, pr, [&] {
      Context& total = cat.gl(pr.n, pr.p);
      if (!total.lower().pims_feasible()) throw BudgetExceeded("lower group too large");
      for (int r = 1; r < pr.n; ++r) {
        Context& er = cat.gl(r, pr.p);
        Context& fs = cat.gl(pr.n - r, pr.p);
        for (const auto& [pn, P] : pim_list(er))
          for (const auto& [qn, Q] : pim_list(fs)) {
            auto t0 = now();
            timed(verify_prop_tensor(er, P, pn, fs, Q, qn, total, D), t0);
          }
      }
    });
  } else if (suite == "examples") {
    if (pr.p != 2) return {skipped(suite, pr, "the worked examples are over F_2")};
    for (const auto& ex : delta_examples()) {
      if (ex.n > pr.n) continue;
      auto t0 = now();
      timed(verify_example(ex, cat), t0);
    }
  } else if (suite == "hmodule") {
    auto t0 = now();
    timed(verify_hmodule(cat.monoid(pr.n, pr.p), D), t0);
  } else {
    throw AlgebraError("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace deltafn
