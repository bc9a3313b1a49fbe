// Acceptance runner: one PASS/FAIL line per criterion, with the time limit
// of each criterion fixed below. Exit status is nonzero when any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "deltafn/brauer.hpp"
#include "deltafn/suites.hpp"

using namespace deltafn;

namespace {

struct Outcome {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> notes;
  void require(bool c, const std::string& note) {
    ++checks;
    if (!c) {
      ok = false;
      if (std::find(notes.begin(), notes.end(), note) == notes.end()) notes.push_back(note);
    }
  }
  void absorb(const VerifyReport& r) {
    checks += static_cast<int>(r.rows.size());
    if (r.status == Status::Skipped || r.status == Status::BudgetExceeded) {
      notes.push_back(r.subject + ": " + to_string(r.status));
      return;
    }
    require(r.passed(), r.suite + " " + r.subject + ": " + (r.notes.empty() ? to_string(r.status) : r.notes.back()));
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

constexpr double kExamplesLimit = 60;
constexpr double kCountingLimit = 10;
constexpr double kFactsLimit = 30;
constexpr double kMain2Limit = 300;
constexpr double kDeltaLimit = 600;
constexpr double kMain1Limit = 600;
constexpr double kHModuleLimit = 600;
constexpr double kHcLimit = 600;
constexpr double kOracleLimit = 600;
constexpr double kTotalLimit = 1200;

const std::vector<std::pair<int, int>> kSmall = {{2, 2}, {3, 2}, {2, 3}};

int degree_for(int p) { return p == 2 ? 12 : 14; }

Outcome examples(Catalog& cat) {
  Outcome o;
  for (const auto& ex : delta_examples()) {
    const auto r = verify_example(ex, cat);
    o.absorb(r);
    if (!r.passed() && !r.rows.empty()) {
      const auto& row = r.rows.front();
      o.notes.push_back("  expected " + row[1] + " (dim " + row[3] + "), computed " + row[2] + " (dim " + row[4] + ")");
    }
  }
  return o;
}

Outcome counting(Catalog& cat) {
  Outcome o;
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
    const auto r = verify_key_fact3(cat.gl(n, p).chain());
    for (const auto& row : r.rows) o.require(row.ok, "conjugator count on " + cat.gl(n, p).label() + " at class of " + std::to_string(row.representative));
    o.require(r.ok && r.rows.size() == p_regular_classes(*cat.gl(n, p).table()).size(), "class coverage on " + cat.gl(n, p).label());
  }
  return o;
}

Outcome facts(Catalog& cat) {
  Outcome o;
  for (int p : {2, 3})
    for (int n : {1, 2, 3}) {
      auto& ctx = cat.gl(n, p);
      const Rep jd = contragredient(build_J(ctx.table()));
      const std::size_t classes = p_regular_classes(*ctx.table()).size();
      const auto f2 = verify_key_fact2(jd, *ctx.table());
      for (const auto& row : f2.rows) o.require(row.ok, "J^# character on " + ctx.label());
      o.require(f2.ok && f2.rows.size() == classes, "J^# class coverage on " + ctx.label());
      if (n >= 2) {
        const auto f1 = verify_key_fact1(ctx.steinberg(), ctx.lower().steinberg(), ctx.chain());
        for (const auto& row : f1.rows) o.require(row.ok, "Steinberg character on " + ctx.label());
        o.require(f1.ok && !f1.rows.empty(), "Steinberg class coverage on " + ctx.label());
      }
    }
  return o;
}

Outcome main2(Catalog& cat) {
  Outcome o;
  for (auto [n, p] : kSmall) {
    auto& ctx = cat.gl(n, p);
    auto& reg = ctx.simples();
    for (std::size_t s = 0; s < reg.size(); ++s) {
      const auto r = verify_main2(reg.simple(s), reg.name(s), ctx);
      o.absorb(r);
      bool explicit_iso = false;
      for (const auto& note : r.notes) explicit_iso = explicit_iso || note == "explicit isomorphism found";
      o.require(explicit_iso, "no explicit isomorphism for " + r.subject);
    }
  }
  return o;
}

Outcome delta_graded(Catalog& cat) {
  Outcome o;
  for (auto [n, p] : kSmall) {
    auto& ctx = cat.gl(n, p);
    auto& pims = ctx.pims();
    for (std::size_t s = 0; s < pims.size(); ++s)
      o.absorb(verify_delta_theorem(pims.pim(s), pims.name(s), ctx, degree_for(p)));
  }
  return o;
}

Outcome main1(Catalog& cat) {
  Outcome o;
  const int D = 12;
  for (auto [n, p] : kSmall) {
    auto& ctx = cat.gl(n, p);
    auto& pims = ctx.pims();
    for (std::size_t s = 0; s < pims.size(); ++s) o.absorb(verify_main1(pims.pim(s), pims.name(s), ctx, D));
  }
  for (int p : {2, 3}) {
    auto& m = cat.monoid(2, p);
    o.absorb(verify_main1(regular(m.table()), "regular", m, D));
  }
  return o;
}

Outcome hmodule(Catalog& cat) {
  Outcome o;
  for (int n : {1, 2, 3}) {
    auto& m = cat.monoid(n, 2);
    o.absorb(verify_hmodule(m, 12));
    const auto q = verify_quotient_iso(m.table(), 12);
    o.require(q.ok, "quotient map on " + m.label());
  }
  return o;
}

Outcome hc(Catalog& cat) {
  Outcome o;
  for (int p : {2, 3})
    for (int n : {2, 3}) {
      auto& ctx = cat.gl(n, p);
      if (!ctx.pims_feasible()) {
        o.notes.push_back(ctx.label() + ": skipped, projective covers over the regular-module budget");
        continue;
      }
      auto& pims = ctx.pims();
      for (std::size_t s = 0; s < pims.size(); ++s) o.absorb(verify_hc(pims.pim(s), pims.name(s), ctx));
    }
  return o;
}

Matrix random_matrix(int p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % static_cast<unsigned>(p)));
  return m;
}

Outcome oracles(Catalog& cat) {
  Outcome o;
  std::mt19937_64 rng(1);
  // rref and kernels
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 2 ? 3 : 2;
    const std::size_t r = 1 + rng() % 20, c = 1 + rng() % 20;
    const Matrix m = random_matrix(p, r, c, rng);
    const Matrix k = kernel_basis(m);
    const std::size_t rk = rank(m);
    o.require(rk + k.rows() == c, "rank-nullity");
    if (k.rows()) o.require((m * k.transpose()).is_zero(), "kernel annihilates");
    const auto rr = rref(m);
    o.require(rr.rank == rk && rank(rr.reduced) == rk, "rref rank");
    o.require(rank(m.transpose()) == rk, "row rank equals column rank");
  }
  for (auto [n, p] : kSmall) {
    auto& ctx = cat.gl(n, p);
    auto& reg = ctx.simples();
    const auto& ch = ctx.chain();
    auto& lower = ctx.lower().simples();
    // chop bookkeeping
    for (const Rep& m : {regular(ctx.table()), tensor(natural_module(ctx.table()), dual_natural_module(ctx.table())),
                         build_J(ctx.table()), function_module(ctx.table())}) {
      const auto f = chop(m, reg, ctx.rng(), ctx.meataxe());
      o.require(f.total_dim(reg) == m.dim(), "chop dimension on " + ctx.label());
    }
    // Frobenius reciprocity on sampled pairs of simples
    for (int trial = 0; trial < 6; ++trial) {
      const Rep& a = lower.simple(rng() % lower.size());
      const Rep& b = reg.simple(rng() % reg.size());
      const Rep a_sub = transport_aligned(a, ch.GLm);
      o.require(hom_dim(induce(a_sub, ctx.table()), b) == hom_dim(a_sub, restrict(b, ch.GLm)),
                "Hom(Ind a, b) = Hom(a, Res b) on " + ctx.label());
      o.require(hom_dim(b, induce(a_sub, ctx.table())) == hom_dim(restrict(b, ch.GLm), a_sub),
                "Hom(b, Ind a) = Hom(Res b, a) on " + ctx.label());
    }
    // Fitting certificates
    for (const Rep& m : {regular(ctx.table()), direct_sum(natural_module(ctx.table()), build_J(ctx.table()))}) {
      const auto d = fitting_split(m, ctx.rng(), ctx.meataxe());
      o.require(check_certificates(m, d), "Fitting certificates on " + ctx.label());
      std::size_t total = 0;
      for (const auto& s : d.summands) total += s.module.dim();
      o.require(total == m.dim(), "summand dimensions on " + ctx.label());
    }
  }
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  Catalog cat;
  const std::vector<Criterion> criteria = {
      {1, "delta examples on GL_3(F_2) and GL_2(F_2)", kExamplesLimit, [&] { return examples(cat); }},
      {2, "conjugator counts on GL_3(F_2), GL_2(F_3)", kCountingLimit, [&] { return counting(cat); }},
      {3, "Brauer character identities, n <= 3, p in {2,3}", kFactsLimit, [&] { return facts(cat); }},
      {4, "delta(St (x) X) = St (x) Res X over all simples", kMain2Limit, [&] { return main2(cat); }},
      {5, "graded delta identity for every PIM", kDeltaLimit, [&] { return delta_graded(cat); }},
      {6, "J, I, Gr profiles coincide", kMain1Limit, [&] { return main1(cat); }},
      {7, "H-module freeness and the quotient map, n <= 3, p = 2", kHModuleLimit, [&] { return hmodule(cat); }},
      {8, "delta(P) = Harish-Chandra restriction of P", kHcLimit, [&] { return hc(cat); }},
      {9, "oracle property checks", kOracleLimit, [&] { return oracles(cat); }},
  };
  bool all = true;
  const auto start = clock::now();
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.notes.push_back("time limit exceeded");
    }
    all = all && o.ok;
    std::printf("criterion %d: %s  %s  (%d checks, %.2f s, limit %.0f s)\n", c.number, o.ok ? "PASS" : "FAIL",
                c.title.c_str(), o.checks, secs, c.limit_seconds);
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  const bool in_time = total <= kTotalLimit;
  std::printf("total: %s  (%.2f s, limit %.0f s)\n", in_time ? "PASS" : "FAIL", total, kTotalLimit);
  return all && in_time ? 0 : 1;
}
