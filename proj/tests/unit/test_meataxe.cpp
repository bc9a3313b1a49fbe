#include <algorithm>
#include <random>

#include "deltafn/brauer.hpp"
#include "deltafn/context.hpp"
#include "deltafn/meataxe.hpp"
#include "doctest.h"

using namespace deltafn;

namespace {

Matrix random_invertible(int p, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<long long>(rng() % static_cast<unsigned>(p)));
    if (is_invertible(m)) return m;
  }
}

Rep conjugate(const Rep& a, const Matrix& T) {
  std::vector<Matrix> imgs;
  const Matrix Ti = inverse(T);
  for (const auto& g : a.gen_images()) imgs.push_back(Ti * g * T);
  return make_rep(a.base(), std::move(imgs), a.dim());
}

// Brauer characters of the factors add up to that of the module.
void check_brauer_consistent(const Rep& a, const FactorMultiset& f, const SimpleRegistry& reg) {
  const auto table = brauer_classes(*a.base());
  const auto lhs = brauer_character(a, table);
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    CyclotomicInt sum(1, 0);
    for (const auto& [id, m] : f.mult)
      sum += brauer_character(reg.simple(id), table)[c] * CyclotomicInt(1, m);
    CHECK(sum == lhs[c]);
  }
}

}  // namespace

TEST_CASE("composition factors of the regular module of GL_2(F_2)") {
  auto G = build_gl(2, 2);
  Rng rng(1);
  SimpleRegistry reg(G);
  const auto f = chop(regular(G), reg, rng);
  REQUIRE(reg.size() == 2);
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < reg.size(); ++i) dims.push_back(reg.simple(i).dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2});
  for (const auto& [id, m] : f.mult) CHECK(m == 2);
  CHECK(f.total_dim(reg) == 6);
  check_brauer_consistent(regular(G), f, reg);
  const auto t = chop(Rep::trivial(G), reg, rng);
  CHECK(t.mult.size() == 1);
  CHECK(reg.simple(t.mult.begin()->first).dim() == 1);
}

TEST_CASE("chopping the regular module finds every simple") {
  struct Case {
    TablePtr table;
    std::size_t simples;
  };
  // counts of p-regular classes (groups) and their sums over ranks (monoids)
  for (const auto& c : std::vector<Case>{{build_gl(1, 2), 1},
                                         {build_gl(2, 2), 2},
                                         {build_gl(3, 2), 4},
                                         {build_gl(1, 3), 2},
                                         {build_gl(2, 3), 6},
                                         {build_m(2, 2), 4},
                                         {build_m(2, 3), 9}}) {
    Rng rng(11);
    SimpleRegistry reg(c.table);
    saturate(reg, {regular(c.table)}, 0, rng);
    CHECK(reg.size() == c.simples);
    for (std::size_t i = 0; i < reg.size(); ++i) {
      CHECK(is_irreducible(reg.simple(i), rng));
      for (std::size_t j = 0; j < i; ++j) CHECK(hom_dim(reg.simple(i), reg.simple(j)) == 0);
    }
    if (c.table->is_group()) CHECK(reg.size() == p_regular_classes(*c.table).size());
  }
}

TEST_CASE("chop is additive and respects Brauer characters") {
  for (auto G : {build_gl(3, 2), build_gl(2, 3)}) {
    Rng rng(2);
    SimpleRegistry reg(G);
    saturate(reg, {regular(G)}, 0, rng);
    const Rep V = natural_module(G), W = dual_natural_module(G);
    const Rep VW = tensor(V, W);
    const auto fv = chop(V, reg, rng), fw = chop(W, reg, rng), fvw = chop(VW, reg, rng);
    CHECK(chop(direct_sum(V, VW), reg, rng) == fv + fvw);
    check_brauer_consistent(VW, fvw, reg);
    check_brauer_consistent(tensor(VW, V), chop(tensor(VW, V), reg, rng), reg);
    CHECK(fvw.total_dim(reg) == VW.dim());
    CHECK(chop(contragredient(V), reg, rng) == fw);
  }
}

TEST_CASE("irreducibility and submodules") {
  auto G = build_gl(3, 2);
  Rng rng(4);
  CHECK(is_irreducible(natural_module(G), rng));
  CHECK(is_irreducible(Rep::trivial(G), rng));
  CHECK_FALSE(is_irreducible(function_module(G), rng));
  const auto sub = find_submodule(function_module(G), rng);
  REQUIRE(sub);
  const Rep S = submodule(function_module(G), *sub);
  CHECK(S.dim() > 0);
  CHECK(S.dim() < 8);
  CHECK(S.check_relations(40, 1));
  CHECK(quotient(function_module(G), *sub).dim() == 8 - S.dim());
}

TEST_CASE("isomorphism tests") {
  std::mt19937_64 gen(9);
  auto G3 = build_gl(3, 2);
  Rng rng(5);
  const Rep V = natural_module(G3), W = dual_natural_module(G3);
  CHECK_FALSE(is_isomorphic(V, W, rng).isomorphic);
  const Rep V2 = conjugate(V, random_invertible(2, 3, gen));
  auto r = is_isomorphic(V, V2, rng);
  CHECK(r.isomorphic);
  CHECK(is_invertible(r.witness));
  CHECK(is_homomorphism(V, V2, r.witness));
  // two-dimensional simple of GL_2(F_2) is self-dual
  auto G2 = build_gl(2, 2);
  CHECK(is_isomorphic(natural_module(G2), dual_natural_module(G2), rng).isomorphic);
  // sums in either order, after a change of basis
  const Rep A = direct_sum(V, tensor(V, W)), B = direct_sum(tensor(V, W), W);
  const Rep Ab = conjugate(direct_sum(tensor(V, W), V), random_invertible(2, A.dim(), gen));
  auto s = is_isomorphic(A, Ab, rng);
  CHECK(s.isomorphic);
  CHECK(is_homomorphism(A, Ab, s.witness));
  auto t = is_isomorphic(A, B, rng);
  CHECK_FALSE(t.isomorphic);
  // same composition factors, not isomorphic: F_2[V] against its semisimplification
  auto F = function_module(G2);
  SimpleRegistry reg(G2);
  const auto f = chop(F, reg, rng);
  std::vector<Rep> parts;
  for (const auto& [id, m] : f.mult)
    for (int k = 0; k < m; ++k) parts.push_back(reg.simple(id));
  const Rep ss = direct_sum(parts);
  if (hom_dim(ss, F) != hom_dim(F, F)) CHECK_FALSE(is_isomorphic(F, ss, rng).isomorphic);
  CHECK_FALSE(is_isomorphic(V, Rep::trivial(G3, 3), rng).isomorphic);
}

TEST_CASE("Fitting decomposition with certificates") {
  auto G = build_gl(2, 2);
  Rng rng(6);
  const Rep R = regular(G);
  const auto d = fitting_split(R, rng);
  CHECK(d.complete);
  CHECK(check_certificates(R, d));
  std::vector<std::size_t> dims;
  for (const auto& s : d.summands) {
    dims.push_back(s.module.dim());
    CHECK(endomorphism_ring_is_local(s.module).value_or(true));
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{2, 2, 2});
  CHECK(endomorphism_ring_is_local(Rep::trivial(G)) == std::optional<bool>(true));
  CHECK(endomorphism_ring_is_local(Rep::trivial(G, 2)) == std::optional<bool>(false));
  auto G3 = build_gl(3, 2);
  const Rep M = direct_sum(natural_module(G3), tensor(natural_module(G3), dual_natural_module(G3)));
  const auto e = fitting_split(M, rng);
  CHECK(check_certificates(M, e));
  std::size_t total = 0;
  for (const auto& s : e.summands) total += s.module.dim();
  CHECK(total == M.dim());
  CHECK(e.summands.size() >= 2);
}

TEST_CASE("projective indecomposables") {
  Catalog cat;
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto& ctx = cat.gl(n, p);
    auto& reg = ctx.simples();
    auto& pims = ctx.pims();
    REQUIRE(pims.size() == reg.size());
    std::size_t total = 0;
    for (std::size_t s = 0; s < reg.size(); ++s) {
      total += reg.simple(s).dim() * pims.pim(s).dim();
      // F_p is a splitting field: each cover occurs dim S times in the regular module
      CHECK(pims.multiplicity(static_cast<std::size_t>(s)) == static_cast<int>(reg.simple(s).dim()));
      for (std::size_t t = 0; t < reg.size(); ++t) {
        CHECK(hom_dim(pims.pim(s), reg.simple(t)) == (s == t ? 1u : 0u));
        CHECK(pims.cartan()[s][t] == pims.cartan()[t][s]);
      }
    }
    CHECK(total == ctx.table()->size());
    // Steinberg module is projective and simple
    const auto st = reg.lookup(ctx.steinberg());
    REQUIRE(st);
    CHECK(pims.pim(*st).dim() == ctx.steinberg().dim());
  }
  auto& ctx = cat.gl(3, 2);
  auto& reg = ctx.simples();
  auto& pims = ctx.pims();
  std::vector<int> want(reg.size(), 0);
  want[0] = 2;
  want[reg.size() - 1] = 1;
  const Rep P = assemble_projective(want, pims);
  CHECK(identify_projective(P, pims, reg, ctx.rng()) == want);
  std::vector<int> dims;
  for (std::size_t s = 0; s < reg.size(); ++s) dims.push_back(static_cast<int>(reg.simple(s).dim()));
  CHECK(identify_projective(regular(ctx.table()), pims, reg, ctx.rng()) == dims);
  CHECK_THROWS_AS(identify_projective(Rep::trivial(ctx.table()), pims, reg, ctx.rng()), AlgebraError);
  CHECK(expansion_to_string(std::vector<int>{2, 0, 0, 1}, pims).find("2·P_triv") != std::string::npos);
}
