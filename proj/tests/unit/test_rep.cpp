#include <random>

#include "deltafn/rep.hpp"
#include "doctest.h"

using namespace deltafn;

namespace {

Rep random_rep_sum(const TablePtr& G, std::mt19937_64& rng) {
  std::vector<Rep> pool{Rep::trivial(G), natural_module(G), dual_natural_module(G)};
  Rep a = pool[rng() % pool.size()];
  if (rng() % 2) a = tensor(a, pool[rng() % pool.size()]);
  if (rng() % 2) a = direct_sum(a, pool[rng() % pool.size()]);
  return a;
}

}  // namespace

TEST_CASE("module constructors satisfy the table relations") {
  for (auto G : {build_gl(2, 2), build_gl(3, 2), build_gl(2, 3), build_m(2, 2), build_m(2, 3)}) {
    CHECK(function_module(G).check_relations(50, 1));
    CHECK(regular(G).check_relations(20, 2));
    CHECK(dual_natural_module(G).check_relations(50, 3));
    if (G->is_group()) {
      CHECK(natural_module(G).check_relations(50, 4));
      CHECK(contragredient(natural_module(G)).check_relations(50, 5));
    }
  }
  CHECK(regular(build_gl(2, 2)).dim() == 6);
  CHECK(function_module(build_m(2, 2)).dim() == 4);
}

TEST_CASE("all_actions matches act") {
  auto G = build_gl(2, 3);
  Rep a = tensor(natural_module(G), dual_natural_module(G));
  auto acts = a.all_actions();
  for (ElemId g = 0; g < static_cast<ElemId>(G->size()); ++g) CHECK(acts[static_cast<std::size_t>(g)] == a.act(g));
}

TEST_CASE("hom_space agrees with the direct solve") {
  std::mt19937_64 rng(21);
  for (auto G : {build_gl(2, 2), build_gl(3, 2), build_gl(2, 3), build_m(2, 2)}) {
    for (int t = 0; t < 8; ++t) {
      Rep a = G->is_group() ? random_rep_sum(G, rng) : direct_sum(Rep::trivial(G), dual_natural_module(G));
      Rep b = G->is_group() ? random_rep_sum(G, rng) : tensor(dual_natural_module(G), dual_natural_module(G));
      auto hs = hom_space(a, b);
      auto direct = hom_space_direct(a, b);
      CHECK(hs.dim == direct.size());
      for (auto& f : hs.basis) CHECK(is_homomorphism(a, b, f));
      if (!hs.basis.empty()) {
        std::vector<Matrix> flat;
        Matrix stacked(a.p(), 0, a.dim() * b.dim());
        for (auto& f : hs.basis) {
          Matrix r(a.p(), 1, a.dim() * b.dim());
          for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) r.set(0, i * b.dim() + j, f(i, j));
          stacked.append_row(r.row(0));
        }
        CHECK(rank(stacked) == hs.dim);
      }
    }
  }
}

TEST_CASE("hom space examples") {
  auto G = build_gl(2, 2);
  CHECK(hom_dim(Rep::trivial(G), Rep::trivial(G)) == 1);
  Rep reg = regular(G);
  Rep b = tensor(natural_module(G), natural_module(G));
  CHECK(hom_dim(reg, b) == b.dim());
  CHECK(hom_dim(natural_module(G), Rep::trivial(G)) == 0);

  auto G3 = build_gl(3, 2);
  CHECK(hom_dim(natural_module(G3), contragredient(natural_module(G3))) == 0);
  CHECK(hom_dim(natural_module(G3), natural_module(G3)) == 1);
  CHECK_THROWS_AS(hom_space(natural_module(G), natural_module(G3)), DimensionError);
}

TEST_CASE("contragredient") {
  auto G = build_gl(3, 2);
  Rep v = natural_module(G);
  Rep dd = contragredient(contragredient(v));
  CHECK(dd.gen_images() == v.gen_images());
  Rep t = contragredient(Rep::trivial(G));
  CHECK(t.gen_images() == Rep::trivial(G).gen_images());
}

TEST_CASE("tensor-hom adjunction dimensions") {
  std::mt19937_64 rng(4);
  for (auto G : {build_gl(2, 2), build_gl(2, 3), build_gl(3, 2)}) {
    for (int t = 0; t < 5; ++t) {
      Rep a = random_rep_sum(G, rng), b = random_rep_sum(G, rng), m = random_rep_sum(G, rng);
      CHECK(hom_dim(tensor(a, m), b) == hom_dim(a, tensor(contragredient(m), b)));
    }
  }
}

TEST_CASE("restriction, induction, inflation") {
  auto G3 = build_gl(3, 2);
  auto ch = parabolic_chain(G3);
  CHECK(restrict(natural_module(G3), ch.GLm).dim() == 3);

  // Ind from GL_2 U of the inflated trivial module has dimension 7.
  Rep triv_glmu = Rep::trivial(ch.GLmU);
  CHECK(induce(triv_glmu, G3).dim() == 7);

  auto G2 = build_gl(2, 2);
  auto ch2 = parabolic_chain(G2);
  Rep ind = induce(Rep::trivial(ch2.U), G2);
  CHECK(ind.dim() == 3);
  CHECK(ind.check_relations(30, 9));
  // Res of the regular module to U: three copies of the regular F_2[U].
  Rep res = restrict(regular(G2), ch2.U);
  CHECK(hom_dim(regular(ch2.U), res) == 6);
  CHECK(hom_dim(res, Rep::trivial(ch2.U)) == 3);

  // flag module of GL_3(F_2)
  auto B = borel_subgroup(G3);
  CHECK(induce(Rep::trivial(B), G3).dim() == 21);

  // Inflate St-like module from GL_2 to GL_2 U and restrict back.
  Rep v2 = natural_module(ch.lower);
  Rep on_glm = transport_aligned(v2, ch.GLm);
  Rep infl = inflate(on_glm, ch.GLmU, ch.glmu_to_glm);
  CHECK(infl.dim() == 2);
  auto u_emb = relative_embedding(*ch.U, *ch.GLmU);
  for (ElemId u = 0; u < static_cast<ElemId>(ch.U->size()); ++u)
    CHECK(infl.act(u_emb[static_cast<std::size_t>(u)]).is_identity());
  Rep back = restrict(infl, ch.GLm);
  for (ElemId g = 0; g < static_cast<ElemId>(ch.GLm->size()); ++g) CHECK(back.act(g) == on_glm.act(g));
  CHECK_THROWS_AS(inflate(on_glm, ch.GLmU, {}), AlgebraError);
}

TEST_CASE("Frobenius reciprocity") {
  std::mt19937_64 rng(8);
  for (auto G : {build_gl(2, 2), build_gl(2, 3), build_gl(3, 2)}) {
    auto ch = parabolic_chain(G);
    for (int t = 0; t < 20; ++t) {
      Rep b = random_rep_sum(G, rng);
      Rep a_low = (t % 2) ? Rep::trivial(ch.GLmU) : restrict(random_rep_sum(G, rng), ch.GLmU);
      CHECK(hom_dim(induce(a_low, G), b) == hom_dim(a_low, restrict(b, ch.GLmU)));
    }
  }
}

TEST_CASE("coinvariants") {
  auto G2 = build_gl(2, 2);
  auto ch2 = parabolic_chain(G2);
  auto c = coinvariants(regular(ch2.U), ch2.U, ch2.U);
  CHECK(c.module.dim() == 1);
  auto triv = coinvariants(Rep::trivial(ch2.P, 3), ch2.U, ch2.P);
  CHECK(triv.module.dim() == 3);

  auto G3 = build_gl(3, 2);
  auto ch = parabolic_chain(G3);
  Rep reg = restrict(regular(G3), ch.GLmU);
  auto cr = coinvariants(reg, ch.U, ch.GLm);
  CHECK(cr.module.dim() == 168 / 4);
  CHECK(cr.module.check_relations(30, 3));
  // projection is equivariant for the acting group
  auto emb = relative_embedding(*ch.GLm, *ch.GLmU);
  for (ElemId g : ch.GLm->generators())
    CHECK(reg.act(emb[static_cast<std::size_t>(g)]) * cr.projection == cr.projection * cr.module.act(g));

  // Right exactness: V_3 (+) triv surjects onto V_3; coinvariant map stays onto.
  Rep v = restrict(natural_module(G3), ch.GLmU);
  auto cv = coinvariants(v, ch.U, ch.GLm);
  CHECK(cv.module.dim() <= 3);

  // the Borel does not normalise U in general: a transvection subgroup fails
  CHECK_THROWS_AS(coinvariants(restrict(regular(G3), G3), ch.U, weyl_subgroup(G3)), AlgebraError);
}

TEST_CASE("submodule and quotient") {
  auto G = build_gl(2, 3);
  Rep f = function_module(G);
  Matrix ones(3, 1, f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) ones.set(0, i, 1);
  // constants are the span of the all-ones function
  Matrix sp = spin(f, ones);
  CHECK(sp.rows() == 1);
  Rep cst = submodule(f, sp);
  CHECK(cst.dim() == 1);
  Rep q = quotient(f, sp);
  CHECK(q.dim() == 8);
  CHECK(q.check_relations(30, 1));
  Matrix e0(3, 1, f.dim());
  e0.set(0, 1, 1);
  CHECK_THROWS_AS(submodule(f, e0), AlgebraError);
}

TEST_CASE("perm module closure") {
  auto G = build_gl(2, 2);
  CHECK_THROWS_AS(perm_module(G, 2, [](std::size_t, std::size_t) { return std::size_t{5}; }), AlgebraError);
}
