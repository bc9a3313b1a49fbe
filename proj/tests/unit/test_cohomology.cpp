#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "deltafn/cohomology.hpp"
#include "deltafn/meataxe.hpp"
#include "doctest.h"

using namespace deltafn;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Poincare series coefficient of F_2[t_1..t_n] or Lambda(n) (x) F_p[n].
long long expected_hstar(int n, int d, int p) {
  if (n == 0) return d == 0 ? 1 : 0;
  if (p == 2) return binom(n - 1 + d, d);
  long long total = 0;
  for (int a = 0; a <= n && a <= d; ++a)
    if ((d - a) % 2 == 0) total += binom(n, a) * binom(n - 1 + (d - a) / 2, (d - a) / 2);
  return total;
}

using Poly2 = std::map<std::vector<int>, int>;

Poly2 mul2(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] ^= (ca & cb);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Total square of a monomial: product of (t_j + t_j^2)^{a_j}.
Poly2 total_square(const std::vector<int>& exps) {
  const std::size_t n = exps.size();
  Poly2 acc{{std::vector<int>(n, 0), 1}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> e1(n, 0), e2(n, 0);
    e1[j] = 1;
    e2[j] = 2;
    const Poly2 factor{{e1, 1}, {e2, 1}};
    for (int k = 0; k < exps[j]; ++k) acc = mul2(acc, factor);
  }
  return acc;
}

}  // namespace

TEST_CASE("Poincare series of H*V") {
  for (int p : {2, 3})
    for (int n = 0; n <= 3; ++n)
      for (int d = 0; d <= 14; ++d) CHECK(static_cast<long long>(hstar_dim(n, d, p)) == expected_hstar(n, d, p));
  auto G = build_gl(2, 2);
  auto H = build_hstar(G, 6);
  CHECK(H.dims() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  auto H31 = build_hstar(build_gl(1, 3), 6);
  CHECK(H31.dims() == std::vector<std::size_t>(7, 1));
  for (auto T : {build_gl(3, 2), build_m(2, 3)}) {
    auto h = build_hstar(T, 4);
    CHECK(h[0].dim() == 1);
    for (const auto& g : h[0].gen_images()) CHECK(g.is_identity());
    for (int d = 0; d <= 4; ++d) CHECK(h[d].check_relations(30, static_cast<std::uint64_t>(d)));
  }
}

TEST_CASE("J, I and Gr have dimension p^n - 1 and the same composition factors") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    for (auto T : {build_gl(n, p), build_m(n, p)}) {
      Rep J = build_J(T), I = build_I(T), Gr = build_Gr(T);
      const std::size_t q = static_cast<std::size_t>(p == 2 ? (1 << n) - 1 : (n == 2 ? 8 : 26));
      CHECK(J.dim() == q);
      CHECK(I.dim() == q);
      CHECK(Gr.dim() == q);
      CHECK(I.check_relations(40, 1));
      CHECK(Gr.check_relations(40, 2));
      Rng rng(3);
      SimpleRegistry reg(T);
      const auto a = chop(J, reg, rng), b = chop(I, reg, rng), c = chop(Gr, reg, rng);
      CHECK(a == b);
      CHECK(b == c);
    }
  }
}

TEST_CASE("Gr(V_2) at p = 2 is V^* plus the top exterior power") {
  auto G = build_gl(2, 2);
  Rng rng(5);
  SimpleRegistry reg(G);
  const auto f = chop(build_Gr(G), reg, rng);
  const auto g = chop(direct_sum(dual_natural_module(G), Rep::trivial(G)), reg, rng);
  CHECK(f == g);
}

TEST_CASE("I(V) tensor H*V is a free H-module with an equivariant H-action") {
  for (auto [n, p, D] : std::vector<std::tuple<int, int, int>>{{1, 2, 12}, {2, 2, 12}, {3, 2, 12}, {1, 3, 14}, {2, 3, 14}}) {
    auto M = build_m(n, p);
    const HModule h = build_IH(M, D);
    const std::size_t q = static_cast<std::size_t>(std::pow(p, n)) - 1;
    CHECK(h.carrier[0].dim() == q);
    CHECK(verify_freeness(h, p));
    CHECK(verify_h_equivariance(h));
    // F_p (x)_H is the kernel family: (p^n - 1) dim H^d V_{n-1}
    for (int d = 0; d <= D; ++d)
      CHECK(h.quotient_dims[static_cast<std::size_t>(d)] == q * hstar_dim(n - 1, d, p));
    if (n == 2 && p == 2) CHECK(h.carrier[1].dim() == 6);
  }
}

TEST_CASE("kernel family and the quotient map") {
  auto M = build_m(3, 2);
  auto fam = build_kernel_family(M, 4);
  CHECK(fam[1].dim() == 14);
  CHECK(fam[2].check_relations(40, 9));
  auto fam2 = build_kernel_family(build_m(2, 2), 6);
  for (int d = 0; d <= 6; ++d) CHECK(fam2[d].dim() == 3);
  for (auto [n, p, D] : std::vector<std::tuple<int, int, int>>{{2, 2, 12}, {3, 2, 8}, {2, 3, 10}}) {
    auto r = verify_quotient_iso(build_m(n, p), D);
    CHECK(r.ok);
    for (std::size_t d = 0; d < r.map_rank.size(); ++d) CHECK(r.map_rank[d] == r.family_dim[d]);
  }
  // degree 0: (mu) -> 1 in H^0(Ker mu), an isomorphism
  auto M2 = build_m(2, 2);
  auto q = quotient_map(M2, 0);
  CHECK(q.rows() == 3);
  CHECK(rank(q) == 3);
}

TEST_CASE("Steenrod squares") {
  // Sq^1 t = t^2
  {
    Matrix sq = steenrod_square(1, 1, 1);
    CHECK(sq.rows() == 1);
    CHECK(sq(0, 0) == 1);
  }
  // Sq^1(t1 t2) = t1^2 t2 + t1 t2^2
  {
    MonomialBasis b2(2, 2, 2), b3(2, 3, 2);
    Matrix sq = steenrod_square(2, 1, 2);
    const auto row = b2.index_of(Monomial{0, {1, 1}});
    CHECK(sq(row, b3.index_of(Monomial{0, {2, 1}})) == 1);
    CHECK(sq(row, b3.index_of(Monomial{0, {1, 2}})) == 1);
    int ones = 0;
    for (std::size_t c = 0; c < sq.cols(); ++c) ones += sq(row, c);
    CHECK(ones == 2);
  }
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 6; ++d) {
      CHECK(steenrod_square(n, 0, d).is_identity());
      MonomialBasis src(n, d, 2);
      for (int i = 0; i <= d + 1; ++i) {
        Matrix sq = steenrod_square(n, i, d);
        MonomialBasis dst(n, d + i, 2);
        for (std::size_t r = 0; r < src.size(); ++r) {
          // oracle: degree d + i part of the total square
          const auto total = total_square(src.at(r).exps);
          for (std::size_t c = 0; c < dst.size(); ++c) {
            auto it = total.find(dst.at(c).exps);
            CHECK(sq(r, c) == (it == total.end() ? 0 : it->second));
          }
          if (i == d) {
            // Sq^{|x|} x = x^2
            auto sqr = src.at(r).exps;
            for (auto& e : sqr) e *= 2;
            for (std::size_t c = 0; c < dst.size(); ++c) CHECK(sq(r, c) == (dst.at(c).exps == sqr ? 1 : 0));
          }
        }
        if (i > d) CHECK(sq.is_zero());
      }
    }
}

TEST_CASE("Steenrod squares commute with the monoid action") {
  for (int n : {2, 3}) {
    auto M = build_m(n, 2);
    auto H = build_hstar(M, 7);
    for (int d = 0; d <= 5; ++d)
      for (int i = 0; i <= 2; ++i) {
        Matrix sq = steenrod_square(n, i, d);
        for (std::size_t g = 0; g < M->generators().size(); ++g)
          CHECK(H[d].gen_images()[g] * sq == sq * H[d + i].gen_images()[g]);
      }
  }
}
