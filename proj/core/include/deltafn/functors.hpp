// Steinberg modules, the functor delta (U-coinvariants of the restriction to
// GL_{n-1} U), Harish-Chandra restriction and induction, and graded
// verifications of the identities relating them to H*V.

#pragma once

#include <string>
#include <vector>

#include "deltafn/context.hpp"
#include "deltafn/report.hpp"

namespace deltafn {

struct SteinbergModule {
  Rep module;                  // factor of dimension p^{n(n-1)/2} of F_p[B\G]
  bool idempotent_route = false;  // second construction was carried out
  int scalar = 0;              // t^2 = scalar * t, t = (sum over B)(signed sum over W)
  bool routes_agree = true;
};
/// Both constructions; the idempotent route is used when |G| <= regular_limit
/// and the scalar is nonzero mod p. Throws AlgebraError when they disagree.
SteinbergModule steinberg_module(const TablePtr& G, Rng& rng, const MeatAxeOptions& opt,
                                 std::size_t regular_limit);

/// (Res_{GL_{n-1}U} P)_U as a module over the standalone GL_{n-1}.
Rep delta_module(const Rep& P, const ParabolicChain& ch);

struct DeltaResult {
  Rep input;
  Rep output;
  std::vector<int> pim_expansion;  // indexed by simple id of GL_{n-1}
  std::string expansion;
};
/// delta_module plus identification as a sum of PIMs of GL_{n-1}. Throws
/// AlgebraError("input not projective") when the output is not projective.
DeltaResult delta(const Rep& P, Context& ctx);

/// (Res_P X)_U as a module over the Levi L.
Rep hc_restrict_levi(const Rep& X, const ParabolicChain& ch);
/// hc_restrict_levi restricted to GL_{n-1}, over the standalone GL_{n-1}.
Rep hc_restrict(const Rep& X, const ParabolicChain& ch);
/// Ind_P^G Inf_L^P a.
Rep hc_induce(const Rep& a, const ParabolicChain& ch);

struct PoincareProfile {
  std::string label;
  std::vector<long long> coefficients;
  friend bool operator==(const PoincareProfile& a, const PoincareProfile& b) {
    return a.coefficients == b.coefficients;
  }
};
/// Coefficient d = dim Hom(P, target_d), d = 0..D.
PoincareProfile graded_LP(const Rep& P, const GradedRep& target, int D);
/// Coefficient d = sum over a + b = d of a_a b_b, truncated at D.
PoincareProfile convolve(const PoincareProfile& a, const PoincareProfile& b, int D);
/// dim H^a for the cohomology of Z/p (one in every degree).
PoincareProfile h_profile(int D);
PoincareProfile profile_sum(const std::vector<PoincareProfile>& parts, int D);
std::string to_string(const PoincareProfile& f);

// Verification suites. Each returns a filled report.

/// Profiles of P over J (x) H*V, I (x) H*V and Gr (x) H*V coincide.
VerifyReport verify_main1(const Rep& P, const std::string& name, Context& ctx, int D);
/// dim Hom(P, (J (x) H*V)_d) = sum_{a+b=d} dim H^a dim Hom(delta P, H^b V_{n-1}).
VerifyReport verify_delta_theorem(const Rep& P, const std::string& name, Context& ctx, int D);
/// Regular module of M_n: J (x) H*V against H (x) the kernel family, and the
/// explicit quotient map onto the kernel family.
VerifyReport verify_functor_end(Context& monoid_ctx, int D);
/// delta(St_n (x) X) and St_{n-1} (x) Res X agree.
VerifyReport verify_main2(const Rep& X, const std::string& name, Context& ctx);
/// Character facts, conjugator counts, induced characters and the module form
/// of Ind_{GL_{n-1}}^{GL_n} St_{n-1} = J^# (x) St_n.
VerifyReport verify_key_lemma(Context& ctx);
/// delta(P) and the Harish-Chandra restriction of P are isomorphic.
VerifyReport verify_hc(const Rep& P, const std::string& name, Context& ctx);
/// Inf_L^{LU} Ind_{GL_{n-1}}^L = Ind_{GL_{n-1}U}^{LU} Inf on the trivial
/// module, induced dimension and the adjunction in dimension form.
VerifyReport verify_hc_structure(Context& ctx);
/// Ind_{GL_{n-1}U}^{GL_n} Inf H^d V_{n-1} = degree d of the kernel family.
VerifyReport verify_induction_prop(Context& ctx, int D);
/// Profile identity for delta of an outer tensor product over the Levi
/// GL_r x GL_s of GL_{r+s}.
VerifyReport verify_prop_tensor(Context& er, const Rep& P, const std::string& pname, Context& fs, const Rep& Q,
                                const std::string& qname, Context& total, int D);
/// Freeness of I (x) H*V over H, equivariance of the H-action and the
/// quotient map, over M_n.
VerifyReport verify_hmodule(Context& monoid_ctx, int D);

/// Outer tensor product over the block Levi GL_r x GL_s of `total`, induced
/// to GL_{r+s}.
Rep induce_outer_tensor(const Rep& P, const Rep& Q, const TablePtr& total);

}  // namespace deltafn
