#pragma once

// Constructive solutions of split embedding problems over surface groups:
//  * eta_construct: from a solution whose first sn+s handles agree, build a
//    solution whose image contains Ker(alpha), block by block;
//  * solve_gamma_level / solve_relative: pigeonhole a long run of equal
//    handles, rotate them to the front of the basis, then apply eta;
//  * solve_free_product: surface part over the image subgroup, free factor
//    through the section;
//  * plan_extension: index and genus arithmetic for passing to an open
//    subgroup of large genus.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "surfep/embedding.hpp"

namespace surfep {

struct EtaParams {
  std::size_t s = 0;  // d(Ker alpha)
  std::size_t n = 0;  // |<Ker alpha, phi images>|
  std::size_t m = 0;  // 2|A|^2/|B|
  std::vector<Elem> kgens;
};

EtaParams make_eta_params(const SplitEP& ep, const SurfaceTuple& phi);

// The per-block identities [eta(x_{in+2}), eta(y_{in+2})]^n = 1 and the same
// for phi, for i = 0..s-1.
struct BlockIdentity {
  std::size_t block = 0;
  bool eta_holds = false;
  bool phi_holds = false;
};

std::vector<BlockIdentity> eta_block_identities(const SurfaceTuple& phi, const SurfaceTuple& eta,
                                                const EtaParams& params);

// Throws HypothesisViolated naming the failed precondition ("genus",
// "equal-images", "solution", "membership") with a witness index in data().
SurfaceTuple eta_construct(const SurfaceTuple& phi, const EtaParams& params,
                           const SplitEP& beta_check, const SubgroupSpec* relative = nullptr);

// g >= 2|A|^2|B|, otherwise GenusTooSmall (data = {needed, got}).
SolutionCertificate solve_gamma_level(const SplitEP& ep);

// Relative form for N = nu^-1(S): also needs beta(N) = B (BetaNRestrictionNotSurjective).
// Returns outcome NotReduced with offending_index set when some normalized
// x_i x_1^-1 (or x_1^-1 x_i) with i <= m falls outside N.
SolutionCertificate solve_relative(const SplitEP& ep, const SubgroupSpec& nspec);

// ep.free_factor() holds the images of the free factor's generators; needs
// g >= 2|K|^2|H|^3.
SolutionCertificate solve_free_product(const SplitEP& ep);
SolutionCertificate solve_free_product(const FiniteGroup& k, const FiniteGroup& h,
                                       const ActionSpec& action, std::size_t genus,
                                       const SurfaceTuple& beta_surface,
                                       const std::vector<Elem>& beta_free);

struct ExtensionPlan {
  std::int64_t g = 0, size_k = 0, size_h = 0;
  std::int64_t m = 0;
  std::int64_t required_index = 0;
  std::int64_t h = 0;
};

ExtensionPlan plan_extension(std::int64_t g, std::int64_t size_k, std::int64_t size_h);

// 2|A|^2|B| for the problem.
std::int64_t gamma_level_genus_bound(const SplitEP& ep);

}  // namespace surfep
