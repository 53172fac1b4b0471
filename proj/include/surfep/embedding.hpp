#pragma once

// Split embedding problems over a surface group (optionally free-producted
// with a finitely generated factor), subgroups N given through a finite
// quotient, and solution certificates that can be re-checked from raw data.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surfep/group.hpp"
#include "surfep/surface.hpp"

namespace surfep {

// A = K x| H with alpha(k,h) = h and gamma(h) = (1,h). `free_factor` holds
// the images in H of the generators of an extra free factor (empty for a
// plain surface-group problem).
class SplitEP {
 public:
  SplitEP(FiniteGroup k, FiniteGroup h, ActionSpec action, SurfaceTuple beta_bar,
          std::vector<Elem> free_factor = {});

  const FiniteGroup& K() const noexcept { return k_; }
  const FiniteGroup& H() const noexcept { return h_; }
  const ActionSpec& action() const noexcept { return action_; }
  const FiniteGroup& A() const noexcept { return sdp_.group; }
  const FiniteGroup& B() const noexcept { return h_; }
  const GroupHom& alpha() const noexcept { return sdp_.alpha; }
  const GroupHom& gamma() const noexcept { return sdp_.gamma; }
  const SemidirectProduct& product() const noexcept { return sdp_; }
  const SubgroupHandle& kernel() const noexcept { return kernel_; }
  const SurfaceTuple& beta_bar() const noexcept { return beta_bar_; }
  const std::vector<Elem>& free_factor() const noexcept { return free_; }
  std::size_t genus() const noexcept { return beta_bar_.genus(); }

  // Same A, B, alpha, gamma over a different map to B.
  SplitEP with_beta(SurfaceTuple beta_bar) const;

 private:
  FiniteGroup k_, h_;
  ActionSpec action_;
  SemidirectProduct sdp_;
  SubgroupHandle kernel_;
  SurfaceTuple beta_bar_;
  std::vector<Elem> free_;
};

SplitEP make_split_ep(const FiniteGroup& k, const FiniteGroup& h, const ActionSpec& action,
                      const SurfaceTuple& beta_bar, std::size_t genus,
                      std::vector<Elem> free_factor = {});

// N = nu^-1(S) for a finite quotient nu of the surface group.
struct SubgroupSpec {
  SurfaceTuple nu;
  SubgroupHandle S;

  const FiniteGroup& Q() const noexcept { return nu.target(); }
};

SubgroupSpec make_subgroup_spec(const SurfaceTuple& nu, std::vector<Elem> s_members);

struct CheckRecord {
  std::string name;     // what was checked
  bool pass = false;
  std::string failure;  // error name reported when the check fails
  std::string detail;
};

struct KernelWitness {
  Word word;     // in the original basis
  Elem value{};  // claimed image, an element of Ker(alpha)
};

struct MembershipRecord {
  std::string kind;  // "x_i x_1^-1 in N", "x_1^-1 x_i in N", "x_i x_1^-1 in Ker(beta)", ...
  std::size_t slot = 0;
  Word word;
  bool holds = false;
};

enum class Outcome { Proper, NotProper, NotSolution, NotReduced };
std::string_view to_string(Outcome o) noexcept;

struct SolutionCertificate {
  SurfaceTuple phi;
  std::vector<Elem> free_images{};
  bool relative = false;

  bool solution = false;
  bool proper = false;
  Outcome outcome = Outcome::NotSolution;
  std::vector<CheckRecord> checks{};

  std::vector<KernelWitness> witnesses{};
  std::vector<MembershipRecord> memberships{};

  // Basis normalization data, when the certificate comes from the solver.
  std::vector<std::size_t> selected{};  // j_1 < ... < j_m
  std::vector<Word> prefix_x{}, prefix_y{};  // normalized slots 1..m, original basis
  std::size_t s = 0, n = 0, m = 0;
  std::optional<std::size_t> offending_index{};  // NotReduced only
  std::vector<std::string> notes{};

  const CheckRecord* first_failure() const;
};

// Relation, compatibility (alpha o phi = beta_bar generatorwise, including
// the free factor), and properness. Without `relative`, properness is direct
// image closure = A. With `relative`, properness is certified through the
// kernel witnesses: each witness word lies in N and evaluates to its value,
// the values generate a group containing Ker(alpha), and beta(N) = B.
SolutionCertificate verify_solution(const SplitEP& ep, const SurfaceTuple& phi,
                                    const SubgroupSpec* relative = nullptr,
                                    std::vector<KernelWitness> witnesses = {},
                                    std::vector<Elem> free_images = {});

// Re-runs every check recorded in `cert` from the raw data and returns a
// freshly computed certificate carrying the same auxiliary records.
SolutionCertificate recheck_certificate(const SplitEP& ep, const SolutionCertificate& cert,
                                        const SubgroupSpec* relative = nullptr);

// Ker(alpha) subset of <phi images, extras>. Throws NotASolution unless
// alpha o phi = beta_bar.
bool claim_proper(const SplitEP& ep, const SurfaceTuple& phi,
                  const std::vector<Elem>& extra_image_elements);

// beta_bar(N) for N = nu^-1(S), via the fiber product of beta_bar and nu.
SubgroupHandle subgroup_image_under(const SurfaceTuple& beta_bar, const SubgroupSpec& spec);

bool word_in_N(const SubgroupSpec& spec, const Word& w);

}  // namespace surfep
