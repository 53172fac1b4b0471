#pragma once

// Brute-force references used to cross-check the library, and the
// deterministic random instance generator behind the test suites.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surfep/embedding.hpp"

namespace surfep::oracle {

inline constexpr std::uint64_t default_budget = 100'000'000;

// Counts the 2g-tuples of G satisfying the surface relation by exhaustive
// enumeration. BudgetExceeded when |G|^(2g) > budget. `visit`, when given,
// sees every accepted tuple as (x, y).
std::uint64_t enumerate_surface_tuples(
    const FiniteGroup& g, std::size_t genus, std::uint64_t budget = default_budget,
    const std::function<void(std::span<const Elem>, std::span<const Elem>)>& visit = {});

// Pairs (a,b) with ab = ba, by a plain double loop.
std::uint64_t commuting_pairs(const FiniteGroup& g);

// Rejection sampling; deterministic for a seed.
SurfaceTuple random_surface_tuple(const FiniteGroup& g, std::size_t genus, std::uint64_t seed,
                                  std::size_t max_attempts = 100'000);

// Unpruned search over all r-tuples, r = 0, 1, ...; |S| <= 64.
std::size_t reference_minimal_generators(const SubgroupHandle& s,
                                         std::uint64_t budget = default_budget);

enum class ActionMode { Trivial, Inversion, RandomValid };
enum class GenusRule { ExactBound, BoundPlusSlack };
enum class RelativeMode { None, Mixed, Independent, Adversarial };

struct InstanceRecipe {
  std::uint64_t seed = 1;
  std::vector<std::size_t> k_sizes{2, 3, 4};
  std::vector<std::size_t> h_sizes{1, 2, 3};
  ActionMode action = ActionMode::RandomValid;
  GenusRule genus = GenusRule::ExactBound;
  std::size_t slack = 3;
  RelativeMode relative = RelativeMode::None;
  std::size_t max_a = 16;
};

struct Instance {
  SplitEP ep;
  std::optional<SubgroupSpec> relative;
  // True when the relative spec was built so that beta(N) = B fails.
  bool adversarial = false;
  std::string description;
};

// Mixed: even positions get an independent nu (beta(N) = B by design), every
// fourth position a nu = beta adversary (when |H| > 1), the rest none.
std::vector<Instance> generate_instances(const InstanceRecipe& recipe, std::size_t count);

// The group of order n used for K or H: C1, C2, C3, C4 or V4 (chosen by
// the seed when n = 4), S3 for 6, D4 or Q8 for 8.
FiniteGroup group_of_order(std::size_t n, std::uint64_t pick);

}  // namespace surfep::oracle
