#include "surfep/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace surfep::oracle {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::size_t pick_from(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Extends an assignment of automorphisms on generators of H to all of H,
// or returns nothing if the assignment is not a homomorphism.
std::optional<std::vector<std::vector<Elem>>> extend_action(
    const FiniteGroup& h, const FiniteGroup& k, const std::vector<Elem>& gens,
    const std::vector<std::vector<Elem>>& images) {
  std::vector<Elem> id(k.order());
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> perms(h.order());
  perms[h.identity()] = id;
  std::vector<Elem> queue{h.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem cur = queue[head];
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Elem next = h.mul(cur, gens[t]);
      std::vector<Elem> p(k.order());
      for (Elem x = 0; x < k.order(); ++x) p[x] = perms[cur][images[t][x]];
      if (perms[next].empty()) {
        perms[next] = std::move(p);
        queue.push_back(next);
      } else if (perms[next] != p) {
        return std::nullopt;
      }
    }
  }
  try {
    ActionSpec check(h, k, perms);
  } catch (const Error&) {
    return std::nullopt;
  }
  return perms;
}

ActionSpec make_action(const FiniteGroup& k, const FiniteGroup& h, ActionMode mode,
                       std::mt19937_64& rng) {
  if (mode == ActionMode::Trivial || h.order() == 1 || k.order() == 1)
    return ActionSpec::trivial(h, k);
  const std::vector<Elem> gens = minimal_generator_count(SubgroupHandle::whole(h)).witness;

  if (mode == ActionMode::Inversion) {
    if (!k.is_abelian()) return ActionSpec::trivial(h, k);
    std::vector<Elem> inversion(k.order());
    for (Elem x = 0; x < k.order(); ++x) inversion[x] = k.inv(x);
    auto perms = extend_action(h, k, gens, std::vector<std::vector<Elem>>(gens.size(), inversion));
    return perms ? ActionSpec(h, k, std::move(*perms)) : ActionSpec::trivial(h, k);
  }

  const auto autos = automorphisms(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<Elem>> images;
    for (std::size_t t = 0; t < gens.size(); ++t) images.push_back(autos[pick_from(rng, autos.size())]);
    if (auto perms = extend_action(h, k, gens, images)) return ActionSpec(h, k, std::move(*perms));
  }
  return ActionSpec::trivial(h, k);
}

std::vector<Elem> random_elements(std::mt19937_64& rng, const FiniteGroup& g, std::size_t count) {
  std::vector<Elem> v(count);
  for (auto& e : v) e = Elem(pick_from(rng, g.order()));
  return v;
}

}  // namespace

std::uint64_t enumerate_surface_tuples(
    const FiniteGroup& g, std::size_t genus, std::uint64_t budget,
    const std::function<void(std::span<const Elem>, std::span<const Elem>)>& visit) {
  if (genus == 0) throw Error(Errc::InvalidArgument, "genus must be positive");
  const std::uint64_t total = checked_power(g.order(), 2 * genus, budget);
  if (total > budget)
    throw Error(Errc::BudgetExceeded,
                "|G|^(2g) exceeds the budget of " + std::to_string(budget) + " candidates",
                {std::int64_t(budget)});

  std::vector<Elem> x(genus), y(genus);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, Elem prefix) -> void {
    if (i == genus) {
      if (prefix == g.identity()) {
        ++count;
        if (visit) visit(x, y);
      }
      return;
    }
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        x[i] = a;
        y[i] = b;
        self(self, i + 1, g.mul(prefix, g.comm(a, b)));
      }
  };
  rec(rec, 0, g.identity());
  return count;
}

std::uint64_t commuting_pairs(const FiniteGroup& g) {
  std::uint64_t c = 0;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++c;
  return c;
}

SurfaceTuple random_surface_tuple(const FiniteGroup& g, std::size_t genus, std::uint64_t seed,
                                  std::size_t max_attempts) {
  if (genus == 0) throw Error(Errc::InvalidArgument, "genus must be positive");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto x = random_elements(rng, g, genus);
    auto y = random_elements(rng, g, genus);
    if (relation_value(g, x, y) == g.identity()) return SurfaceTuple(g, std::move(x), std::move(y));
  }
  throw Error(Errc::BudgetExceeded,
              "no relation-satisfying tuple in " + std::to_string(max_attempts) + " attempts",
              {std::int64_t(max_attempts)});
}

std::size_t reference_minimal_generators(const SubgroupHandle& s, std::uint64_t budget) {
  if (s.order() > 64) throw Error(Errc::BudgetExceeded, "reference search limited to |S| <= 64");
  const auto& mem = s.members();
  std::uint64_t spent = 0;
  for (std::size_t r = 0;; ++r) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      if (++spent > budget)
        throw Error(Errc::BudgetExceeded, "reference generator search over budget",
                    {std::int64_t(budget)});
      std::vector<Elem> tuple(r);
      for (std::size_t i = 0; i < r; ++i) tuple[i] = mem[idx[i]];
      if (subgroup_closure(s.parent(), tuple).members() == mem) return r;
      std::size_t pos = 0;
      while (pos < r && ++idx[pos] == mem.size()) idx[pos++] = 0;
      if (pos == r) break;
    }
  }
}

FiniteGroup group_of_order(std::size_t n, std::uint64_t pick) {
  switch (n) {
    case 1: return catalog::trivial();
    case 4: return pick % 2 ? catalog::klein_four() : catalog::cyclic(4);
    case 6: return pick % 2 ? catalog::symmetric3() : catalog::cyclic(6);
    case 8: return pick % 2 ? catalog::quaternion8() : catalog::dihedral(4);
    default: return catalog::cyclic(n);
  }
}

std::vector<Instance> generate_instances(const InstanceRecipe& recipe, std::size_t count) {
  std::mt19937_64 rng(recipe.seed);
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t k : recipe.k_sizes)
    for (std::size_t h : recipe.h_sizes)
      if (k * h <= recipe.max_a) shapes.emplace_back(k, h);
  if (shapes.empty()) throw Error(Errc::InvalidArgument, "recipe admits no (|K|, |H|) shape");

  std::vector<Instance> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    RelativeMode mode = recipe.relative;
    if (mode == RelativeMode::Mixed)
      mode = idx % 2 == 0 ? RelativeMode::Independent
             : idx % 4 == 1 ? RelativeMode::Adversarial
                            : RelativeMode::None;

    std::vector<std::pair<std::size_t, std::size_t>> usable = shapes;
    if (mode == RelativeMode::Adversarial) {
      std::erase_if(usable, [](const auto& s) { return s.second < 2; });
      if (usable.empty()) mode = RelativeMode::None, usable = shapes;
    }
    const auto [nk, nh] = usable[pick_from(rng, usable.size())];
    const FiniteGroup k = group_of_order(nk, rng());
    const FiniteGroup h = group_of_order(nh, rng());
    const ActionSpec action = make_action(k, h, recipe.action, rng);

    const std::size_t a = nk * nh;
    std::size_t genus = 2 * a * a * nh;
    if (recipe.genus == GenusRule::BoundPlusSlack) genus += recipe.slack;

    std::optional<SubgroupSpec> rel;
    std::optional<SurfaceTuple> beta;
    for (int attempt = 0; attempt < 1000 && !beta; ++attempt) {
      SurfaceTuple cand = random_surface_tuple(h, genus, rng());
      if (!tuple_image(cand).is_whole()) continue;
      if (mode == RelativeMode::Independent) {
        // nu kills every x_i, so all x-quotients lie in N.
        const FiniteGroup q = group_of_order(std::array<std::size_t, 3>{2, 3, 6}[pick_from(rng, 3)], rng());
        std::vector<Elem> nx(genus, q.identity());
        SubgroupSpec spec = make_subgroup_spec(SurfaceTuple(q, nx, random_elements(rng, q, genus)),
                                               {q.identity()});
        if (!subgroup_image_under(cand, spec).is_whole()) continue;
        rel = std::move(spec);
      } else if (mode == RelativeMode::Adversarial) {
        rel = make_subgroup_spec(cand, {h.identity()});
      }
      beta = std::move(cand);
    }
    if (!beta) throw Error(Errc::BudgetExceeded, "could not sample a surjective beta");

    std::string desc = "|K|=" + std::to_string(nk) + " |H|=" + std::to_string(nh) +
                       " g=" + std::to_string(genus);
    out.push_back({SplitEP(k, h, action, *beta), std::move(rel),
                   mode == RelativeMode::Adversarial, std::move(desc)});
  }
  return out;
}

}  // namespace surfep::oracle
