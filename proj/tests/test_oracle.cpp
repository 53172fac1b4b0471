#include "doctest.h"

#include "surfep/oracle.hpp"

using namespace surfep;
using namespace surfep::oracle;

TEST_CASE("enumerate_surface_tuples") {
  CHECK(enumerate_surface_tuples(catalog::cyclic(2), 1) == 4);
  CHECK(enumerate_surface_tuples(catalog::cyclic(3), 2) == 81);
  const FiniteGroup s3 = catalog::symmetric3();
  CHECK(enumerate_surface_tuples(s3, 1) == 18);
  CHECK(enumerate_surface_tuples(s3, 1) == commuting_pairs(s3));
  // |G|^(2g-1) * sum over irreducibles of (|G|/dim)^(2g-2): 6^3 * (1 + 1 + 1/4)
  CHECK(enumerate_surface_tuples(s3, 2) == 486);
  CHECK(commuting_pairs(catalog::quaternion8()) == 40);

  std::uint64_t seen = 0;
  enumerate_surface_tuples(s3, 1, default_budget, [&](auto x, auto y) {
    ++seen;
    CHECK(s3.mul(x[0], y[0]) == s3.mul(y[0], x[0]));
  });
  CHECK(seen == 18);

  try {
    enumerate_surface_tuples(s3, 4, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("reference_minimal_generators agrees with the pruned search") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    const FiniteGroup g = catalog::by_name(name);
    const auto whole = SubgroupHandle::whole(g);
    const auto fast = minimal_generator_count(whole);
    CHECK(reference_minimal_generators(whole) == fast.count);
    CHECK(subgroup_closure(g, fast.witness) == whole);
    // every cyclic subgroup
    for (Elem a = 0; a < g.order(); ++a) {
      const Elem seed[] = {a};
      const auto cyc = subgroup_closure(g, seed);
      CHECK(reference_minimal_generators(cyc) == minimal_generator_count(cyc).count);
    }
  }
}

TEST_CASE("random_surface_tuple") {
  const FiniteGroup q8 = catalog::quaternion8();
  const SurfaceTuple a = random_surface_tuple(q8, 5, 42);
  const SurfaceTuple b = random_surface_tuple(q8, 5, 42);
  CHECK(a == b);
  CHECK(relation_value(q8, a.x(), a.y()) == q8.identity());
  CHECK_FALSE(random_surface_tuple(q8, 5, 43) == a);
}

TEST_CASE("generate_instances") {
  InstanceRecipe r;
  r.seed = 17;
  const auto a = generate_instances(r, 12);
  const auto b = generate_instances(r, 12);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].description);
    CHECK(a[i].description == b[i].description);
    CHECK(a[i].ep.beta_bar() == b[i].ep.beta_bar());
    const auto& ep = a[i].ep;
    CHECK(tuple_image(ep.beta_bar()).is_whole());
    CHECK(std::int64_t(ep.genus()) == 2 * std::int64_t(ep.A().order() * ep.A().order() * ep.B().order()));
    CHECK(ep.A().order() <= r.max_a);
    CHECK_FALSE(a[i].relative.has_value());
  }

  SUBCASE("V4 at the exact bound") {
    InstanceRecipe v;
    v.k_sizes = {2};
    v.h_sizes = {2};
    v.action = ActionMode::Trivial;
    const auto inst = generate_instances(v, 3);
    for (const auto& i : inst) {
      CHECK(i.ep.genus() == 64);
      CHECK(i.ep.A().is_abelian());
    }
  }
  SUBCASE("trivial K") {
    InstanceRecipe v;
    v.k_sizes = {1};
    v.h_sizes = {3};
    v.genus = GenusRule::BoundPlusSlack;
    const auto inst = generate_instances(v, 2);
    for (const auto& i : inst) {
      CHECK(i.ep.K().order() == 1);
      CHECK(i.ep.genus() == 2 * 9 * 3 + 3);
    }
  }
  SUBCASE("relative modes") {
    InstanceRecipe v;
    v.relative = RelativeMode::Mixed;
    v.h_sizes = {2, 3};
    const auto inst = generate_instances(v, 8);
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto& in = inst[i];
      if (i % 2 == 0) {
        REQUIRE(in.relative.has_value());
        CHECK_FALSE(in.adversarial);
        CHECK(subgroup_image_under(in.ep.beta_bar(), *in.relative).is_whole());
      } else if (i % 4 == 1) {
        REQUIRE(in.relative.has_value());
        CHECK(in.adversarial);
        CHECK(subgroup_image_under(in.ep.beta_bar(), *in.relative).is_trivial());
      } else {
        CHECK_FALSE(in.relative.has_value());
      }
    }
  }
  CHECK_THROWS_AS(generate_instances(InstanceRecipe{.k_sizes = {8}, .h_sizes = {8}}, 1), Error);
}

TEST_CASE("group_of_order") {
  CHECK(group_of_order(4, 0).order() == 4);
  CHECK_FALSE(group_of_order(4, 0) == group_of_order(4, 1));
  CHECK_FALSE(group_of_order(6, 1).is_abelian());
  CHECK(group_of_order(5, 0).order() == 5);
}
