#include "doctest.h"

#include <random>
#include <set>

#include "fixtures.hpp"
#include "surfep/embedding.hpp"
#include "surfep/oracle.hpp"

using namespace surfep;
using surfep::testing::c2_channel;
using surfep::testing::v4_problem;

TEST_CASE("make_split_ep") {
  const FiniteGroup c2 = catalog::cyclic(2);

  SUBCASE("trivial K: gamma o beta is already proper") {
    const FiniteGroup c3 = catalog::cyclic(3);
    const SurfaceTuple beta(c3, {1, 0}, {2, 1});
    const SplitEP ep = make_split_ep(catalog::trivial(), c3,
                                     ActionSpec::trivial(c3, catalog::trivial()), beta, 2);
    CHECK(ep.A().order() == 3);
    const auto cert = verify_solution(ep, map_tuple(ep.gamma(), beta));
    CHECK(cert.solution);
    CHECK(cert.proper);
  }
  SUBCASE("V4 instance") {
    const SplitEP ep = v4_problem();
    CHECK(ep.A().order() == 4);
    CHECK(ep.A().is_abelian());
    CHECK(ep.genus() == 64);
    CHECK(ep.kernel().order() == 2);
  }
  SUBCASE("beta not surjective") {
    try {
      make_split_ep(c2, c2, ActionSpec::trivial(c2, c2), SurfaceTuple(c2, {0, 0}, {0, 0}), 2);
      FAIL("expected BetaNotSurjective");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BetaNotSurjective);
    }
  }
  SUBCASE("genus mismatch and invalid action") {
    CHECK_THROWS_AS(make_split_ep(c2, c2, ActionSpec::trivial(c2, c2), c2_channel(3, false, 1), 4),
                    Error);
    const FiniteGroup c3 = catalog::cyclic(3);
    CHECK_THROWS_AS(ActionSpec(c2, c3, {{0, 1, 2}, {0, 1, 1}}), Error);
  }
}

TEST_CASE("verify_solution") {
  const SplitEP ep = v4_problem();
  const SurfaceTuple section = map_tuple(ep.gamma(), ep.beta_bar());

  SUBCASE("gamma o beta on V4 is a solution but not proper") {
    const auto cert = verify_solution(ep, section);
    CHECK(cert.solution);
    CHECK_FALSE(cert.proper);
    CHECK(cert.outcome == Outcome::NotProper);
    REQUIRE(cert.first_failure() != nullptr);
    CHECK(cert.first_failure()->failure == "NotSurjective");
  }
  SUBCASE("incompatible tuple") {
    std::vector<Elem> x = section.x();
    const auto& sdp = ep.product();
    x[1] = sdp.pair(0, 1);  // alpha(x_2) = 1 but beta(x_2) = 0
    const auto cert = verify_solution(ep, SurfaceTuple(ep.A(), x, section.y()));
    CHECK_FALSE(cert.solution);
    CHECK(cert.first_failure()->failure == "CompatibilityFailed");
  }
  SUBCASE("perturbing an image off the relation is caught at construction") {
    const FiniteGroup s3 = catalog::symmetric3();
    CHECK_THROWS_AS(SurfaceTuple(s3, {1}, {2}), Error);
  }
  SUBCASE("recheck reproduces the flags") {
    const auto cert = verify_solution(ep, section);
    const auto again = recheck_certificate(ep, cert);
    CHECK(again.solution == cert.solution);
    CHECK(again.proper == cert.proper);
    CHECK(again.checks.size() == cert.checks.size());
  }
}

TEST_CASE("claim_proper") {
  const SplitEP ep = v4_problem();
  const SurfaceTuple section = map_tuple(ep.gamma(), ep.beta_bar());
  const auto& sdp = ep.product();
  CHECK_FALSE(claim_proper(ep, section, {}));
  CHECK(claim_proper(ep, section, {sdp.pair(1, 0)}));
  const std::vector<Elem> seeds{sdp.pair(1, 0), sdp.pair(0, 1)};
  CHECK(subgroup_closure(ep.A(), seeds).is_whole());

  // trivial kernel: always true
  const FiniteGroup c3 = catalog::cyclic(3);
  const SplitEP triv = make_split_ep(catalog::trivial(), c3,
                                     ActionSpec::trivial(c3, catalog::trivial()),
                                     SurfaceTuple(c3, {1}, {2}), 1);
  CHECK(claim_proper(triv, map_tuple(triv.gamma(), triv.beta_bar()), {}));

  // not a solution
  std::vector<Elem> x = section.x();
  x[0] = sdp.pair(0, 0);
  try {
    claim_proper(ep, SurfaceTuple(ep.A(), x, section.y()), {});
    FAIL("expected NotASolution");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotASolution);
  }
}

TEST_CASE("subgroup_image_under") {
  const FiniteGroup c2 = catalog::cyclic(2);
  const SurfaceTuple beta = c2_channel(1, false, 1);

  SUBCASE("S = Q gives the image of beta") {
    const auto spec = make_subgroup_spec(c2_channel(1, true, 1), {0, 1});
    CHECK(subgroup_image_under(beta, spec) == tuple_image(beta));
  }
  SUBCASE("same channel, S trivial: diagonal") {
    const auto spec = make_subgroup_spec(beta, {0});
    CHECK(subgroup_image_under(beta, spec).is_trivial());
  }
  SUBCASE("independent channel, S trivial: everything") {
    const auto spec = make_subgroup_spec(c2_channel(1, true, 1), {0});
    CHECK(subgroup_image_under(beta, spec).is_whole());
  }
  SUBCASE("genus mismatch") {
    const auto spec = make_subgroup_spec(c2_channel(2, true, 1), {0});
    CHECK_THROWS_AS(subgroup_image_under(beta, spec), Error);
  }
}

TEST_CASE("subgroup_image_under agrees with a breadth-first word search") {
  // beta(N) computed as {beta(w) : nu(w) in S}, with words w grown breadth
  // first (one representative per value pair) until no new pair appears.
  std::mt19937_64 rng(5);
  const FiniteGroup s3 = catalog::symmetric3(), c3 = catalog::cyclic(3), c2 = catalog::cyclic(2);
  for (int trial = 0; trial < 30; ++trial) {
    const SurfaceTuple beta = oracle::random_surface_tuple(rng() % 2 ? s3 : c3, 2, rng());
    const SurfaceTuple nu = oracle::random_surface_tuple(rng() % 2 ? s3 : c2, 2, rng());
    const SubgroupSpec spec = make_subgroup_spec(nu, {nu.target().identity()});

    std::vector<Word> gens;
    for (std::uint32_t i = 1; i <= 2; ++i)
      for (std::int64_t e : {1, -1}) {
        gens.push_back(Word::x(i, e));
        gens.push_back(Word::y(i, e));
      }
    std::set<std::pair<Elem, Elem>> seen{{beta.target().identity(), nu.target().identity()}};
    std::vector<Word> words{Word()};
    for (std::size_t head = 0; head < words.size(); ++head)
      for (const auto& g : gens) {
        Word w = words[head] * g;
        if (seen.emplace(evaluate_word(beta, w), evaluate_word(nu, w)).second)
          words.push_back(std::move(w));
      }
    std::vector<Elem> brute;
    for (const auto& w : words)
      if (word_in_N(spec, w)) brute.push_back(evaluate_word(beta, w));
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    CHECK(subgroup_image_under(beta, spec).members() == brute);
  }
}

TEST_CASE("word_in_N") {
  const SurfaceTuple nu = c2_channel(3, false, 1);
  const auto spec = make_subgroup_spec(nu, {0});
  CHECK(word_in_N(spec, Word()));
  CHECK_FALSE(word_in_N(spec, Word::parse("x1 x2^-1")));
  CHECK(word_in_N(spec, Word::parse("x2 x3^-1")));
  const auto all = make_subgroup_spec(nu, {0, 1});
  CHECK(word_in_N(all, Word::parse("x1 y2 x3^5")));
  CHECK_THROWS_AS(word_in_N(spec, Word::parse("x4")), Error);
}
