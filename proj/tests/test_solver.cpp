#include "doctest.h"

#include "fixtures.hpp"
#include "surfep/oracle.hpp"
#include "surfep/solver.hpp"

using namespace surfep;
using surfep::testing::c2_channel;
using surfep::testing::v4_problem;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("make_eta_params on the V4 instance") {
  const SplitEP ep = v4_problem();
  const EtaParams p = make_eta_params(ep, map_tuple(ep.gamma(), ep.beta_bar()));
  CHECK(p.s == 1);
  CHECK(p.n == 4);
  CHECK(p.m == 16);  // 2 * 4^2 / 2
  CHECK(p.kgens == std::vector<Elem>{ep.product().pair(1, 0)});
  CHECK(p.s * p.n + p.s <= p.m);
}

TEST_CASE("eta_construct") {
  SUBCASE("trivial K leaves phi unchanged") {
    const FiniteGroup c2 = catalog::cyclic(2);
    const SplitEP ep = make_split_ep(catalog::trivial(), c2,
                                     ActionSpec::trivial(c2, catalog::trivial()),
                                     c2_channel(4, false, 1), 4);
    const SurfaceTuple phi = map_tuple(ep.gamma(), ep.beta_bar());
    const EtaParams p = make_eta_params(ep, phi);
    CHECK(p.s == 0);
    CHECK(eta_construct(phi, p, ep) == phi);
  }

  // V4 problem where beta sends x_1..x_5 to 1 so the first five handles agree
  const FiniteGroup c2 = catalog::cyclic(2);
  std::vector<Elem> bx(64, 0), by(64, 0);
  for (int i = 0; i < 5; ++i) bx[i] = 1;
  const SplitEP ep = make_split_ep(c2, c2, ActionSpec::trivial(c2, c2), SurfaceTuple(c2, bx, by), 64);
  const SurfaceTuple phi = map_tuple(ep.gamma(), ep.beta_bar());
  const EtaParams p = make_eta_params(ep, phi);
  const auto& sdp = ep.product();

  SUBCASE("V4: x_2..x_5 become (0,1)+(1,0) = (1,1)") {
    const SurfaceTuple eta = eta_construct(phi, p, ep);
    for (std::size_t i = 2; i <= 5; ++i) CHECK(eta.x(i) == sdp.pair(1, 1));
    CHECK(eta.x(1) == phi.x(1));
    for (std::size_t i = 6; i <= 64; ++i) CHECK(eta.x(i) == phi.x(i));
    CHECK(eta.y() == phi.y());
    CHECK(tuple_image(eta).is_whole());
    CHECK(evaluate_word(eta, Word::parse("x1^-1 x2")) == sdp.pair(1, 0));
    for (const auto& b : eta_block_identities(phi, eta, p)) {
      CHECK(b.eta_holds);
      CHECK(b.phi_holds);
    }
  }
  SUBCASE("genus below sn+s") {
    // s = 1, n = 4: sn+s = 5
    const SplitEP small = make_split_ep(c2, c2, ActionSpec::trivial(c2, c2),
                                        SurfaceTuple(c2, {1, 1, 1, 1}, {0, 0, 0, 0}), 4);
    const SurfaceTuple phi4 = map_tuple(small.gamma(), small.beta_bar());
    try {
      eta_construct(phi4, make_eta_params(small, phi4), small);
      FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HypothesisViolated);
      CHECK(std::string(e.what()).find("genus") != std::string::npos);
      CHECK(e.data() == std::vector<std::int64_t>{5, 4});
    }
  }
  SUBCASE("unequal images") {
    const SplitEP bad = v4_problem();  // only x_1 maps to 1
    const SurfaceTuple phib = map_tuple(bad.gamma(), bad.beta_bar());
    try {
      eta_construct(phib, make_eta_params(bad, phib), bad);
      FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HypothesisViolated);
      CHECK(e.data() == std::vector<std::int64_t>{2});
    }
  }
  SUBCASE("membership failure in the relative form") {
    const auto spec = make_subgroup_spec(c2_channel(64, false, 3), {0});
    try {
      eta_construct(phi, p, ep, &spec);
      FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HypothesisViolated);
      CHECK(e.data() == std::vector<std::int64_t>{3});
    }
  }
}

TEST_CASE("solve_gamma_level") {
  SUBCASE("V4 instance: proper and independently re-verified") {
    const SplitEP ep = v4_problem();
    const SolutionCertificate cert = solve_gamma_level(ep);
    CHECK(cert.solution);
    CHECK(cert.proper);
    CHECK(cert.m == 16);
    CHECK(cert.selected.size() == 16);
    CHECK(cert.first_failure() == nullptr);
    // fresh verification from the tuple alone
    const auto fresh = verify_solution(ep, cert.phi);
    CHECK(fresh.proper);
    CHECK(tuple_image(cert.phi).is_whole());
    for (const auto& w : cert.witnesses) CHECK(evaluate_word(cert.phi, w.word) == w.value);
    for (const auto& mrec : cert.memberships) CHECK(mrec.holds);
    CHECK(recheck_certificate(ep, cert).proper);
  }
  SUBCASE("trivial K") {
    const FiniteGroup c2 = catalog::cyclic(2);
    const SplitEP ep = make_split_ep(catalog::trivial(), c2,
                                     ActionSpec::trivial(c2, catalog::trivial()),
                                     c2_channel(16, true, 3), 16);
    const auto cert = solve_gamma_level(ep);
    CHECK(cert.proper);
    CHECK(cert.phi == map_tuple(ep.gamma(), ep.beta_bar()));
  }
  SUBCASE("genus one below the bound") {
    try {
      solve_gamma_level(v4_problem(63));
      FAIL("expected GenusTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::GenusTooSmall);
      CHECK(e.data() == std::vector<std::int64_t>{64, 63});
    }
  }
  SUBCASE("nonabelian A: S3 = C3 x| C2") {
    const FiniteGroup c3 = catalog::cyclic(3), c2 = catalog::cyclic(2);
    const ActionSpec inv(c2, c3, {{0, 1, 2}, {0, 2, 1}});
    const SurfaceTuple beta = oracle::random_surface_tuple(c2, 2 * 36 * 2, 99);
    const SplitEP ep(c3, c2, inv, beta);
    const auto cert = solve_gamma_level(ep);
    CHECK(cert.proper);
    CHECK(verify_solution(ep, cert.phi).proper);
  }
}

TEST_CASE("solve_relative") {
  const SplitEP ep = v4_problem();

  SUBCASE("S = Q reduces to the surface-group case") {
    const auto spec = make_subgroup_spec(c2_channel(64, true, 1), {0, 1});
    const auto cert = solve_relative(ep, spec);
    CHECK(cert.proper);
    CHECK(cert.relative);
  }
  SUBCASE("independent nu on y_1") {
    const auto spec = make_subgroup_spec(c2_channel(64, true, 1), {0});
    const auto cert = solve_relative(ep, spec);
    CHECK(cert.proper);
    REQUIRE(cert.witnesses.size() == 1);
    CHECK(cert.witnesses[0].value == ep.product().pair(1, 0));
    CHECK(word_in_N(spec, cert.witnesses[0].word));
    CHECK(evaluate_word(cert.phi, cert.witnesses[0].word) == ep.product().pair(1, 0));
    CHECK(recheck_certificate(ep, cert, &spec).proper);
    // the memberships x_i x_1^-1 and x_1^-1 x_i in N were checked for i = 2..16
    std::size_t n_memberships = 0;
    for (const auto& mrec : cert.memberships)
      if (mrec.kind.ends_with("in N")) {
        ++n_memberships;
        CHECK(mrec.holds);
      }
    CHECK(n_memberships == 2 * 15);
  }
  SUBCASE("nu = beta: beta(N) is trivial") {
    const auto spec = make_subgroup_spec(ep.beta_bar(), {0});
    try {
      solve_relative(ep, spec);
      FAIL("expected BetaNRestrictionNotSurjective");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BetaNRestrictionNotSurjective);
    }
  }
  SUBCASE("membership fails: NotReduced with the offending index") {
    // beta sends every x to 1 and every y to 0; nu detects x_2 and y_1.
    const FiniteGroup c2 = catalog::cyclic(2), v4 = catalog::klein_four();
    const SplitEP ep2 = make_split_ep(c2, c2, ActionSpec::trivial(c2, c2),
                                      SurfaceTuple(c2, std::vector<Elem>(64, 1),
                                                   std::vector<Elem>(64, 0)),
                                      64);
    std::vector<Elem> nx(64, 0), ny(64, 0);
    nx[1] = 1;  // x_2
    ny[0] = 2;  // y_1
    const auto spec = make_subgroup_spec(SurfaceTuple(v4, nx, ny), {0});
    REQUIRE(subgroup_image_under(ep2.beta_bar(), spec).is_whole());
    const auto cert = solve_relative(ep2, spec);
    CHECK(cert.outcome == Outcome::NotReduced);
    CHECK_FALSE(cert.proper);
    REQUIRE(cert.offending_index.has_value());
    CHECK(*cert.offending_index == 2);
    CHECK(cert.solution);  // gamma o beta is still reported as a solution
  }
  SUBCASE("genus too small") {
    const auto spec = make_subgroup_spec(c2_channel(63, true, 1), {0});
    CHECK(code_of([&] { solve_relative(v4_problem(63), spec); }) == Errc::GenusTooSmall);
  }
}

TEST_CASE("solve_free_product") {
  const FiniteGroup c2 = catalog::cyclic(2);
  const ActionSpec triv = ActionSpec::trivial(c2, c2);

  SUBCASE("surface part trivial, one free generator") {
    const SurfaceTuple beta(c2, std::vector<Elem>(64, 0), std::vector<Elem>(64, 0));
    const auto cert = solve_free_product(c2, c2, triv, 64, beta, {1});
    CHECK(cert.proper);
    REQUIRE(cert.free_images.size() == 1);
    // (identity_K, h)
    CHECK(cert.free_images[0] == 1);
    std::vector<Elem> seeds = cert.phi.images();
    seeds.push_back(cert.free_images[0]);
    const FiniteGroup v4 = semidirect_product(c2, c2, triv).group;
    CHECK(subgroup_closure(v4, seeds).is_whole());
  }
  SUBCASE("H0 = H with no free generators matches the surface-group solver") {
    const SplitEP ep = v4_problem();
    const auto a = solve_free_product(ep);
    const auto b = solve_gamma_level(ep);
    CHECK(a.proper);
    CHECK(a.phi == b.phi);
  }
  SUBCASE("bound 2|K|^2|H|^3") {
    const SurfaceTuple beta(c2, std::vector<Elem>(63, 0), std::vector<Elem>(63, 0));
    try {
      solve_free_product(c2, c2, triv, 63, beta, {1});
      FAIL("expected GenusTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::GenusTooSmall);
      CHECK(e.data() == std::vector<std::int64_t>{64, 63});
    }
  }
  SUBCASE("beta not surjective on the free product") {
    const SurfaceTuple beta(c2, std::vector<Elem>(64, 0), std::vector<Elem>(64, 0));
    CHECK(code_of([&] { solve_free_product(c2, c2, triv, 64, beta, {0}); }) ==
          Errc::BetaNotSurjective);
  }
}

TEST_CASE("plan_extension") {
  const auto a = plan_extension(2, 1, 1);
  CHECK(a.m == 2);
  CHECK(a.required_index == 3);
  CHECK(a.h == 4);
  CHECK(a.h - a.m >= 2);

  const auto b = plan_extension(2, 2, 2);
  CHECK(b.m == 16);
  CHECK(b.required_index == 79);
  CHECK(b.h == 80);
  CHECK(b.h - b.m == 64);

  CHECK(code_of([] { plan_extension(1, 2, 2); }) == Errc::GenusTooSmall);

  // minimality: one index less violates h - m >= 2|K|^2|H|^3
  for (std::int64_t g = 2; g <= 9; ++g)
    for (std::int64_t k = 1; k <= 4; ++k)
      for (std::int64_t h = 1; h <= 4; ++h) {
        const auto p = plan_extension(g, k, h);
        const std::int64_t target = 2 * k * k * h * h * h;
        CHECK(p.h - p.m >= target);
        if (p.required_index > 1) CHECK(open_subgroup_genus(g, p.required_index - 1) - p.m < target);
      }
}
