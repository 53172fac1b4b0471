#include "doctest.h"

#include <random>

#include "surfep/oracle.hpp"
#include "surfep/surface.hpp"

using namespace surfep;

namespace {

Elem find_order(const FiniteGroup& g, std::size_t ord, std::size_t skip = 0) {
  for (Elem a = 0; a < g.order(); ++a)
    if (g.element_order(a) == ord && skip-- == 0) return a;
  throw std::logic_error("no element of that order");
}

}  // namespace

TEST_CASE("make_surface_tuple") {
  const FiniteGroup c6 = catalog::cyclic(6);
  CHECK_NOTHROW(make_surface_tuple(c6, {1, 2, 5}, {3, 4, 0}));

  const FiniteGroup s3 = catalog::symmetric3();
  const Elem t = find_order(s3, 2), c = find_order(s3, 3);
  try {
    make_surface_tuple(s3, {t}, {c});
    FAIL("expected RelationViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RelationViolated);
    REQUIRE(e.data().size() == 1);
    CHECK(Elem(e.data()[0]) == s3.comm(t, c));
  }
  CHECK_NOTHROW(make_surface_tuple(s3, {t, c}, {t, c}));
  CHECK_THROWS_AS(make_surface_tuple(s3, {}, {}), Error);
  CHECK_THROWS_AS(make_surface_tuple(s3, {0}, {9}), Error);
}

TEST_CASE("make_surface_tuple accepts exactly the relation-satisfying tuples (S3, g=1,2)") {
  const FiniteGroup s3 = catalog::symmetric3();
  for (std::size_t g = 1; g <= 2; ++g) {
    std::uint64_t accepted = 0, total = 0;
    std::vector<Elem> x(g), y(g);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == g) {
        ++total;
        try {
          make_surface_tuple(s3, x, y);
          ++accepted;
        } catch (const Error& e) {
          CHECK(e.code() == Errc::RelationViolated);
        }
        return;
      }
      for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) {
          x[i] = a;
          y[i] = b;
          rec(i + 1);
        }
    };
    rec(0);
    CHECK(accepted == oracle::enumerate_surface_tuples(s3, g));
  }
}

TEST_CASE("Word parsing and printing") {
  const Word w = Word::parse("x1^-1 x14 y2^3");
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[0] == Letter{{false, 1}, -1});
  CHECK(w.letters()[1] == Letter{{false, 14}, 1});
  CHECK(w.letters()[2] == Letter{{true, 2}, 3});
  CHECK(w.to_string() == "x1^-1 x14 y2^3");
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("x1 x1^-1").empty());
  CHECK(Word::parse("x2 x2 y1").to_string() == "x2^2 y1");
  CHECK(w.max_index() == 14);
  for (const char* bad : {"z1", "x0", "x", "x1^", "x1^0", "x1y2", "x1 ^2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Word::parse(bad), Error);
  }
  CHECK((w * w.inverse()).empty());
  CHECK(commutator(Word::x(1), Word::y(1)).to_string() == "x1^-1 y1^-1 x1 y1");
}

TEST_CASE("evaluate_word") {
  const FiniteGroup c2 = catalog::cyclic(2);
  const SurfaceTuple t(c2, {1, 0}, {0, 1});
  CHECK(evaluate_word(t, Word()) == 0);
  CHECK(evaluate_word(t, Word::parse("x1 x1^-1")) == 0);
  CHECK(evaluate_word(t, Word::parse("x1^3")) == 1);
  CHECK(evaluate_word(t, Word::parse("x1 y2")) == 0);
  try {
    evaluate_word(t, Word::parse("x3"));
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("tuple_image") {
  const FiniteGroup c2 = catalog::cyclic(2);
  CHECK(tuple_image(SurfaceTuple(c2, {0, 0}, {0, 0})).is_trivial());
  CHECK(tuple_image(SurfaceTuple(c2, {0, 1}, {0, 0})).is_whole());
  const FiniteGroup s3 = catalog::symmetric3();
  const Elem t = find_order(s3, 2), c = find_order(s3, 3);
  CHECK(tuple_image(SurfaceTuple(s3, {t, c}, {t, c})).is_whole());
}

TEST_CASE("pigeonhole_select") {
  using P = std::pair<Elem, Elem>;
  const std::vector<P> v{{0, 1}, {0, 1}, {2, 3}, {0, 1}};
  CHECK(pigeonhole_select(v, 3) == std::vector<std::size_t>{1, 2, 4});
  CHECK(pigeonhole_select(v, 1) == std::vector<std::size_t>{1});
  try {
    pigeonhole_select(v, 4);
    FAIL("expected NoRepeatedPair");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoRepeatedPair);
  }

  // 64 pairs over C2 (4 possible values), m = 16: always succeeds
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<P> pairs;
    for (int i = 0; i < 64; ++i) pairs.emplace_back(Elem(rng() % 2), Elem(rng() % 2));
    const auto sel = pigeonhole_select(pairs, 16);
    REQUIRE(sel.size() == 16);
    for (std::size_t i = 0; i < sel.size(); ++i) {
      CHECK(pairs[sel[i] - 1] == pairs[sel[0] - 1]);
      if (i) CHECK(sel[i] > sel[i - 1]);
    }
  }
}

TEST_CASE("move_pair_to_front") {
  const FiniteGroup c6 = catalog::cyclic(6);
  const SurfaceTuple ab(c6, {1, 2, 3}, {4, 5, 0});
  const BasisState st({ab});

  SUBCASE("src == dst is a no-op") {
    const BasisState same = move_pair_to_front(st, 2, 2);
    CHECK(same.channel(0) == ab);
    CHECK(same.moves().empty());
  }
  SUBCASE("abelian channel: images permuted only") {
    const BasisState moved = move_pair_to_front(st, 3, 1);
    CHECK(moved.channel(0).x() == std::vector<Elem>{3, 1, 2});
    CHECK(moved.channel(0).y() == std::vector<Elem>{0, 4, 5});
    CHECK(moved.x_word(1) == Word::x(3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(move_pair_to_front(st, 4, 1), Error);
    CHECK_THROWS_AS(move_pair_to_front(st, 1, 2), Error);
    CHECK_THROWS_AS(move_pair_to_front(st, 1, 0), Error);
  }

  SUBCASE("S3 channel: conjugation by a non-identity commutator") {
    const FiniteGroup s3 = catalog::symmetric3();
    // slot 2 holds a non-commuting pair; slot 1 compensates with the
    // inverse commutator so the relation holds
    const Elem t = find_order(s3, 2), c = find_order(s3, 3);
    const Elem comm2 = s3.comm(t, c);
    // [a,b] = comm2^-1 with a = c, b = t
    REQUIRE(s3.comm(c, t) == s3.inv(comm2));
    const SurfaceTuple tup(s3, {c, t}, {t, c});
    const BasisState moved = move_pair_to_front(BasisState({tup}), 2, 1);
    const SurfaceTuple after = moved.channel(0);  // re-validates the relation
    CHECK(after.x(1) == t);
    CHECK(after.y(1) == c);
    CHECK(after.x(2) == s3.conj(c, comm2));
    CHECK(after.y(2) == s3.conj(t, comm2));
    CHECK(tuple_image(after) == tuple_image(tup));
    // words evaluate to the stored images under the original tuple
    for (std::size_t i = 1; i <= 2; ++i) {
      CHECK(evaluate_word(tup, moved.x_word(i)) == after.x(i));
      CHECK(evaluate_word(tup, moved.y_word(i)) == after.y(i));
    }
    CHECK(to_original_basis(moved, after) == tup);
  }
}

TEST_CASE("move sequences preserve relations, closures and word round trips") {
  std::mt19937_64 rng(11);
  const std::vector<FiniteGroup> targets{catalog::symmetric3(), catalog::dihedral(4),
                                         catalog::quaternion8()};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 2 + rng() % 5;
    std::vector<SurfaceTuple> channels;
    for (const auto& grp : targets) channels.push_back(oracle::random_surface_tuple(grp, g, rng()));
    BasisState st(channels);
    for (int step = 0; step < 6; ++step) {
      const std::size_t src = 1 + rng() % g;
      const std::size_t dst = 1 + rng() % src;
      st = move_pair_to_front(st, src, dst);
    }
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const SurfaceTuple now = st.channel(c);
      CHECK(tuple_image(now) == tuple_image(channels[c]));
      for (std::size_t i = 1; i <= g; ++i) {
        CHECK(evaluate_word(channels[c], st.x_word(i)) == now.x(i));
        CHECK(evaluate_word(channels[c], st.y_word(i)) == now.y(i));
      }
      CHECK(to_original_basis(st, now) == channels[c]);
    }
  }
}

TEST_CASE("open_subgroup_genus") {
  CHECK(open_subgroup_genus(2, 1) == 2);
  CHECK(open_subgroup_genus(2, 3) == 4);
  CHECK(open_subgroup_genus(3, 5) == 11);
  try {
    open_subgroup_genus(1, 3);
    FAIL("expected GenusTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GenusTooSmall);
  }
  CHECK_THROWS_AS(open_subgroup_genus(2, 0), Error);
}
