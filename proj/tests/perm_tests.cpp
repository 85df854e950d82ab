#include "dessins/perm.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using dessins::CycleSyntaxError;
using dessins::Perm;

TEST_CASE("composition applies the right factor first") {
  Perm a = Perm::from_cycles(4, "(2 3)");
  Perm b = Perm::from_cycles(4, "(1 2)(3 4)");
  Perm c = dessins::compose(a, b);
  CHECK(c == Perm::from_cycles(4, "(1 3 4 2)"));
  CHECK(c[1] == 3);
  CHECK(c[2] == 1);
}

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::from_cycles(8, "(1 3 5 7)(2 4)");
  CHECK(p.to_cycles() == "(1 3 5 7)(2 4)");
  CHECK(p[7] == 1);
  CHECK(p[6] == 6);

  CHECK(Perm::from_cycles(4, "()").is_identity());
  CHECK(Perm(4).to_cycles() == "()");

  // Whitespace-insensitive; cycles may start anywhere in the orbit.
  CHECK(Perm::from_cycles(8, " ( 3 5 7 1 )(2 4) ") == p);
}

TEST_CASE("cycle decomposition includes fixed points, smallest first") {
  Perm p = Perm::from_cycles(8, "(1 3 5 7)(2 4)");
  auto cycles = p.cycles();
  REQUIRE(cycles.size() == 4);
  CHECK(cycles[0] == std::vector<int>{1, 3, 5, 7});
  CHECK(cycles[1] == std::vector<int>{2, 4});
  CHECK(cycles[2] == std::vector<int>{6});
  CHECK(cycles[3] == std::vector<int>{8});
  CHECK(p.cycle_count() == 4);
}

TEST_CASE("malformed cycle text is rejected with an offset") {
  CHECK_THROWS_AS(Perm::from_cycles(8, "(1 2"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, "(0)"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, "(9)"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, "(1 1)"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, "(1 2)(2 3)"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, "1 2"), CycleSyntaxError);
  CHECK_THROWS_AS(Perm::from_cycles(8, ""), CycleSyntaxError);

  try {
    Perm::from_cycles(8, "(1 2)(2 3)");
    FAIL("expected CycleSyntaxError");
  } catch (const CycleSyntaxError& e) {
    CHECK(e.offset() == 6);
  }
}

TEST_CASE("image tables must be bijections") {
  CHECK_THROWS_AS(Perm(3, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(3, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(3, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(0, {}), std::invalid_argument);
}

TEST_CASE("inverse and associativity on random permutations") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    auto random_perm = [&] {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      return Perm(n, img);
    };
    Perm a = random_perm(), b = random_perm(), c = random_perm();
    CHECK(dessins::compose(a, a.inverse()).is_identity());
    CHECK(dessins::compose(a.inverse(), a).is_identity());
    CHECK(dessins::compose(dessins::compose(a, b), c) ==
          dessins::compose(a, dessins::compose(b, c)));
    CHECK(Perm::from_cycles(n, a.to_cycles()) == a);
  }
}

TEST_CASE("composing different degrees is an error") {
  CHECK_THROWS_AS(dessins::compose(Perm(3), Perm(4)), std::invalid_argument);
}
