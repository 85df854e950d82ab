#include "dessins/canonical.hpp"

#include <map>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using dessins::Color;
using dessins::NormalizedDessin;
using dessins::Perm;
using dessins::TreeDessin;
using dessins::VertexId;

namespace {

TreeDessin star8() {
  return {8, Perm::from_cycles(8, "(1 3 5 7)"),
          Perm::from_cycles(8, "(1 2)(3 4)(5 6)(7 8)")};
}

Perm conjugate(const Perm& p, const Perm& s) {
  return compose(s, compose(p, s.inverse()));
}

TreeDessin relabel(const TreeDessin& d, const Perm& s) {
  return {d.n_edges(), conjugate(d.s0(), s), conjugate(d.s1(), s)};
}

NormalizedDessin relabel(const NormalizedDessin& nd, const Perm& s) {
  TreeDessin d = relabel(nd.dessin(), s);
  VertexId m0 = vertex_at(d, nd.mark0().color, s[nd.mark0().rep]);
  VertexId m1 = vertex_at(d, nd.mark1().color, s[nd.mark1().rep]);
  return {std::move(d), m0, m1};
}

// Reference oracle: search all n! relabelings.
bool brute_isomorphic(const TreeDessin& a, const TreeDessin& b) {
  if (a.n_edges() != b.n_edges()) return false;
  for (const Perm& s : testutil::all_perms(a.n_edges()))
    if (conjugate(a.s0(), s) == b.s0() && conjugate(a.s1(), s) == b.s1()) return true;
  return false;
}

}  // namespace

TEST_CASE("the relabeling reported with a canonical form actually produces it") {
  for (const TreeDessin& d : {star8(),
                              TreeDessin(4, Perm::from_cycles(4, "(2 3)"),
                                         Perm::from_cycles(4, "(1 2)(3 4)")),
                              TreeDessin(5, Perm::from_cycles(5, "(2 3)(4 5)"),
                                         Perm::from_cycles(5, "(1 2)(3 4)"))}) {
    auto canon = dessins::canonical_form(d);
    CHECK(relabel(d, canon.relabeling) == canon.dessin);
    // Idempotent: the canonical form is its own canonical form.
    CHECK(dessins::canonical_form(canon.dessin).dessin == canon.dessin);
  }
}

TEST_CASE("canonical keys ignore how edges happen to be numbered") {
  std::mt19937 rng(424242);
  for (const TreeDessin& d : {star8(), dessins::refine(star8())}) {
    auto key = dessins::canonical_key(d);
    std::vector<int> img(d.n_edges());
    for (int i = 0; i < d.n_edges(); ++i) img[i] = i + 1;
    for (int trial = 0; trial < 30; ++trial) {
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(dessins::canonical_key(relabel(d, Perm(d.n_edges(), img))) == key);
    }
  }
}

TEST_CASE("canonical keys agree with exhaustive isomorphism search") {
  for (int n = 2; n <= 5; ++n) {
    auto perms = testutil::all_perms(n);
    // One representative per key, every later hit verified against it.
    std::map<std::vector<int>, TreeDessin> classes;
    for (const Perm& s0 : perms)
      for (const Perm& s1 : perms) {
        TreeDessin d(n, s0, s1);
        if (!d.is_valid()) continue;
        auto key = dessins::canonical_key(d);
        auto [it, fresh] = classes.emplace(key, d);
        if (!fresh) REQUIRE(brute_isomorphic(d, it->second));
      }
    REQUIRE(!classes.empty());
    // Distinct keys really are distinct classes.
    for (auto i = classes.begin(); i != classes.end(); ++i)
      for (auto j = std::next(i); j != classes.end(); ++j)
        REQUIRE_FALSE(brute_isomorphic(i->second, j->second));
  }
}

TEST_CASE("isomorphism is decided across sizes and shapes") {
  TreeDessin path(4, Perm::from_cycles(4, "(2 3)"), Perm::from_cycles(4, "(1 2)(3 4)"));
  TreeDessin chain(4, Perm::from_cycles(4, "(3 4)"), Perm::from_cycles(4, "(1 3)(2 4)"));
  CHECK(dessins::isomorphic(path, chain));
  CHECK_FALSE(dessins::isomorphic(path, star8()));
  CHECK_FALSE(dessins::isomorphic(path, TreeDessin(2, Perm(2), Perm::from_cycles(2, "(1 2)"))));
}

TEST_CASE("marked stars are isomorphic exactly when a rotation aligns the marks") {
  TreeDessin s = star8();
  NormalizedDessin f(s, {Color::Black, 6}, {Color::Black, 2});
  NormalizedDessin f_swapped(s, {Color::Black, 2}, {Color::Black, 6});
  NormalizedDessin g(s, {Color::Black, 6}, {Color::Black, 4});
  NormalizedDessin g_swapped(s, {Color::Black, 4}, {Color::Black, 6});

  // Opposite legs swap under the half turn, adjacent ones cannot.
  CHECK(dessins::isomorphic(f, f_swapped));
  CHECK_FALSE(dessins::isomorphic(f, g));
  CHECK_FALSE(dessins::isomorphic(g, g_swapped));
  CHECK(dessins::isomorphic(g, NormalizedDessin(s, {Color::Black, 8}, {Color::Black, 6})));

  CHECK(dessins::canonical_key(f) == dessins::canonical_key(f_swapped));
  CHECK(dessins::canonical_key(f) != dessins::canonical_key(g));
}

TEST_CASE("normalized canonical keys ignore numbering and keep the marks") {
  NormalizedDessin g(star8(), {Color::Black, 6}, {Color::Black, 4});
  auto key = dessins::canonical_key(g);
  std::mt19937 rng(99);
  std::vector<int> img{1, 2, 3, 4, 5, 6, 7, 8};
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(img.begin(), img.end(), rng);
    NormalizedDessin moved = relabel(g, Perm(8, img));
    CHECK(dessins::canonical_key(moved) == key);
    auto canon = dessins::canonical_form_normalized(moved);
    CHECK(relabel(moved, canon.relabeling) == canon.dessin);
  }
}

TEST_CASE("mark placement splits otherwise equal underlying trees") {
  // Same underlying path, marks at the two ends vs end plus middle.
  TreeDessin path(4, Perm::from_cycles(4, "(2 3)"), Perm::from_cycles(4, "(1 2)(3 4)"));
  NormalizedDessin ends(path, {Color::Black, 1}, {Color::Black, 4});
  NormalizedDessin mid(path, {Color::Black, 1}, {Color::Black, 2});
  CHECK_FALSE(dessins::isomorphic(ends, mid));
  CHECK(dessins::isomorphic(ends, NormalizedDessin(path, {Color::Black, 4}, {Color::Black, 1})));
  CHECK(underlying(ends) == underlying(mid));
  CHECK(dessins::isomorphic(underlying(ends), underlying(mid)));
}
