#include <string>
#include <vector>

#include "dessins/canonical.hpp"
#include "dessins/codec.hpp"
#include "dessins/dynamics.hpp"
#include "dessins/hubbard.hpp"
#include "dessins/perm.hpp"
#include "dessins/tree_dessin.hpp"
#include "doctest.h"

using dessins::Color;
using dessins::DessinDoc;
using dessins::HubbardTree;
using dessins::join_documents;
using dessins::NormalizedDessin;
using dessins::parse_dessin;
using dessins::parse_hubbard;
using dessins::ParseError;
using dessins::Perm;
using dessins::serialize;
using dessins::split_documents;
using dessins::to_dot;
using dessins::to_normalized;
using dessins::TreeDessin;
using dessins::VertexId;

namespace {

const char* kPathText = "dessin v1\nedges: 4\ns0: (2 3)\ns1: (1 2)(3 4)\n";
const char* kMarkedPathText =
    "dessin v1\nedges: 4\ns0: (2 3)\ns1: (1 2)(3 4)\nmark0: B:1\nmark1: B:4\n";

TreeDessin path4() {
  return TreeDessin(4, Perm::from_cycles(4, "(2 3)"), Perm::from_cycles(4, "(1 2)(3 4)"));
}

TreeDessin star8() {
  return TreeDessin(8, Perm::from_cycles(8, "(1 3 5 7)"),
                    Perm::from_cycles(8, "(1 2)(3 4)(5 6)(7 8)"));
}

ParseError capture_dessin_error(const std::string& text) {
  try {
    parse_dessin(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, 0, "");
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

// Structural stand-in for a DOT grammar check: one statement per line, each
// terminated correctly, quotes and braces balanced.
void check_dot_shape(const std::string& dot, const std::string& header) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < dot.size()) {
    std::size_t eol = dot.find('\n', pos);
    REQUIRE(eol != std::string::npos);
    lines.push_back(dot.substr(pos, eol - pos));
    pos = eol + 1;
  }
  REQUIRE(lines.size() >= 2);
  CHECK(lines.front() == header + " {");
  CHECK(lines.back() == "}");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    CAPTURE(lines[i]);
    CHECK(lines[i].substr(0, 2) == "  ");
    CHECK(lines[i].back() == ';');
    CHECK(count_occurrences(lines[i], "\"") % 2 == 0);
  }
  CHECK(count_occurrences(dot, "{") == 1);
  CHECK(count_occurrences(dot, "}") == 1);
}

}  // namespace

TEST_CASE("dessin text parses to the expected permutation pair") {
  DessinDoc doc = parse_dessin(kPathText);
  CHECK(doc.dessin == path4());
  CHECK(!doc.marks.has_value());

  DessinDoc marked = parse_dessin(kMarkedPathText);
  CHECK(marked.dessin == path4());
  REQUIRE(marked.marks.has_value());
  CHECK(marked.marks->first == VertexId{Color::Black, 1});
  CHECK(marked.marks->second == VertexId{Color::Black, 4});

  NormalizedDessin nd = to_normalized(marked);
  CHECK(nd.mark0() == VertexId{Color::Black, 1});
  CHECK(nd.mark1() == VertexId{Color::Black, 4});
  CHECK(is_extra_clean(nd));

  CHECK_THROWS_AS(to_normalized(doc), std::invalid_argument);
}

TEST_CASE("serialization is the canonical spelling") {
  CHECK(serialize(path4()) == kPathText);
  NormalizedDessin nd(path4(), VertexId{Color::Black, 1}, VertexId{Color::Black, 4});
  CHECK(serialize(nd) == kMarkedPathText);

  // Identity permutations spell as "()".
  TreeDessin single(1, Perm(1), Perm(1));
  CHECK(serialize(single) == "dessin v1\nedges: 1\ns0: ()\ns1: ()\n");
  CHECK(parse_dessin(serialize(single)).dessin == single);
}

TEST_CASE("parse then serialize is the identity on a corpus") {
  std::vector<TreeDessin> corpus{path4(), star8(), refine(star8())};
  NormalizedDessin f(star8(), VertexId{Color::Black, 6}, VertexId{Color::Black, 2});
  corpus.push_back(dessins::iterate_recursion(f, 2).dessin());
  for (const TreeDessin& d : corpus) {
    std::string text = serialize(d);
    DessinDoc doc = parse_dessin(text);
    CHECK(doc.dessin == d);
    CHECK(serialize(doc.dessin) == text);
  }

  std::string marked = serialize(f);
  CHECK(serialize(to_normalized(parse_dessin(marked))) == marked);
}

TEST_CASE("comments, blank lines, and spacing are tolerated") {
  std::string messy =
      "# a four-edge path\n"
      "\n"
      "  dessin v1  \n"
      "edges: 4   # comment after the value\n"
      "\n"
      "s0:(2 3)\n"
      "s1:   (1 2)(3 4)\t\n"
      "# trailing remark\n";
  DessinDoc doc = parse_dessin(messy);
  CHECK(doc.dessin == path4());
  CHECK(serialize(doc.dessin) == kPathText);
}

TEST_CASE("parse errors carry the offending line and column") {
  ParseError header = capture_dessin_error("dessin v2\nedges: 1\ns0: ()\ns1: ()\n");
  CHECK(header.line() == 1);
  CHECK(header.column() == 1);
  CHECK(std::string(header.what()) ==
        "line 1, column 1: expected \"dessin v1\", found \"dessin v2\"");

  ParseError empty = capture_dessin_error("");
  CHECK(empty.line() == 1);

  ParseError truncated = capture_dessin_error("dessin v1\nedges: 4\ns0: (2 3)\n");
  CHECK(truncated.line() == 4);
  CHECK(std::string(truncated.what()).find("s1") != std::string::npos);

  ParseError word = capture_dessin_error("dessin v1\nedges: four\n");
  CHECK(word.line() == 2);
  CHECK(word.column() == 8);

  ParseError tail = capture_dessin_error("dessin v1\nedges: 4x\n");
  CHECK(tail.line() == 2);
  CHECK(tail.column() == 9);

  ParseError zero = capture_dessin_error("dessin v1\nedges: 0\ns0: ()\ns1: ()\n");
  CHECK(zero.line() == 2);
  CHECK(std::string(zero.what()).find("positive") != std::string::npos);

  // Cycle syntax errors keep their offset, mapped into the line.
  ParseError dup = capture_dessin_error("dessin v1\nedges: 4\ns0: (1 2)(2 3)\ns1: ()\n");
  CHECK(dup.line() == 3);
  CHECK(dup.column() == 11);
  CHECK(std::string(dup.what()) == "line 3, column 11: point repeated across cycles");

  ParseError range = capture_dessin_error("dessin v1\nedges: 4\ns0: (2 5)\ns1: ()\n");
  CHECK(range.line() == 3);
  CHECK(std::string(range.what()).find("out of range") != std::string::npos);

  ParseError lone = capture_dessin_error(std::string(kPathText) + "mark1: B:4\n");
  CHECK(lone.line() == 5);
  CHECK(std::string(lone.what()).find("mark1 without mark0") != std::string::npos);

  ParseError badmark =
      capture_dessin_error(std::string(kPathText) + "mark0: Q:1\nmark1: B:4\n");
  CHECK(badmark.line() == 5);
  CHECK(badmark.column() == 8);
  CHECK(std::string(badmark.what()).find("B:<edge> or W:<edge>") != std::string::npos);

  ParseError marktail =
      capture_dessin_error(std::string(kPathText) + "mark0: B:1 extra\nmark1: B:4\n");
  CHECK(marktail.line() == 5);
  CHECK(marktail.column() == 11);

  ParseError extra = capture_dessin_error(std::string(kPathText) + "faces: 1\n");
  CHECK(extra.line() == 5);
  CHECK(extra.column() == 1);
  CHECK(std::string(extra.what()).find("unexpected line") != std::string::npos);
}

TEST_CASE("semantic dessin errors are distinct from parse errors") {
  // Well-formed text, invalid tree: two components.
  std::string split = "dessin v1\nedges: 2\ns0: ()\ns1: ()\n";
  CHECK_NOTHROW(parse_dessin(split));
  CHECK_FALSE(dessins::validate(parse_dessin(split).dessin).ok);

  // Marks naming a vertex that does not exist surface when normalizing.
  std::string ghost = std::string(kPathText) + "mark0: B:3\nmark1: B:4\n";
  DessinDoc doc = parse_dessin(ghost);
  CHECK_THROWS_AS(to_normalized(doc), std::invalid_argument);
}

TEST_CASE("hubbard text round trips") {
  HubbardTree chebyshev(3, {{2}, {1, 3}, {2}}, {3, 1, 3}, {1, 2, 1});
  std::string text = serialize(chebyshev);
  CHECK(text ==
        "hubbard v1\nvertices: 3\nrot 1: 2\nrot 2: 1 3\nrot 3: 2\n"
        "tau: 3 1 3\ndelta: 1 2 1\n");
  CHECK(parse_hubbard(text) == chebyshev);

  NormalizedDessin f(star8(), VertexId{Color::Black, 6}, VertexId{Color::Black, 2});
  HubbardTree folded = dessins::dessin_to_hubbard(f);
  CHECK(parse_hubbard(serialize(folded)) == folded);

  // A lone vertex has an empty rotation line.
  HubbardTree point(1, {{}}, {1}, {2});
  CHECK(serialize(point) == "hubbard v1\nvertices: 1\nrot 1:\ntau: 1\ndelta: 2\n");
  CHECK(parse_hubbard(serialize(point)) == point);
}

TEST_CASE("hubbard parse and semantic errors") {
  CHECK_THROWS_AS(parse_hubbard("dessin v1\n"), ParseError);

  try {
    parse_hubbard("hubbard v1\nvertices: 3\nrot 1: 2\nrot 2: 1 3\nrot 3: 2\ntau: 3 1\ndelta: 1 2 1\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("one image per vertex") != std::string::npos);
  }

  try {
    parse_hubbard("hubbard v1\nvertices: 2\nrot 1: 2\nrot 2: 1\ntau: 1 1\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("delta") != std::string::npos);
  }

  // Asymmetric adjacency is a semantic failure, not a parse failure.
  std::string asym = "hubbard v1\nvertices: 2\nrot 1: 2\nrot 2:\ntau: 1 1\ndelta: 1 1\n";
  CHECK_THROWS_AS(parse_hubbard(asym), std::invalid_argument);
  try {
    parse_hubbard(asym);
  } catch (const ParseError&) {
    FAIL("semantic errors must not be ParseError");
  } catch (const std::invalid_argument&) {
  }
}

TEST_CASE("document streams split on separator lines and rejoin") {
  std::vector<std::string> docs{serialize(path4()), serialize(star8())};
  std::string joined = join_documents(docs);
  CHECK(joined == docs[0] + "---\n" + docs[1]);
  CHECK(split_documents(joined) == docs);

  CHECK(split_documents("a\n---\nb\n") == std::vector<std::string>{"a\n", "b\n"});
  CHECK(split_documents("a\n  ---  \nb\n") == std::vector<std::string>{"a\n", "b\n"});
  CHECK(split_documents("x") == std::vector<std::string>{"x\n"});
  CHECK(split_documents("") == std::vector<std::string>{""});

  // A commented separator is content, not a document break.
  CHECK(split_documents("a\n# ---\nb\n") ==
        std::vector<std::string>{"a\n# ---\nb\n"});

  // Joining adds missing trailing newlines.
  CHECK(join_documents({"a", "b"}) == "a\n---\nb\n");

  std::vector<std::string> three{serialize(path4()), serialize(star8()),
                                 serialize(refine(path4()))};
  CHECK(split_documents(join_documents(three)) == three);
}

TEST_CASE("dot export lists every vertex and edge") {
  std::string path_dot = to_dot(path4());
  check_dot_shape(path_dot, "graph dessin");
  CHECK(count_occurrences(path_dot, " -- ") == 4);
  CHECK(count_occurrences(path_dot, "label=\"B:") == 3);
  CHECK(count_occurrences(path_dot, "label=\"W:") == 2);
  CHECK(count_occurrences(path_dot, "fillcolor=black") == 3);

  std::string star_dot = to_dot(star8());
  check_dot_shape(star_dot, "graph dessin");
  CHECK(count_occurrences(star_dot, " -- ") == 8);
  CHECK(count_occurrences(star_dot, "label=\"B:") == 5);
  CHECK(count_occurrences(star_dot, "label=\"W:") == 4);

  NormalizedDessin f(star8(), VertexId{Color::Black, 6}, VertexId{Color::Black, 2});
  std::string marked_dot = to_dot(f);
  check_dot_shape(marked_dot, "graph dessin");
  CHECK(marked_dot.find("label=\"B:6 mark0\"") != std::string::npos);
  CHECK(marked_dot.find("label=\"B:2 mark1\"") != std::string::npos);

  HubbardTree chebyshev(3, {{2}, {1, 3}, {2}}, {3, 1, 3}, {1, 2, 1});
  std::string hub_dot = to_dot(chebyshev);
  check_dot_shape(hub_dot, "digraph hubbard");
  CHECK(count_occurrences(hub_dot, "[dir=none]") == 2);
  CHECK(count_occurrences(hub_dot, "style=dashed") == 3);
  CHECK(hub_dot.find("label=\"2 delta 2\"") != std::string::npos);

  // Output is deterministic.
  CHECK(to_dot(path4()) == path_dot);
}
