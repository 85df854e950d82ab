#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dessins/hubbard.hpp"
#include "dessins/tree_dessin.hpp"

namespace dessins {

/// Syntax error with a 1-based position in the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& reason);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A parsed dessin file: the tree (possibly invalid, so it can be
/// diagnosed) and the marked pair when the file carries one.
struct DessinDoc {
  TreeDessin dessin;
  std::optional<std::pair<VertexId, VertexId>> marks;
};

/// Line-oriented text, "#" starts a comment, blank lines are skipped:
///   dessin v1
///   edges: 4
///   s0: (2 3)
///   s1: (1 2)(3 4)
///   mark0: B:1      (optional, but only together with mark1)
///   mark1: B:4
DessinDoc parse_dessin(std::string_view text);

/// The marked pair as a NormalizedDessin; throws std::invalid_argument
/// when the document has no marks or they do not normalize the dessin.
NormalizedDessin to_normalized(const DessinDoc& doc);

std::string serialize(const TreeDessin& d);
std::string serialize(const NormalizedDessin& nd);

/// Same line discipline:
///   hubbard v1
///   vertices: 3
///   rot 1: 2        (one line per vertex, counterclockwise neighbors)
///   rot 2: 1 3
///   rot 3: 2
///   tau: 3 1 3
///   delta: 1 2 1
HubbardTree parse_hubbard(std::string_view text);
std::string serialize(const HubbardTree& t);

/// Multi-document container: documents separated by "---" lines.
std::vector<std::string> split_documents(std::string_view text);
std::string join_documents(const std::vector<std::string>& docs);

/// Undirected DOT graph: filled nodes for black vertices, open for white,
/// edges labeled by edge number, marks noted in the node labels.
std::string to_dot(const TreeDessin& d);
std::string to_dot(const NormalizedDessin& nd);

/// Directed DOT graph: plain arrows suppressed on tree edges, tau drawn
/// dashed, delta in the node labels.
std::string to_dot(const HubbardTree& t);

}  // namespace dessins
