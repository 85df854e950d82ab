#include "dessins/codec.hpp"

#include <algorithm>
#include <charconv>

namespace dessins {

namespace {

struct Line {
  int number = 0;   // 1-based in the original text
  int offset = 0;   // 0-based column of content[0] in the original line
  std::string content;
};

// Comment-stripped, trimmed, nonblank lines with their positions.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin != std::string_view::npos) {
      std::size_t end = raw.find_last_not_of(" \t\r");
      out.push_back({number, static_cast<int>(begin),
                     std::string(raw.substr(begin, end - begin + 1))});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(content_lines(text)) {}

  bool done() const { return next_ >= lines_.size(); }

  // Line number errors should point at when the input ends early.
  int end_line() const { return lines_.empty() ? 1 : lines_.back().number + 1; }

  // Next content line, which must be "<key>:<value>"; returns the value
  // trimmed, remembering its position for value_error.
  std::string take(const std::string& key) {
    if (done()) throw ParseError(end_line(), 1, "expected \"" + key + ":\"");
    const Line& line = lines_[next_];
    if (line.content.compare(0, key.size() + 1, key + ":") != 0)
      throw ParseError(line.number, line.offset + 1,
                       "expected \"" + key + ":\", found \"" + line.content + "\"");
    ++next_;
    std::size_t begin = line.content.find_first_not_of(" \t", key.size() + 1);
    if (begin == std::string::npos) {
      value_line_ = line.number;
      value_offset_ = line.offset + static_cast<int>(line.content.size());
      return "";
    }
    value_line_ = line.number;
    value_offset_ = line.offset + static_cast<int>(begin);
    return line.content.substr(begin);
  }

  // Exact-match line (the format header).
  void expect(const std::string& literal) {
    if (done()) throw ParseError(end_line(), 1, "expected \"" + literal + "\"");
    const Line& line = lines_[next_];
    if (line.content != literal)
      throw ParseError(line.number, line.offset + 1,
                       "expected \"" + literal + "\", found \"" + line.content + "\"");
    ++next_;
  }

  bool peek_key(const std::string& key) const {
    return !done() && lines_[next_].content.compare(0, key.size() + 1, key + ":") == 0;
  }

  void expect_end() const {
    if (!done())
      throw ParseError(lines_[next_].number, lines_[next_].offset + 1,
                       "unexpected line \"" + lines_[next_].content + "\"");
  }

  [[noreturn]] void value_error(const std::string& reason, int column_in_value = 0) const {
    throw ParseError(value_line_, value_offset_ + column_in_value + 1, reason);
  }

  int value_line() const { return value_line_; }
  int value_offset() const { return value_offset_; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int value_line_ = 1;
  int value_offset_ = 0;
};

int parse_int(LineReader& reader, const std::string& value, int at, int* end_out) {
  int parsed = 0;
  auto [ptr, ec] = std::from_chars(value.data() + at, value.data() + value.size(), parsed);
  if (ec != std::errc())
    reader.value_error("expected an integer", at);
  *end_out = static_cast<int>(ptr - value.data());
  return parsed;
}

std::vector<int> parse_int_list(LineReader& reader, const std::string& value) {
  std::vector<int> out;
  int at = 0;
  while (true) {
    while (at < static_cast<int>(value.size()) && (value[at] == ' ' || value[at] == '\t')) ++at;
    if (at >= static_cast<int>(value.size())) break;
    out.push_back(parse_int(reader, value, at, &at));
  }
  return out;
}

Perm parse_cycles_value(LineReader& reader, int n, const std::string& value) {
  try {
    return Perm::from_cycles(n, value);
  } catch (const CycleSyntaxError& e) {
    reader.value_error(e.what(), e.offset());
  } catch (const std::invalid_argument& e) {
    reader.value_error(e.what());
  }
}

VertexId parse_mark_value(LineReader& reader, const std::string& value) {
  if (value.size() < 3 || (value[0] != 'B' && value[0] != 'W') || value[1] != ':')
    reader.value_error("expected B:<edge> or W:<edge>");
  int end = 0;
  int edge = parse_int(reader, value, 2, &end);
  if (end != static_cast<int>(value.size()))
    reader.value_error("trailing text after the mark", end);
  return {value[0] == 'B' ? Color::Black : Color::White, edge};
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

DessinDoc parse_dessin(std::string_view text) {
  LineReader reader(text);
  reader.expect("dessin v1");

  std::string edges = reader.take("edges");
  int end = 0;
  int n = parse_int(reader, edges, 0, &end);
  if (end != static_cast<int>(edges.size()))
    reader.value_error("trailing text after the edge count", end);
  if (n < 1) reader.value_error("the edge count must be positive");

  Perm s0 = parse_cycles_value(reader, n, reader.take("s0"));
  Perm s1 = parse_cycles_value(reader, n, reader.take("s1"));

  std::optional<std::pair<VertexId, VertexId>> marks;
  if (reader.peek_key("mark0")) {
    VertexId mark0 = parse_mark_value(reader, reader.take("mark0"));
    VertexId mark1 = parse_mark_value(reader, reader.take("mark1"));
    marks = {mark0, mark1};
  } else if (reader.peek_key("mark1")) {
    reader.take("mark1");
    reader.value_error("mark1 without mark0");
  }
  reader.expect_end();

  return {TreeDessin(n, std::move(s0), std::move(s1)), marks};
}

NormalizedDessin to_normalized(const DessinDoc& doc) {
  if (!doc.marks) throw std::invalid_argument("the document carries no marks");
  return {doc.dessin, doc.marks->first, doc.marks->second};
}

std::string serialize(const TreeDessin& d) {
  return "dessin v1\nedges: " + std::to_string(d.n_edges()) + "\ns0: " + d.s0().to_cycles() +
         "\ns1: " + d.s1().to_cycles() + "\n";
}

std::string serialize(const NormalizedDessin& nd) {
  return serialize(nd.dessin()) + "mark0: " + to_string(nd.mark0()) +
         "\nmark1: " + to_string(nd.mark1()) + "\n";
}

HubbardTree parse_hubbard(std::string_view text) {
  LineReader reader(text);
  reader.expect("hubbard v1");

  std::string count = reader.take("vertices");
  int end = 0;
  int m = parse_int(reader, count, 0, &end);
  if (end != static_cast<int>(count.size()))
    reader.value_error("trailing text after the vertex count", end);
  if (m < 1) reader.value_error("the vertex count must be positive");

  std::vector<std::vector<int>> rot;
  for (int v = 1; v <= m; ++v)
    rot.push_back(parse_int_list(reader, reader.take("rot " + std::to_string(v))));
  std::vector<int> tau = parse_int_list(reader, reader.take("tau"));
  if (tau.size() != static_cast<std::size_t>(m))
    reader.value_error("tau must list one image per vertex");
  std::vector<int> delta = parse_int_list(reader, reader.take("delta"));
  if (delta.size() != static_cast<std::size_t>(m))
    reader.value_error("delta must list one degree per vertex");
  reader.expect_end();

  return {m, std::move(rot), std::move(tau), std::move(delta)};
}

std::string serialize(const HubbardTree& t) {
  std::string out = "hubbard v1\nvertices: " + std::to_string(t.v_count()) + "\n";
  for (int v = 1; v <= t.v_count(); ++v) {
    out += "rot " + std::to_string(v) + ":";
    for (int u : t.rotation(v)) out += " " + std::to_string(u);
    out += "\n";
  }
  out += "tau:";
  for (int v = 1; v <= t.v_count(); ++v) out += " " + std::to_string(t.tau(v));
  out += "\ndelta:";
  for (int v = 1; v <= t.v_count(); ++v) out += " " + std::to_string(t.delta(v));
  out += "\n";
  return out;
}

std::vector<std::string> split_documents(std::string_view text) {
  std::vector<std::string> docs(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    std::size_t begin = raw.find_first_not_of(" \t\r");
    std::size_t endc = raw.find_last_not_of(" \t\r");
    bool separator = begin != std::string_view::npos &&
                     raw.substr(begin, endc - begin + 1) == "---";
    if (separator)
      docs.emplace_back();
    else {
      docs.back().append(raw);
      docs.back().push_back('\n');
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return docs;
}

std::string join_documents(const std::vector<std::string>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += "---\n";
    out += docs[i];
    if (!out.empty() && out.back() != '\n') out += '\n';
  }
  return out;
}

namespace {

std::string dot_nodes_and_edges(const TreeDessin& d, const VertexId* mark0,
                                const VertexId* mark1) {
  std::string out;
  auto node = [&](VertexId v) {
    std::string id = (v.color == Color::Black ? "b" : "w") + std::to_string(v.rep);
    return id;
  };
  for (const auto& [v, valence] : vertices(d)) {
    std::string label = to_string(v);
    if (mark0 && v == *mark0) label += " mark0";
    if (mark1 && v == *mark1) label += " mark1";
    out += "  " + node(v) + " [label=\"" + label + "\" shape=circle";
    if (v.color == Color::Black) out += " style=filled fillcolor=black fontcolor=white";
    out += "];\n";
  }
  for (int e = 1; e <= d.n_edges(); ++e)
    out += "  " + node(vertex_at(d, Color::Black, e)) + " -- " +
           node(vertex_at(d, Color::White, e)) + " [label=\"" + std::to_string(e) + "\"];\n";
  return out;
}

}  // namespace

std::string to_dot(const TreeDessin& d) {
  ensure_valid(d);
  return "graph dessin {\n" + dot_nodes_and_edges(d, nullptr, nullptr) + "}\n";
}

std::string to_dot(const NormalizedDessin& nd) {
  VertexId mark0 = nd.mark0(), mark1 = nd.mark1();
  return "graph dessin {\n" + dot_nodes_and_edges(nd.dessin(), &mark0, &mark1) + "}\n";
}

std::string to_dot(const HubbardTree& t) {
  std::string out = "digraph hubbard {\n";
  for (int v = 1; v <= t.v_count(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + " delta " +
           std::to_string(t.delta(v)) + "\"];\n";
  for (auto [u, v] : t.edges())
    out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + " [dir=none];\n";
  for (int v = 1; v <= t.v_count(); ++v)
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(t.tau(v)) +
           " [style=dashed constraint=false];\n";
  out += "}\n";
  return out;
}

}  // namespace dessins
