#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dessins/canonical.hpp"
#include "dessins/codec.hpp"
#include "dessins/dynamics.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/hubbard.hpp"
#include "dessins/tree_dessin.hpp"

namespace dessins::cli {
namespace {

// Thrown by command bodies to unwind with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct NamedDoc {
  std::string label;  // file path, plus the document index when several
  std::string text;
};

std::vector<NamedDoc> load_documents(const std::string& path) {
  std::vector<std::string> docs = split_documents(read_file(path));
  std::vector<NamedDoc> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string label =
        docs.size() == 1 ? path : path + " document " + std::to_string(i + 1);
    out.push_back({std::move(label), std::move(docs[i])});
  }
  return out;
}

NamedDoc load_single_document(const std::string& path) {
  std::vector<NamedDoc> docs = load_documents(path);
  if (docs.size() != 1)
    throw Exit{kUsage, path + ": expected a single document, found " +
                           std::to_string(docs.size())};
  return std::move(docs.front());
}

bool looks_like_hubbard(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1) == "hubbard v1";
  }
  return false;
}

DessinDoc parse_dessin_doc(const NamedDoc& doc) {
  if (looks_like_hubbard(doc.text))
    throw Exit{kUsage, doc.label + ": expected a dessin document"};
  try {
    return parse_dessin(doc.text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, doc.label + ": " + e.what()};
  }
}

HubbardTree parse_hubbard_doc(const NamedDoc& doc) {
  try {
    return parse_hubbard(doc.text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, doc.label + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    // Well-formed text describing a broken tree.
    throw Exit{kInvalid, doc.label + ": " + e.what()};
  }
}

NormalizedDessin normalized_or_exit(const NamedDoc& doc, const DessinDoc& parsed) {
  if (!parsed.marks)
    throw Exit{kInvalid, doc.label + ": the document carries no marks"};
  try {
    return to_normalized(parsed);
  } catch (const std::invalid_argument& e) {
    throw Exit{kInvalid, doc.label + ": " + e.what()};
  }
}

void ensure_valid_or_exit(const NamedDoc& doc, const TreeDessin& d) {
  const ValidationReport& report = validate(d);
  if (!report.ok)
    throw Exit{kInvalid, doc.label + ": " + report.violations.front()};
}

VertexId parse_vertex(const std::string& text) {
  Exit bad{kUsage, "expected B:<edge> or W:<edge>, got \"" + text + "\""};
  if (text.size() < 3 || (text[0] != 'B' && text[0] != 'W') || text[1] != ':') throw bad;
  int edge = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || edge > 1000000) throw bad;
    edge = edge * 10 + (text[i] - '0');
  }
  if (edge < 1) throw bad;
  return {text[0] == 'B' ? Color::Black : Color::White, edge};
}

// Orders are printed exactly; large powers of two also get the exponent,
// the form the monodromy literature quotes them in.
std::string format_order(const BigInt& order) {
  std::string plain = order.str();
  namespace mp = boost::multiprecision;
  if (order >= 65536 && mp::msb(order) == mp::lsb(order))
    plain += " (2^" + std::to_string(mp::msb(order)) + ")";
  return plain;
}

std::string status_line(const AxiomCheck& check) {
  switch (check.status) {
    case CheckStatus::Pass:
      return check.name + ": pass";
    case CheckStatus::NotChecked:
      return check.name + ": not checked";
    case CheckStatus::Fail:
      return check.name + ": FAIL" + (check.detail.empty() ? "" : " " + check.detail);
  }
  return check.name + ": ?";
}

int cmd_validate(const std::string& path, std::ostream& out) {
  std::vector<NamedDoc> docs = load_documents(path);
  bool all_ok = true;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string prefix = docs.size() == 1 ? "" : "document " + std::to_string(i + 1) + ": ";
    if (looks_like_hubbard(docs[i].text)) {
      HubbardTree t = parse_hubbard_doc(docs[i]);
      HubbardReport report = validate_hubbard(t);
      out << prefix << (report.ok ? "ok" : "INVALID") << "\n";
      for (const AxiomCheck& check : report.checks) out << "  " << status_line(check) << "\n";
      all_ok = all_ok && report.ok;
      continue;
    }
    DessinDoc doc = parse_dessin_doc(docs[i]);
    ValidationReport report =
        doc.marks ? validate_normalized(doc.dessin, doc.marks->first, doc.marks->second)
                  : validate(doc.dessin);
    out << prefix << (report.ok ? "ok" : "INVALID") << "\n";
    for (const std::string& violation : report.violations) out << "  " << violation << "\n";
    all_ok = all_ok && report.ok;
  }
  return all_ok ? kOk : kInvalid;
}

int cmd_canon(const std::string& path, std::ostream& out) {
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    DessinDoc doc = parse_dessin_doc(named);
    if (doc.marks) {
      NormalizedDessin nd = normalized_or_exit(named, doc);
      results.push_back(serialize(canonical_form_normalized(nd).dessin));
    } else {
      ensure_valid_or_exit(named, doc.dessin);
      results.push_back(serialize(canonical_form(doc.dessin).dessin));
    }
  }
  out << join_documents(results);
  return kOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  NamedDoc named_a = load_single_document(path_a);
  NamedDoc named_b = load_single_document(path_b);
  DessinDoc a = parse_dessin_doc(named_a);
  DessinDoc b = parse_dessin_doc(named_b);
  if (a.marks.has_value() != b.marks.has_value())
    throw Exit{kUsage, "cannot compare a marked dessin with an unmarked one"};
  bool iso = false;
  if (a.marks) {
    iso = isomorphic(normalized_or_exit(named_a, a), normalized_or_exit(named_b, b));
  } else {
    ensure_valid_or_exit(named_a, a.dessin);
    ensure_valid_or_exit(named_b, b.dessin);
    iso = isomorphic(a.dessin, b.dessin);
  }
  out << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kNegative;
}

void print_valencies(std::ostream& out, const char* name, const std::vector<int>& valencies) {
  out << name << ":";
  for (int v : valencies) out << " " << v;
  out << "\n";
}

int cmd_invariants(const std::string& path, int tower, std::ostream& out) {
  std::vector<NamedDoc> docs = load_documents(path);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs.size() > 1) out << (i ? "\n" : "") << "document " << i + 1 << ":\n";
    DessinDoc doc = parse_dessin_doc(docs[i]);
    Fingerprint fp;
    if (doc.marks) {
      NormalizedDessin nd = normalized_or_exit(docs[i], doc);
      try {
        fp = fingerprint(nd, tower);
      } catch (const std::invalid_argument& e) {
        throw Exit{kInvalid, docs[i].label + ": " + e.what()};
      }
    } else {
      if (tower > 1)
        throw Exit{kInvalid,
                   docs[i].label + ": a monodromy tower needs a marked dessin"};
      ensure_valid_or_exit(docs[i], doc.dessin);
      fp.degree = doc.dessin.n_edges();
      for (const auto& [v, valence] : vertices(doc.dessin))
        (v.color == Color::Black ? fp.black_valencies : fp.white_valencies).push_back(valence);
      std::sort(fp.black_valencies.begin(), fp.black_valencies.end());
      std::sort(fp.white_valencies.begin(), fp.white_valencies.end());
      fp.mon_orders.push_back(group_order(monodromy(doc.dessin)));
    }
    out << "degree: " << fp.degree << "\n";
    print_valencies(out, "black valencies", fp.black_valencies);
    print_valencies(out, "white valencies", fp.white_valencies);
    for (std::size_t k = 0; k < fp.mon_orders.size(); ++k)
      out << "|Mon^" << k + 1 << "|: " << format_order(fp.mon_orders[k]) << "\n";
  }
  return kOk;
}

int cmd_iterate(const std::string& path, int n, const std::string& method,
                std::ostream& out) {
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    DessinDoc doc = parse_dessin_doc(named);
    NormalizedDessin nd = normalized_or_exit(named, doc);
    try {
      if (method == "recursion") {
        results.push_back(serialize(iterate_recursion(nd, n)));
      } else if (method == "substitution") {
        results.push_back(serialize(iterate_substitution(nd, n)));
      } else {
        NormalizedDessin by_recursion = iterate_recursion(nd, n);
        NormalizedDessin by_substitution = iterate_substitution(nd, n);
        if (!isomorphic(by_recursion, by_substitution))
          throw Exit{kMismatch, named.label + ": iteration methods disagree"};
        results.push_back(serialize(by_recursion));
      }
    } catch (const std::invalid_argument& e) {
      throw Exit{kInvalid, named.label + ": " + e.what()};
    }
  }
  out << join_documents(results);
  return kOk;
}

int cmd_compose(const std::string& outer_path, const std::string& inner_path,
                std::ostream& out) {
  NamedDoc named_outer = load_single_document(outer_path);
  NamedDoc named_inner = load_single_document(inner_path);
  NormalizedDessin outer = normalized_or_exit(named_outer, parse_dessin_doc(named_outer));
  NormalizedDessin inner = normalized_or_exit(named_inner, parse_dessin_doc(named_inner));
  try {
    out << serialize(compose(outer, inner));
  } catch (const std::invalid_argument& e) {
    throw Exit{kInvalid, e.what()};
  }
  return kOk;
}

int cmd_refine(const std::string& path, std::ostream& out) {
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    DessinDoc doc = parse_dessin_doc(named);
    ensure_valid_or_exit(named, doc.dessin);
    results.push_back(serialize(refine(doc.dessin)));
  }
  out << join_documents(results);
  return kOk;
}

int cmd_smooth(const std::string& path, const std::string& anchor_text, std::ostream& out) {
  VertexId anchor = parse_vertex(anchor_text);
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    DessinDoc doc = parse_dessin_doc(named);
    ensure_valid_or_exit(named, doc.dessin);
    if (anchor.rep > doc.dessin.n_edges())
      throw Exit{kInvalid, named.label + ": anchor edge " + std::to_string(anchor.rep) +
                               " out of range"};
    try {
      VertexId resolved = vertex_at(doc.dessin, anchor.color, anchor.rep);
      results.push_back(serialize(smooth(doc.dessin, resolved)));
    } catch (const std::invalid_argument& e) {
      throw Exit{kInvalid, named.label + ": " + e.what()};
    }
  }
  out << join_documents(results);
  return kOk;
}

int cmd_hubbard(const std::string& path, std::ostream& out) {
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    NormalizedDessin nd = normalized_or_exit(named, parse_dessin_doc(named));
    try {
      results.push_back(serialize(dessin_to_hubbard(nd)));
    } catch (const std::invalid_argument& e) {
      throw Exit{kInvalid, named.label + ": " + e.what()};
    }
  }
  out << join_documents(results);
  return kOk;
}

int cmd_dessin(const std::string& path, std::ostream& out) {
  std::vector<std::string> results;
  for (const NamedDoc& named : load_documents(path)) {
    HubbardTree t = parse_hubbard_doc(named);
    try {
      results.push_back(serialize(hubbard_to_dessin(t)));
    } catch (const std::invalid_argument& e) {
      throw Exit{kInvalid, named.label + ": " + e.what()};
    }
  }
  out << join_documents(results);
  return kOk;
}

int cmd_enumerate(int degree, bool normalized, bool extra_clean, std::ostream& out) {
  std::vector<std::string> results;
  try {
    if (normalized || extra_clean) {
      for (const NormalizedDessin& nd : enumerate_normalized(degree, extra_clean))
        results.push_back(serialize(nd));
    } else {
      for (const TreeDessin& d : enumerate_clean(degree)) results.push_back(serialize(d));
    }
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  out << join_documents(results);
  return kOk;
}

int cmd_dot(const std::string& path, std::ostream& out) {
  for (const NamedDoc& named : load_documents(path)) {
    if (looks_like_hubbard(named.text)) {
      out << to_dot(parse_hubbard_doc(named));
      continue;
    }
    DessinDoc doc = parse_dessin_doc(named);
    try {
      if (doc.marks)
        out << to_dot(normalized_or_exit(named, doc));
      else
        out << to_dot(doc.dessin);
    } catch (const std::invalid_argument& e) {
      throw Exit{kInvalid, named.label + ": " + e.what()};
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"clean tree dessins and their dynamical refinements"};
  app.name("dessins");
  app.require_subcommand(1);

  std::string file, file_b, anchor;
  int tower = 1;
  int iterate_n = 1;
  int degree = 0;
  std::string method = "recursion";
  bool want_normalized = false, want_extra_clean = false;

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "check the invariants of dessin or hubbard documents");
  validate_cmd->add_option("file", file, "input file")->required();

  CLI::App* canon_cmd =
      app.add_subcommand("canon", "canonical serialization of dessin documents");
  canon_cmd->add_option("file", file, "input file")->required();

  CLI::App* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two dessins");
  iso_cmd->add_option("a", file, "first dessin")->required();
  iso_cmd->add_option("b", file_b, "second dessin")->required();

  CLI::App* invariants_cmd = app.add_subcommand(
      "invariants", "degree, valence profiles, and monodromy orders");
  invariants_cmd->add_option("file", file, "input file")->required();
  invariants_cmd->add_option("--tower", tower, "monodromy orders of iterates up to this depth")
      ->check(CLI::PositiveNumber);

  CLI::App* iterate_cmd = app.add_subcommand("iterate", "n-th dynamical iterate");
  iterate_cmd->add_option("file", file, "marked dessin")->required();
  iterate_cmd->add_option("n", iterate_n, "iteration depth")
      ->required()
      ->check(CLI::PositiveNumber);
  iterate_cmd->add_option("--method", method, "recursion, substitution, or both")
      ->check(CLI::IsMember({"recursion", "substitution", "both"}));

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "composite cover of two marked dessins");
  compose_cmd->add_option("outer", file, "outer factor")->required();
  compose_cmd->add_option("inner", file_b, "inner factor")->required();

  CLI::App* refine_cmd =
      app.add_subcommand("refine", "bisect every edge (marks are dropped)");
  refine_cmd->add_option("file", file, "input file")->required();

  CLI::App* smooth_cmd =
      app.add_subcommand("smooth", "contract the white pairs of a clean dessin");
  smooth_cmd->add_option("file", file, "clean dessin")->required();
  smooth_cmd->add_option("--anchor", anchor, "black vertex of the output, as B:<edge>")
      ->required();

  CLI::App* hubbard_cmd =
      app.add_subcommand("hubbard", "fold a marked dessin into its tree with dynamics");
  hubbard_cmd->add_option("file", file, "marked dessin")->required();

  CLI::App* dessin_cmd =
      app.add_subcommand("dessin", "unfold a tree with dynamics back into a marked dessin");
  dessin_cmd->add_option("file", file, "hubbard file")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "all isomorphism classes at a degree");
  enumerate_cmd->add_option("--degree", degree, "edge count, even")->required();
  enumerate_cmd->add_flag("--normalized", want_normalized, "emit marked classes");
  enumerate_cmd->add_flag("--extra-clean", want_extra_clean,
                          "only classes with both marks black of valence 1");

  CLI::App* dot_cmd = app.add_subcommand("dot", "DOT graph of dessin or hubbard documents");
  dot_cmd->add_option("file", file, "input file")->required();

  try {
    std::vector<const char*> argv{"dessins"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (canon_cmd->parsed()) return cmd_canon(file, out);
    if (iso_cmd->parsed()) return cmd_iso(file, file_b, out);
    if (invariants_cmd->parsed()) return cmd_invariants(file, tower, out);
    if (iterate_cmd->parsed()) return cmd_iterate(file, iterate_n, method, out);
    if (compose_cmd->parsed()) return cmd_compose(file, file_b, out);
    if (refine_cmd->parsed()) return cmd_refine(file, out);
    if (smooth_cmd->parsed()) return cmd_smooth(file, anchor, out);
    if (hubbard_cmd->parsed()) return cmd_hubbard(file, out);
    if (dessin_cmd->parsed()) return cmd_dessin(file, out);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(degree, want_normalized, want_extra_clean, out);
    if (dot_cmd->parsed()) return cmd_dot(file, out);
    err << "no subcommand\n";
    return kUsage;
  } catch (const Exit& e) {
    if (!e.message.empty()) err << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace dessins::cli
