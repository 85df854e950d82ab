#include "dessins/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dessins {

Perm::Perm(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(int n, std::vector<int> images) : img_(std::move(images)) {
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  if (static_cast<int>(img_.size()) != n)
    throw std::invalid_argument("image table size does not match degree");
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 1 || v > n) throw std::invalid_argument("image out of range");
    if (seen[v - 1]) throw std::invalid_argument("image table is not a bijection");
    seen[v - 1] = true;
  }
}

Perm Perm::from_cycles(int n, std::string_view text) {
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(n, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw CycleSyntaxError(i, "expected '(' at start of cycle");
    ++i;
    any_cycle = true;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw CycleSyntaxError(i, "expected point number or ')'");
      std::size_t start = i;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > n) throw CycleSyntaxError(start, "point out of range");
        ++i;
      }
      if (v < 1) throw CycleSyntaxError(start, "points are numbered from 1");
      if (used[v - 1]) throw CycleSyntaxError(start, "point repeated across cycles");
      used[v - 1] = true;
      cyc.push_back(static_cast<int>(v));
      skip_ws();
    }
    if (i >= text.size()) throw CycleSyntaxError(i, "unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  if (!any_cycle) throw CycleSyntaxError(0, "empty permutation text; use \"()\" for the identity");
  return Perm(n, std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(n());
  for (int i = 0; i < n(); ++i) inv[img_[i] - 1] = i + 1;
  return Perm(n(), std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n(), false);
  for (int p = 1; p <= n(); ++p) {
    if (seen[p - 1]) continue;
    std::vector<int> cyc;
    int q = p;
    do {
      seen[q - 1] = true;
      cyc.push_back(q);
      q = img_[q - 1];
    } while (q != p);
    out.push_back(std::move(cyc));
  }
  // p ranges upward, so each cycle starts at its smallest point and the
  // list is already sorted by that point.
  return out;
}

int Perm::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(n(), false);
  for (int p = 1; p <= n(); ++p) {
    if (seen[p - 1]) continue;
    ++count;
    int q = p;
    do {
      seen[q - 1] = true;
      q = img_[q - 1];
    } while (q != p);
  }
  return count;
}

std::string Perm::to_cycles() const {
  std::string out;
  for (const auto& cyc : cycles()) {
    if (cyc.size() == 1) continue;
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different degrees");
  std::vector<int> img(a.n());
  for (int i = 0; i < a.n(); ++i) img[i] = a[b[i + 1]];
  return Perm(a.n(), std::move(img));
}

}  // namespace dessins
