#include "dessins/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "dessins/canonical.hpp"

namespace dessins {

namespace {

void check_degree(int n, int bound) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("clean dessins need an even edge count of at least 2, got " +
                                std::to_string(n));
  if (n > bound)
    throw std::invalid_argument("degree " + std::to_string(n) +
                                " exceeds the enumeration bound " + std::to_string(bound));
}

// Cycle count of an image table, cheap enough to run on every candidate.
int cycle_count(const std::vector<int>& img, std::vector<int>& mark, int stamp) {
  int cycles = 0;
  for (int e = 0; e < static_cast<int>(img.size()); ++e) {
    if (mark[e] == stamp) continue;
    ++cycles;
    for (int x = e; mark[x] != stamp; x = img[x] - 1) mark[x] = stamp;
  }
  return cycles;
}

}  // namespace

std::vector<TreeDessin> enumerate_clean(int n, int bound) {
  check_degree(n, bound);

  // Every clean dessin relabels so that s1 pairs 2k-1 with 2k; fixing that
  // form cuts the search to s0 alone, and canonical dedup restores classes.
  std::vector<int> pairing(n);
  for (int e = 1; e <= n; e += 2) {
    pairing[e - 1] = e + 1;
    pairing[e] = e;
  }
  Perm s1(n, pairing);

  // Tree condition forces c(s0) = n + 1 - c(s1); filter before validating.
  const int want_cycles = n + 1 - n / 2;

  std::set<std::vector<int>> keys;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<int> mark(n, 0);
  int stamp = 0;
  do {
    if (cycle_count(img, mark, ++stamp) != want_cycles) continue;
    TreeDessin d(n, Perm(n, img), s1);
    if (!validate(d).ok) continue;
    keys.insert(canonical_key(d));
  } while (std::next_permutation(img.begin(), img.end()));

  // A clean-dessin key is the two concatenated image tables, so the
  // representative can be rebuilt from the key itself.
  std::vector<TreeDessin> out;
  out.reserve(keys.size());
  for (const std::vector<int>& key : keys)
    out.emplace_back(n, Perm(n, std::vector<int>(key.begin(), key.begin() + n)),
                     Perm(n, std::vector<int>(key.begin() + n, key.begin() + 2 * n)));
  return out;
}

std::vector<NormalizedDessin> enumerate_normalized(int n, bool extra_clean_only, int bound) {
  std::map<std::vector<int>, NormalizedDessin> classes;
  for (const TreeDessin& rep : enumerate_clean(n, bound)) {
    std::vector<std::pair<VertexId, int>> verts = vertices(rep);
    for (const auto& [mark0, val0] : verts) {
      for (const auto& [mark1, val1] : verts) {
        if (mark0 == mark1) continue;
        NormalizedDessin nd(rep, mark0, mark1);
        if (extra_clean_only && !is_extra_clean(nd)) continue;
        std::vector<int> key = canonical_key(nd);
        if (!classes.count(key)) classes.emplace(std::move(key), canonical_form_normalized(nd).dessin);
      }
    }
  }

  std::vector<NormalizedDessin> out;
  out.reserve(classes.size());
  for (auto& [key, nd] : classes) out.push_back(std::move(nd));
  return out;
}

}  // namespace dessins
