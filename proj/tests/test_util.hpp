#pragma once

// Slow reference implementations the fast library code is checked against.
// Everything here is exponential or worse and must stay out of core.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "dessins/perm.hpp"

namespace testutil {

// Order of <gens> by exhaustive closure.  Keep n small (<= 8).
inline std::uint64_t closure_order(int n, const std::vector<dessins::Perm>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<dessins::Perm> queue{dessins::Perm(n)};
  seen.insert(queue[0].images());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      dessins::Perm next = dessins::compose(g, queue[k]);
      if (seen.insert(next.images()).second) queue.push_back(next);
    }
  }
  return seen.size();
}

// All n! permutations of {1, ..., n} in lexicographic image order.
inline std::vector<dessins::Perm> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<dessins::Perm> out;
  do {
    out.emplace_back(n, img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace testutil
