#include "dessins/perm_group.hpp"

#include <algorithm>

namespace dessins {

PermGroup::PermGroup(int n, std::vector<Perm> generators) : n_(n), order_(1) {
  if (n < 1) throw std::invalid_argument("group degree must be at least 1");
  for (const Perm& g : generators)
    if (g.n() != n) throw std::invalid_argument("generator degree does not match group degree");
  gens_ = generators;
  build(std::move(generators));
}

void PermGroup::recompute_orbit(Level& level) const {
  level.orbit.assign(1, level.beta);
  level.pos.assign(n_, -1);
  level.pos[level.beta - 1] = 0;
  level.trans.assign(1, Perm(n_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    int p = level.orbit[k];
    for (const Perm& g : level.gens) {
      int q = g[p];
      if (level.pos[q - 1] < 0) {
        level.pos[q - 1] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(q);
        level.trans.push_back(compose(g, level.trans[k]));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < chain_.size(); ++i) {
    const Level& level = chain_[i];
    int t = p[level.beta];
    int k = level.pos[t - 1];
    if (k < 0) return {std::move(p), i};
    p = compose(level.trans[k].inverse(), p);
  }
  return {std::move(p), chain_.size()};
}

void PermGroup::insert_generator(const Perm& g, std::size_t first_level, std::size_t last_level) {
  for (std::size_t m = first_level; m <= last_level && m < chain_.size(); ++m) {
    auto& gens = chain_[m].gens;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
}

void PermGroup::build(std::vector<Perm> input) {
  for (const Perm& g : input) {
    if (g.is_identity()) continue;
    // Deepest level whose earlier base points g all fixes.
    std::size_t j = 0;
    while (j < chain_.size() && g[chain_[j].beta] == chain_[j].beta) ++j;
    if (j == chain_.size()) {
      int beta = 1;
      while (g[beta] == beta) ++beta;
      chain_.push_back(Level{beta, {}, {}, {}, {}});
    }
    insert_generator(g, 0, j);
  }
  if (chain_.empty()) {
    order_ = 1;
    return;
  }

  for (auto& level : chain_) recompute_orbit(level);

  // Bottom-up verification: every Schreier generator of a verified level
  // sifts to the identity through the levels below it.
  std::size_t i = chain_.size();
  while (i > 0) {
    Level& level = chain_[i - 1];
    recompute_orbit(level);
    bool complete = true;
    for (std::size_t k = 0; k < level.orbit.size() && complete; ++k) {
      for (const Perm& g : level.gens) {
        int image = g[level.orbit[k]];
        const Perm& to = level.trans[level.pos[image - 1]];
        Perm schreier = compose(to.inverse(), compose(g, level.trans[k]));
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), i);
        if (h.is_identity()) continue;
        if (j == chain_.size()) {
          int beta = 1;
          while (h[beta] == beta) ++beta;
          chain_.push_back(Level{beta, {}, {}, {}, {}});
          chain_.back().orbit.assign(1, beta);
          chain_.back().pos.assign(n_, -1);
          chain_.back().pos[beta - 1] = 0;
          chain_.back().trans.assign(1, Perm(n_));
        }
        insert_generator(h, i, j);
        i = j + 1;  // re-verify from the deepest touched level upward
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }

  order_ = 1;
  for (const Level& level : chain_) order_ *= static_cast<unsigned>(level.orbit.size());
}

bool PermGroup::is_transitive() const {
  return orbits().size() == 1;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> owner(n_, -1);
  std::vector<std::vector<int>> out;
  for (int p = 1; p <= n_; ++p) {
    if (owner[p - 1] >= 0) continue;
    std::vector<int> orbit{p};
    owner[p - 1] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : gens_) {
        int q = g[orbit[k]];
        if (owner[q - 1] < 0) {
          owner[q - 1] = static_cast<int>(out.size());
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

BigInt group_order(const PermGroup& g) { return g.order(); }
bool is_transitive(const PermGroup& g) { return g.is_transitive(); }
std::vector<std::vector<int>> orbits(const PermGroup& g) { return g.orbits(); }

}  // namespace dessins
