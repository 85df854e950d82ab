#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation group on {1, ..., n} given by generators.  A base and strong
/// generating set is built eagerly at construction with a deterministic
/// Schreier-Sims run, so a constructed group is immutable and safe to share
/// across threads.  Orders are exact at any size.
class PermGroup {
 public:
  PermGroup(int n, std::vector<Perm> generators);

  int n() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const BigInt& order() const { return order_; }

  /// True iff the generators move some point to every other point.
  /// The trivial group is transitive only on a single point.
  bool is_transitive() const;

  /// Orbit partition of {1, ..., n}; each orbit ascending, orbits ordered
  /// by smallest element.
  std::vector<std::vector<int>> orbits() const;

 private:
  struct Level {
    int beta;                      // base point
    std::vector<Perm> gens;       // strong generators fixing earlier base points
    std::vector<int> orbit;       // discovery order, orbit[0] == beta
    std::vector<int> pos;         // pos[p-1] = index into orbit, or -1
    std::vector<Perm> trans;      // trans[k](beta) == orbit[k]
  };

  void build(std::vector<Perm> input);
  void recompute_orbit(Level& level) const;
  // Applies transversal corrections from `from` down; returns the residue
  // and the level where sifting stopped (chain_.size() on full sift).
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
  void insert_generator(const Perm& g, std::size_t first_level, std::size_t last_level);

  int n_;
  std::vector<Perm> gens_;
  std::vector<Level> chain_;
  BigInt order_;
};

BigInt group_order(const PermGroup& g);
bool is_transitive(const PermGroup& g);
std::vector<std::vector<int>> orbits(const PermGroup& g);

}  // namespace dessins
