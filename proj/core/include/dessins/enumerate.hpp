#pragma once

#include <vector>

#include "dessins/tree_dessin.hpp"

namespace dessins {

/// Largest degree the exhaustive generators accept by default; the search
/// is factorial in the degree, so raising this gets expensive fast.
inline constexpr int kMaxEnumerateDegree = 10;

/// One representative per isomorphism class of clean dessins with n edges,
/// in canonical form, sorted by canonical key.  n must be even: s1 is a
/// fixed-point-free involution, so clean degrees are even.
std::vector<TreeDessin> enumerate_clean(int n, int bound = kMaxEnumerateDegree);

/// One representative per isomorphism class of normalized dessins with n
/// edges (every ordered pair of distinct marked vertices on every clean
/// class), canonical, sorted by key.  With extra_clean_only, keeps only
/// markings where both marks are black of valence 1.
std::vector<NormalizedDessin> enumerate_normalized(int n, bool extra_clean_only,
                                                   int bound = kMaxEnumerateDegree);

}  // namespace dessins
