#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dessins {

/// Thrown by Perm::from_cycles on malformed cycle text.  offset is the
/// byte position of the offending character within the input view.
class CycleSyntaxError : public std::invalid_argument {
 public:
  CycleSyntaxError(std::size_t offset, const std::string& reason)
      : std::invalid_argument(reason), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Permutation of the points {1, ..., n}.  Immutable once built.
class Perm {
 public:
  /// Identity on {1, ..., n}.
  explicit Perm(int n);

  /// images[i] is the image of point i+1.  Throws std::invalid_argument
  /// unless the table is a bijection of {1, ..., n}.
  Perm(int n, std::vector<int> images);

  /// Parses disjoint-cycle notation, e.g. "(1 3 5 7)(2 4)".  Fixed points
  /// may be omitted; "()" is the identity.  Whitespace-insensitive.
  /// Throws CycleSyntaxError on bad syntax, out-of-range or repeated points.
  static Perm from_cycles(int n, std::string_view text);

  int n() const { return static_cast<int>(img_.size()); }

  /// Image of point p (1-based).
  int operator[](int p) const { return img_[p - 1]; }

  bool is_identity() const;
  Perm inverse() const;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  /// Each cycle starts at its smallest point; cycles sorted by that point.
  std::string to_cycles() const;

  /// Full cycle decomposition including singletons, same ordering rules.
  std::vector<std::vector<int>> cycles() const;

  /// Number of cycles including fixed points.
  int cycle_count() const;

  /// Image table: images()[i] is the image of point i+1.
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Right factor acts first: compose(a, b) maps x to a(b(x)).
Perm compose(const Perm& a, const Perm& b);

}  // namespace dessins
