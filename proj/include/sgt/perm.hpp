#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgt {

/// Thrown when an operation mixes permutations or groups of unequal degree.
struct degree_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a cycle string (or corpus/partition text) fails to parse.
/// `offset` is the 0-based character position of the problem.
struct parse_error : std::invalid_argument {
  parse_error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset(offset) {}
  std::size_t offset;
};

/// A bijection on the points 1..degree. Immutable after construction.
class Perm {
 public:
  /// Identity on 1..degree.
  explicit Perm(int degree);

  /// From an image table: images[i] is the image of point i+1.
  /// Validates that the table is a permutation of {1..degree}.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of point x (1-based).
  int operator()(int x) const { return img_[static_cast<std::size_t>(x) - 1]; }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest point moved by this permutation, or 0 for the identity.
  int smallest_moved_point() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  /// Lexicographic on image sequences; the canonical element order repo-wide.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Composition with the fixed convention (a*b)(x) = a(b(x)), i.e. b acts first.
Perm compose(const Perm& a, const Perm& b);

/// a^x = x^-1 * a * x (conjugation; composition convention as above).
Perm conjugate(const Perm& a, const Perm& x);

/// Commutator [a,b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

/// Parses cycle notation, e.g. "(1 2 3)(4 5)". Whitespace-tolerant, 1-based
/// points, disjoint cycles required; the identity is spelled "()".
Perm parse_perm(std::string_view text, int degree);

/// Canonical cycle notation: cycles start at their smallest point and are
/// ordered by it; the identity prints as "()".
std::string to_cycle_string(const Perm& p);

std::uint64_t perm_hash(const Perm& p);

}  // namespace sgt

template <>
struct std::hash<sgt::Perm> {
  std::size_t operator()(const sgt::Perm& p) const noexcept {
    return static_cast<std::size_t>(sgt::perm_hash(p));
  }
};
