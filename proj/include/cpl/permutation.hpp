#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cpl/errors.hpp"

namespace cpl {

/// A bijection on the points {0, ..., degree-1}, stored as its image list.
///
/// Product convention, used consistently across the whole library:
/// compose(p, q) applies p first and q second, so "x * y" always means
/// "do x, then y" and conjugation is x^g = g^-1 x g.
class Permutation {
 public:
  // Identity on `degree` points.
  explicit Permutation(int degree);

  // Validates that `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image lists; this is the canonical element order.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Apply p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

// g^-1 x g under the compose orientation above.
Permutation conjugate(const Permutation& x, const Permutation& g);

std::size_t hash_value(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return hash_value(p); }
};

}  // namespace cpl
