#include "cpl/permutation.hpp"

#include <numeric>

namespace cpl {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 1) throw DegreeMismatch("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw DegreeMismatch("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw DegreeMismatch("image list is not a bijection on its points");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degree mismatch");
  std::vector<int> out(p.images_.size());
  for (int i = 0; i < p.degree(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

std::size_t hash_value(const Permutation& p) {
  std::size_t h = 1469598103934665603ull;  // FNV-1a over the image list
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cpl
