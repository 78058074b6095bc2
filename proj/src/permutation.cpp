#include "hyperclass/permutation.hpp"

#include <numeric>
#include <string>

#include "hyperclass/errors.hpp"

namespace hyperclass {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img]) {
      throw InvalidPermutation("image list is not a bijection on {0..." +
                               std::to_string(images_.size() ? images_.size() - 1 : 0) + "}");
    }
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || moved[from]) {
        throw InvalidPermutation("cycle point out of range or repeated");
      }
      moved[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) {
    throw InvalidPermutation("degree mismatch in composition");
  }
  std::vector<Point> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    images[i] = next.images_[images_[i]];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    images[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(images));
}

std::uint64_t hash_images(const Point* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hyperclass
