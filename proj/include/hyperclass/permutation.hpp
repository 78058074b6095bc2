#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperclass {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1}, stored as its image list.
class Permutation {
public:
  // Validates that `images` is a bijection on {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Builds a permutation from disjoint cycles; points absent from every
  // cycle are fixed. Throws InvalidPermutation on out-of-range or repeated
  // points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point apply(Point p) const { return images_[p]; }
  Point operator[](Point p) const { return images_[p]; }
  bool is_identity() const;

  // Composition convention, fixed project-wide: a.then(b) applies a first,
  // then b, so (a.then(b))(p) == b(a(p)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  const std::vector<Point>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

// FNV-1a over an image list; used for reverse element lookup.
std::uint64_t hash_images(const Point* data, std::size_t n);

} // namespace hyperclass
