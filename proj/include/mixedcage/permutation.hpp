#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mixedcage {

using Vertex = std::uint32_t;

// A bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  // Throws Error(kNotAPermutation) unless `image` is a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // (this * other)(v) = this(other(v)): apply `other` first.
  Permutation after(const Permutation& other) const;

  // Smallest k >= 1 with p^k = id.
  std::uint64_t order() const;

  // Disjoint cycles, fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace mixedcage
