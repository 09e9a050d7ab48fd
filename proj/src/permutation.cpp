#include "mixedcage/permutation.hpp"

#include <numeric>

#include "mixedcage/error.hpp"

namespace mixedcage {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v]) {
      throw Error(ErrorCode::kNotAPermutation,
                  "image is not a bijection on 0.." +
                      std::to_string(image_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv.image_[image_[i]] = static_cast<Vertex>(i);
  }
  return inv;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::kLengthMismatch, "composing permutations of size " +
                                                std::to_string(size()) +
                                                " and " +
                                                std::to_string(other.size()));
  }
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    out.image_[i] = image_[other.image_[i]];
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(image_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t v = start; !seen[v]; v = image_[v]) {
      seen[v] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += '(';
    for (std::size_t v = start; !seen[v]; v = image_[v]) {
      seen[v] = true;
      if (v != start) out += ' ';
      out += std::to_string(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace mixedcage
