#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)), the convention of cycle-notation group software.
class Permutation {
 public:
  Permutation() : images_{0} {}
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Same permutation extended (or checked) to another degree.
  Permutation with_degree(std::size_t degree) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses disjoint-cycle notation with 1-based points. Accepts "()" and "id"
/// for the identity. Comma form "(3,6,7)" is always accepted; the digit
/// shorthand "(367)" only when degree <= 9.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Comma-form cycle notation, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

}  // namespace pqs
