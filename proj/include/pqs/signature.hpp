#pragma once

#include "pqs/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// Branching data (m_1, ..., m_r) of a genus-zero orbifold, stored sorted.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<unsigned> ms);

  std::size_t size() const noexcept { return ms_.size(); }
  unsigned operator[](std::size_t i) const { return ms_[i]; }
  std::span<const unsigned> ms() const noexcept { return ms_; }

  /// "(2,5,5)"
  std::string to_string() const;
  /// Table shorthand "2,5^2".
  std::string to_short_string() const;

  /// Accepts "(2,5,5)", "2,5,5" and exponent shorthand "2,5^2" / "5^3".
  static Signature parse(std::string_view text);

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<unsigned> ms_;
};

/// -2 + sum (1 - 1/m_i), exact. Order of the entries is irrelevant.
Rational theta(std::span<const unsigned> ms);
inline Rational theta(const Signature& s) { return theta(s.ms()); }

/// g = 1 + |G| theta / 2. Throws InfeasibleSignature when |G| theta is not
/// an even integer.
long long hurwitz_genus(std::size_t group_order, std::span<const unsigned> ms);
inline long long hurwitz_genus(std::size_t group_order, const Signature& s) {
  return hurwitz_genus(group_order, s.ms());
}

}  // namespace pqs
