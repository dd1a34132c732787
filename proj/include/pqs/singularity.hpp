#pragma once

#include "pqs/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace pqs {

/// Cyclic quotient singularity 1/n(1,a), gcd(a,n) = 1, 1 <= a < n.
struct SingularityType {
  unsigned n = 2;
  unsigned a = 1;

  /// Inverse of a modulo n.
  unsigned a_prime() const;
  /// The representative with a <= a'.
  SingularityType normalized() const;
  std::string to_string() const;  // "1/n(1,a)"

  auto operator<=>(const SingularityType&) const = default;
};

/// Validates and builds a type; a is taken modulo n. Throws NonCoprime or
/// OutOfRange.
SingularityType make_type(long long n, long long a);

/// Hirzebruch-Jung string: n/a = b_1 - 1/(b_2 - ...), all b_i >= 2.
std::vector<unsigned> hj_expansion(long long n, long long a);
/// Value of the descending continued fraction.
Rational hj_value(std::span<const unsigned> b);

bool same_type(const SingularityType& t1, const SingularityType& t2);

struct SingularityRecord {
  SingularityType type;
  std::vector<unsigned> hj;
  long long l = 0;
  Rational k, e, B, gamma, mu;
  long long I = 1;      // n / gcd(n, a+1)
  long long I_alt = 1;  // n / gcd(n, a'+1)
};

SingularityRecord sing_record(const SingularityType& t);

}  // namespace pqs
