#include "pqs/singularity.hpp"

#include "pqs/error.hpp"

#include <numeric>

namespace pqs {

unsigned SingularityType::a_prime() const {
  for (unsigned x = 1; x < n; ++x)
    if ((static_cast<unsigned long long>(a) * x) % n == 1) return x;
  return 1;  // n = 1 never occurs for a valid type
}

SingularityType SingularityType::normalized() const {
  auto ap = a_prime();
  return ap < a ? SingularityType{n, ap} : *this;
}

std::string SingularityType::to_string() const {
  return "1/" + std::to_string(n) + "(1," + std::to_string(a) + ")";
}

SingularityType make_type(long long n, long long a) {
  if (n < 2 || n > 1'000'000)
    throw Error(ErrorKind::OutOfRange, "singularity order n must satisfy 2 <= n");
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(n, a) != 1)
    throw Error(ErrorKind::NonCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
  return SingularityType{static_cast<unsigned>(n), static_cast<unsigned>(a)};
}

std::vector<unsigned> hj_expansion(long long n, long long a) {
  if (n < 2 || a < 1 || a >= n)
    throw Error(ErrorKind::OutOfRange, "hj_expansion needs 1 <= a < n");
  if (std::gcd(n, a) != 1)
    throw Error(ErrorKind::NonCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
  std::vector<unsigned> out;
  // n/a = b - r/a with b = ceil(n/a), then continue with a/r.
  while (a > 0) {
    long long b = (n + a - 1) / a;
    out.push_back(static_cast<unsigned>(b));
    long long r = b * a - n;
    n = a;
    a = r;
  }
  return out;
}

Rational hj_value(std::span<const unsigned> b) {
  if (b.empty()) throw Error(ErrorKind::OutOfRange, "empty continued fraction");
  Rational v = b.back();
  for (std::size_t i = b.size() - 1; i-- > 0;) v = Rational(b[i]) - 1 / v;
  return v;
}

bool same_type(const SingularityType& t1, const SingularityType& t2) {
  if (t1.n != t2.n) return false;
  return t1.a == t2.a ||
         (static_cast<unsigned long long>(t1.a) * t2.a) % t1.n == 1;
}

SingularityRecord sing_record(const SingularityType& t) {
  SingularityRecord r;
  r.type = t;
  r.hj = hj_expansion(t.n, t.a);
  r.l = static_cast<long long>(r.hj.size());
  const long long n = t.n, a = t.a, ap = t.a_prime();
  long long sum_b2 = 0, sum_b3 = 0;
  for (auto b : r.hj) {
    sum_b2 += static_cast<long long>(b) - 2;
    sum_b3 += static_cast<long long>(b) - 3;
  }
  r.k = -2 + make_rational(2 + a + ap, n) + sum_b2;
  r.e = r.l + 1 - make_rational(1, n);
  r.B = 2 * r.e + r.k;
  r.gamma = (make_rational(a + ap, n) + sum_b3) / 6;
  r.mu = 1 - make_rational(1, n);
  r.I = n / std::gcd(n, a + 1);
  r.I_alt = n / std::gcd(n, ap + 1);
  return r;
}

}  // namespace pqs
