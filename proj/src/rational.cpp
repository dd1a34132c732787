#include "pqs/rational.hpp"

#include "pqs/error.hpp"

#include <cctype>

namespace pqs {

long long to_integer(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorKind::InternalInconsistency, to_string(r) + " is not an integer");
  const Integer& n = boost::multiprecision::numerator(r);
  if (n > Integer(std::numeric_limits<long long>::max()) ||
      n < Integer(std::numeric_limits<long long>::min()))
    throw Error(ErrorKind::OutOfRange, "integer overflow");
  return static_cast<long long>(n);
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, std::size_t offset) {
    std::size_t i = 0;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError(ErrorKind::Parse, offset + i + 1, "expected digits");
    Integer v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError(ErrorKind::Parse, offset + i + 1, "expected a digit");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? Integer(-v) : v;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  auto num = parse_int(text.substr(0, slash), 0);
  auto den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError(ErrorKind::Parse, slash + 2, "zero denominator");
  return Rational(num, den);
}

}  // namespace pqs
