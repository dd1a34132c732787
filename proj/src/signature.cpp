#include "pqs/signature.hpp"

#include "pqs/error.hpp"

#include <algorithm>
#include <cctype>

namespace pqs {

Signature::Signature(std::vector<unsigned> ms) : ms_(std::move(ms)) {
  for (auto m : ms_)
    if (m < 2) throw Error(ErrorKind::InfeasibleSignature, "branching indices must be >= 2");
  std::sort(ms_.begin(), ms_.end());
}

std::string Signature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ms_[i]);
  }
  return out + ")";
}

std::string Signature::to_short_string() const {
  std::string out;
  for (std::size_t i = 0; i < ms_.size();) {
    std::size_t j = i;
    while (j < ms_.size() && ms_[j] == ms_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(ms_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Signature Signature::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> unsigned {
    skip_ws();
    std::size_t start = i;
    unsigned v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
      if (v > 1000000) throw ParseError(ErrorKind::Parse, start + 1, "number too large");
      ++i;
    }
    if (i == start) throw ParseError(ErrorKind::Parse, i + 1, "expected a number");
    return v;
  };
  skip_ws();
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  std::vector<unsigned> ms;
  while (true) {
    const std::size_t at = i;
    unsigned m = number();
    unsigned reps = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      reps = number();
      skip_ws();
    }
    if (m < 2) throw ParseError(ErrorKind::Parse, at + 1, "branching index must be >= 2");
    ms.insert(ms.end(), reps, m);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (paren) {
    if (i >= text.size() || text[i] != ')') throw ParseError(ErrorKind::Parse, i + 1, "expected ')'");
    ++i;
  }
  skip_ws();
  if (i != text.size()) throw ParseError(ErrorKind::Parse, i + 1, "trailing characters");
  return Signature(std::move(ms));
}

Rational theta(std::span<const unsigned> ms) {
  Rational t = -2;
  for (auto m : ms) t += Rational(1) - make_rational(1, m);
  return t;
}

long long hurwitz_genus(std::size_t group_order, std::span<const unsigned> ms) {
  Rational two_g_minus_2 = Rational(static_cast<long long>(group_order)) * theta(ms);
  if (!is_integer(two_g_minus_2) || to_integer(two_g_minus_2) % 2 != 0)
    throw Error(ErrorKind::InfeasibleSignature,
                "signature infeasible for |G| = " + std::to_string(group_order) +
                    ": |G|*theta = " + to_string(two_g_minus_2));
  return 1 + to_integer(two_g_minus_2) / 2;
}

}  // namespace pqs
