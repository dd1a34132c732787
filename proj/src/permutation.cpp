#include "pqs/permutation.hpp"

#include "pqs/error.hpp"

#include <cctype>
#include <numeric>

namespace pqs {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw Error(ErrorKind::OutOfRange, "permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::MalformedCycle, "image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree == 0 ? 1 : degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw Error(ErrorKind::OutOfRange, "degree mismatch in product");
  Permutation out = *this;
  for (auto& x : out.images_) x = rhs.images_[x];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::uint32_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = i;
  return out;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::with_degree(std::size_t degree) const {
  if (degree == images_.size()) return *this;
  if (degree > images_.size()) {
    auto images = images_;
    for (auto i = static_cast<std::uint32_t>(images_.size()); i < degree; ++i)
      images.push_back(i);
    return Permutation(std::move(images));
  }
  for (auto i = degree; i < images_.size(); ++i)
    if (images_[i] != i)
      throw Error(ErrorKind::OutOfRange, "permutation moves a point beyond degree " +
                                             std::to_string(degree));
  return Permutation(std::vector<std::uint32_t>(images_.begin(), images_.begin() + degree));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error(ErrorKind::OutOfRange, "degree must be at least 1");
  auto images = Permutation::identity(degree);
  std::vector<std::uint32_t> img(images.images().begin(), images.images().end());
  if (text == "id" || text == "()") return Permutation(std::move(img));
  if (text.empty()) throw ParseError(ErrorKind::MalformedCycle, 1, "empty permutation");

  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](ErrorKind kind, std::size_t pos, const std::string& msg) {
    throw ParseError(kind, pos + 1, msg);
  };
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::MalformedCycle, i, "expected '('");
    const std::size_t open = i++;
    std::size_t close = text.find(')', open);
    if (close == std::string_view::npos) fail(ErrorKind::MalformedCycle, open, "unterminated cycle");
    auto body = text.substr(open + 1, close - open - 1);
    if (body.empty()) fail(ErrorKind::MalformedCycle, open, "empty cycle inside a product");

    // (point, position) pairs
    std::vector<std::pair<std::size_t, std::size_t>> points;
    const bool comma_form = body.find(',') != std::string_view::npos;
    if (comma_form) {
      std::size_t j = 0;
      while (j <= body.size()) {
        std::size_t start = j;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == start) fail(ErrorKind::MalformedCycle, open + 1 + j, "expected a point");
        std::size_t value = 0;
        for (auto k = start; k < j; ++k) {
          value = value * 10 + static_cast<std::size_t>(body[k] - '0');
          if (value > (1u << 30)) fail(ErrorKind::OutOfRange, open + 1 + start, "point too large");
        }
        points.emplace_back(value, open + 1 + start);
        if (j == body.size()) break;
        if (body[j] != ',') fail(ErrorKind::MalformedCycle, open + 1 + j, "expected ',' or ')'");
        ++j;
        if (j == body.size()) fail(ErrorKind::MalformedCycle, open + 1 + j, "expected a point");
      }
    } else {
      for (std::size_t j = 0; j < body.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(body[j])))
          fail(ErrorKind::MalformedCycle, open + 1 + j, "unexpected character");
      if (body.size() > 1 && degree > 9)
        fail(ErrorKind::MalformedCycle, open,
             "digit shorthand requires degree <= 9; use the comma form");
      for (std::size_t j = 0; j < body.size(); ++j)
        points.emplace_back(static_cast<std::size_t>(body[j] - '0'), open + 1 + j);
    }
    for (auto [p, pos] : points) {
      if (p < 1 || p > degree)
        fail(ErrorKind::OutOfRange, pos,
             "point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      if (used[p - 1]) fail(ErrorKind::MalformedCycle, pos, "repeated point " + std::to_string(p));
      used[p - 1] = true;
    }
    for (std::size_t k = 0; k < points.size(); ++k)
      img[points[k].first - 1] = static_cast<std::uint32_t>(points[(k + 1) % points.size()].first - 1);
    i = close + 1;
  }
  return Permutation(std::move(img));
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (auto j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace pqs
