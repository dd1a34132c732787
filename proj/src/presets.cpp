#include "pqs/presets.hpp"

#include "pqs/error.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace pqs {

namespace {

constexpr std::size_t kPresetCap = 50000;

struct GeneratorList {
  std::size_t degree;
  std::vector<Permutation> gens;
};

Permutation cycle_perm(std::size_t degree, std::vector<std::uint32_t> cycle) {
  auto p = Permutation::identity(degree);
  std::vector<std::uint32_t> img(p.images().begin(), p.images().end());
  for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(img));
}

GeneratorList from_text(std::size_t degree, std::initializer_list<const char*> gens) {
  GeneratorList out{degree, {}};
  for (auto g : gens) out.gens.push_back(parse_permutation(g, degree));
  return out;
}

GeneratorList cyclic(std::size_t n, std::size_t copies = 1) {
  GeneratorList out{std::max<std::size_t>(1, n * copies), {}};
  if (n == 1) return out;
  for (std::size_t c = 0; c < copies; ++c) {
    std::vector<std::uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), static_cast<std::uint32_t>(c * n));
    out.gens.push_back(cycle_perm(out.degree, cyc));
  }
  return out;
}

GeneratorList dihedral(std::size_t n) {
  if (n == 1) return cyclic(2);
  if (n == 2) return cyclic(2, 2);
  GeneratorList out{n, {}};
  std::vector<std::uint32_t> rot(n);
  std::iota(rot.begin(), rot.end(), 0u);
  out.gens.push_back(cycle_perm(n, rot));
  std::vector<std::uint32_t> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  out.gens.push_back(Permutation(std::move(refl)));
  return out;
}

GeneratorList symmetric(std::size_t n) {
  GeneratorList out{n, {}};
  if (n <= 1) return out;
  out.gens.push_back(cycle_perm(n, {0, 1}));
  if (n > 2) {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    out.gens.push_back(cycle_perm(n, all));
  }
  return out;
}

GeneratorList alternating(std::size_t n) {
  GeneratorList out{std::max<std::size_t>(n, 1), {}};
  if (n <= 2) return out;
  out.gens.push_back(cycle_perm(n, {0, 1, 2}));
  if (n > 3) {
    // (1..n) is even for odd n; otherwise use (2..n).
    std::vector<std::uint32_t> c;
    for (std::uint32_t i = (n % 2 == 1) ? 0u : 1u; i < n; ++i) c.push_back(i);
    out.gens.push_back(cycle_perm(n, c));
  }
  return out;
}

// Explicit generators for the non-standard groups of the tables.
const std::map<std::string, GeneratorList, std::less<>>& special_groups() {
  static const std::map<std::string, GeneratorList, std::less<>> table = [] {
    std::map<std::string, GeneratorList, std::less<>> t;
    t.emplace("PSL(2,7)", from_text(8, {"(3,6,7)(4,5,8)", "(1,8,2)(4,5,6)"}));
    t.emplace("Q8", from_text(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}));
    // (C4 x C2) : C2 with c a c = a b, acting on the cosets of <c>.
    t.emplace("G(16,3)", from_text(8, {"(1,3,5,7)(2,4,6,8)", "(1,2)(3,4)(5,6)(7,8)", "(3,4)(7,8)"}));
    // C2^2 wr C2 on two blocks of four points.
    t.emplace("G(32,27)", from_text(8, {"(1,2)(3,4)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"}));
    t.emplace("Z2^4:Z2", t.at("G(32,27)"));
    // Affine maps on F2^4 = V + V, S3 = GL(2,2) acting diagonally.
    t.emplace("Z2^4:S3",
              from_text(16, {"(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)",
                             "(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)(13,15)(14,16)",
                             "(2,4,3)(5,13,9)(6,16,11)(7,14,12)(8,15,10)",
                             "(2,3)(5,9)(6,11)(7,10)(8,12)(14,15)"}));
    // Affine maps x -> z^i x^(4^j) + v on F16 = F2[x]/(x^4+x+1), z of order 5.
    t.emplace("Z2^4:D5", from_text(16, {"(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)",
                                        "(2,9,13,11,16)(3,4,12,8,14)(5,7,6,15,10)",
                                        "(3,4)(5,6)(9,16)(10,15)(11,13)(12,14)"}));
    // Affine maps on F3^2 with x -> -x.
    t.emplace("Z3^2:Z2", from_text(9, {"(1,4,7)(2,5,8)(3,6,9)", "(1,2,3)(4,5,6)(7,8,9)",
                                       "(2,3)(4,7)(5,9)(6,8)"}));
    // Affine maps on F5^2 with an element of order 3 in GL(2,5).
    t.emplace("Z5^2:Z3",
              from_text(25, {"(1,6,11,16,21)(2,7,12,17,22)(3,8,13,18,23)(4,9,14,19,24)(5,10,15,20,25)",
                             "(1,2,3,4,5)(6,7,8,9,10)(11,12,13,14,15)(16,17,18,19,20)(21,22,23,24,25)",
                             "(2,25,6)(3,19,11)(4,13,16)(5,7,21)(8,20,10)(9,14,15)(12,22,24)(17,23,18)"}));
    return t;
  }();
  return table;
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(ErrorKind::UnknownPreset, "unknown group preset '" + std::string(name) + "'");
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4) unknown(whole);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) unknown(whole);
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

GeneratorList factor(std::string_view f, std::string_view whole) {
  const auto& special = special_groups();
  if (auto it = special.find(f); it != special.end()) return it->second;
  if (f.size() < 2) unknown(whole);
  const char kind = f[0];
  auto rest = f.substr(1);
  switch (kind) {
    case 'Z': {
      auto caret = rest.find('^');
      std::size_t n = parse_count(rest.substr(0, caret), whole);
      std::size_t k = caret == std::string_view::npos ? 1 : parse_count(rest.substr(caret + 1), whole);
      if (n == 0 || k == 0) unknown(whole);
      return cyclic(n, k);
    }
    case 'D': {
      auto n = parse_count(rest, whole);
      if (n == 0) unknown(whole);
      return dihedral(n);
    }
    case 'S': {
      auto n = parse_count(rest, whole);
      if (n == 0 || n > 8) unknown(whole);
      return symmetric(n);
    }
    case 'A': {
      auto n = parse_count(rest, whole);
      if (n == 0 || n > 8) unknown(whole);
      return alternating(n);
    }
    default:
      unknown(whole);
  }
}

std::vector<std::string_view> split_product(std::string_view name) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (depth == 0 && name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(name.substr(start));
  return parts;
}

}  // namespace

GroupPtr group_preset(std::string_view name) {
  if (name.empty()) unknown(name);
  std::vector<GeneratorList> factors;
  for (auto part : split_product(name)) factors.push_back(factor(part, name));

  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) {
      std::vector<std::uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 0u);
      for (std::size_t i = 0; i < f.degree; ++i)
        img[offset + i] = static_cast<std::uint32_t>(offset + g[i]);
      gens.emplace_back(std::move(img));
    }
    offset += f.degree;
  }
  return make_group(std::move(gens), degree, std::string(name), kPresetCap);
}

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> names = {
      "Z2^3",     "Z2xZ4",   "Z3^2",    "Z2^4",    "Z4^2",     "G(16,3)",  "D4xZ2",
      "Z3xS3",    "Z3^2:Z2", "S4",      "Z2xA4",   "Z5^2",     "G(32,27)", "S3xS3",
      "S4xZ2",    "A5",      "Z5^2:Z3", "Z2^4:S3", "S5",       "PSL(2,7)", "Z2^4:D5",
      "Z2xS5",    "A6",
  };
  return names;
}

}  // namespace pqs
