#include "pqs/basket.hpp"

#include "pqs/error.hpp"

#include <cctype>
#include <numeric>

namespace pqs {

void Basket::add(const SingularityType& t, unsigned multiplicity) {
  if (multiplicity == 0) return;
  entries_[t.normalized()] += multiplicity;
}

std::size_t Basket::count() const {
  std::size_t c = 0;
  for (const auto& [t, m] : entries_) c += m;
  return c;
}

Basket Basket::operator+(const Basket& o) const {
  Basket out = *this;
  for (const auto& [t, m] : o.entries_) out.add(t, m);
  return out;
}

Basket Basket::mirrored() const {
  Basket out;
  for (const auto& [t, m] : entries_) out.add(SingularityType{t.n, t.n - t.a}, m);
  return out;
}

std::string Basket::to_string() const {
  if (entries_.empty()) return "{}";
  std::string out;
  for (const auto& [t, m] : entries_) {
    if (!out.empty()) out += " + ";
    if (m > 1) out += std::to_string(m) + "x";
    out += t.to_string();
  }
  return out;
}

Basket Basket::parse(std::string_view text) {
  Basket out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw ParseError(ErrorKind::Parse, i + 1, std::string("expected '") + c + "'");
    ++i;
  };
  auto number = [&]() -> long long {
    skip_ws();
    std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError(ErrorKind::Parse, start + 1, "number too large");
      ++i;
    }
    if (i == start) throw ParseError(ErrorKind::Parse, i + 1, "expected a number");
    return v;
  };

  skip_ws();
  auto rest = text.substr(i);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
    rest.remove_suffix(1);
  if (rest.empty() || rest == "{}" || rest == "empty" || rest == "∅") return out;

  while (true) {
    skip_ws();
    const std::size_t entry_start = i;
    long long mult = 1;
    long long first = number();
    skip_ws();
    if (i < text.size() && (text[i] == 'x' || text[i] == '*')) {
      ++i;
      mult = first;
      if (mult < 1) throw ParseError(ErrorKind::Parse, entry_start + 1, "multiplicity must be >= 1");
      first = number();
    }
    if (first != 1) throw ParseError(ErrorKind::Parse, entry_start + 1, "expected 1/n(1,a)");
    expect('/');
    const std::size_t n_pos = i;
    long long n = number();
    expect('(');
    if (number() != 1) throw ParseError(ErrorKind::Parse, i, "expected (1,a)");
    expect(',');
    long long a = number();
    expect(')');
    if (n < 2 || a < 1 || a >= n)
      throw ParseError(ErrorKind::OutOfRange, n_pos + 1, "type needs 1 <= a < n");
    if (std::gcd(n, a) != 1) throw ParseError(ErrorKind::NonCoprime, n_pos + 1, "gcd(a, n) != 1");
    out.add(SingularityType{static_cast<unsigned>(n), static_cast<unsigned>(a)},
            static_cast<unsigned>(mult));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError(ErrorKind::Parse, i + 1, "expected '+'");
    ++i;
  }
  return out;
}

BasketInvariants basket_invariants(const Basket& b) {
  BasketInvariants out;
  for (const auto& [t, m] : b.entries()) {
    auto r = sing_record(t);
    out.k += m * r.k;
    out.e += m * r.e;
    out.B += m * r.B;
    out.gamma += m * r.gamma;
    out.mu += m * r.mu;
    out.l += m * r.l;
    out.I = std::lcm(out.I, r.I);
    out.I_alt = std::lcm(out.I_alt, r.I_alt);
  }
  return out;
}

std::vector<BranchPointClass> fixed_point_classes(const SphericalSystem& sys) {
  const auto& g = *sys.group;
  std::vector<BranchPointClass> out;
  for (std::size_t j = 0; j < sys.tuple.size(); ++j) {
    BranchPointClass c;
    c.branch_index = j;
    const ElementId gj = sys.tuple[j];
    c.m = g.element_order(gj);
    auto cyc = g.cyclic_subgroup(gj);
    std::vector<bool> seen(g.order(), false);
    for (ElementId d = 0; d < g.order(); ++d) {
      if (seen[d]) continue;
      for (auto x : cyc) seen[g.multiply(d, x)] = true;
      c.cosets.push_back(d);
      c.local_generators.push_back(g.conjugate(gj, d));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Basket compute_basket(const SurfaceDatum& d) {
  const auto& g = *d.group;
  Basket out;
  const auto& t1 = d.sys1.tuple;
  const auto& t2 = d.sys2.tuple;
  for (auto gj : t1) {
    const unsigned mj = g.element_order(gj);
    for (auto hk : t2) {
      const unsigned mk = g.element_order(hk);
      if (std::gcd(mj, mk) == 1) continue;
      for (auto delta : double_coset_reps(g, gj, hk)) {
        const ElementId conj = g.conjugate(hk, delta);
        auto powers = g.cyclic_subgroup(conj);  // powers[c] = conj^c
        auto exponent_of = [&](ElementId y) -> int {
          for (std::size_t c = 0; c < powers.size(); ++c)
            if (powers[c] == y) return static_cast<int>(c);
          return -1;
        };
        // |<g_j> ∩ delta<h_k>delta^-1|
        unsigned n = 0;
        ElementId x = FiniteGroup::identity();
        for (unsigned i = 0; i < mj; ++i) {
          if (exponent_of(x) >= 0) ++n;
          x = g.multiply(x, gj);
        }
        if (n <= 1) continue;
        if (mj % n != 0 || mk % n != 0)
          throw Error(ErrorKind::AlgorithmInvariant, "stabilizer order does not divide m_j, m_k");
        const ElementId gamma0 = g.power(gj, mj / n);
        const int c = exponent_of(gamma0);
        if (c < 0 || c % static_cast<int>(mk / n) != 0)
          throw Error(ErrorKind::AlgorithmInvariant,
                      "stabilizer generator is not in the conjugate cyclic subgroup");
        const unsigned b = static_cast<unsigned>(c) / (mk / n);
        if (std::gcd(b, n) != 1)
          throw Error(ErrorKind::AlgorithmInvariant, "stabilizer generator is not primitive");
        out.add(SingularityType{n, b});
      }
    }
  }
  return out;
}

}  // namespace pqs
