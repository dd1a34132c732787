#include "pqs/spherical.hpp"

#include "pqs/error.hpp"

#include <cctype>

namespace pqs {

std::vector<unsigned> SphericalSystem::orders() const {
  std::vector<unsigned> out;
  out.reserve(tuple.size());
  for (auto x : tuple) out.push_back(group->element_order(x));
  return out;
}

void validate(const SphericalSystem& sys) {
  const auto& g = *sys.group;
  ElementId prod = FiniteGroup::identity();
  for (auto x : sys.tuple) {
    if (x >= g.order()) throw Error(ErrorKind::InvalidSystem, "element index out of range");
    prod = g.multiply(prod, x);
  }
  if (prod != FiniteGroup::identity())
    throw Error(ErrorKind::InvalidSystem, "product of the tuple is not the identity");
  if (!g.generates(sys.tuple)) throw Error(ErrorKind::InvalidSystem, "tuple does not generate G");
  for (auto x : sys.tuple)
    if (x == FiniteGroup::identity())
      throw Error(ErrorKind::InvalidSystem, "tuple contains the identity (branching index 1)");
}

void validate(const SphericalSystem& sys, std::span<const unsigned> expected_orders) {
  if (expected_orders.size() != sys.tuple.size())
    throw Error(ErrorKind::InvalidSystem, "tuple length does not match the signature");
  for (std::size_t i = 0; i < sys.tuple.size(); ++i)
    if (sys.group->element_order(sys.tuple[i]) != expected_orders[i])
      throw Error(ErrorKind::InvalidSystem,
                  "element " + std::to_string(i + 1) + " has order " +
                      std::to_string(sys.group->element_order(sys.tuple[i])) + ", expected " +
                      std::to_string(expected_orders[i]));
  validate(sys);
}

std::vector<Tuple> spherical_tuples(const FiniteGroup& g, std::span<const unsigned> orders) {
  std::vector<Tuple> out;
  const std::size_t r = orders.size();
  if (r == 0) {
    if (g.order() == 1) out.emplace_back();
    return out;
  }
  for (auto m : orders)
    if (g.elements_of_order(m).empty()) return out;

  Tuple t(r);
  // prefix[i] = t[0] * ... * t[i-1]
  std::vector<ElementId> prefix(r, FiniteGroup::identity());
  const unsigned last_order = orders[r - 1];
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth + 1 == r) {
      const ElementId last = g.inverse(prefix[depth]);
      if (g.element_order(last) != last_order) return;
      t[depth] = last;
      // The last entry lies in the span of the others.
      if (!g.generates(std::span<const ElementId>(t.data(), r - 1))) return;
      out.push_back(t);
      return;
    }
    for (auto x : g.elements_of_order(orders[depth])) {
      t[depth] = x;
      prefix[depth + 1] = g.multiply(prefix[depth], x);
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<SphericalSystem> spherical_systems(const GroupPtr& g, std::span<const unsigned> orders) {
  std::vector<SphericalSystem> out;
  for (auto& t : spherical_tuples(*g, orders)) out.push_back(SphericalSystem{g, std::move(t)});
  return out;
}

std::string format_system(const SphericalSystem& sys) {
  std::string out = "(";
  auto orders = sys.orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  out += "):[";
  for (std::size_t i = 0; i < sys.tuple.size(); ++i) {
    if (i) out += ',';
    out += to_cycle_string(sys.group->element(sys.tuple[i]));
  }
  return out + "]";
}

SphericalSystem parse_system(const GroupPtr& g, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(ErrorKind::Parse, text.size() + 1, "expected ':' after the signature");
  std::vector<unsigned> orders;
  {
    auto sig = text.substr(0, colon);
    if (sig.size() < 2 || sig.front() != '(' || sig.back() != ')')
      throw ParseError(ErrorKind::Parse, 1, "signature must be written \"(m1,...,mr)\"");
    unsigned v = 0;
    bool have = false;
    for (std::size_t i = 1; i + 1 < sig.size(); ++i) {
      char c = sig[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        have = true;
      } else if (c == ',' && have) {
        orders.push_back(v);
        v = 0;
        have = false;
      } else {
        throw ParseError(ErrorKind::Parse, i + 1, "unexpected character in signature");
      }
    }
    if (!have) throw ParseError(ErrorKind::Parse, sig.size(), "expected a branching index");
    orders.push_back(v);
  }
  std::size_t i = colon + 1;
  if (i >= text.size() || text[i] != '[') throw ParseError(ErrorKind::Parse, i + 1, "expected '['");
  if (text.back() != ']') throw ParseError(ErrorKind::Parse, text.size(), "expected ']'");
  ++i;
  const std::size_t end = text.size() - 1;
  Tuple tuple;
  while (i < end) {
    std::size_t start = i;
    int depth = 0;
    while (i < end && !(depth == 0 && text[i] == ',')) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    auto elem = text.substr(start, i - start);
    if (elem.empty()) throw ParseError(ErrorKind::Parse, start + 1, "empty element");
    try {
      tuple.push_back(g->index_of(parse_permutation(elem, g->degree())));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), start + e.position(),
                       std::string("bad element '") + std::string(elem) + "'");
    } catch (const Error& e) {
      throw ParseError(ErrorKind::InvalidSystem, start + 1, e.what());
    }
    if (i < end) ++i;  // comma
  }
  SphericalSystem sys{g, std::move(tuple)};
  validate(sys, orders);
  return sys;
}

SurfaceDatum make_datum(const GroupPtr& g, Tuple t1, Tuple t2) {
  return SurfaceDatum{g, SphericalSystem{g, std::move(t1)}, SphericalSystem{g, std::move(t2)}};
}

void validate(const SurfaceDatum& d) {
  if (d.sys1.group != d.group || d.sys2.group != d.group)
    throw Error(ErrorKind::InvalidDatum, "systems are over different groups");
  validate(d.sys1);
  validate(d.sys2);
}

void hurwitz_move(const FiniteGroup& g, Tuple& t, std::size_t i) {
  const auto a = t[i], b = t[i + 1];
  t[i] = b;
  t[i + 1] = g.multiply(g.multiply(g.inverse(b), a), b);
}

void inverse_hurwitz_move(const FiniteGroup& g, Tuple& t, std::size_t i) {
  const auto a = t[i], b = t[i + 1];
  t[i] = g.multiply(g.multiply(a, b), g.inverse(a));
  t[i + 1] = a;
}

}  // namespace pqs
