#include "pqs/invariants.hpp"

#include "pqs/error.hpp"
#include "pqs/signature.hpp"

#include <cmath>
#include <numbers>

namespace pqs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalInconsistency, "invariant identity failed: " + what);
}

long long genus_of(const SphericalSystem& s) {
  auto orders = s.orders();
  if (theta(orders) <= 0)
    throw Error(ErrorKind::InvalidDatum, "signature " + Signature(orders).to_string() +
                                             " has Theta <= 0");
  auto g = hurwitz_genus(s.group->order(), orders);
  if (g < 2) throw Error(ErrorKind::InvalidDatum, "curve genus below 2");
  return g;
}

long long integral(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-6)
    throw Error(ErrorKind::NumericalFailure,
                std::string(what) + " = " + std::to_string(x) + " is not an integer");
  return static_cast<long long>(r);
}

}  // namespace

InvariantRecord surface_invariants(const SurfaceDatum& d) {
  return surface_invariants(d, compute_basket(d));
}

InvariantRecord surface_invariants(const SurfaceDatum& d, const Basket& basket) {
  InvariantRecord r;
  r.g1 = genus_of(d.sys1);
  r.g2 = genus_of(d.sys2);
  const auto order = static_cast<long long>(d.group->order());
  const Rational prod = make_rational((r.g1 - 1) * (r.g2 - 1), order);
  const auto bi = basket_invariants(basket);
  r.k = bi.k;
  r.e_basket = bi.e;
  r.B = bi.B;
  r.gamma = bi.gamma;
  r.mu = bi.mu;
  r.l = bi.l;
  r.I = bi.I;
  r.I_alt = bi.I_alt;

  r.KX2 = 8 * prod;
  r.KS2 = r.KX2 - bi.k;
  r.eS = 4 * prod + bi.e;
  const Rational chi = prod + (bi.mu - 2 * bi.gamma) / 4;
  if (!is_integer(chi))
    throw Error(ErrorKind::InvalidDatum, "chi = " + to_string(chi) + " is not an integer");
  r.chi = to_integer(chi);
  r.q = 0;
  r.pg = r.chi - 1;
  r.tau = (r.KS2 - 2 * r.eS) / 3;

  require(is_integer(r.KS2), "K_S^2 integral");
  require(is_integer(r.eS), "e(S) integral");
  require(12 * chi == r.KS2 + r.eS, "12 chi = K^2 + e");
  require(r.KS2 == 8 * chi - bi.B / 3, "K^2 = 8 chi - B/3");
  require(r.KS2 == 8 * chi - 2 * bi.gamma - bi.l, "K^2 = 8 chi - 2 gamma - l");
  require(r.tau == -2 * bi.gamma - bi.l, "tau = -2 gamma - l");
  const Rational c = bi.gamma + r.pg;
  require(is_integer(c) && c >= 0, "gamma + p_g nonnegative integer");
  r.c = to_integer(c);
  return r;
}

SurfaceDatum dual_surface(const SurfaceDatum& d) {
  const auto& g = *d.group;
  Tuple t2(d.sys2.tuple.rbegin(), d.sys2.tuple.rend());
  for (auto& x : t2) x = g.inverse(x);
  return make_datum(d.group, d.sys1.tuple, std::move(t2));
}

std::vector<std::complex<double>> holomorphic_character(const SphericalSystem& sys) {
  const auto& g = *sys.group;
  std::vector<std::complex<double>> tr(g.order(), {1.0, 0.0});
  tr[FiniteGroup::identity()] =
      static_cast<double>(hurwitz_genus(g.order(), sys.orders()));
  for (const auto& cls : fixed_point_classes(sys)) {
    for (auto local : cls.local_generators) {
      ElementId x = local;
      for (unsigned c = 1; c < cls.m; ++c) {
        const double angle = 2.0 * std::numbers::pi * c / cls.m;
        const std::complex<double> zeta(std::cos(angle), std::sin(angle));
        tr[x] += zeta / (1.0 - zeta);
        x = g.multiply(x, local);
      }
    }
  }
  return tr;
}

HodgeCheck h2_quotient_check(const SurfaceDatum& d) {
  return h2_quotient_check(d, surface_invariants(d));
}

HodgeCheck h2_quotient_check(const SurfaceDatum& d, const InvariantRecord& inv) {
  auto chi1 = holomorphic_character(d.sys1);
  auto chi2 = holomorphic_character(d.sys2);
  std::complex<double> pg{}, v{};
  for (std::size_t x = 0; x < chi1.size(); ++x) {
    pg += chi1[x] * chi2[x];
    v += chi1[x] * std::conj(chi2[x]);
  }
  const double n = static_cast<double>(chi1.size());
  pg /= n;
  v /= n;
  if (std::abs(pg.imag()) > 1e-6 || std::abs(v.imag()) > 1e-6)
    throw Error(ErrorKind::NumericalFailure, "invariant dimension has an imaginary part");
  HodgeCheck h;
  h.pg_check = integral(pg.real(), "dim H^{2,0}");
  h.dimV = integral(v.real(), "dim V");
  if (h.pg_check < 0 || h.dimV < 0)
    throw Error(ErrorKind::NumericalFailure, "negative invariant dimension");
  h.h11X = 2 + 2 * h.dimV;
  require(h.pg_check == inv.pg, "trace-formula p_g equals chi - 1");
  require(h.h11X == 2 * inv.gamma + 2 + 2 * inv.pg, "h^{1,1}(X) = 2 + 2 gamma + 2 p_g");
  return h;
}

std::vector<std::string> advisory_flags(const InvariantRecord& inv, const InvariantRecord& dual) {
  std::vector<std::string> out;
  // Free quotients have tau = 0 and are exempt.
  if (inv.l > 0 && 2 * inv.gamma >= dual.l) out.push_back("tau_positive_warning");
  return out;
}

}  // namespace pqs
