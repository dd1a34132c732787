#pragma once

#include "pqs/basket.hpp"
#include "pqs/rational.hpp"
#include "pqs/spherical.hpp"

#include <complex>
#include <string>
#include <vector>

namespace pqs {

struct InvariantRecord {
  long long g1 = 0, g2 = 0;
  Rational KX2;
  Rational KS2;
  Rational eS;
  long long chi = 0;
  long long pg = 0;
  long long q = 0;
  Rational tau;
  Rational gamma;
  Rational mu;
  long long l = 0;
  long long c = 0;
  long long I = 1;
  long long I_alt = 1;
  // Basket corrections.
  Rational k, e_basket, B;

  bool operator==(const InvariantRecord&) const = default;
};

/// Computes the basket itself.
InvariantRecord surface_invariants(const SurfaceDatum& d);
/// All identities between the invariants are checked before returning;
/// a failure throws InternalInconsistency, a non-integral chi InvalidDatum.
InvariantRecord surface_invariants(const SurfaceDatum& d, const Basket& basket);

/// sys2 replaced by (h_t^-1, ..., h_1^-1).
SurfaceDatum dual_surface(const SurfaceDatum& d);

struct HodgeCheck {
  long long pg_check = 0;
  long long dimV = 0;
  long long h11X = 0;
  bool operator==(const HodgeCheck&) const = default;
};

/// Characters of G on H^0(Omega^1_{C_i}) by the holomorphic Lefschetz
/// (Eichler) trace formula; index = element id.
std::vector<std::complex<double>> holomorphic_character(const SphericalSystem& sys);

/// Throws NumericalFailure when a dimension is not within 1e-6 of an
/// integer and InternalInconsistency when it disagrees with the invariants.
HodgeCheck h2_quotient_check(const SurfaceDatum& d);
HodgeCheck h2_quotient_check(const SurfaceDatum& d, const InvariantRecord& inv);

/// Advisory flags: "tau_positive_warning" when the basket is nonempty and
/// 2*gamma >= l of the dual basket.
std::vector<std::string> advisory_flags(const InvariantRecord& inv, const InvariantRecord& dual);

}  // namespace pqs
