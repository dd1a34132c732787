#pragma once

#include "pqs/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// Builds a group from the preset catalog:
///   Zn, Zn^k, Dn (dihedral of order 2n), Sn and An (n <= 8), Q8,
///   PSL(2,7), G(16,3), G(32,27), Z2^4:Z2, Z2^4:S3, Z2^4:D5, Z3^2:Z2,
///   Z5^2:Z3, and direct products of any of these written "AxB"
///   (e.g. "Z2xS4", "D4xZ2").
/// Throws UnknownPreset for anything else.
GroupPtr group_preset(std::string_view name);

/// The groups searched when no explicit group source is given: one name per
/// isomorphism type occurring in the classification tables.
const std::vector<std::string>& default_catalog();

}  // namespace pqs
