#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace mldsurf {

// All arithmetic in this library is exact. Discrepancies, ledger values and
// extraction coefficients are rationals with small numerators/denominators,
// so a 64-bit backing type is ample.
using Rat = boost::rational<long long>;

/// Renders a rational as "p/q" (always with an explicit denominator, e.g. "1/1").
std::string to_string(const Rat& r);

/// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& s);

}  // namespace mldsurf
