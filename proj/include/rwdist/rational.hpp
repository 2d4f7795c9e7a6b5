#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rwdist {

// Exact rational arithmetic for weights and distances. Weights and word
// lengths stay tiny in this project, so int64 components are ample.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-3", "3/4" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);

// "3" when integral, "3/4" otherwise.
std::string format_rational(const Rational& r);

// Fixed-point rendering with `places` decimals, rounding half away from zero.
std::string format_decimal(const Rational& r, int places);

}  // namespace rwdist
