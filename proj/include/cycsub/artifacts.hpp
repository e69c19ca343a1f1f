#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cycsub/numerics.hpp"

namespace cycsub {

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

// Header "alpha,f_alpha,is_extremum", one row per curve row, is_extremum 0/1.
std::string curve_csv(const Curve& c);

// Standalone SVG: axes, one polyline through the grid rows, one circle per
// extremum row. Log-scaled alpha axis.
std::string curve_svg(const Curve& c);

}  // namespace cycsub
