#pragma once

#include <cstdint>

namespace vmc {

// log(n!) from a table accumulated in long double, lgamma beyond the table.
double log_factorial(std::uint64_t n);

}  // namespace vmc
