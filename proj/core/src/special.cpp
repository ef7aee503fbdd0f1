#include "vmc/special.hpp"

#include <cmath>
#include <vector>

namespace vmc {

namespace {
constexpr std::size_t kTableSize = 4096;

const std::vector<double>& table() {
  static const std::vector<double> values = [] {
    std::vector<double> v(kTableSize);
    long double acc = 0.0L;
    v[0] = 0.0;
    for (std::size_t i = 1; i < kTableSize; ++i) {
      acc += std::log(static_cast<long double>(i));
      v[i] = static_cast<double>(acc);
    }
    return v;
  }();
  return values;
}
}  // namespace

double log_factorial(std::uint64_t n) {
  if (n < kTableSize) return table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace vmc
