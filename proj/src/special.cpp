#include "sheffer/special.hpp"

#include <cmath>

namespace sheffer {

Complex lambert_w0(Complex z) {
  if (z == Complex{}) return {};
  Complex w = std::abs(z) < 0.3 ? z - z * z + 1.5 * z * z * z : std::log(1.0 + z);
  for (int it = 0; it < 64; ++it) {
    const Complex ew = std::exp(w);
    const Complex r = w * ew - z;
    const Complex step = r / (ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace sheffer
