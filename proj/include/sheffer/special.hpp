#pragma once

#include "sheffer/rational.hpp"

namespace sheffer {

/// Principal branch of the Lambert W function, W(z) e^{W(z)} = z, by Halley
/// iteration. Accurate away from the branch point -1/e.
Complex lambert_w0(Complex z);

}  // namespace sheffer
