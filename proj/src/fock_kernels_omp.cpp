#include <omp.h>

#include <cmath>

#include "sheffer/fock_kernels.hpp"

namespace sheffer::kernels::omp {

namespace {
// Below this size the fork/join costs more than the loop.
constexpr std::size_t kMinParallelDim = 48;
}  // namespace

void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y, std::size_t d) {
  const auto n = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static) if (d >= kMinParallelDim)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Complex acc{};
    const Complex* row = a.data() + i * n;
    for (std::ptrdiff_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c, std::size_t d) {
  const auto n = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static) if (d >= kMinParallelDim)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Complex* out = c.data() + i * n;
    for (std::ptrdiff_t j = 0; j < n; ++j) out[j] = Complex{};
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::ptrdiff_t j = 0; j < n; ++j) out[j] += aik * brow[j];
    }
  }
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static) if (x.size() >= 4 * kMinParallelDim)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double norm2(std::span<const Complex> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static) if (x.size() >= 4 * kMinParallelDim)
  for (std::ptrdiff_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return std::sqrt(s);
}

}  // namespace sheffer::kernels::omp
