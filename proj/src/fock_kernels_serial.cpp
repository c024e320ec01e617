#include <cmath>

#include "sheffer/fock_kernels.hpp"

namespace sheffer::kernels::serial {

void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc{};
    const Complex* row = a.data() + i * d;
    for (std::size_t j = 0; j < d; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    Complex* out = c.data() + i * d;
    for (std::size_t j = 0; j < d; ++j) out[j] = Complex{};
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a[i * d + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * d;
      for (std::size_t j = 0; j < d; ++j) out[j] += aik * brow[j];
    }
  }
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double norm2(std::span<const Complex> x) {
  double s = 0.0;
  for (const Complex& v : x) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace sheffer::kernels::serial
