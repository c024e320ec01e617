#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace sheffer::kernels {

using Complex = std::complex<double>;

// Dense row-major d x d kernels. The serial versions are the reference the
// OpenMP versions are tested against.

namespace serial {
void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y, std::size_t d);
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c, std::size_t d);
/// y += alpha * x
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double norm2(std::span<const Complex> x);
}  // namespace serial

namespace omp {
void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y, std::size_t d);
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c, std::size_t d);
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double norm2(std::span<const Complex> x);
}  // namespace omp

}  // namespace sheffer::kernels
