#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sheffer/catalog.hpp"
#include "sheffer/fock_kernels.hpp"
#include "sheffer/rational.hpp"
#include "sheffer/report.hpp"
#include "sheffer/series.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer {

enum class ExecPolicy { kSerial, kParallel };

using FockVector = std::vector<Complex>;

/// Dense row-major d x d matrix on span{|0>, ..., |d-1>}.
class FockMatrix {
 public:
  FockMatrix(std::size_t dim, std::string label);

  static FockMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  const std::vector<Complex>& data() const noexcept { return data_; }
  std::vector<Complex>& data() noexcept { return data_; }

 private:
  std::size_t dim_;
  std::string label_;
  std::vector<Complex> data_;
};

/// a|n> = sqrt(n)|n-1>
FockMatrix annihilation(std::size_t dim);
FockMatrix creation(std::size_t dim);

FockMatrix multiply(const FockMatrix& a, const FockMatrix& b, ExecPolicy policy = ExecPolicy::kParallel);
FockMatrix operator+(const FockMatrix& a, const FockMatrix& b);
FockMatrix operator-(const FockMatrix& a, const FockMatrix& b);
FockVector apply(const FockMatrix& m, const FockVector& v, ExecPolicy policy = ExecPolicy::kParallel);

/// Top-left d x d block of the infinite-matrix image of u under X -> a^dagger, D -> a.
FockMatrix image(const WeylElement& u, std::size_t dim);

/// sum_k s_k a^k
FockMatrix series_in_a(const ComplexSeries& s, std::size_t dim);

/// M(a, a^dagger) = a^dagger k(a) - (hk)(a) with the series carried to a^{dim-1}.
/// Needs pair.order() >= dim.
FockMatrix raising_matrix(const ShefferPair& pair, std::size_t dim);

/// M(a + zp, a^dagger), from the Taylor-shifted series.
FockMatrix shifted_raising_matrix(const ShefferPair& pair, Complex zp, std::size_t dim);

/// exp(c a^dagger); exact on the truncated space since a^dagger only raises.
FockMatrix exp_creation(Complex c, std::size_t dim);

FockVector number_state(std::size_t n, std::size_t dim);
FockVector coherent_state(Complex z, std::size_t dim);

/// <u|v>, conjugate-linear in u.
Complex inner(const FockVector& u, const FockVector& v);

/// Norm of the coherent-state amplitudes dropped by the cutoff, estimated by
/// the first one: exp(-|z|^2/2) |z|^d / sqrt(d!).
double coherent_tail(Complex z, std::size_t dim);

struct ExpmResult {
  FockVector value;
  /// Relative size of the first omitted Taylor term, summed over substeps.
  double tail_estimate = 0.0;
  std::size_t substeps = 1;
  std::size_t terms = 0;
};

/// exp(t m) v by Taylor summation on the vector. The step t is split into
/// substeps until each local series converges.
ExpmResult expm_apply(const FockMatrix& m, Complex t, const FockVector& v,
                      ExecPolicy policy = ExecPolicy::kParallel);

struct CoherentParams {
  Complex z;
  Complex zp;
  Complex lambda;
};

struct FockOptions {
  std::size_t cutoff = 64;
  double tolerance = 1e-8;
  std::size_t max_power = 6;
  std::size_t max_level = 2;
  ExecPolicy policy = ExecPolicy::kParallel;
};

/// Numeric matrix elements on the truncated Fock space against the closed
/// forms. Throws GuardExceeded for parameters outside the family's guards and
/// CutoffTooSmall when the cutoff is below 32 or the truncation tail exceeds
/// the tolerance.
std::vector<NumericCheck> fock_verify(const FamilyEntry& entry, const CoherentParams& params,
                                      const FockOptions& options = {});

/// Conjugation by exp(zp a^dagger) against the shifted series, on the
/// top-left block x block corner.
NumericCheck shift_identity_check(const FamilyEntry& entry, Complex zp, const FockOptions& options = {},
                                  std::size_t block = 8);

/// `count` draws with z uniform in the unit disc, z' uniform in the disc of
/// radius min(1, shift_guard) and lambda uniform in the disc of radius
/// min(0.1, guard_radius / 2). Deterministic in `seed`.
std::vector<CoherentParams> draw_params(const FamilyEntry& entry, std::size_t count, std::uint32_t seed);

/// Same family built at the order the Fock matrices need.
FamilyEntry fock_family(std::string_view label, std::size_t cutoff);

std::string format_params(const CoherentParams& p);

}  // namespace sheffer
