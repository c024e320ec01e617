#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/sequence.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer {

/// Complex evaluators of f, f^{-1} and g on principal branches.
struct NumericPair {
  std::function<Complex(Complex)> f;
  std::function<Complex(Complex)> f_inverse;
  std::function<Complex(Complex)> g;
};

struct FamilyEntry {
  std::string label;
  ShefferPair pair;
  /// Radius in lambda inside which the generating function is analytic
  /// (infinity for entire ones).
  double guard_radius;
  /// Bound on |z'| for coherent-state checks: keeps z' well inside the disc
  /// of convergence of g'/g and 1/f', so Fock-space truncation is benign.
  double shift_guard;
  NumericPair numeric;
  std::string notes;
};

const std::vector<std::string>& family_labels();

/// f and g written in the series expression grammar.
struct FamilySpec {
  std::string f;
  std::string g;
};
FamilySpec family_spec(std::string_view label);

/// One of hermite, laguerre, bessel, bell, lower_factorial, hahn, idempotent,
/// with f and g carried to the given order. Throws Error(kUnknownFamily).
FamilyEntry family(std::string_view label, std::size_t order);

/// s_0..s_n from formulas that do not go through the (f, g) machinery:
/// recurrences, Stirling sums, products and explicit coefficient sums.
std::vector<Polynomial> oracle_polys(std::string_view label, std::size_t n);

/// Closed-form generating function G(lambda, x). Throws GuardExceeded when
/// |lambda| reaches the family's guard radius.
Complex egf_eval(std::string_view label, Complex lambda, Complex x);

/// Raising and lowering operators transcribed from their published closed
/// forms (not from f and g), expanded to D-order d_order.
struct OperatorForms {
  WeylElement raising;
  WeylElement lowering;
};
OperatorForms reference_operators(std::string_view label, unsigned d_order);

/// Candidate closed forms for <z|exp(lambda M)|z'> / <z|z'>, as functions of
/// (lambda, conj(z), z'). Entry 0 is the uncorrected form; further
/// entries are alternatives to be adjudicated numerically.
struct CoherentCandidate {
  std::string name;
  std::function<Complex(Complex, Complex, Complex)> value;
};
std::vector<CoherentCandidate> coherent_candidates(std::string_view label);

/// Candidate polynomials p_n with <z|M^n|0> = p_n(conj z) <z|0>; entry 0 is
/// the uncorrected form.
struct VacuumCandidate {
  std::string name;
  std::function<Polynomial(std::size_t)> poly;
};
std::vector<VacuumCandidate> vacuum_candidates(std::string_view label);

}  // namespace sheffer
