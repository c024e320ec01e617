#pragma once

#include <cstddef>
#include <vector>

#include "sheffer/polynomial.hpp"
#include "sheffer/report.hpp"
#include "sheffer/sequence.hpp"
#include "sheffer/weyl.hpp"

namespace sheffer {

/// H_n^{(m)}(x, y) = n! sum_r x^{n-mr} y^r / ((n-mr)! r!). Throws
/// IndexOutOfRange when m == 0.
BivariatePolynomial hkdf(unsigned m, std::size_t n);

/// M H_n = H_{n+1} with M = x + m y D_x^{m-1}, D_x H_n = n H_{n-1}, and
/// H_n against n! [t^n] exp(x t + y t^m), for n = 0..max_n.
std::vector<IdentityCheck> hkdf_ladder_check(unsigned m, std::size_t max_n);

/// u acting on the x (or y) variable, the other one held as a parameter.
BivariatePolynomial apply_x(const WeylElement& u, const BivariatePolynomial& p);
BivariatePolynomial apply_y(const WeylElement& u, const BivariatePolynomial& p);

/// S_n(x, y) = n! sum_r s_{n-2r}(x) s_r(y) / ((n-2r)! r!).
BivariatePolynomial umbral_S(const ShefferSequence& seq, std::size_t n);
std::vector<BivariatePolynomial> umbral_S(const ShefferPair& pair, std::size_t max_n);

/// f(D_y) S_n = f(D_x)^2 S_n for n = 0..max_n.
std::vector<IdentityCheck> heat_check(const ShefferPair& pair, std::size_t max_n);

/// Pi = f(D_x), Theta = M_x + 2 M_y f(D_y). Rows for [Pi, Theta] = 1 on every
/// x^i y^j with i + j <= max_degree are asserted; rows for Theta S_n = S_{n+1}
/// and Pi S_n = n S_{n-1} (n < max_degree) only record what happens and
/// carry "recorded" in their identity name.
std::vector<IdentityCheck> theta_pi_check(const ShefferPair& pair, std::size_t max_degree);

/// pi_0 = q, pi_k(X) = X int_0^inf exp(-s) pi_{k-1}(X + s) ds.
Polynomial pi_recursion(const Polynomial& q, std::size_t n);

/// pi_n against M^n q with M = X (1 - D)^{-1}, n = 0..max_n.
std::vector<IdentityCheck> pi_recursion_check(const Polynomial& q, std::size_t max_n);

/// Taylor coefficients F_0..F_K in y of F = exp(y (P + M)) q for the Bessel
/// operators P = D - D^2/2, M = X (1 - D)^{-1}.
struct EvolutionResult {
  /// F_{k+1} = (P + M) F_k / (k + 1)
  std::vector<Polynomial> recursion;
  /// exp(-y^2/2) exp(yP) exp(yM) q
  std::vector<Polynomial> factored;
  bool agree() const { return recursion == factored; }
};
EvolutionResult evolution_solution(const Polynomial& q, std::size_t y_order);
std::vector<IdentityCheck> evolution_check(const Polynomial& q, std::size_t y_order);

}  // namespace sheffer
