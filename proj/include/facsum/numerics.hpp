#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "facsum/core.hpp"
#include "facsum/reduction.hpp"

namespace facsum {

/// Nodes and weights of a generalized Gauss-Laguerre rule for the weight
/// t^alpha e^{-t} on (0, inf). Exact for polynomial integrands of degree
/// <= 2*order - 1 (up to rounding).
struct QuadratureRule {
  double alpha = 0;
  std::size_t order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gamma function on the positive axis (Lanczos approximation; relative
/// accuracy ~1e-13 on (0, 60]). Throws DomainError for x <= 0.
double gamma_real(double x);

/// Builds the generalized Gauss-Laguerre rule. Throws DomainError when
/// alpha <= -1 or order < 1.
QuadratureRule gauss_laguerre(double alpha, std::size_t order);

/// (1/Gamma(x)) integral_0^inf P(t) t^{x-1} e^{-t} dt, by the Gauss-Laguerre
/// rule with weight exponent x-1; the integrand is polynomial so the rule is
/// exact up to rounding. Requires x > 0 and order >= ceil((deg+1)/2) + 2.
double weighted_integral(const Poly& p, double x, std::size_t order);

/// Upper incomplete gamma. Integer s = n+1 uses the exact finite sum
/// sum_{k<=n} (n!/k!) x^k e^{-x}; non-integer s uses the shifted quadrature
/// path. Requires s > 0, x >= 0.
double incomplete_gamma_upper(double s, double x);

/// The quadrature route on its own: e^{-x} integral_0^inf (u+x)^{s-1} e^{-u} du,
/// callable at any s > 0 so tests can play it against the finite-sum route.
double incomplete_gamma_upper_quadrature(double s, double x, std::size_t order = 128);

/// Outcome of one numeric check: an exact reference value, the numeric value
/// under test, and the error against the tolerance. passed holds exactly when
/// rel_error <= tolerance (abs_error <= tolerance when the reference is 0).
struct VerifyReport {
  std::string label;
  std::vector<std::pair<std::string, std::string>> params;
  std::variant<Rat, double> exact_value;
  double numeric_value = 0;
  double abs_error = 0;
  double rel_error = 0;
  double tolerance = 0;
  bool passed = false;

  static VerifyReport make(std::string label,
                           std::vector<std::pair<std::string, std::string>> params,
                           std::variant<Rat, double> exact, double numeric,
                           double tolerance);

  double exact_as_double() const;
};

/// Integral representation check for sum_k A(n,k) x^(k rising): plays the
/// weighted integral of the preset's integrand polynomial ((t+1)^n, t^(n
/// rising), or T_n(t)) against the exact y-recurrence value.
VerifyReport verify_rising_sum(ClosedKind kind, std::size_t n, double x,
                               double tolerance = 1e-10);

/// Plays the exact integer sum_{i<=n} n!/i! against e * Gamma(n+1, 1).
VerifyReport verify_eq22(std::size_t n, double tolerance = 1e-10);

struct IntegralSuiteConfig {
  double tolerance = 1e-10;
  double moment_tolerance = 1e-12;
  std::size_t rising_n_max = 12;
  std::size_t eq22_n_max = 15;
  std::size_t igamma_n_max = 10;
  std::size_t rft_degree_max = 12;
};

/// Runs every numeric verification family in a deterministic order:
/// quadrature moments, rising-sum integral representations, the factorial-sum
/// identity, the incomplete-gamma recurrence and dual-route check, and the
/// integral-vs-algebraic transform comparison.
std::vector<VerifyReport> run_integral_suite(const IntegralSuiteConfig& config = {});

}  // namespace facsum
