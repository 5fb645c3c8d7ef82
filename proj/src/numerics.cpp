#include "facsum/numerics.hpp"

#include <cmath>
#include <numbers>

#include "facsum/sequences.hpp"
#include "facsum/transforms.hpp"

namespace facsum {

double gamma_real(double x) {
  if (!(x > 0)) throw DomainError("gamma_real requires x > 0");
  // Lanczos, g = 7, 9 terms (Godfrey coefficients).
  static const double kCoeffs[9] = {
      0.99999999999980993,
      676.5203681218851,
      -1259.1392167224028,
      771.32342877765313,
      -176.61502916214059,
      12.507343278686905,
      -0.13857109526572012,
      9.9843695780195716e-6,
      1.5056327351493116e-7,
  };
  const double z = x - 1.0;
  double acc = kCoeffs[0];
  for (int k = 1; k < 9; ++k) acc += kCoeffs[k] / (z + k);
  const double t = z + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

namespace {

// L_n^{(alpha)} and L_{n-1}^{(alpha)} at z, by the three-term recurrence.
void laguerre_pair(std::size_t n, long double alpha, long double z,
                   long double& ln, long double& lnm1) {
  long double p0 = 1.0L;
  long double p1 = 1.0L + alpha - z;
  if (n == 0) {
    ln = p0;
    lnm1 = 0.0L;
    return;
  }
  for (std::size_t k = 1; k < n; ++k) {
    long double p2 =
        ((2.0L * k + 1.0L + alpha - z) * p1 - (k + alpha) * p0) / (k + 1.0L);
    p0 = p1;
    p1 = p2;
  }
  ln = p1;
  lnm1 = p0;
}

}  // namespace

QuadratureRule gauss_laguerre(double alpha, std::size_t order) {
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre requires alpha > -1");
  if (order < 1) throw DomainError("gauss_laguerre requires order >= 1");

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const long double a = alpha;
  const long double n = static_cast<long double>(order);
  // log(Gamma(alpha+order) / Gamma(order)) for the weight prefactor.
  const long double log_ratio =
      lgammal(a + n) - lgammal(n);

  long double z = 0.0L;
  for (std::size_t i = 0; i < order; ++i) {
    // Stroud-Secrest style initial guesses, then Newton.
    if (i == 0) {
      z = (1.0L + a) * (3.0L + 0.92L * a) / (1.0L + 2.4L * n + 1.8L * a);
    } else if (i == 1) {
      z += (15.0L + 6.25L * a) / (1.0L + 0.9L * a + 2.5L * n);
    } else {
      const long double ai = static_cast<long double>(i - 1);
      z += ((1.0L + 2.55L * ai) / (1.9L * ai) +
            1.26L * ai * a / (1.0L + 3.5L * ai)) *
           (z - rule.nodes[i - 2]) / (1.0L + 0.3L * a);
    }
    long double ln = 0.0L, lnm1 = 0.0L, deriv = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      laguerre_pair(order, a, z, ln, lnm1);
      deriv = (n * ln - (n + a) * lnm1) / z;
      const long double dz = ln / deriv;
      z -= dz;
      if (fabsl(dz) <= 1e-15L * std::max(1.0L, fabsl(z))) break;
    }
    laguerre_pair(order, a, z, ln, lnm1);
    deriv = (n * ln - (n + a) * lnm1) / z;
    rule.nodes[i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(-expl(log_ratio) / (deriv * n * lnm1));
  }
  return rule;
}

double weighted_integral(const Poly& p, double x, std::size_t order) {
  if (!(x > 0)) throw DomainError("weighted_integral requires x > 0");
  if (p.basis() != Basis::Power)
    throw BasisMismatch("weighted_integral expects a power-basis polynomial");
  const std::size_t deg = p.degree().value_or(0);
  if (order < (deg + 2) / 2 + 2)
    throw std::invalid_argument("quadrature order too small for this degree");
  const QuadratureRule rule = gauss_laguerre(x - 1.0, order);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < order; ++i)
    sum += static_cast<long double>(rule.weights[i]) *
           static_cast<long double>(poly_eval(p, rule.nodes[i]));
  return static_cast<double>(sum / static_cast<long double>(gamma_real(x)));
}

double incomplete_gamma_upper_quadrature(double s, double x, std::size_t order) {
  if (!(s > 0)) throw DomainError("incomplete gamma requires s > 0");
  if (x < 0) throw DomainError("incomplete gamma requires x >= 0");
  if (x == 0) return gamma_real(s);
  const QuadratureRule rule = gauss_laguerre(0.0, order);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < order; ++i)
    sum += static_cast<long double>(rule.weights[i]) *
           powl(static_cast<long double>(rule.nodes[i]) + static_cast<long double>(x),
                static_cast<long double>(s) - 1.0L);
  return static_cast<double>(expl(-static_cast<long double>(x)) * sum);
}

double incomplete_gamma_upper(double s, double x) {
  if (!(s > 0)) throw DomainError("incomplete gamma requires s > 0");
  if (x < 0) throw DomainError("incomplete gamma requires x >= 0");
  if (s == std::floor(s)) {
    // Integer s = n+1: Gamma(n+1, x) = n! e^{-x} sum_{k<=n} x^k / k!.
    const std::size_t n = static_cast<std::size_t>(s) - 1;
    long double sum = 0.0L;
    long double term = 1.0L;  // x^k / k!
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) term *= static_cast<long double>(x) / static_cast<long double>(k);
      sum += term;
    }
    const long double nfac = static_cast<long double>(to_double(Rat(factorial(n))));
    return static_cast<double>(nfac * expl(-static_cast<long double>(x)) * sum);
  }
  return incomplete_gamma_upper_quadrature(s, x);
}

VerifyReport VerifyReport::make(std::string label,
                                std::vector<std::pair<std::string, std::string>> params,
                                std::variant<Rat, double> exact, double numeric,
                                double tolerance) {
  VerifyReport report;
  report.label = std::move(label);
  report.params = std::move(params);
  report.exact_value = std::move(exact);
  report.numeric_value = numeric;
  report.tolerance = tolerance;
  const double exact_d = report.exact_as_double();
  report.abs_error = std::abs(numeric - exact_d);
  report.rel_error = exact_d == 0 ? report.abs_error : report.abs_error / std::abs(exact_d);
  report.passed = exact_d == 0 ? report.abs_error <= tolerance
                               : report.rel_error <= tolerance;
  return report;
}

double VerifyReport::exact_as_double() const {
  if (const Rat* r = std::get_if<Rat>(&exact_value)) return to_double(*r);
  return std::get<double>(exact_value);
}

namespace {

Poly rising_sum_integrand(ClosedKind kind, std::size_t n) {
  std::vector<Rat> coeffs;
  coeffs.reserve(n + 1);
  switch (kind) {
    case ClosedKind::Binomial:  // (t+1)^n
      for (std::size_t k = 0; k <= n; ++k) coeffs.emplace_back(binomial(n, k));
      return Poly(Basis::Power, std::move(coeffs));
    case ClosedKind::Stirling1:  // t^(n rising)
      for (std::size_t k = 0; k <= n; ++k) coeffs.emplace_back(stirling1_unsigned(n, k));
      return Poly(Basis::Power, std::move(coeffs));
    case ClosedKind::Stirling2:
      return touchard_poly(n);
  }
  throw std::logic_error("unreachable");
}

SuperRecurrence preset_for(ClosedKind kind) {
  switch (kind) {
    case ClosedKind::Binomial: return SuperRecurrence::binomial();
    case ClosedKind::Stirling1: return SuperRecurrence::stirling1();
    case ClosedKind::Stirling2: return SuperRecurrence::stirling2();
  }
  throw std::logic_error("unreachable");
}

std::string format_double_param(double v) {
  char buf[64];
  int written = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, written > 0 ? static_cast<std::size_t>(written) : 0);
}

}  // namespace

VerifyReport verify_rising_sum(ClosedKind kind, std::size_t n, double x,
                               double tolerance) {
  const Poly integrand = rising_sum_integrand(kind, n);
  const std::size_t order = std::max<std::size_t>(12, n / 2 + 4);
  const double numeric = weighted_integral(integrand, x, order);
  const Rat exact = y_rising(preset_for(kind), n, 0, rat_from_double(x));
  return VerifyReport::make(
      std::string("rising-sum/") + closed_kind_name(kind),
      {{"n", std::to_string(n)}, {"x", format_double_param(x)}}, exact, numeric,
      tolerance);
}

VerifyReport verify_eq22(std::size_t n, double tolerance) {
  Rat exact(0);
  for (std::size_t i = 0; i <= n; ++i)
    exact += Rat(factorial(n)) / Rat(factorial(i));
  const double numeric = std::numbers::e * incomplete_gamma_upper(n + 1.0, 1.0);
  return VerifyReport::make("factorial-ratio-sum", {{"n", std::to_string(n)}}, exact,
                            numeric, tolerance);
}

std::vector<VerifyReport> run_integral_suite(const IntegralSuiteConfig& config) {
  std::vector<VerifyReport> out;

  // Quadrature self-test: order-12 rules must reproduce the moments
  // Gamma(alpha + j + 1) for j up to the rule's exactness degree.
  const double alphas[] = {0.0, 0.5, 1.5, 4.0};
  for (double alpha : alphas) {
    const QuadratureRule rule = gauss_laguerre(alpha, 12);
    for (std::size_t j = 0; j <= 23; ++j) {
      long double sum = 0.0L;
      for (std::size_t i = 0; i < rule.order; ++i)
        sum += static_cast<long double>(rule.weights[i]) *
               powl(static_cast<long double>(rule.nodes[i]), static_cast<long double>(j));
      out.push_back(VerifyReport::make(
          "quadrature-moment",
          {{"alpha", format_double_param(alpha)}, {"j", std::to_string(j)}},
          gamma_real(alpha + static_cast<double>(j) + 1.0), static_cast<double>(sum),
          config.moment_tolerance));
    }
  }

  const double xs[] = {0.5, 1.0, 1.5, 2.5, 7.25};
  for (ClosedKind kind :
       {ClosedKind::Binomial, ClosedKind::Stirling1, ClosedKind::Stirling2})
    for (std::size_t n = 0; n <= config.rising_n_max; ++n)
      for (double x : xs)
        out.push_back(verify_rising_sum(kind, n, x, config.tolerance));

  for (std::size_t n = 0; n <= config.eq22_n_max; ++n)
    out.push_back(verify_eq22(n, config.tolerance));

  // Corrected recurrence Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}.
  {
    std::vector<double> svals;
    for (int s = 1; s <= 10; ++s) svals.push_back(s);
    svals.push_back(2.5);
    for (double s : svals)
      for (double x : {0.5, 1.0, 3.0}) {
        const double lhs = incomplete_gamma_upper(s + 1.0, x);
        const double rhs =
            s * incomplete_gamma_upper(s, x) + std::pow(x, s) * std::exp(-x);
        out.push_back(VerifyReport::make(
            "igamma-recurrence",
            {{"s", format_double_param(s)}, {"x", format_double_param(x)}}, rhs, lhs,
            config.tolerance));
      }
  }

  // Dual route for integer order: finite sum vs shifted quadrature.
  for (std::size_t n = 0; n <= config.igamma_n_max; ++n)
    for (double x : {0.5, 1.0, 3.0})
      out.push_back(VerifyReport::make(
          "igamma-quadrature",
          {{"n", std::to_string(n)}, {"x", format_double_param(x)}},
          incomplete_gamma_upper(n + 1.0, x),
          incomplete_gamma_upper_quadrature(n + 1.0, x), config.tolerance));

  // Integral form of the rising transform vs the exact algebraic route.
  for (std::size_t d = 0; d <= config.rft_degree_max; ++d) {
    std::vector<Rat> coeffs;
    for (std::size_t j = 0; j <= d; ++j) {
      coeffs.emplace_back(j == d ? 1 : (j % 3 == 0 ? 2 : -1),
                          static_cast<unsigned long>(j + 1));
      coeffs.back().canonicalize();
    }
    Poly p(Basis::Power, std::move(coeffs));
    const Poly algebraic = rft_apply(p, 1);
    for (double x : {0.5, 1.0, 2.5, 7.25}) {
      const std::size_t order = std::max<std::size_t>(12, d / 2 + 4);
      out.push_back(VerifyReport::make(
          "rft-integral", {{"deg", std::to_string(d)}, {"x", format_double_param(x)}},
          poly_eval(algebraic, rat_from_double(x)), weighted_integral(p, x, order),
          config.tolerance));
    }
  }

  return out;
}

}  // namespace facsum
