#include "facsum/transforms.hpp"

#include <cmath>

#include "facsum/sequences.hpp"

namespace facsum {

namespace {

void require_power_basis(const Poly& p, const char* what) {
  if (p.basis() != Basis::Power)
    throw BasisMismatch(std::string(what) + " expects a power-basis polynomial");
}

enum class Row { Stirling1, Stirling1Signed, Stirling2, Stirling2Signed };

Rat row_coeff(Row row, std::size_t j, std::size_t k) {
  switch (row) {
    case Row::Stirling1: return Rat(stirling1_unsigned(j, k));
    case Row::Stirling1Signed: return Rat(stirling1_signed(j, k));
    case Row::Stirling2: return Rat(stirling2(j, k));
    case Row::Stirling2Signed: {
      Rat v(stirling2(j, k));
      return (j - k) % 2 == 0 ? v : -v;
    }
  }
  throw std::logic_error("unreachable");
}

// out_k = sum_j c_j * M(j, k) where M is a Stirling connection row.
Poly connect(const Poly& p, Basis target, Row row) {
  const auto& c = p.coeffs();
  std::vector<Rat> out(c.size(), Rat(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t k = 0; k <= j; ++k) out[k] += c[j] * row_coeff(row, j, k);
  }
  return Poly(target, std::move(out));
}

}  // namespace

Poly convert_basis(const Poly& p, Basis target) {
  if (p.basis() == target) return p;
  switch (p.basis()) {
    case Basis::Rising:
      // x^(n rising) = sum_k |s(n,k)| x^k
      if (target == Basis::Power) return connect(p, Basis::Power, Row::Stirling1);
      return convert_basis(convert_basis(p, Basis::Power), target);
    case Basis::Falling:
      // (x)_n = sum_k s(n,k) x^k
      if (target == Basis::Power)
        return connect(p, Basis::Power, Row::Stirling1Signed);
      return convert_basis(convert_basis(p, Basis::Power), target);
    case Basis::Power:
      // x^n = sum_k {n,k} (x)_k  and  x^n = sum_k (-1)^(n-k) {n,k} x^(k rising)
      if (target == Basis::Falling) return connect(p, Basis::Falling, Row::Stirling2);
      return connect(p, Basis::Rising, Row::Stirling2Signed);
  }
  throw std::logic_error("unreachable");
}

Poly rft_apply(const Poly& p, int m) {
  require_power_basis(p, "rft_apply");
  Poly out = p;
  for (int step = 0; step < std::abs(m); ++step) {
    out = m > 0 ? convert_basis(out.with_basis_tag(Basis::Rising), Basis::Power)
                : convert_basis(out, Basis::Rising).with_basis_tag(Basis::Power);
  }
  return out;
}

Poly fft_apply(const Poly& p) {
  require_power_basis(p, "fft_apply");
  return convert_basis(p.with_basis_tag(Basis::Falling), Basis::Power);
}

Poly apply_transform(const TransformKind& kind, const Poly& p) {
  if (kind.op == TransformOp::FFT) {
    if (kind.power != 1)
      throw std::invalid_argument("fft supports power 1 only");
    return fft_apply(p);
  }
  return rft_apply(p, kind.power);
}

double rft_inverse_series(const Poly& p, double x, std::size_t max_terms, double tol) {
  require_power_basis(p, "rft_inverse_series");
  if (max_terms < 1 || tol <= 0)
    throw std::invalid_argument("rft_inverse_series needs max_terms >= 1, tol > 0");
  long double partial = 0.0L;
  long double factor = 1.0L;  // (-x)^k / k!
  bool prev_small = false;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) factor *= static_cast<long double>(-x) / static_cast<long double>(k);
    long double term =
        factor * static_cast<long double>(poly_eval(p, -static_cast<double>(k)));
    // A single below-threshold term is not enough: P(-k) can cross a root.
    const bool small =
        k > 0 &&
        fabsl(term) < static_cast<long double>(tol) * std::max(1.0L, fabsl(partial));
    if (small && prev_small) break;
    prev_small = small;
    if (k >= max_terms)
      throw NoConvergence("inverse transform series did not settle");
    partial += term;
  }
  return static_cast<double>(expl(static_cast<long double>(x)) * partial);
}

DobinskiPair generalized_dobinski(const Poly& p, double x, double y,
                                  std::size_t max_terms) {
  require_power_basis(p, "generalized_dobinski");
  const std::size_t deg = p.degree().value_or(0);
  if (max_terms < deg + 1)
    throw std::invalid_argument("generalized_dobinski needs max_terms > degree");

  DobinskiPair out;
  // Finite side: forward differences of k -> P(-x-k) vanish past the degree.
  long double lhs = 0.0L;
  long double yk_over_kfac = 1.0L;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (k > 0) yk_over_kfac *= static_cast<long double>(y) / static_cast<long double>(k);
    long double delta = 0.0L;
    for (std::size_t i = 0; i <= k; ++i) {
      long double c = to_double(Rat(binomial(k, i)));
      long double v = poly_eval(p, -x - static_cast<double>(i));
      delta += ((k - i) % 2 == 0 ? c : -c) * v;
    }
    lhs += delta * yk_over_kfac;
  }
  out.lhs = static_cast<double>(lhs);

  long double rhs = 0.0L;
  long double factor = 1.0L;  // y^k / k!
  for (std::size_t k = 0; k < max_terms; ++k) {
    if (k > 0) factor *= static_cast<long double>(y) / static_cast<long double>(k);
    rhs += factor * static_cast<long double>(poly_eval(p, -x - static_cast<double>(k)));
  }
  out.rhs = static_cast<double>(expl(-static_cast<long double>(y)) * rhs);
  return out;
}

double touchard_dobinski(std::size_t n, double x, std::size_t max_terms, double tol) {
  if (max_terms < 1 || tol <= 0)
    throw std::invalid_argument("touchard_dobinski needs max_terms >= 1, tol > 0");
  long double partial = 0.0L;
  long double factor = 1.0L;  // x^k / k!
  bool prev_small = false;
  for (std::size_t k = 0;; ++k) {
    if (k > 0) factor *= static_cast<long double>(x) / static_cast<long double>(k);
    long double kn = k == 0 ? (n == 0 ? 1.0L : 0.0L)
                            : powl(static_cast<long double>(k), static_cast<long double>(n));
    long double term = kn * factor;
    const bool small =
        k > 0 &&
        fabsl(term) < static_cast<long double>(tol) * std::max(1.0L, fabsl(partial));
    if (small && prev_small) break;
    prev_small = small;
    if (k >= max_terms) throw NoConvergence("Dobinski series did not settle");
    partial += term;
  }
  return static_cast<double>(expl(-static_cast<long double>(x)) * partial);
}

Rat fft_integer_derivative(const Poly& p, std::size_t m) {
  require_power_basis(p, "fft_integer_derivative");
  Rat sum(0);
  const auto& c = p.coeffs();
  for (std::size_t j = 0; j < c.size() && j <= m; ++j)
    sum += Rat(binomial(m, j)) * Rat(factorial(j)) * c[j];
  return sum;
}

}  // namespace facsum
