#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace facsum {

/// Arbitrary-precision integer (canonical sign/limb form maintained by GMP).
using BigInt = mpz_class;

/// Exact rational; kept canonical (denominator > 0, gcd(|num|, den) = 1).
using Rat = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct BasisMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedRecurrence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt factorial(std::size_t n);
Rat rat_pow(const Rat& base, std::size_t e);

/// x(x+1)...(x+n-1), by the product form (finite at non-positive x).
Rat rising_factorial(const Rat& x, std::size_t n);
double rising_factorial(double x, std::size_t n);

/// x(x-1)...(x-n+1).
Rat falling_factorial(const Rat& x, std::size_t n);
double falling_factorial(double x, std::size_t n);

/// Basis a coefficient vector is expressed in: x^k, x^(k rising) or (x)_k.
enum class Basis { Power, Rising, Falling };

const char* basis_name(Basis b);

/// Polynomial as a basis-tagged coefficient vector over Rat.
///
/// coeffs()[k] multiplies the k-th basis element. The zero polynomial is the
/// empty vector; a non-empty vector always has a non-zero last entry (the
/// constructor strips trailing zeros).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Basis basis) : basis_(basis) {}
  Poly(Basis basis, std::vector<Rat> coeffs);

  Basis basis() const { return basis_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree in the tagged basis; absent for the zero polynomial.
  std::optional<std::size_t> degree() const;

  /// coeffs()[k], or 0 past the end.
  Rat coeff(std::size_t k) const;

  /// Same coefficients reinterpreted under a different basis tag.
  Poly with_basis_tag(Basis basis) const { return Poly(basis, coeffs_); }

  bool operator==(const Poly& other) const = default;

 private:
  Basis basis_ = Basis::Power;
  std::vector<Rat> coeffs_;
};

/// Sum of coeff[k] * B_k(x) with B_k given by the basis tag.
Rat poly_eval(const Poly& p, const Rat& x);
double poly_eval(const Poly& p, double x);

/// Coefficient-wise sum; throws BasisMismatch on differing tags.
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, const Rat& c);

/// "p" or "p/q", exact decimal digits.
std::string rat_to_string(const Rat& v);

/// Parses an optionally signed "p" or "p/q" literal; rejects anything else.
Rat rat_from_string(const std::string& text);

double to_double(const Rat& v);

/// Exact conversion (every finite double is rational); throws DomainError on
/// NaN/infinity.
Rat rat_from_double(double v);

}  // namespace facsum
