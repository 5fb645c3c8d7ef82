#pragma once

#include "facsum/core.hpp"

namespace facsum {

enum class TransformOp { RFT, FFT };

/// Requested transform; FFT supports power +1 only.
struct TransformKind {
  TransformOp op = TransformOp::RFT;
  int power = 1;
};

/// Rewrites p as an equal function of x in the target basis; the round trip
/// is the identity.
Poly convert_basis(const Poly& p, Basis target);

/// m-th power of the rising factorial transform as a function transform:
/// m = +1 reinterprets power coefficients onto rising factorials and expands
/// back to the power basis, m = -1 inverts, general m composes, m = 0 is the
/// identity. Input and output are power-basis polynomials.
Poly rft_apply(const Poly& p, int m);

/// Falling factorial transform: sum a_k (x)_k expanded into the power basis.
Poly fft_apply(const Poly& p);

/// Dispatches on kind; throws std::invalid_argument for FFT with power != 1.
Poly apply_transform(const TransformKind& kind, const Poly& p);

/// Series form of the inverse rising factorial transform,
///   e^x sum_k (-1)^k P(-k) x^k / k!,
/// truncated once the next term drops below tol * max(1, |partial|). Throws
/// NoConvergence if max_terms terms never satisfy that.
double rft_inverse_series(const Poly& p, double x, std::size_t max_terms = 500,
                          double tol = 1e-12);

struct DobinskiPair {
  double lhs = 0;  // finite forward-difference side
  double rhs = 0;  // truncated series side
};

/// Both sides of the generalized Dobinski identity:
///   lhs = sum_{k<=deg} (delta^k P)(-x)/k! y^k   (forward differences in steps
///         of -1 along the argument, finite for a polynomial),
///   rhs = e^{-y} sum_{k<max_terms} P(-x-k) y^k / k!.
DobinskiPair generalized_dobinski(const Poly& p, double x, double y,
                                  std::size_t max_terms = 200);

/// e^{-x} sum_k k^n x^k / k!; converges to the Touchard polynomial T_n(x).
double touchard_dobinski(std::size_t n, double x, std::size_t max_terms = 500,
                         double tol = 1e-12);

/// Exact m-th derivative of P(t) e^t at t = 0, i.e. sum_j C(m,j) j! a_j.
/// Equals poly_eval(fft_apply(p), m).
Rat fft_integer_derivative(const Poly& p, std::size_t m);

}  // namespace facsum
