#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "facsum/core.hpp"

namespace facsum {

/// (n, k) -> alpha*n + beta*k + gamma.
struct AffineFn {
  Rat alpha{0}, beta{0}, gamma{0};

  Rat operator()(std::size_t n, std::size_t k) const {
    return alpha * static_cast<unsigned long>(n) +
           beta * static_cast<unsigned long>(k) + gamma;
  }

  static AffineFn constant(Rat c) { return {Rat(0), Rat(0), std::move(c)}; }
};

/// Two-term (generalized to (m+1)-term) recurrence
///   A(n,k) = sum_i coeffs[i](n,k) * A(n-1, k-i)
/// seeded with A(lower_bound, lower_bound) = base_value. Entries with
/// k < lower_bound or k > n are zero by convention, so the triangle lives on
/// lower_bound <= k <= n. For the two-term case coeffs[0] is f and coeffs[1]
/// is g.
struct SuperRecurrence {
  std::vector<AffineFn> coeffs;
  std::size_t lower_bound = 0;
  BigInt base_value = 1;

  /// Recurrence order m (number of column shifts).
  std::size_t order() const { return coeffs.size() - 1; }

  /// f = 1, g = 1 (Pascal rule).
  static SuperRecurrence binomial();
  /// f = n - 1, g = 1 (unsigned Stirling, first kind).
  static SuperRecurrence stirling1();
  /// f = k, g = 1 (Stirling, second kind).
  static SuperRecurrence stirling2();
};

enum class WeightKind { Power, Rising };

/// Summand weight w(k) = x^k or x^(k rising).
struct SumWeight {
  WeightKind kind;
  Rat x;
};

/// Coefficient vectors c(s, .) produced while folding the summation down to
/// its base term; steps[s-1][j] is the weight on column lower_bound + j of
/// row n - s.
struct ReductionTrace {
  std::size_t lower_bound = 0;
  std::vector<std::vector<Rat>> steps;
  Rat final_value{0};
};

/// Triangle entry A(n, k) for the sub-triangle seeded at (n0, n0), built by
/// running the recurrence directly.
Rat triangle_value(const SuperRecurrence& rec, std::size_t n, std::size_t k,
                   std::size_t n0);

/// Brute-force oracle: builds every row and adds the (optionally weighted)
/// row-n values. Exact.
Rat direct_sum(const SuperRecurrence& rec, std::size_t n, std::size_t n0,
               const std::optional<SumWeight>& weight = std::nullopt);

/// Summation by coefficient propagation: rewrites sum(k=n0..n) A(n,k) one row
/// at a time until only the base term carries weight. Value equals direct_sum
/// exactly; the trace records every intermediate coefficient vector.
std::pair<Rat, ReductionTrace> reduce_sum(const SuperRecurrence& rec, std::size_t n,
                                          std::size_t n0);

/// Diagonal product g(1,1) * ... * g(n,n); equals the triangle diagonal for
/// two-term recurrences seeded at (0,0) with base 1.
Rat diagonal_value(const SuperRecurrence& rec, std::size_t n);

/// Y(m, k) from the weighted-propagation recurrence
///   Y(m,k) = f(n_top-m+1, k) Y(m-1,k) + x g(n_top-m+1, k+1) Y(m-1,k+1),
/// Y(0,k) = 1. Requires a two-term recurrence.
Rat y_power_value(const SuperRecurrence& rec, std::size_t m, std::size_t k,
                  const Rat& x, std::size_t n_top);

/// y(m, k): as y_power_value but with the rising-factorial step factor
/// (x + k) g(n_top-m+1, k+1).
Rat y_rising_value(const SuperRecurrence& rec, std::size_t m, std::size_t k,
                   const Rat& x, std::size_t n_top);

/// sum(k=n0..n) A(n,k) x^k evaluated as x^n0 * A(n0,n0) * Y(n-n0, n0).
/// Two-term recurrences only (UnsupportedRecurrence otherwise).
Rat y_power(const SuperRecurrence& rec, std::size_t n, std::size_t n0, const Rat& x);

/// sum(k=n0..n) A(n,k) x^(k rising) via the y recurrence.
Rat y_rising(const SuperRecurrence& rec, std::size_t n, std::size_t n0, const Rat& x);

enum class ClosedKind { Binomial, Stirling1, Stirling2 };

const char* closed_kind_name(ClosedKind kind);

/// Closed form of sum(k=0..n) A(n,k) x^k for the three presets:
/// (x+1)^n, x^(n rising), and the Touchard polynomial T_n(x).
Rat closed_sum_power(ClosedKind kind, std::size_t n, const Rat& x);

/// Y(n, k) for the Stirling-2 preset evaluated through the r-Touchard
/// polynomial with r = k (the top-down unfolded form).
Rat y_closed_stirling2_Y(std::size_t n, std::size_t k, const Rat& x);

/// Unfolded form of the binomial-preset y(n, k):
///   sum(i=0..n-1) C(n-1,i) (x+k+i+1) (x+k)^(i rising).
/// Defined for n >= 1 (DomainError at n = 0).
Rat unfolded_y_binomial(std::size_t n, std::size_t k, const Rat& x);

}  // namespace facsum
