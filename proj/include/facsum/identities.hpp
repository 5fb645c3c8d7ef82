#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facsum/core.hpp"
#include "facsum/reduction.hpp"

namespace facsum {

/// Outcome of one exact identity check. passed holds exactly when lhs == rhs.
/// When the source formula carries a known off-by-one in its printed index,
/// the printed variant's value is evaluated too and any disagreement is
/// recorded in note; a disagreement there is data, not a failure.
struct IdentityResult {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  Rat lhs{0};
  Rat rhs{0};
  std::optional<Rat> paper_variant_lhs;
  bool passed = false;
  std::string note;
};

/// Binomial-preset shift: y(n,k)(x) = y(n,0)(x+k).
IdentityResult check_y_shift(std::size_t n, std::size_t k, const Rat& x);

/// Unfolded sum form of the binomial-preset y against the recurrence value.
/// DomainError for n = 0.
IdentityResult check_unfolded_binomial(std::size_t n, std::size_t k, const Rat& x);

/// m * y(n,0)(m+1) = y(n+1,0)(m) - y(n,0)(m) for integer m >= 1.
IdentityResult check_delta_relation(std::size_t n, std::size_t m);

/// Inverse pair between the Stirling-2 Y values and Touchard polynomials:
///   Y(n,k)(x) = x^{-k} sum_i [k,i] (-1)^{k-i} T_{n+i}(x)
///   T_{n+k}(x) = sum_i {k,i} x^i Y(n,i)(x)
/// (corrected index; the printed T_{n+i-1} variant is evaluated alongside).
/// DomainError at x = 0.
IdentityResult check_stirling_touchard_inverse(std::size_t n, std::size_t k,
                                               const Rat& x);

/// Composition through r-Stirling numbers, one result per m = 0..n+k:
///   {n+k, m} = sum_i {k,i} {n+i, m}_i
/// with the right side computed both from the triangle tables and from the
/// explicit alternating sum; the printed {n+k-1, m} variant is recorded.
std::vector<IdentityResult> check_rstirling_composition(std::size_t n, std::size_t k);

/// Triangle diagonal A(n,n) against the product g(1,1)...g(n,n).
IdentityResult check_diagonal(const SuperRecurrence& rec, std::size_t n);

/// Inclusive integer range as a list, for grid configuration.
inline std::vector<std::size_t> index_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> values;
  for (std::size_t i = lo; i <= hi; ++i) values.push_back(i);
  return values;
}

struct SuiteConfig {
  std::vector<std::size_t> n_values = index_range(0, 12);
  std::vector<std::size_t> k_values = index_range(0, 6);
  std::vector<Rat> x_points = {Rat(1), Rat(2), Rat(1, 2), Rat(-3, 2), Rat(5)};
  std::vector<std::size_t> delta_m_values = index_range(1, 6);
};

/// Every checker over its configured grid, in a fixed deterministic order.
std::vector<IdentityResult> run_suite(const SuiteConfig& config = {});

}  // namespace facsum
