#pragma once

#include <mutex>
#include <vector>

#include "facsum/core.hpp"

namespace facsum {

enum class SeqKind { Binomial, Stirling1Unsigned, Stirling2, RStirling1, RStirling2 };

const char* seq_kind_name(SeqKind kind);

/// Memoized triangle for one of the recurrence-defined sequences.
///
/// Rows grow on demand and are cached. Lookups are safe from concurrent
/// threads. For the r-variants every entry with n < r or k < r is zero and
/// the (r, r) entry is 1.
class SeqTable {
 public:
  explicit SeqTable(SeqKind kind, unsigned r = 0);

  SeqTable(const SeqTable&) = delete;
  SeqTable& operator=(const SeqTable&) = delete;

  SeqKind kind() const { return kind_; }
  unsigned r() const { return r_; }

  /// Entry (n, k); zero outside the triangle (k > n).
  BigInt at(std::size_t n, std::size_t k) const;

  /// Entries k = 0..n of row n.
  std::vector<BigInt> row(std::size_t n) const;

 private:
  void ensure_rows(std::size_t n) const;

  SeqKind kind_;
  unsigned r_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

/// Recurrence value computed from scratch, bypassing every cache. Exists so
/// tests can cross-check the memoized tables.
BigInt sequence_value_fresh(SeqKind kind, std::size_t n, std::size_t k, unsigned r = 0);

BigInt binomial(std::size_t n, std::size_t k);
BigInt stirling1_unsigned(std::size_t n, std::size_t k);
BigInt stirling1_signed(std::size_t n, std::size_t k);
BigInt stirling2(std::size_t n, std::size_t k);
BigInt r_stirling1(std::size_t n, std::size_t k, unsigned r);
BigInt r_stirling2(std::size_t n, std::size_t k, unsigned r);

/// Alternating-sum form (1/i!) * sum_j C(i,j) (-1)^(i-j) (k+j)^n; equals
/// r_stirling2(n+k, i+k, k) exactly.
Rat r_stirling2_explicit(std::size_t n, std::size_t i, std::size_t k);

/// Row sum of the Stirling-2 triangle.
BigInt bell(std::size_t n);

/// Power-basis polynomial with coefficient {n, k} on x^k.
Poly touchard_poly(std::size_t n);

/// Power-basis polynomial with coefficient {n+r, k+r}_r on x^k.
Poly r_touchard_poly(std::size_t n, unsigned r);

}  // namespace facsum
