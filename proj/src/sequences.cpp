#include "facsum/sequences.hpp"

#include <map>

namespace facsum {

const char* seq_kind_name(SeqKind kind) {
  switch (kind) {
    case SeqKind::Binomial: return "binomial";
    case SeqKind::Stirling1Unsigned: return "stirling1";
    case SeqKind::Stirling2: return "stirling2";
    case SeqKind::RStirling1: return "rstirling1";
    case SeqKind::RStirling2: return "rstirling2";
  }
  return "?";
}

namespace {

bool uses_r(SeqKind kind) {
  return kind == SeqKind::RStirling1 || kind == SeqKind::RStirling2;
}

// Appends row n given rows 0..n-1. Row n holds entries k = 0..n.
void append_row(SeqKind kind, unsigned r, std::vector<std::vector<BigInt>>& rows) {
  const std::size_t n = rows.size();
  std::vector<BigInt> row(n + 1, BigInt(0));
  const std::size_t base = uses_r(kind) ? r : 0;
  if (n < base) {
    rows.push_back(std::move(row));
    return;
  }
  if (n == base) {
    row[n] = 1;
    rows.push_back(std::move(row));
    return;
  }
  const auto& prev = rows[n - 1];
  auto prev_at = [&](std::size_t k) -> BigInt {
    return k < prev.size() ? prev[k] : BigInt(0);
  };
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt stay;
    switch (kind) {
      case SeqKind::Binomial:
        stay = prev_at(k);
        break;
      case SeqKind::Stirling1Unsigned:
      case SeqKind::RStirling1:
        stay = BigInt(static_cast<unsigned long>(n - 1)) * prev_at(k);
        break;
      case SeqKind::Stirling2:
      case SeqKind::RStirling2:
        stay = BigInt(static_cast<unsigned long>(k)) * prev_at(k);
        break;
    }
    row[k] = stay + (k > 0 ? prev_at(k - 1) : BigInt(0));
  }
  rows.push_back(std::move(row));
}

}  // namespace

SeqTable::SeqTable(SeqKind kind, unsigned r) : kind_(kind), r_(uses_r(kind) ? r : 0) {}

void SeqTable::ensure_rows(std::size_t n) const {
  while (rows_.size() <= n) append_row(kind_, r_, rows_);
}

BigInt SeqTable::at(std::size_t n, std::size_t k) const {
  if (k > n) return BigInt(0);
  std::lock_guard<std::mutex> lock(mu_);
  ensure_rows(n);
  return rows_[n][k];
}

std::vector<BigInt> SeqTable::row(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_rows(n);
  return rows_[n];
}

BigInt sequence_value_fresh(SeqKind kind, std::size_t n, std::size_t k, unsigned r) {
  if (k > n) return BigInt(0);
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i <= n; ++i) append_row(kind, uses_r(kind) ? r : 0, rows);
  return rows[n][k];
}

namespace {

SeqTable& table_for(SeqKind kind) {
  static SeqTable binom(SeqKind::Binomial);
  static SeqTable s1(SeqKind::Stirling1Unsigned);
  static SeqTable s2(SeqKind::Stirling2);
  switch (kind) {
    case SeqKind::Binomial: return binom;
    case SeqKind::Stirling1Unsigned: return s1;
    case SeqKind::Stirling2: return s2;
    default: throw std::logic_error("r-variant tables are keyed by r");
  }
}

SeqTable& r_table_for(SeqKind kind, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<SeqKind, unsigned>, SeqTable> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find({kind, r});
  if (it == tables.end())
    it = tables.try_emplace({kind, r}, kind, r).first;
  return it->second;
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  return table_for(SeqKind::Binomial).at(n, k);
}

BigInt stirling1_unsigned(std::size_t n, std::size_t k) {
  return table_for(SeqKind::Stirling1Unsigned).at(n, k);
}

BigInt stirling1_signed(std::size_t n, std::size_t k) {
  BigInt v = stirling1_unsigned(n, k);
  return (n - k) % 2 == 0 ? v : BigInt(-v);
}

BigInt stirling2(std::size_t n, std::size_t k) {
  return table_for(SeqKind::Stirling2).at(n, k);
}

BigInt r_stirling1(std::size_t n, std::size_t k, unsigned r) {
  return r_table_for(SeqKind::RStirling1, r).at(n, k);
}

BigInt r_stirling2(std::size_t n, std::size_t k, unsigned r) {
  return r_table_for(SeqKind::RStirling2, r).at(n, k);
}

Rat r_stirling2_explicit(std::size_t n, std::size_t i, std::size_t k) {
  BigInt num(0);
  for (std::size_t j = 0; j <= i; ++j) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k + j),
                  static_cast<unsigned long>(n));
    term *= binomial(i, j);
    if ((i - j) % 2 == 1) term = -term;
    num += term;
  }
  Rat out(num, factorial(i));
  out.canonicalize();
  return out;
}

BigInt bell(std::size_t n) {
  BigInt sum(0);
  for (std::size_t k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

Poly touchard_poly(std::size_t n) {
  std::vector<Rat> coeffs;
  coeffs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs.emplace_back(stirling2(n, k));
  return Poly(Basis::Power, std::move(coeffs));
}

Poly r_touchard_poly(std::size_t n, unsigned r) {
  std::vector<Rat> coeffs;
  coeffs.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    coeffs.emplace_back(r_stirling2(n + r, k + r, r));
  return Poly(Basis::Power, std::move(coeffs));
}

}  // namespace facsum
