#include "facsum/reduction.hpp"

#include "facsum/sequences.hpp"

namespace facsum {

SuperRecurrence SuperRecurrence::binomial() {
  return {{AffineFn::constant(Rat(1)), AffineFn::constant(Rat(1))}, 0, BigInt(1)};
}

SuperRecurrence SuperRecurrence::stirling1() {
  return {{AffineFn{Rat(1), Rat(0), Rat(-1)}, AffineFn::constant(Rat(1))}, 0, BigInt(1)};
}

SuperRecurrence SuperRecurrence::stirling2() {
  return {{AffineFn{Rat(0), Rat(1), Rat(0)}, AffineFn::constant(Rat(1))}, 0, BigInt(1)};
}

namespace {

void require_bounds(std::size_t n, std::size_t n0) {
  if (n < n0) throw DomainError("summation bound n must satisfy n >= n0");
}

void require_two_term(const SuperRecurrence& rec) {
  if (rec.order() != 1)
    throw UnsupportedRecurrence("Y/y evaluation requires a two-term recurrence");
}

// Rows n0..n of the sub-triangle; rows[r - n0][k - n0] = A(r, k).
std::vector<std::vector<Rat>> build_rows(const SuperRecurrence& rec, std::size_t n,
                                         std::size_t n0) {
  const std::size_t m = rec.order();
  std::vector<std::vector<Rat>> rows;
  rows.reserve(n - n0 + 1);
  rows.push_back({Rat(rec.base_value)});
  for (std::size_t r = n0 + 1; r <= n; ++r) {
    const auto& prev = rows.back();
    std::vector<Rat> row(r - n0 + 1, Rat(0));
    for (std::size_t k = n0; k <= r; ++k) {
      Rat acc(0);
      for (std::size_t i = 0; i <= m && k - n0 >= i; ++i) {
        std::size_t kc = k - i;           // column pulled from row r-1
        if (kc > r - 1) continue;         // above the previous diagonal
        acc += rec.coeffs[i](r, k) * prev[kc - n0];
      }
      row[k - n0] = acc;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Rat triangle_value(const SuperRecurrence& rec, std::size_t n, std::size_t k,
                   std::size_t n0) {
  require_bounds(n, n0);
  if (k < n0 || k > n) return Rat(0);
  return build_rows(rec, n, n0)[n - n0][k - n0];
}

Rat direct_sum(const SuperRecurrence& rec, std::size_t n, std::size_t n0,
               const std::optional<SumWeight>& weight) {
  require_bounds(n, n0);
  const auto rows = build_rows(rec, n, n0);
  const auto& last = rows.back();
  Rat sum(0);
  Rat w(1);
  if (weight) {
    w = weight->kind == WeightKind::Power ? rat_pow(weight->x, n0)
                                          : rising_factorial(weight->x, n0);
  }
  for (std::size_t k = n0; k <= n; ++k) {
    sum += last[k - n0] * w;
    if (weight) {
      w *= weight->kind == WeightKind::Power
               ? weight->x
               : weight->x + static_cast<unsigned long>(k);
    }
  }
  return sum;
}

std::pair<Rat, ReductionTrace> reduce_sum(const SuperRecurrence& rec, std::size_t n,
                                          std::size_t n0) {
  require_bounds(n, n0);
  ReductionTrace trace;
  trace.lower_bound = n0;
  if (n == n0) {
    trace.final_value = Rat(rec.base_value);
    return {trace.final_value, trace};
  }
  const std::size_t m = rec.order();
  // c holds the weights on row n-s; step s folds row n-s+1 into row n-s.
  std::vector<Rat> c(n - n0 + 1, Rat(1));
  for (std::size_t s = 1; s <= n - n0; ++s) {
    const std::size_t row = n - s + 1;  // row being substituted away
    std::vector<Rat> next(n - s - n0 + 1, Rat(0));
    for (std::size_t j = 0; j < next.size(); ++j) {
      Rat acc(0);
      for (std::size_t i = 0; i <= m; ++i) {
        if (j + i >= c.size()) break;   // column left the previous support
        acc += c[j + i] * rec.coeffs[i](row, n0 + j + i);
      }
      next[j] = acc;
    }
    c = std::move(next);
    trace.steps.push_back(c);
  }
  trace.final_value = c[0] * Rat(rec.base_value);
  return {trace.final_value, trace};
}

Rat diagonal_value(const SuperRecurrence& rec, std::size_t n) {
  const AffineFn& g = rec.coeffs.at(1);
  Rat prod(1);
  for (std::size_t i = 1; i <= n; ++i) prod *= g(i, i);
  return prod;
}

namespace {

Rat y_value(const SuperRecurrence& rec, std::size_t m, std::size_t k, const Rat& x,
            std::size_t n_top, bool rising) {
  require_two_term(rec);
  const AffineFn& f = rec.coeffs[0];
  const AffineFn& g = rec.coeffs[1];
  std::vector<Rat> cur(m + 1, Rat(1));  // level 0 across columns k..k+m
  for (std::size_t level = 1; level <= m; ++level) {
    const std::size_t arg_n = n_top - level + 1;
    for (std::size_t j = 0; j + level <= m; ++j) {
      const std::size_t col = k + j;
      Rat step = rising ? (x + static_cast<unsigned long>(col)) : x;
      cur[j] = f(arg_n, col) * cur[j] + step * g(arg_n, col + 1) * cur[j + 1];
    }
  }
  return cur[0];
}

}  // namespace

Rat y_power_value(const SuperRecurrence& rec, std::size_t m, std::size_t k,
                  const Rat& x, std::size_t n_top) {
  return y_value(rec, m, k, x, n_top, false);
}

Rat y_rising_value(const SuperRecurrence& rec, std::size_t m, std::size_t k,
                   const Rat& x, std::size_t n_top) {
  return y_value(rec, m, k, x, n_top, true);
}

Rat y_power(const SuperRecurrence& rec, std::size_t n, std::size_t n0, const Rat& x) {
  require_bounds(n, n0);
  require_two_term(rec);
  return rat_pow(x, n0) * Rat(rec.base_value) * y_power_value(rec, n - n0, n0, x, n);
}

Rat y_rising(const SuperRecurrence& rec, std::size_t n, std::size_t n0, const Rat& x) {
  require_bounds(n, n0);
  require_two_term(rec);
  return rising_factorial(x, n0) * Rat(rec.base_value) *
         y_rising_value(rec, n - n0, n0, x, n);
}

const char* closed_kind_name(ClosedKind kind) {
  switch (kind) {
    case ClosedKind::Binomial: return "binomial";
    case ClosedKind::Stirling1: return "stirling1";
    case ClosedKind::Stirling2: return "stirling2";
  }
  return "?";
}

Rat closed_sum_power(ClosedKind kind, std::size_t n, const Rat& x) {
  switch (kind) {
    case ClosedKind::Binomial: return rat_pow(x + 1, n);
    case ClosedKind::Stirling1: return rising_factorial(x, n);
    case ClosedKind::Stirling2: return poly_eval(touchard_poly(n), x);
  }
  throw std::logic_error("unreachable");
}

Rat y_closed_stirling2_Y(std::size_t n, std::size_t k, const Rat& x) {
  return poly_eval(r_touchard_poly(n, static_cast<unsigned>(k)), x);
}

Rat unfolded_y_binomial(std::size_t n, std::size_t k, const Rat& x) {
  if (n == 0) throw DomainError("unfolded form starts at n = 1");
  const Rat base = x + static_cast<unsigned long>(k);
  Rat sum(0);
  Rat rf(1);  // (x+k)^(i rising)
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) rf *= base + static_cast<unsigned long>(i - 1);
    sum += Rat(binomial(n - 1, i)) * (base + static_cast<unsigned long>(i + 1)) * rf;
  }
  return sum;
}

}  // namespace facsum
