#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "facsum/sequences.hpp"
#include "facsum/transforms.hpp"
#include "oracles.hpp"

using namespace facsum;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, Basis basis = Basis::Power) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rat> coeffs;
  const std::size_t d = deg(rng);
  for (std::size_t i = 0; i <= d; ++i) coeffs.push_back(oracle::random_rat(rng, 9, 5));
  return Poly(basis, std::move(coeffs));
}

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("basis conversions on monomials") {
  Poly rising2(Basis::Rising, {Rat(0), Rat(0), Rat(1)});
  CHECK(convert_basis(rising2, Basis::Power).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(1)});  // x^(2 rising) = x + x^2

  Poly power2(Basis::Power, {Rat(0), Rat(0), Rat(1)});
  CHECK(convert_basis(power2, Basis::Falling).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(1)});  // x^2 = (x)_1 + (x)_2

  Poly power3(Basis::Power, {Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(convert_basis(power3, Basis::Rising).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(-3), Rat(1)});
}

TEST_CASE("conversion preserves the function") {
  std::mt19937_64 rng(3);
  const Basis bases[] = {Basis::Power, Basis::Rising, Basis::Falling};
  for (int iter = 0; iter < 25; ++iter)
    for (Basis from : bases) {
      Poly p = random_poly(rng, 9, from);
      for (Basis to : bases) {
        Poly q = convert_basis(p, to);
        CHECK(q.basis() == to);
        for (int pt = 0; pt < 20; ++pt) {
          Rat x = oracle::random_rat(rng, 12, 6);
          CHECK(poly_eval(p, x) == poly_eval(q, x));
        }
        CHECK(convert_basis(q, from) == p);
      }
    }
}

TEST_CASE("rft examples") {
  Poly x2(Basis::Power, {Rat(0), Rat(0), Rat(1)});
  CHECK(rft_apply(x2, 1).coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(1)});
  CHECK(rft_apply(x2, -1).coeffs() == std::vector<Rat>{Rat(0), Rat(-1), Rat(1)});
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    Poly p = random_poly(rng, 10);
    CHECK(rft_apply(p, 0) == p);
  }
}

TEST_CASE("rft powers compose and round trip") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 30; ++iter) {
    Poly p = random_poly(rng, 12);
    for (int m = -3; m <= 3; ++m) {
      CHECK(rft_apply(rft_apply(p, m), -m) == p);
      if (m > 0) CHECK(rft_apply(p, m) == rft_apply(rft_apply(p, m - 1), 1));
    }
  }
}

TEST_CASE("fft examples") {
  CHECK(fft_apply(Poly(Basis::Power, {Rat(0), Rat(1)})).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(fft_apply(Poly(Basis::Power, {Rat(0), Rat(0), Rat(1)})).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(-1), Rat(1)});
  CHECK(fft_apply(Poly(Basis::Power, {Rat(0), Rat(0), Rat(0), Rat(1)})).coeffs() ==
        std::vector<Rat>{Rat(0), Rat(2), Rat(-3), Rat(1)});
  CHECK(fft_apply(Poly(Basis::Power, {Rat(1)})).coeffs() == std::vector<Rat>{Rat(1)});
}

TEST_CASE("monomial rows of the two transforms") {
  // fft(x^n) expands the falling factorial (signed Stirling-1 row) while
  // rft^{-1}(x^n) is the rising-basis expansion (signed Stirling-2 row).
  // They coincide only up to n = 2, where the two triangles agree.
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<Rat> mono(n + 1, Rat(0));
    mono[n] = 1;
    Poly p(Basis::Power, mono);

    Poly fall = fft_apply(p);
    Poly inv = rft_apply(p, -1);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(fall.coeff(k) == Rat(stirling1_signed(n, k)));
      Rat s2(stirling2(n, k));
      if ((n - k) % 2 == 1) s2 = -s2;
      CHECK(inv.coeff(k) == s2);
    }
    CHECK(rft_apply(inv, 1) == p);
    if (n <= 2) CHECK(inv == fall);
  }
  // Counterexample pinning the difference: x^3.
  Poly x3(Basis::Power, {Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(rft_apply(x3, -1).coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(-3), Rat(1)});
  CHECK(fft_apply(x3).coeffs() == std::vector<Rat>{Rat(0), Rat(2), Rat(-3), Rat(1)});
}

TEST_CASE("inverse expands through Touchard polynomials") {
  // rft_apply(p, -1) must equal sum_k a_k (-1)^k T_k(-x) as a polynomial.
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 20; ++iter) {
    Poly p = random_poly(rng, 10);
    Poly expanded(Basis::Power);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (p.coeff(k) == 0) continue;
      // (-1)^k T_k(-x): flip odd coefficients of T_k, then the overall sign.
      Poly tk = touchard_poly(k);
      std::vector<Rat> flipped(tk.coeffs());
      for (std::size_t i = 0; i < flipped.size(); ++i)
        if ((k + i) % 2 == 1) flipped[i] = -flipped[i];
      expanded = poly_add(expanded, poly_scale(Poly(Basis::Power, flipped), p.coeff(k)));
    }
    CHECK(rft_apply(p, -1) == expanded);
  }
}

TEST_CASE("inverse series examples") {
  CHECK(close(rft_inverse_series(Poly(Basis::Power, {Rat(0), Rat(1)}), 2.0), 2.0, 1e-12));
  CHECK(close(rft_inverse_series(Poly(Basis::Power, {Rat(1)}), 3.0), 1.0, 1e-12));
  CHECK(close(rft_inverse_series(Poly(Basis::Power, {Rat(0), Rat(0), Rat(1)}), 1.5),
              0.75, 1e-12));
}

TEST_CASE("inverse series agrees with the exact inverse") {
  std::mt19937_64 rng(53);
  const double xs[] = {-3.0, -1.25, -0.5, 0.5, 1.75, 3.0};
  for (int iter = 0; iter < 20; ++iter) {
    Poly p = random_poly(rng, 8);
    Poly inverse = rft_apply(p, -1);
    for (double x : xs) {
      double series = rft_inverse_series(p, x);
      double exact = poly_eval(inverse, x);
      CHECK(close(series, exact, 1e-9));
    }
  }
}

TEST_CASE("inverse series reports non-convergence") {
  Poly p(Basis::Power, {Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK_THROWS_AS(rft_inverse_series(p, 30.0, 5), NoConvergence);
}

TEST_CASE("generalized Dobinski pair") {
  auto [lhs1, rhs1] = generalized_dobinski(Poly(Basis::Power, {Rat(1)}), 0.7, 2.0);
  CHECK(lhs1 == doctest::Approx(1.0));
  CHECK(rhs1 == doctest::Approx(1.0));

  Poly sq(Basis::Power, {Rat(0), Rat(0), Rat(1)});
  auto [lhs2, rhs2] = generalized_dobinski(sq, 0.0, 1.0);
  CHECK(lhs2 == doctest::Approx(2.0));  // Bell number 2
  CHECK(close(rhs2, lhs2, 1e-12));

  // Odd powers pick up the sign of P(-k): the pair still agrees.
  Poly cube(Basis::Power, {Rat(0), Rat(0), Rat(0), Rat(1)});
  auto [lhs3, rhs3] = generalized_dobinski(cube, 0.0, 1.0);
  CHECK(lhs3 == doctest::Approx(-5.0));  // -Bell number 3
  CHECK(close(rhs3, lhs3, 1e-12));
}

TEST_CASE("generalized Dobinski over a grid") {
  std::mt19937_64 rng(67);
  const double xs[] = {0.0, 1.0, -1.0, 2.0};
  const double ys[] = {0.5, 1.0, 3.0};
  for (int iter = 0; iter < 15; ++iter) {
    Poly p = random_poly(rng, 8);
    for (double x : xs)
      for (double y : ys) {
        auto [lhs, rhs] = generalized_dobinski(p, x, y);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
      }
  }
}

TEST_CASE("Dobinski series hits Touchard values") {
  CHECK(close(touchard_dobinski(2, 1.0), 2.0, 1e-10));
  CHECK(close(touchard_dobinski(0, 1.7), 1.0, 1e-10));
  CHECK(close(touchard_dobinski(3, 1.0), 5.0, 1e-10));
  for (std::size_t n = 0; n <= 12; ++n)
    for (double x : {0.5, 1.0, 2.0}) {
      double series = touchard_dobinski(n, x);
      double exact = poly_eval(touchard_poly(n), x);
      CHECK(close(series, exact, 1e-9));
    }
}

TEST_CASE("integer-order derivative form of the fft") {
  Poly sq(Basis::Power, {Rat(0), Rat(0), Rat(1)});
  CHECK(fft_integer_derivative(sq, 3) == 6);
  CHECK(fft_integer_derivative(Poly(Basis::Power, {Rat(1)}), 5) == 1);
  CHECK(fft_integer_derivative(Poly(Basis::Power, {Rat(0), Rat(1)}), 0) == 0);

  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 20; ++iter) {
    Poly p = random_poly(rng, 10);
    Poly f = fft_apply(p);
    for (std::size_t m = 0; m <= 12; ++m)
      CHECK(fft_integer_derivative(p, m) == poly_eval(f, Rat(static_cast<unsigned long>(m))));
  }
}

TEST_CASE("transform dispatch validates the kind") {
  Poly p(Basis::Power, {Rat(0), Rat(1)});
  CHECK(apply_transform({TransformOp::RFT, 2}, p) == rft_apply(p, 2));
  CHECK(apply_transform({TransformOp::FFT, 1}, p) == fft_apply(p));
  CHECK_THROWS_AS(apply_transform({TransformOp::FFT, 2}, p), std::invalid_argument);
  CHECK_THROWS_AS(rft_apply(Poly(Basis::Rising, {Rat(1)}), 1), BasisMismatch);
}
