#include "facsum/core.hpp"

#include <cctype>
#include <cmath>

namespace facsum {

BigInt factorial(std::size_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rat rat_pow(const Rat& base, std::size_t e) {
  Rat out(1);
  Rat sq = base;
  std::size_t k = e;
  while (k > 0) {
    if (k & 1u) out *= sq;
    sq *= sq;
    k >>= 1u;
  }
  return out;
}

Rat rising_factorial(const Rat& x, std::size_t n) {
  Rat out(1);
  for (std::size_t i = 0; i < n; ++i) out *= x + static_cast<unsigned long>(i);
  return out;
}

double rising_factorial(double x, std::size_t n) {
  double out = 1.0;
  for (std::size_t i = 0; i < n; ++i) out *= x + static_cast<double>(i);
  return out;
}

Rat falling_factorial(const Rat& x, std::size_t n) {
  Rat out(1);
  for (std::size_t i = 0; i < n; ++i) out *= x - static_cast<unsigned long>(i);
  return out;
}

double falling_factorial(double x, std::size_t n) {
  double out = 1.0;
  for (std::size_t i = 0; i < n; ++i) out *= x - static_cast<double>(i);
  return out;
}

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Power: return "power";
    case Basis::Rising: return "rising";
    case Basis::Falling: return "falling";
  }
  return "?";
}

Poly::Poly(Basis basis, std::vector<Rat> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rat Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat poly_eval(const Poly& p, const Rat& x) {
  const auto& c = p.coeffs();
  if (c.empty()) return Rat(0);
  if (p.basis() == Basis::Power) {
    Rat acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
  }
  // Factorial bases: accumulate B_{k+1} = B_k * (x +/- k).
  Rat sum(0), basis_val(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) {
      Rat step = x;
      if (p.basis() == Basis::Rising)
        step += static_cast<unsigned long>(k - 1);
      else
        step -= static_cast<unsigned long>(k - 1);
      basis_val *= step;
    }
    sum += c[k] * basis_val;
  }
  return sum;
}

double poly_eval(const Poly& p, double x) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0.0;
  if (p.basis() == Basis::Power) {
    double acc = to_double(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + to_double(c[k]);
    return acc;
  }
  double sum = 0.0, basis_val = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) {
      double d = static_cast<double>(k - 1);
      basis_val *= p.basis() == Basis::Rising ? x + d : x - d;
    }
    sum += to_double(c[k]) * basis_val;
  }
  return sum;
}

Poly poly_add(const Poly& a, const Poly& b) {
  if (a.basis() != b.basis())
    throw BasisMismatch(std::string("cannot add ") + basis_name(a.basis()) +
                        " and " + basis_name(b.basis()) + " polynomials");
  std::vector<Rat> out(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return Poly(a.basis(), std::move(out));
}

Poly poly_scale(const Poly& p, const Rat& c) {
  std::vector<Rat> out = p.coeffs();
  for (auto& v : out) v *= c;
  return Poly(p.basis(), std::move(out));
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

Rat rat_from_string(const std::string& text) {
  // Accepted shape: [+-]digits[/digits].
  std::size_t i = 0;
  auto bad = [&] {
    return std::invalid_argument("not a rational literal: '" + text + "'");
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size()) throw bad();
  }
  // mpq_set_str takes '-' but not a leading '+'.
  Rat v(text[0] == '+' ? text.substr(1) : text);
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

double to_double(const Rat& v) { return v.get_d(); }

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value has no rational form");
  return Rat(v);
}

}  // namespace facsum
