#pragma once

#include <chordsl2/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chordsl2 {

using Integer = boost::multiprecision::cpp_int;

// Dense univariate polynomial over Z, coefficients stored little-endian by
// degree. The zero polynomial has no coefficients; otherwise the last stored
// coefficient is nonzero.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const Integer &c);
  static IntPoly x();
  static IntPoly monomial(const Integer &c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Throws PreconditionError on the zero polynomial.
  std::size_t degree() const;
  const Integer &leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  // Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Integer eval(const Integer &at) const;

  // Remainder modulo x^k (truncation).
  IntPoly mod_xpow(std::size_t k) const;

  IntPoly &operator+=(const IntPoly &rhs);
  IntPoly &operator-=(const IntPoly &rhs);
  IntPoly &operator*=(const IntPoly &rhs);
  IntPoly &operator*=(const Integer &scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
  friend IntPoly operator*(IntPoly a, const Integer &s) { return a *= s; }
  friend IntPoly operator*(const Integer &s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly &, const IntPoly &) = default;

private:
  void normalize();
  std::vector<Integer> coeffs_;
};

// q(x) = lam^n p(x / lam) with n = deg p and lam = num/den, so the
// coefficient of x^i is p_i * lam^(n-i). Throws NonIntegerResult when a
// coefficient is not integral.
IntPoly rescale(const IntPoly &p, const Integer &num, const Integer &den = 1);

// "x^4 - 6*x^3 + 13*x^2 - 7*x"; zero renders as "0".
std::string to_string(const IntPoly &p);

// Little-endian decimal strings, e.g. ["0","-7","13","-6","1"].
std::vector<std::string> to_decimal_strings(const IntPoly &p);
// Accepts the form written by to_decimal_strings. Throws ParseError on bad
// digits and on a trailing zero coefficient (non-normalized input).
IntPoly from_decimal_strings(const std::vector<std::string> &coeffs);

Integer binomial(long long n, long long k);

// Truncated power series in t with polynomial coefficients, known modulo
// t^(order+1).
class PolySeries {
public:
  explicit PolySeries(std::size_t order);
  PolySeries(std::size_t order, std::vector<IntPoly> terms);

  static PolySeries one(std::size_t order);

  std::size_t order() const noexcept { return terms_.size() - 1; }
  const IntPoly &operator[](std::size_t j) const { return terms_.at(j); }
  IntPoly &operator[](std::size_t j) { return terms_.at(j); }
  const std::vector<IntPoly> &terms() const noexcept { return terms_; }

  // Multiplication by t (drops the term that falls off the truncation).
  PolySeries shifted() const;

  PolySeries &operator+=(const PolySeries &rhs);
  PolySeries &operator-=(const PolySeries &rhs);
  friend PolySeries operator+(PolySeries a, const PolySeries &b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries &b) { return a -= b; }
  friend PolySeries operator*(const PolySeries &a, const PolySeries &b);
  friend PolySeries operator*(PolySeries a, const IntPoly &c);

  // Multiplicative inverse; the constant term must be 1 or -1.
  PolySeries recip() const;

  friend bool operator==(const PolySeries &, const PolySeries &) = default;

private:
  std::vector<IntPoly> terms_;
};

} // namespace chordsl2
