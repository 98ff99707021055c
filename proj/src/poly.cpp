#include <chordsl2/poly.hpp>

#include <algorithm>
#include <sstream>

namespace chordsl2 {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs)
    coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer &c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const Integer &c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
  if (is_zero())
    throw PreconditionError("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

const Integer &IntPoly::leading() const {
  if (is_zero())
    throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPoly::eval(const Integer &at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

IntPoly IntPoly::mod_xpow(std::size_t k) const {
  std::vector<Integer> v(coeffs_.begin(), coeffs_.begin() + std::min(k, coeffs_.size()));
  return IntPoly(std::move(v));
}

IntPoly &IntPoly::operator+=(const IntPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly &IntPoly::operator*=(const IntPoly &rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly &IntPoly::operator*=(const Integer &scalar) {
  for (auto &c : coeffs_)
    c *= scalar;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

IntPoly rescale(const IntPoly &p, const Integer &num, const Integer &den) {
  if (p.is_zero())
    throw PreconditionError("rescale of the zero polynomial");
  if (num == 0 || den == 0)
    throw PreconditionError("rescale factor must be nonzero");
  const std::size_t n = p.degree();
  std::vector<Integer> out(n + 1);
  Integer num_pow = 1, den_pow = 1;
  // walk from the leading coefficient down so the powers grow with n - i
  for (std::size_t step = 0; step <= n; ++step) {
    const std::size_t i = n - step;
    Integer value = p.coeff(i) * num_pow;
    if (value % den_pow != 0) {
      std::ostringstream msg;
      msg << "coefficient of x^" << i << " is not an integer after rescaling by " << num << "/"
          << den;
      throw NonIntegerResult(msg.str());
    }
    out[i] = value / den_pow;
    num_pow *= num;
    den_pow *= den;
  }
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t step = 0; step < p.size(); ++step) {
    const std::size_t i = p.size() - 1 - step;
    const Integer &c = p.coeffs()[i];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << "*";
    os << "x";
    if (i > 1)
      os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> to_decimal_strings(const IntPoly &p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto &c : p.coeffs())
    out.push_back(c.str());
  return out;
}

IntPoly from_decimal_strings(const std::vector<std::string> &coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (const auto &s : coeffs) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + start, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("not a decimal integer: '" + s + "'");
    v.emplace_back(s);
  }
  if (!v.empty() && v.back() == 0)
    throw ParseError("coefficient array is not normalized (trailing zero)");
  return IntPoly(std::move(v));
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

PolySeries::PolySeries(std::size_t order) : terms_(order + 1) {}

PolySeries::PolySeries(std::size_t order, std::vector<IntPoly> terms) : terms_(std::move(terms)) {
  terms_.resize(order + 1);
}

PolySeries PolySeries::one(std::size_t order) {
  PolySeries s(order);
  s.terms_[0] = IntPoly{1};
  return s;
}

PolySeries PolySeries::shifted() const {
  PolySeries s(order());
  for (std::size_t j = 1; j < terms_.size(); ++j)
    s.terms_[j] = terms_[j - 1];
  return s;
}

PolySeries &PolySeries::operator+=(const PolySeries &rhs) {
  if (rhs.order() != order())
    throw OrderMismatch("series orders differ");
  for (std::size_t j = 0; j < terms_.size(); ++j)
    terms_[j] += rhs.terms_[j];
  return *this;
}

PolySeries &PolySeries::operator-=(const PolySeries &rhs) {
  if (rhs.order() != order())
    throw OrderMismatch("series orders differ");
  for (std::size_t j = 0; j < terms_.size(); ++j)
    terms_[j] -= rhs.terms_[j];
  return *this;
}

PolySeries operator*(const PolySeries &a, const PolySeries &b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ");
  PolySeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.terms_[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j)
      out.terms_[i + j] += a.terms_[i] * b.terms_[j];
  }
  return out;
}

PolySeries operator*(PolySeries a, const IntPoly &c) {
  for (auto &t : a.terms_)
    t *= c;
  return a;
}

PolySeries PolySeries::recip() const {
  const IntPoly &c0 = terms_[0];
  if (!(c0 == IntPoly{1} || c0 == IntPoly{-1}))
    throw NonUnitConstantTerm("constant term must be 1 or -1, got " + to_string(c0));
  const Integer unit = c0.coeff(0); // its own inverse
  PolySeries out(order());
  out.terms_[0] = c0;
  for (std::size_t j = 1; j <= order(); ++j) {
    IntPoly acc;
    for (std::size_t i = 1; i <= j; ++i)
      acc += terms_[i] * out.terms_[j - i];
    out.terms_[j] = acc * Integer(-unit);
  }
  return out;
}

} // namespace chordsl2
