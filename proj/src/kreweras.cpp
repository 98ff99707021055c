#include <chordsl2/kreweras.hpp>

#include <algorithm>
#include <string>

namespace chordsl2 {

KrewerasPolyTriangle::KrewerasPolyTriangle(int n_max) : n_max_(n_max) {
  if (n_max < 1)
    throw BadIndex("polynomial Kreweras triangle needs at least one row");
  const IntPoly x = IntPoly::x();
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  rows_[0] = {-x, IntPoly{1}};
  rows_[1] = {IntPoly{}, x};
  auto K = [&](int n, int k) -> IntPoly & {
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (int n = 2; n <= n_max; ++n) {
    rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    IntPoly first = (x - IntPoly{1}) * K(n - 1, 1);
    for (int i = 2; i <= n - 1; ++i)
      first -= K(n - 1, i);
    K(n, 1) = first;
    K(n, 2) = K(n, 1) * Integer(2) + K(n - 1, 1) - x * x * K(n - 2, 1);
    for (int k = 3; k <= n; ++k)
      K(n, k) = K(n, k - 1) * Integer(2) - K(n, k - 2) + K(n - 1, k - 1) + K(n - 1, k - 2) +
                x * K(n - 2, k - 2) * Integer(2);
  }
  for (int n = 1; n <= n_max; ++n)
    K(n, 0) = -(x * K(n, 1));
}

const IntPoly &KrewerasPolyTriangle::operator()(int n, int k) const {
  const int top = n == 0 ? 1 : n;
  if (n < 0 || n > n_max_ || k < 0 || k > top)
    throw BadIndex("K index (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<IntPoly> KrewerasPolyTriangle::row(int n) const {
  std::vector<IntPoly> out;
  for (int k = 1; k <= n; ++k)
    out.push_back((*this)(n, k));
  return out;
}

Integer a_coeff(const KrewerasPolyTriangle &K, int n, int k, int i) {
  if (i < 1 || i > n - 1)
    throw BadIndex("a(n,k,i) needs 1 <= i <= n-1");
  const IntPoly &p = K(n, k);
  Integer a = p.coeff(static_cast<std::size_t>(n - i));
  if (i % 2 == 1)
    a = -a;
  if (a <= 0)
    throw NonPositiveCoefficient("a(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(i) + ") = " + a.str() + " is not positive");
  return a;
}

Integer a12_closed(int n) {
  if (n < 1)
    throw BadIndex("a12_closed needs n >= 1");
  const Integer m = n;
  return (m - 2) * (m - 1) * m * (5 * m - 7) / 24;
}

Integer quadruple_oracle(int n) {
  if (n < 1)
    throw BadIndex("quadruple_oracle needs n >= 1");
  Integer count = 0;
  const int top = n - 1;
  for (int w = 1; w <= top; ++w)
    for (int x = 1; x <= top; ++x)
      for (int y = 1; y <= top; ++y)
        for (int z = 1; z <= top; ++z)
          if (w > x && x < y && y >= z)
            ++count;
  return count;
}

std::pair<IntPoly, IntPoly> K_diff_sides(const KrewerasPolyTriangle &K, int n, int j) {
  if (n < 2 || n > K.rows() || j < 1 || j > n)
    throw BadIndex("difference identity needs 2 <= n <= rows and 1 <= j <= n");
  const IntPoly x = IntPoly::x();
  const IntPoly lhs = K(n, j) - (j == 1 ? IntPoly{} : K(n, j - 1));
  IntPoly rhs;
  for (int i = 1; i <= j - 2; ++i)
    rhs += K(n - 1, i);
  for (int i = j; i <= n - 1; ++i)
    rhs -= K(n - 1, i);
  IntPoly inner;
  for (int i = 1; i <= j - 2; ++i)
    inner += K(n - 2, i);
  for (int i = std::max(j - 1, 0); i <= n - 2; ++i)
    inner -= K(n - 2, i);
  rhs += x * inner;
  return {lhs, rhs};
}

bool K_diff_identity_check(const KrewerasPolyTriangle &K, int n, int j) {
  const auto [lhs, rhs] = K_diff_sides(K, n, j);
  return lhs == rhs;
}

} // namespace chordsl2
