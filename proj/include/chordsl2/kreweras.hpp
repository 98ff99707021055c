#pragma once

#include <chordsl2/poly.hpp>

#include <utility>
#include <vector>

namespace chordsl2 {

// Polynomial Kreweras triangle K(n,k), 1 <= k <= n, from K(1,1) = x,
// K(0,1) = 1 and for n >= 2, k >= 3:
//   K(n,1) = (x-1) K(n-1,1) - K(n-1,2) - ... - K(n-1,n-1)
//   K(n,2) = 2K(n,1) + K(n-1,1) - x^2 K(n-2,1)
//   K(n,k) = 2K(n,k-1) - K(n,k-2) + K(n-1,k-1) + K(n-1,k-2) + 2x K(n-2,k-2)
// The boundary column K(n,0) = -x K(n,1) is available for every n >= 0.
class KrewerasPolyTriangle {
public:
  explicit KrewerasPolyTriangle(int n_max);

  int rows() const noexcept { return n_max_; }
  // k in [0, n] for n >= 1; (0,0) and (0,1) for the top boundary.
  const IntPoly &operator()(int n, int k) const;
  std::vector<IntPoly> row(int n) const; // K(n,1..n)

private:
  int n_max_;
  std::vector<std::vector<IntPoly>> rows_; // rows_[n][k], k = 0..max(n,1)
};

// Positive integer a with K(n,k) = x^n + sum_i (-1)^i a(n,k,i) x^(n-i).
// i ranges over [1, n-1]; i = n-1 is the linear coefficient, i.e. h(n,k).
// Throws NonPositiveCoefficient if the sign pattern breaks, BadIndex on range.
Integer a_coeff(const KrewerasPolyTriangle &K, int n, int k, int i);

// (n-2)(n-1)n(5n-7)/24
Integer a12_closed(int n);
// #{(w,x,y,z) in [n-1]^4 : w > x, x < y, y >= z}, by direct enumeration.
Integer quadruple_oracle(int n);

// Checks, for 2 <= n <= rows() and j in [1, n],
//   K(n,j) - K(n,j-1) = sum_{i=1}^{j-2} K(n-1,i) - sum_{i=j}^{n-1} K(n-1,i)
//                     + x (sum_{i=1}^{j-2} K(n-2,i) - sum_{i=j-1}^{n-2} K(n-2,i))
// where K(n-2,0) = -x K(n-2,1) inside the sums, and the left-hand K(n,0)
// is 0 at j = 1 (as for the integer triangle). Throws BadIndex otherwise.
bool K_diff_identity_check(const KrewerasPolyTriangle &K, int n, int j);
// Both sides of the identity above.
std::pair<IntPoly, IntPoly> K_diff_sides(const KrewerasPolyTriangle &K, int n, int j);

} // namespace chordsl2
