#pragma once

#include <chordsl2/poly.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace chordsl2 {

// Boustrophedon array g(i, j), 1 <= j <= ceil(i/2), with g(1,1) = 1 and
//   g(2p, j)   = g(2p-1, j) + g(2p, j+1),   g(2p, p+1) = 0
//   g(2p+1, j) = g(2p+1, j-1) + g(2p, j),   g(2p+1, 0) = 0
class SeidelTriangle {
public:
  explicit SeidelTriangle(int i_max);

  int columns() const noexcept { return i_max_; }
  static int height(int i) noexcept { return (i + 1) / 2; }
  // Throws BadIndex outside the stored range.
  const Integer &operator()(int i, int j) const;

private:
  int i_max_;
  std::vector<Integer> cells_; // column-major ragged
  std::vector<std::size_t> start_;
};

// G_{2n} = g(2n-1, n), n >= 1.
Integer genocchi_G(int n);
// H_{2n+1} = g(2n+2, 1), n >= 0.
Integer median_H(int n);
// h_n = H_{2n+1} / 2^n; throws DivisibilityViolation if 2^n does not divide.
Integer normalized_h(int n);

std::vector<Integer> genocchi_sequence(int count);        // G_2, G_4, ...
std::vector<Integer> median_sequence(int count);          // H_1, H_3, ...
std::vector<Integer> normalized_median_sequence(int count); // h_0, h_1, ...

// h(n, k), 1 <= k <= n, from h(1,1) = 1 and
//   h(n,1) = sum_i h(n-1,i),  h(n,2) = 2h(n,1) - h(n-1,1),
//   h(n,k) = 2h(n,k-1) - h(n,k-2) - h(n-1,k-1) - h(n-1,k-2).
class KrewerasIntTriangle {
public:
  explicit KrewerasIntTriangle(int n_max);

  int rows() const noexcept { return n_max_; }
  const Integer &operator()(int n, int k) const;
  std::vector<Integer> row(int n) const;

private:
  int n_max_;
  std::vector<Integer> cells_; // row-major ragged, row n starts at n(n-1)/2
};

Integer kreweras_h(int n, int k);

// One-line notation, 1-based values: perm[p-1] = sigma(p).
using Permutation = std::vector<int>;

inline constexpr int default_permutation_bound = 5;

// Dumont permutations of the second kind on [2n+2]: sigma(2i-1) > 2i-1 and
// sigma(2i) < 2i. Visited in lexicographic order by backtracking.
void for_each_pd2(int n, const std::function<void(const Permutation &)> &visit,
                  int bound = default_permutation_bound);
// Those with, in addition, sigma^-1(2i) < sigma^-1(2i+1) for i in [n].
void for_each_pd2n(int n, const std::function<void(const Permutation &)> &visit,
                   int bound = default_permutation_bound);

std::vector<Permutation> enumerate_pd2(int n, int bound = default_permutation_bound);
std::vector<Permutation> enumerate_pd2n(int n, int bound = default_permutation_bound);
std::uint64_t count_pd2(int n, int bound = default_permutation_bound);

// counts[k-1] = #{sigma in PD2N_n : sigma(1) = 2k}, k in [n].
std::vector<std::uint64_t> pd2n_counts_by_first(int n, int bound = default_permutation_bound);

} // namespace chordsl2
