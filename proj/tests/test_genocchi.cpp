#include "support.hpp"

#include <chordsl2/genocchi.hpp>

#include <set>

using namespace chordsl2;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

// Direct check of the defining inequalities, no pruning.
bool is_pd2(const Permutation &p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (pos % 2 == 1 ? p[i] <= pos : p[i] >= pos)
      return false;
  }
  return true;
}

bool is_normalized(const Permutation &p) {
  std::vector<int> inv(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  const int n = static_cast<int>(p.size()) / 2 - 1;
  for (int i = 1; i <= n; ++i)
    if (inv[static_cast<std::size_t>(2 * i)] > inv[static_cast<std::size_t>(2 * i + 1)])
      return false;
  return true;
}

} // namespace

TEST_CASE("Seidel triangle columns") {
  const SeidelTriangle g(9);
  const std::vector<std::vector<Integer>> expected{
      ints({1}),          ints({1}),           ints({1, 1}),
      ints({2, 1}),       ints({2, 3, 3}),     ints({8, 6, 3}),
      ints({8, 14, 17, 17}), ints({56, 48, 34, 17}), ints({56, 104, 138, 155, 155})};
  for (int i = 1; i <= 9; ++i) {
    std::vector<Integer> col;
    for (int j = 1; j <= SeidelTriangle::height(i); ++j)
      col.push_back(g(i, j));
    CHECK(col == expected[static_cast<std::size_t>(i - 1)]);
  }
  CHECK_THROWS_AS(g(3, 3), BadIndex);
  CHECK_THROWS_AS(g(10, 1), BadIndex);
  CHECK_THROWS_AS(SeidelTriangle(0), BadIndex);
}

TEST_CASE("Genocchi and median Genocchi sequences") {
  CHECK(genocchi_sequence(6) == ints({1, 1, 3, 17, 155, 2073}));
  CHECK(median_sequence(6) == ints({1, 2, 8, 56, 608, 9440}));
  CHECK(normalized_median_sequence(6) == ints({1, 1, 2, 7, 38, 295}));
  CHECK(genocchi_G(2) == 1);
  CHECK(median_H(4) == 608);
  CHECK(normalized_h(5) == 295);
  for (int n = 0; n <= 10; ++n)
    CHECK(median_H(n) % (Integer(1) << n) == 0);
  CHECK_THROWS_AS(genocchi_G(0), BadIndex);
  CHECK_THROWS_AS(median_H(-1), BadIndex);
}

TEST_CASE("Kreweras triangle") {
  const KrewerasIntTriangle h(6);
  CHECK(h.row(1) == ints({1}));
  CHECK(h.row(2) == ints({1, 1}));
  CHECK(h.row(3) == ints({2, 3, 2}));
  CHECK(h.row(4) == ints({7, 12, 12, 7}));
  CHECK(h.row(5) == ints({38, 69, 81, 69, 38}));
  CHECK(h.row(6) == ints({295, 552, 702, 702, 552, 295}));
  const KrewerasIntTriangle big(12);
  for (int n = 1; n <= 11; ++n) {
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(big(n, k) == big(n, n + 1 - k));
      sum += big(n, k);
    }
    CHECK(big(n + 1, 1) == sum);
    CHECK(sum == normalized_h(n));
  }
  CHECK(kreweras_h(4, 2) == 12);
  CHECK_THROWS_AS(kreweras_h(3, 4), BadIndex);
}

TEST_CASE("Dumont permutations, smallest case") {
  CHECK(enumerate_pd2(1) == std::vector<Permutation>{{2, 1, 4, 3}, {3, 1, 4, 2}});
  CHECK(enumerate_pd2n(1) == std::vector<Permutation>{{2, 1, 4, 3}});
  CHECK(count_pd2(0) == 1);
}

TEST_CASE("pruned search matches a filter over all permutations") {
  for (int n = 1; n <= 3; ++n) {
    Permutation p(static_cast<std::size_t>(2 * n + 2));
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] = static_cast<int>(i) + 1;
    std::vector<Permutation> all, normalized;
    do {
      if (is_pd2(p)) {
        all.push_back(p);
        if (is_normalized(p))
          normalized.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(enumerate_pd2(n) == all);
    CHECK(enumerate_pd2n(n) == normalized);
  }
}

TEST_CASE("permutation counts") {
  const KrewerasIntTriangle h(4);
  for (int n = 0; n <= 4; ++n)
    CHECK(Integer(count_pd2(n)) == median_H(n));
  CHECK(count_pd2(4) == 608);
  for (int n = 1; n <= 4; ++n) {
    const auto by_first = pd2n_counts_by_first(n);
    for (int k = 1; k <= n; ++k)
      CHECK(Integer(by_first[static_cast<std::size_t>(k - 1)]) == h(n, k));
  }
  CHECK_THROWS_AS(count_pd2(6), BoundExceeded);
  CHECK_THROWS_AS(pd2n_counts_by_first(0), BadIndex);
}
