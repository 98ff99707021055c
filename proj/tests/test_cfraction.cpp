#include "support.hpp"

#include <chordsl2/cfraction.hpp>
#include <chordsl2/genocchi.hpp>

using namespace chordsl2;

namespace {

const IntPoly x = IntPoly::x();

LevelWeights table(std::vector<IntPoly> v) {
  return [v = std::move(v)](std::size_t k) { return k < v.size() ? v[k] : IntPoly{}; };
}

} // namespace

TEST_CASE("trivial fractions") {
  const auto zero = [](std::size_t) { return IntPoly{}; };
  CHECK(jfraction_series({zero, zero, 5}) == PolySeries::one(5));
  CHECK(jfraction_series({zero, zero, 0}) == PolySeries::one(0));
  CHECK(sfraction_series(std::vector<IntPoly>(5), 5) == PolySeries::one(5));
  const PolySeries geo = sfraction_series({IntPoly{1}, {}, {}, {}, {}}, 5);
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(geo[n] == IntPoly{1});
  CHECK_THROWS_AS(sfraction_series({IntPoly{1}}, 3), InsufficientDepth);
}

TEST_CASE("Motzkin numbers") {
  const WeightPair u = unit_weights();
  const std::vector<long long> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323};
  const PolySeries s = jfraction_series({u.b, u.lam, 8});
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(motzkin_sum_dp(n, u.b, u.lam) == IntPoly{motzkin[n]});
    CHECK(motzkin_sum_paths(n, u.b, u.lam) == IntPoly{motzkin[n]});
    CHECK(s[n] == IntPoly{motzkin[n]});
  }
  std::size_t count = 0;
  for_each_motzkin_path(3, [&](const MotzkinPath &) { ++count; });
  CHECK(count == 4);
  CHECK_THROWS_AS(motzkin_sum_paths(13, u.b, u.lam), BoundExceeded);
}

TEST_CASE("complete-diagram weights") {
  const WeightPair w = complete_diagram_weights();
  CHECK(w.b(0) == x);
  CHECK(w.b(2) == IntPoly{-6, 1});
  CHECK(w.lam(1) == IntPoly{0, -1});
  CHECK(w.lam(3) == IntPoly{18, -9});
  CHECK(motzkin_sum_dp(0, w.b, w.lam) == IntPoly{1});
  CHECK(motzkin_sum_dp(1, w.b, w.lam) == x);
  const PolySeries s = jfraction_series({w.b, w.lam, 4});
  CHECK(s[2] == IntPoly{0, -1, 1});
  CHECK(s[3] == IntPoly{0, 2, -3, 1});
  CHECK(s[4] == IntPoly{0, -7, 13, -6, 1});
}

TEST_CASE("path weights") {
  const WeightPair w = complete_diagram_weights();
  const MotzkinPath p{Step::up, Step::horizontal, Step::down};
  CHECK(path_weight(p, w.b, w.lam) == w.b(1) * w.lam(1));
  CHECK_THROWS_AS(path_weight({Step::down, Step::up}, w.b, w.lam), PreconditionError);
  CHECK_THROWS_AS(path_weight({Step::up}, w.b, w.lam), PreconditionError);
}

TEST_CASE("fraction equals path sums for random polynomial weights") {
  auto g = testing::rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<IntPoly> b, lam;
    for (int k = 0; k <= 5; ++k) {
      b.push_back(testing::random_poly(g, 2, 4));
      lam.push_back(testing::random_poly(g, 2, 4));
    }
    const LevelWeights bw = table(b), lw = table(lam);
    const PolySeries s = jfraction_series({bw, lw, 8});
    for (std::size_t n = 0; n <= 8; ++n) {
      const IntPoly dp = motzkin_sum_dp(n, bw, lw);
      CHECK(s[n] == dp);
      CHECK(motzkin_sum_paths(n, bw, lw) == dp);
    }
  }
}

TEST_CASE("depth stability") {
  // the truncated fraction must not depend on levels it never reaches
  const WeightPair w = complete_diagram_weights();
  for (std::size_t N = 0; N <= 9; ++N) {
    const std::size_t used = (N + 1) / 2;
    auto cut = [&](std::size_t k) { return k <= used ? w.b(k) : IntPoly{1000}; };
    auto cut_lam = [&](std::size_t k) { return k <= used ? w.lam(k) : IntPoly{-1000}; };
    CHECK(jfraction_series({cut, cut_lam, N}) == jfraction_series({w.b, w.lam, N}));
    const PolySeries deep = jfraction_series({w.b, w.lam, N + 6});
    const PolySeries shallow = jfraction_series({w.b, w.lam, N});
    for (std::size_t n = 0; n <= N; ++n)
      CHECK(deep[n] == shallow[n]);
  }
}

TEST_CASE("S-fraction for the normalized median Genocchi numbers") {
  const auto h = normalized_median_sequence(9);
  for (std::size_t N = 0; N <= 8; ++N) {
    const PolySeries s = sfraction_series(hn_sfraction_pattern(N), N);
    for (std::size_t n = 0; n <= N; ++n)
      CHECK(s[n] == IntPoly::constant((n % 2 ? -1 : 1) * h[n]));
  }
  CHECK(hn_sfraction_pattern(5) ==
        std::vector<IntPoly>{IntPoly{-1}, IntPoly{-1}, IntPoly{-3}, IntPoly{-3}, IntPoly{-6}});
}

TEST_CASE("contraction of the median pattern") {
  std::vector<IntPoly> c{IntPoly{1}};
  const auto pattern = hn_sfraction_pattern(20);
  c.insert(c.end(), pattern.begin(), pattern.end());
  const Contraction z = dumont_zeng_contract(c, 6);
  const WeightPair target = hn_jfraction_weights();
  for (std::size_t k = 0; k < 6; ++k) {
    const auto kk = static_cast<long long>(k);
    CHECK(z.b[k] == IntPoly{-(kk + 1) * (kk + 2)});
    CHECK(z.b[k] == target.b(k));
    if (k >= 1) {
      CHECK(z.lam[k] == IntPoly::constant(binomial(kk + 1, 2) * binomial(kk + 2, 2)));
      CHECK(z.lam[k] == target.lam(k));
    }
  }
  // sum (-1)^n h_{n+1} t^n from the contracted J-fraction
  const auto h = normalized_median_sequence(10);
  const PolySeries j = jfraction_series({target.b, target.lam, 8});
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(j[n] == IntPoly::constant((n % 2 ? -1 : 1) * h[n + 1]));
  for (std::size_t N = 0; N <= 8; ++N)
    CHECK(z.expand(N) == sfraction_with_numerator(c, N));
}

TEST_CASE("contraction of random sequences") {
  auto g = testing::rng(29);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<IntPoly> c;
    for (int i = 0; i < 20; ++i)
      c.push_back(IntPoly{coef(g)});
    c[0] = IntPoly{trial % 2 ? -1 : 1};
    const Contraction z = dumont_zeng_contract(c, 6);
    for (std::size_t N = 0; N <= 8; ++N)
      CHECK(z.expand(N) == sfraction_with_numerator(c, N));
  }
}

TEST_CASE("contraction bookkeeping") {
  const std::vector<IntPoly> ones(9, IntPoly{1});
  const Contraction z = dumont_zeng_contract(ones, 4);
  CHECK(z.shift == IntPoly{1});
  CHECK(z.factor == IntPoly{1});
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(z.b[k] == IntPoly{2});
    if (k >= 1)
      CHECK(z.lam[k] == IntPoly{1});
  }
  CHECK_THROWS_AS(dumont_zeng_contract(ones, 5), InsufficientDepth);
  CHECK_THROWS_AS(z.expand(9), InsufficientDepth);
}

TEST_CASE("linear-term reduction") {
  const auto rows = linear_term_reduction_check(10);
  CHECK(rows.size() == 9);
  for (const auto &r : rows)
    CHECK(r.pass);
  CHECK(rows[0].lhs == IntPoly{0, -1});
  CHECK(rows[1].lhs == IntPoly{0, 2});
  CHECK(rows[2].lhs == IntPoly{0, -7});
  CHECK_THROWS_AS(linear_term_reduction_check(1), PreconditionError);
}
