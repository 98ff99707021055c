#include "support.hpp"

#include <chordsl2/weights.hpp>

#include <map>
#include <sstream>
#include <thread>

using namespace chordsl2;

namespace {

const IntPoly x = IntPoly::x();

IntPoly weight(const std::string &pairs) {
  WeightCache cache;
  return phi(parse_diagram(pairs), cache);
}

// Concatenation of two diagrams on disjoint arcs.
ChordDiagram juxtapose(const ChordDiagram &a, const ChordDiagram &b) {
  std::vector<int> mate(a.mates().begin(), a.mates().end());
  for (int m : b.mates())
    mate.push_back(m + a.points());
  return ChordDiagram::from_mate(std::move(mate));
}

// Intersection graph as a canonical string over all vertex relabelings.
std::string intersection_graph_form(const ChordDiagram &d) {
  const int n = d.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    perm[static_cast<std::size_t>(i)] = i;
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += chords_cross(d, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])
                 ? '1'
                 : '0';
    if (best.empty() || s < best)
      best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace

TEST_CASE("base cases") {
  CHECK(weight("") == IntPoly{1});
  CHECK(weight("1-2") == x);
  CHECK(weight("1-2,3-4") == x * x);
  CHECK(weight("1-4,2-3") == x * x);
  CHECK(weight("1-3,2-4") == (x - IntPoly{1}) * x);
}

TEST_CASE("worked three-chord example by every chord") {
  const ChordDiagram d = parse_diagram("1-4,2-6,3-5");
  const IntPoly expected = (x - IntPoly{1}) * (x - IntPoly{1}) * x;
  for (int a = 0; a < 3; ++a) {
    WeightCache cache;
    CHECK(phi_via_chord(d, a, cache) == expected);
  }
  WeightCache cache;
  // expansion along chord 1: (x-2) x^2 + x^2 - (x-1) x
  CHECK(delta(d, 0, 1, 2, cache) == x * x - (x - IntPoly{1}) * x);
  CHECK(IntPoly{-2, 1} * phi(delete_chord(d, 0), cache) + delta(d, 0, 1, 2, cache) == expected);
}

TEST_CASE("complete diagrams") {
  WeightCache cache;
  CHECK(phi(make_Dn(2), cache) == IntPoly{0, -1, 1});
  CHECK(phi(make_Dn(3), cache) == (x - IntPoly{2}) * (x - IntPoly{1}) * x);
  CHECK(phi(make_Dn(4), cache) == IntPoly{0, -7, 13, -6, 1});
  for (int a = 0; a < 3; ++a) {
    WeightCache fresh;
    CHECK(phi_via_chord(make_Dn(3), a, fresh) == (x - IntPoly{2}) * (x - IntPoly{1}) * x);
  }
  CHECK(delta(make_Dn(3), 0, 1, 2, cache).is_zero());
}

TEST_CASE("sub-leading coefficient counts crossing pairs") {
  WeightCache cache;
  for (int n = 1; n <= 5; ++n)
    for_each_diagram(n, [&](const ChordDiagram &d) {
      long long pairs = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          pairs += chords_cross(d, i, j);
      CHECK(phi(d, cache).coeff(static_cast<std::size_t>(n - 1)) == -pairs);
    });
}

TEST_CASE("multiplicative on juxtaposition") {
  WeightCache cache;
  const auto threes = enumerate_diagrams(3);
  const auto twos = enumerate_diagrams(2);
  for (const auto &a : threes)
    for (const auto &b : twos)
      CHECK(phi(juxtapose(a, b), cache) == phi(a, cache) * phi(b, cache));
}

TEST_CASE("depends only on the intersection graph") {
  WeightCache cache;
  for (int n = 2; n <= 5; ++n) {
    std::map<std::string, IntPoly> by_graph;
    for_each_diagram(n, [&](const ChordDiagram &d) {
      const IntPoly w = phi(d, cache);
      const auto [it, fresh] = by_graph.emplace(intersection_graph_form(d), w);
      if (!fresh)
        CHECK(it->second == w);
    });
  }
}

TEST_CASE("memoization and key modes do not change values") {
  WeightCache dihedral;
  WeightCache rotation(WeightOptions{KeyMode::rotation});
  WeightCache plain(WeightOptions{KeyMode::dihedral, false});
  for (int n = 0; n <= 4; ++n)
    for_each_diagram(n, [&](const ChordDiagram &d) {
      const IntPoly w = phi(d, dihedral);
      CHECK(phi(d, rotation) == w);
      CHECK(phi(d, plain) == w);
    });
  CHECK(plain.size() == 0);
  CHECK(dihedral.size() > rotation.size() / 2);
  CHECK(dihedral.hits() > 0);
}

TEST_CASE("threads share a cache") {
  WeightCache shared;
  const auto all = enumerate_diagrams(5);
  std::vector<IntPoly> serial;
  {
    WeightCache own;
    for (const auto &d : all)
      serial.push_back(phi(d, own));
  }
  std::vector<IntPoly> parallel(all.size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < all.size(); i += 4)
        parallel[i] = phi(all[i], shared);
    });
  for (auto &th : pool)
    th.join();
  CHECK(parallel == serial);
}

TEST_CASE("cache persistence") {
  WeightCache cache;
  for (int n = 1; n <= 4; ++n)
    (void)phi(make_Dn(n), cache);
  std::stringstream buf;
  cache.save(buf);
  const std::string saved = buf.str();

  WeightCache loaded;
  std::stringstream in(saved + "zz\t[\"1\"]\n0100\tnot json\n0001\t[\"1\"]\n0100\t[\"0\",\"1\",\"0\"]\n");
  const CacheLoadStats st = loaded.load(in);
  CHECK(st.accepted == cache.size());
  CHECK(st.rejected == 4);
  std::stringstream again;
  loaded.save(again);
  CHECK(again.str() == saved);
  WeightCache empty;
  CHECK(phi(make_Dn(4), loaded) == phi(make_Dn(4), empty));
}

TEST_CASE("parameter rescalings") {
  WeightCache cache;
  CHECK(phi_sl2(make_Dn(2), cache) == IntPoly{0, -2, 1});
  CHECK(phi_lambda(make_Dn(2), 2, cache) == phi(make_Dn(2), cache));
  CHECK(phi_lambda(make_Dn(3), 1, cache) == phi_sl2(make_Dn(3), cache));
  CHECK_THROWS_AS(phi_lambda(make_Dn(2), 0, cache), PreconditionError);
}

TEST_CASE("region sums") {
  WeightCache cache;
  const ChordDiagram d = make_Dn(4);
  CHECK(t_sum(d, 1, 1, cache).is_zero());
  CHECK(t_sum(d, 0, 1, cache) == pair_delta(d, 0, 1, cache));
  CHECK(r_sum(d, 0, 0, 1, 1, cache) == pair_delta(d, 0, 1, cache));
  CHECK_THROWS_AS(t_sum(d, 2, 1, cache), BadRange);
  CHECK_THROWS_AS(r_sum(d, 0, 1, 1, 2, cache), BadRange);
  CHECK_THROWS_AS(t_sum(d, 0, 4, cache), BadRange);
}

TEST_CASE("family weights and sentinels") {
  WeightCache cache;
  CHECK(family_weight(Family::D, 0, 0, cache) == IntPoly{1});
  CHECK(family_weight(Family::A, 3, -1, cache).is_zero());
  CHECK(family_weight(Family::B, 3, -1, cache) == -(x * family_weight(Family::D, 3, 0, cache)));
  for (int n = 1; n <= 6; ++n) {
    const IntPoly Dm1 = family_weight(Family::D, n - 1, 0, cache);
    CHECK(family_weight(Family::A, n, 0, cache) == x * Dm1);
    if (n >= 2)
      CHECK(family_weight(Family::A, n, 1, cache) == (x - IntPoly{1}) * Dm1);
    if (n >= 2) {
      const IntPoly Dm2 = family_weight(Family::D, n - 2, 0, cache);
      CHECK(family_weight(Family::B, n, 0, cache) == x * x * Dm2);
      if (n >= 3)
        CHECK(family_weight(Family::B, n, 1, cache) == (x - IntPoly{1}) * (x - IntPoly{1}) * Dm2);
      else
        CHECK(family_weight(Family::B, 2, 1, cache) == family_weight(Family::D, 2, 0, cache));
    }
  }
  CHECK_THROWS_AS(family_weight(Family::A, 3, 3, cache), BadIndex);
  CHECK_THROWS_AS(family_weight(Family::B, 3, -2, cache), BadIndex);
}

TEST_CASE("sign-flip fault injection changes weights") {
  WeightCache flipped(WeightOptions{KeyMode::dihedral, true, true});
  WeightCache good;
  CHECK(phi(make_Dn(3), flipped) == phi(make_Dn(3), good)); // delta vanishes on D_3
  CHECK(phi(make_Dn(4), flipped) != phi(make_Dn(4), good));
}
