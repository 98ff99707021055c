#include "support.hpp"

#include <chordsl2/diagram.hpp>

#include <algorithm>
#include <set>

using namespace chordsl2;

namespace {

ChordDiagram pairs1(std::vector<std::pair<int, int>> p) {
  return ChordDiagram::from_pairs(p, PointBase::one);
}

// Orbit-minimal mate vector computed by brute force over the symmetry
// group, independent of canonical_key.
std::vector<int> orbit_min(const ChordDiagram &d, bool reflections) {
  const int N = d.points();
  std::vector<int> best(d.mates().begin(), d.mates().end());
  for (int r = 0; r < N; ++r)
    for (int flip = 0; flip <= (reflections ? 1 : 0); ++flip) {
      auto map = [&](int p) { return flip ? (N - 1 - ((p + r) % N)) : (p + r) % N; };
      std::vector<int> m(static_cast<std::size_t>(N));
      for (int p = 0; p < N; ++p)
        m[static_cast<std::size_t>(map(p))] = map(d.mate(p));
      best = std::min(best, m);
    }
  return best;
}

} // namespace

TEST_CASE("construction and validation") {
  const ChordDiagram d = pairs1({{1, 4}, {2, 6}, {3, 5}});
  CHECK(d.order() == 3);
  CHECK(d.mate(0) == 3);
  CHECK(d.chord(1).first == 1);
  CHECK(d.chord(1).second == 5);
  CHECK(d.chord_index_of_point(4) == 2);
  CHECK_THROWS_AS(pairs1({{1, 2}, {2, 3}}), MalformedPairing);
  CHECK_THROWS_AS(pairs1({{1, 5}, {2, 3}}), MalformedPairing);
  CHECK_THROWS_AS(ChordDiagram::from_mate({1, 0, 2}), MalformedPairing);
  CHECK_THROWS_AS(ChordDiagram::from_mate({0, 1}), MalformedPairing);
  CHECK_THROWS_AS(ChordDiagram::from_mate({1, 2, 0, 3}), MalformedPairing);
}

TEST_CASE("text and json forms") {
  const ChordDiagram d = parse_diagram("1-4,2-5,3-6");
  CHECK(d == make_Dn(3));
  CHECK(format_diagram(d) == "1-4,2-5,3-6");
  CHECK(parse_diagram(" 4-1, 2-5 ,6-3") == d);
  CHECK(diagram_from_json(diagram_to_json(d)) == d);
  CHECK_THROWS_AS(parse_diagram("1-4,2"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1-a"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1-2,2-3"), MalformedPairing);
  CHECK(parse_diagram("").order() == 0);
}

TEST_CASE("crossings") {
  const ChordDiagram d = pairs1({{1, 4}, {2, 6}, {3, 5}});
  CHECK(crossing_count(d, 0) == 2);
  CHECK(crossing_count(d, 1) == 1);
  CHECK(crossing_count(d, 2) == 1);
  CHECK(chords_cross(d, 0, 2));
  CHECK_FALSE(chords_cross(d, 1, 2));
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a < n; ++a)
      CHECK(crossing_count(make_Dn(n), a) == n - 1);
}

TEST_CASE("deletion and surgery") {
  const ChordDiagram d = pairs1({{1, 4}, {2, 6}, {3, 5}});
  CHECK(delete_chord(d, 0) == pairs1({{1, 4}, {2, 3}}));
  const std::vector<int> both{0, 2};
  CHECK(delete_chords(d, both) == pairs1({{1, 2}}));
  const auto [first, second] = surgery_split(d, 0, 1, 2);
  CHECK(first.order() == 2);
  CHECK(second.order() == 2);
  // one resoldering nests, the other crosses
  CHECK(crossing_count(first, 0) + crossing_count(second, 0) == 1);
  CHECK_THROWS_AS(surgery_split(pairs1({{1, 2}, {3, 6}, {4, 5}}), 0, 1, 2), NotCrossing);
}

TEST_CASE("canonical keys") {
  const ChordDiagram a = parse_diagram("1-3,2-5,4-6");
  const ChordDiagram b = parse_diagram("1-5,2-4,3-6");
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a, KeyMode::rotation) == canonical_key(rotate(a, 3), KeyMode::rotation));
  CHECK(CanonicalKey::from_hex(canonical_key(a).to_hex()) == canonical_key(a));
  CHECK_THROWS_AS(CanonicalKey::from_hex("0g"), ParseError);
  CHECK_THROWS_AS(CanonicalKey::from_hex("012"), ParseError);

  auto g = testing::rng(3);
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_diagrams(n);
    for (int trial = 0; trial < 20; ++trial) {
      const ChordDiagram &d = all[g() % all.size()];
      const int s = static_cast<int>(g() % static_cast<unsigned>(2 * n));
      CHECK(canonical_key(rotate(d, s)) == canonical_key(d));
      CHECK(canonical_key(reflect(d)) == canonical_key(d));
      CHECK(canonical_key(rotate(d, s), KeyMode::rotation) ==
            canonical_key(d, KeyMode::rotation));
    }
  }
}

TEST_CASE("keys agree with brute-force orbit minima") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> dihedral, cyclic;
    std::set<CanonicalKey> dk, rk;
    for_each_diagram(n, [&](const ChordDiagram &d) {
      dihedral.insert(orbit_min(d, true));
      cyclic.insert(orbit_min(d, false));
      dk.insert(canonical_key(d));
      rk.insert(canonical_key(d, KeyMode::rotation));
    });
    CHECK(dk.size() == dihedral.size());
    CHECK(rk.size() == cyclic.size());
    if (n == 3) {
      CHECK(dihedral.size() == 5);
      CHECK(cyclic.size() == 5);
    }
    if (n == 4) {
      CHECK(dihedral.size() == 17);
      CHECK(cyclic.size() == 18);
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(matching_count(0) == 1);
  CHECK(matching_count(5) == 945);
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate_diagrams(n);
    CHECK(all.size() == matching_count(n));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto &l, const auto &r) {
      return std::lexicographical_compare(l.mates().begin(), l.mates().end(), r.mates().begin(),
                                          r.mates().end());
    }));
  }
  CHECK_THROWS_AS(enumerate_diagrams(7), BoundExceeded);
}

TEST_CASE("rotation and reflection are involutive where expected") {
  const ChordDiagram d = parse_diagram("1-4,2-6,3-5");
  CHECK(reflect(reflect(d)) == d);
  CHECK(rotate(d, 6) == d);
  CHECK(rotate(rotate(d, 2), 4) == d);
}

TEST_CASE("families") {
  CHECK(make_Dn(0).order() == 0);
  CHECK(make_Dn(2) == parse_diagram("1-3,2-4"));
  for (int n = 1; n <= 6; ++n) {
    CHECK(make_A(n, n - 1) == make_Dn(n));
    CHECK(make_B(n, n - 1) == make_Dn(n));
    for (int k = 0; k <= n - 1; ++k) {
      const ChordDiagram a = make_A(n, k);
      const ChordDiagram b = make_B(n, k);
      CHECK(a.order() == n);
      CHECK(b.order() == n);
      CHECK(crossing_count(a, 0) == k);
      CHECK(crossing_count(b, 0) == k);
      CHECK(crossing_count(b, n - 1) == k);
    }
  }
  CHECK_THROWS_AS(make_A(3, 3), BadIndex);
  CHECK_THROWS_AS(make_B(3, -1), BadIndex);
}

TEST_CASE("four-term quadruples") {
  const auto quads = four_term_quadruples(2);
  CHECK(!quads.empty());
  for (const auto &q : four_term_quadruples(3))
    for (int s = 0; s < 4; ++s) {
      CHECK(q.d[static_cast<std::size_t>(s)].order() == 3);
      CHECK(q.moving[static_cast<std::size_t>(s)] != q.fixed[static_cast<std::size_t>(s)]);
    }
  CHECK_THROWS_AS(four_term_quadruples(1), PreconditionError);
}
