#pragma once

#include <chordsl2/errors.hpp>

#include <json.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chordsl2 {

// A chord in tuple form: first < second, 0-based points.
struct Chord {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Chord &, const Chord &) = default;
};

enum class PointBase { zero, one };

// n chords on 2n points labelled 0..2n-1 counterclockwise. Chords are
// numbered 0..n-1 by increasing first endpoint (the tuple form).
class ChordDiagram {
public:
  ChordDiagram() = default; // the empty diagram, n = 0

  // Throws MalformedPairing unless mate is a fixed-point-free involution.
  static ChordDiagram from_mate(std::vector<int> mate);
  // Throws MalformedPairing if a point repeats, is out of range, or the
  // pairs do not cover [0, 2n).
  static ChordDiagram from_pairs(std::span<const std::pair<int, int>> pairs,
                                 PointBase base = PointBase::zero);

  int order() const noexcept { return static_cast<int>(mate_.size() / 2); }
  int points() const noexcept { return static_cast<int>(mate_.size()); }
  int mate(int p) const { return mate_.at(static_cast<std::size_t>(p)); }
  std::span<const int> mates() const noexcept { return mate_; }

  std::vector<Chord> chords() const;
  Chord chord(int index) const;
  int chord_index_of_point(int p) const;

  friend bool operator==(const ChordDiagram &, const ChordDiagram &) = default;

private:
  explicit ChordDiagram(std::vector<int> mate) : mate_(std::move(mate)) {}
  std::vector<int> mate_;
};

enum class KeyMode { rotation, dihedral };

// Lexicographically minimal mate sequence over the symmetry orbit.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string to_hex() const;
  static CanonicalKey from_hex(std::string_view hex); // throws ParseError

  friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey &k) const noexcept;
};

CanonicalKey canonical_key(const ChordDiagram &d, KeyMode mode = KeyMode::dihedral);

// p -> 2n-1-p
ChordDiagram reflect(const ChordDiagram &d);
// p -> p + shift (mod 2n)
ChordDiagram rotate(const ChordDiagram &d, int shift);

struct CrossingData {
  int chord = 0;
  std::vector<int> crossing;        // chord indices, increasing
  std::vector<int> inside_endpoint; // endpoint of crossing[i] strictly inside the chord's arc
  std::size_t count() const noexcept { return crossing.size(); }
};

// The arc of chord a runs counterclockwise from its first to its second
// endpoint; a chord crosses a iff exactly one endpoint lies strictly inside.
CrossingData crossing_data(const ChordDiagram &d, int a);
int crossing_count(const ChordDiagram &d, int a);
bool chords_cross(const ChordDiagram &d, int i, int j);

// Order-preserving compaction of the remaining points.
ChordDiagram delete_chord(const ChordDiagram &d, int a);
ChordDiagram delete_chords(const ChordDiagram &d, std::span<const int> chords);

// The two resolderings used by the weight recursion: chord a is deleted and
// crossing chords i, j (with inside endpoints u_i, u_j and outer endpoints
// v_i, v_j) become (u_i,u_j),(v_i,v_j) for the first diagram and
// (u_i,v_j),(u_j,v_i) for the second. Throws NotCrossing.
std::pair<ChordDiagram, ChordDiagram> surgery_split(const ChordDiagram &d, int a, int i, int j);

// Resolderings of chords s, t in place (order preserved) rooted at the
// first endpoints: (p_s,p_t),(p_s*,p_t*) and (p_s,p_t*),(p_t,p_s*).
std::pair<ChordDiagram, ChordDiagram> pair_resolutions(const ChordDiagram &d, int s, int t);

// Every chord crosses every other: chords (i, n+i).
ChordDiagram make_Dn(int n);
// Chord (1, k+2) crossing k chords of an otherwise complete block (1-based).
ChordDiagram make_A(int n, int k);
// As make_A with an extra chord (n+1, n+k+2) crossing the same k chords;
// make_B(n, n-1) is the complete diagram.
ChordDiagram make_B(int n, int k);

inline constexpr int default_enumeration_bound = 6;

// Double factorial (2n-1)!!, the number of perfect matchings of [2n].
std::uint64_t matching_count(int n);

// All perfect matchings of [2n] in lexicographic order of mate sequence.
void for_each_diagram(int n, const std::function<void(const ChordDiagram &)> &visit,
                      int bound = default_enumeration_bound);
std::vector<ChordDiagram> enumerate_diagrams(int n, int bound = default_enumeration_bound);

// One instance of the 4-term relation f(d[0]) - f(d[1]) = f(d[2]) - f(d[3]).
// An endpoint e of the moving chord sits just after / before endpoint u of
// the fixed chord (d[0], d[1]) or just before / after its other endpoint v
// (d[2], d[3]). moving[i] and fixed[i] are the chord indices in d[i].
struct FourTermQuadruple {
  std::array<ChordDiagram, 4> d;
  std::array<int, 4> moving{};
  std::array<int, 4> fixed{};
};

std::vector<FourTermQuadruple> four_term_quadruples(int n,
                                                    int bound = default_enumeration_bound);

// "1-3,2-5,4-6" (1-based). Throws ParseError / MalformedPairing.
ChordDiagram parse_diagram(std::string_view text);
std::string format_diagram(const ChordDiagram &d);

// JSON array of 1-based [p, p*] pairs.
nlohmann::json diagram_to_json(const ChordDiagram &d);
ChordDiagram diagram_from_json(const nlohmann::json &j);

} // namespace chordsl2
