#pragma once

#include <chordsl2/diagram.hpp>
#include <chordsl2/poly.hpp>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace chordsl2 {

struct WeightOptions {
  KeyMode key_mode = KeyMode::dihedral;
  bool memoize = true;
  // Fault injection for negative controls: subtracts instead of adding the
  // surgery differences in the recursion. Never set outside tests.
  bool negate_delta = false;
};

struct CacheLoadStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

// Memo table from canonical keys to weights. Lookups and inserts may come
// from several threads; concurrent writers always store identical values.
class WeightCache {
public:
  explicit WeightCache(WeightOptions options = {});
  WeightCache(const WeightCache &) = delete;
  WeightCache &operator=(const WeightCache &) = delete;

  const WeightOptions &options() const noexcept { return options_; }

  std::optional<IntPoly> lookup(const CanonicalKey &key) const;
  void insert(const CanonicalKey &key, IntPoly value);
  void clear();

  std::size_t size() const;
  std::uint64_t hits() const noexcept { return hits_.load(); }
  std::uint64_t misses() const noexcept { return misses_.load(); }

  // One record per line: hex(key bytes) TAB json(decimal coefficient array).
  // Records are written in key order.
  void save(std::ostream &out) const;
  // Lines whose key is not a valid mate sequence or whose polynomial is
  // malformed are skipped and counted as rejected.
  CacheLoadStats load(std::istream &in);
  void save_file(const std::filesystem::path &path) const;
  CacheLoadStats load_file(const std::filesystem::path &path);

private:
  WeightOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, IntPoly, CanonicalKeyHash> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

// Chord used by phi at each level: fewest crossings, then smallest first
// endpoint.
int choose_chord(const ChordDiagram &d);

// The sl2 weight (parameter 2): phi(empty) = 1, phi(one chord) = x, and
//   phi(D) = (x - k) phi(D - a) + sum_{i<j crossing a} [phi(D1_ij) - phi(D2_ij)]
// with k the crossing count of a and (D1_ij, D2_ij) = surgery_split(D, a, i, j).
IntPoly phi(const ChordDiagram &d, WeightCache &cache);
// Same recursion, but the top level expands along chord a.
IntPoly phi_via_chord(const ChordDiagram &d, int a, WeightCache &cache);

// lam^n phi_lam(x / lam) = phi_sl2(x), phi = phi_2.
IntPoly phi_sl2(const ChordDiagram &d, WeightCache &cache);
IntPoly phi_lambda(const ChordDiagram &d, const Integer &lam, WeightCache &cache);

// Recursion-level difference for crossing chords i, j of chord a.
IntPoly delta(const ChordDiagram &d, int a, int i, int j, WeightCache &cache);
// Difference of pair_resolutions(d, s, t) on an ambient diagram.
IntPoly pair_delta(const ChordDiagram &d, int s, int t, WeightCache &cache);

// Region sums of pair_delta, chord indices 0-based and inclusive:
//   T(lo, hi)      = sum_{lo <= s < t <= hi} pair_delta(s, t)
//   R(a, b, c, dd) = sum_{s in [a,b]} sum_{t in [c,dd]} pair_delta(s, t)
// Throw BadRange unless lo <= hi (resp. a <= b < c <= dd) inside [0, n).
IntPoly t_sum(const ChordDiagram &d, int lo, int hi, WeightCache &cache);
IntPoly r_sum(const ChordDiagram &d, int a, int b, int c, int dd, WeightCache &cache);

enum class Family { D, A, B };

// D_n, A_{n,k}, B_{n,k} with the sentinels A_{n,-1} = 0, B_{n,-1} = -x D_n.
// D_0 = 1; k is ignored for D. Throws BadIndex outside k in [-1, n-1].
IntPoly family_weight(Family kind, int n, int k, WeightCache &cache);

} // namespace chordsl2
