#include <chordsl2/diagram.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace chordsl2 {

namespace {

// Re-labels the points that survive (keep[p]) in circular order.
ChordDiagram compact(const std::vector<int> &mate, const std::vector<bool> &keep) {
  std::vector<int> relabel(mate.size(), -1);
  int next = 0;
  for (std::size_t p = 0; p < mate.size(); ++p)
    if (keep[p])
      relabel[p] = next++;
  std::vector<int> out(static_cast<std::size_t>(next));
  for (std::size_t p = 0; p < mate.size(); ++p)
    if (keep[p])
      out[static_cast<std::size_t>(relabel[p])] = relabel[static_cast<std::size_t>(mate[p])];
  return ChordDiagram::from_mate(std::move(out));
}

void check_chord(const ChordDiagram &d, int a) {
  if (a < 0 || a >= d.order())
    throw BadIndex("chord index " + std::to_string(a) + " out of range for order " +
                   std::to_string(d.order()));
}

bool strictly_inside(int p, const Chord &c) { return c.first < p && p < c.second; }

} // namespace

ChordDiagram ChordDiagram::from_mate(std::vector<int> mate) {
  if (mate.size() % 2 != 0)
    throw MalformedPairing("odd number of points");
  const int size = static_cast<int>(mate.size());
  for (int p = 0; p < size; ++p) {
    const int q = mate[static_cast<std::size_t>(p)];
    if (q < 0 || q >= size || q == p || mate[static_cast<std::size_t>(q)] != p)
      throw MalformedPairing("mate sequence is not a fixed-point-free involution at point " +
                             std::to_string(p));
  }
  return ChordDiagram(std::move(mate));
}

ChordDiagram ChordDiagram::from_pairs(std::span<const std::pair<int, int>> pairs,
                                      PointBase base) {
  const int offset = base == PointBase::one ? 1 : 0;
  const int size = 2 * static_cast<int>(pairs.size());
  std::vector<int> mate(static_cast<std::size_t>(size), -1);
  for (auto [p, q] : pairs) {
    p -= offset;
    q -= offset;
    if (p < 0 || q < 0 || p >= size || q >= size)
      throw MalformedPairing("point out of range");
    if (p == q || mate[static_cast<std::size_t>(p)] != -1 ||
        mate[static_cast<std::size_t>(q)] != -1)
      throw MalformedPairing("point " + std::to_string((p == q ? p : q) + offset) + " repeats");
    mate[static_cast<std::size_t>(p)] = q;
    mate[static_cast<std::size_t>(q)] = p;
  }
  return from_mate(std::move(mate));
}

std::vector<Chord> ChordDiagram::chords() const {
  std::vector<Chord> out;
  out.reserve(mate_.size() / 2);
  for (int p = 0; p < points(); ++p)
    if (mate_[static_cast<std::size_t>(p)] > p)
      out.push_back({p, mate_[static_cast<std::size_t>(p)]});
  return out;
}

Chord ChordDiagram::chord(int index) const {
  int seen = 0;
  for (int p = 0; p < points(); ++p) {
    if (mate_[static_cast<std::size_t>(p)] > p) {
      if (seen == index)
        return {p, mate_[static_cast<std::size_t>(p)]};
      ++seen;
    }
  }
  throw BadIndex("chord index " + std::to_string(index) + " out of range");
}

int ChordDiagram::chord_index_of_point(int p) const {
  const int first = std::min(p, mate(p));
  int index = 0;
  for (int q = 0; q < first; ++q)
    if (mate_[static_cast<std::size_t>(q)] > q)
      ++index;
  return index;
}

std::string CanonicalKey::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xF]);
  }
  return s;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0)
    throw ParseError("hex key has odd length");
  CanonicalKey k;
  k.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, value, 16);
    if (ec != std::errc{} || ptr != hex.data() + i + 2)
      throw ParseError("bad hex digit in key");
    k.bytes.push_back(static_cast<std::uint8_t>(value));
  }
  return k;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey &k) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (auto b : k.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

CanonicalKey canonical_key(const ChordDiagram &d, KeyMode mode) {
  const int size = d.points();
  CanonicalKey best;
  if (size == 0)
    return best;
  if (size > 255)
    throw PreconditionError("diagram too large for a byte key");
  std::vector<std::uint8_t> candidate(static_cast<std::size_t>(size));
  bool have = false;
  auto consider = [&](std::span<const int> mate) {
    for (int r = 0; r < size; ++r) {
      for (int p = 0; p < size; ++p) {
        const int q = mate[static_cast<std::size_t>((p + r) % size)];
        candidate[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>((q - r + size) % size);
      }
      if (!have || candidate < best.bytes) {
        best.bytes = candidate;
        have = true;
      }
    }
  };
  consider(d.mates());
  if (mode == KeyMode::dihedral) {
    const ChordDiagram mirrored = reflect(d);
    consider(mirrored.mates());
  }
  return best;
}

ChordDiagram reflect(const ChordDiagram &d) {
  const int size = d.points();
  std::vector<int> mate(static_cast<std::size_t>(size));
  for (int p = 0; p < size; ++p)
    mate[static_cast<std::size_t>(size - 1 - p)] = size - 1 - d.mate(p);
  return ChordDiagram::from_mate(std::move(mate));
}

ChordDiagram rotate(const ChordDiagram &d, int shift) {
  const int size = d.points();
  if (size == 0)
    return d;
  shift = ((shift % size) + size) % size;
  std::vector<int> mate(static_cast<std::size_t>(size));
  for (int p = 0; p < size; ++p)
    mate[static_cast<std::size_t>((p + shift) % size)] = (d.mate(p) + shift) % size;
  return ChordDiagram::from_mate(std::move(mate));
}

CrossingData crossing_data(const ChordDiagram &d, int a) {
  check_chord(d, a);
  const auto chords = d.chords();
  const Chord &arc = chords[static_cast<std::size_t>(a)];
  CrossingData out;
  out.chord = a;
  for (int j = 0; j < d.order(); ++j) {
    if (j == a)
      continue;
    const Chord &c = chords[static_cast<std::size_t>(j)];
    const bool in_first = strictly_inside(c.first, arc);
    const bool in_second = strictly_inside(c.second, arc);
    if (in_first != in_second) {
      out.crossing.push_back(j);
      out.inside_endpoint.push_back(in_first ? c.first : c.second);
    }
  }
  return out;
}

int crossing_count(const ChordDiagram &d, int a) {
  check_chord(d, a);
  const auto chords = d.chords();
  const Chord &arc = chords[static_cast<std::size_t>(a)];
  int k = 0;
  for (const Chord &c : chords)
    if (strictly_inside(c.first, arc) != strictly_inside(c.second, arc))
      ++k;
  return k;
}

bool chords_cross(const ChordDiagram &d, int i, int j) {
  check_chord(d, i);
  check_chord(d, j);
  if (i == j)
    return false;
  const Chord a = d.chord(i), c = d.chord(j);
  return strictly_inside(c.first, a) != strictly_inside(c.second, a);
}

ChordDiagram delete_chord(const ChordDiagram &d, int a) {
  const int chords[] = {a};
  return delete_chords(d, chords);
}

ChordDiagram delete_chords(const ChordDiagram &d, std::span<const int> chords) {
  std::vector<bool> keep(static_cast<std::size_t>(d.points()), true);
  for (int a : chords) {
    check_chord(d, a);
    const Chord c = d.chord(a);
    keep[static_cast<std::size_t>(c.first)] = false;
    keep[static_cast<std::size_t>(c.second)] = false;
  }
  const auto mates = d.mates();
  return compact(std::vector<int>(mates.begin(), mates.end()), keep);
}

std::pair<ChordDiagram, ChordDiagram> surgery_split(const ChordDiagram &d, int a, int i, int j) {
  if (i == j)
    throw NotCrossing("surgery needs two distinct crossing chords");
  const CrossingData cd = crossing_data(d, a);
  auto inside_of = [&](int chord) {
    const auto it = std::find(cd.crossing.begin(), cd.crossing.end(), chord);
    if (it == cd.crossing.end())
      throw NotCrossing("chord " + std::to_string(chord) + " does not cross chord " +
                        std::to_string(a));
    return cd.inside_endpoint[static_cast<std::size_t>(it - cd.crossing.begin())];
  };
  const int ui = inside_of(i), uj = inside_of(j);
  const int vi = d.mate(ui), vj = d.mate(uj);

  const Chord ca = d.chord(a);
  std::vector<bool> keep(static_cast<std::size_t>(d.points()), true);
  keep[static_cast<std::size_t>(ca.first)] = false;
  keep[static_cast<std::size_t>(ca.second)] = false;

  const auto mates = d.mates();
  std::vector<int> first(mates.begin(), mates.end());
  std::vector<int> second = first;
  auto join = [](std::vector<int> &m, int p, int q) {
    m[static_cast<std::size_t>(p)] = q;
    m[static_cast<std::size_t>(q)] = p;
  };
  join(first, ui, uj);
  join(first, vi, vj);
  join(second, ui, vj);
  join(second, uj, vi);
  return {compact(first, keep), compact(second, keep)};
}

std::pair<ChordDiagram, ChordDiagram> pair_resolutions(const ChordDiagram &d, int s, int t) {
  check_chord(d, s);
  check_chord(d, t);
  if (s == t)
    throw BadIndex("pair resolution needs two distinct chords");
  const Chord cs = d.chord(s), ct = d.chord(t);
  const auto mates = d.mates();
  std::vector<int> first(mates.begin(), mates.end());
  std::vector<int> second = first;
  auto join = [](std::vector<int> &m, int p, int q) {
    m[static_cast<std::size_t>(p)] = q;
    m[static_cast<std::size_t>(q)] = p;
  };
  join(first, cs.first, ct.first);
  join(first, cs.second, ct.second);
  join(second, cs.first, ct.second);
  join(second, ct.first, cs.second);
  return {ChordDiagram::from_mate(std::move(first)), ChordDiagram::from_mate(std::move(second))};
}

ChordDiagram make_Dn(int n) {
  if (n < 0)
    throw BadIndex("order must be nonnegative");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    pairs.emplace_back(i, n + i);
  return ChordDiagram::from_pairs(pairs, PointBase::one);
}

ChordDiagram make_A(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    throw BadIndex("make_A needs n >= 1 and k in [0, n-1]");
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(1, k + 2);
  for (int m = 2; m <= k + 1; ++m)
    pairs.emplace_back(m, n + m);
  for (int m = k + 2; m <= n; ++m)
    pairs.emplace_back(m + 1, n + m);
  return ChordDiagram::from_pairs(pairs, PointBase::one);
}

ChordDiagram make_B(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    throw BadIndex("make_B needs n >= 1 and k in [0, n-1]");
  if (k == n - 1)
    return make_Dn(n);
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(1, k + 2);
  for (int m = 2; m <= k + 1; ++m)
    pairs.emplace_back(m, n + m);
  for (int m = k + 2; m <= n - 1; ++m)
    pairs.emplace_back(m + 1, n + m + 1);
  pairs.emplace_back(n + 1, n + k + 2);
  return ChordDiagram::from_pairs(pairs, PointBase::one);
}

std::uint64_t matching_count(int n) {
  std::uint64_t r = 1;
  for (int i = 2 * n - 1; i > 1; i -= 2)
    r *= static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void enumerate_rec(std::vector<int> &mate, const std::function<void(const ChordDiagram &)> &visit) {
  const auto it = std::find(mate.begin(), mate.end(), -1);
  if (it == mate.end()) {
    visit(ChordDiagram::from_mate(mate));
    return;
  }
  const int p = static_cast<int>(it - mate.begin());
  for (int q = p + 1; q < static_cast<int>(mate.size()); ++q) {
    if (mate[static_cast<std::size_t>(q)] != -1)
      continue;
    mate[static_cast<std::size_t>(p)] = q;
    mate[static_cast<std::size_t>(q)] = p;
    enumerate_rec(mate, visit);
    mate[static_cast<std::size_t>(p)] = -1;
    mate[static_cast<std::size_t>(q)] = -1;
  }
}

void check_bound(int n, int bound) {
  if (n < 0)
    throw BadIndex("order must be nonnegative");
  if (n > bound)
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(bound));
}

} // namespace

void for_each_diagram(int n, const std::function<void(const ChordDiagram &)> &visit, int bound) {
  check_bound(n, bound);
  std::vector<int> mate(static_cast<std::size_t>(2 * n), -1);
  enumerate_rec(mate, visit);
}

std::vector<ChordDiagram> enumerate_diagrams(int n, int bound) {
  std::vector<ChordDiagram> out;
  out.reserve(static_cast<std::size_t>(matching_count(n)));
  for_each_diagram(n, [&](const ChordDiagram &d) { out.push_back(d); }, bound);
  return out;
}

std::vector<FourTermQuadruple> four_term_quadruples(int n, int bound) {
  check_bound(n, bound);
  if (n < 2)
    throw PreconditionError("4-term relations need at least two chords");
  std::vector<FourTermQuadruple> out;
  for_each_diagram(
      n,
      [&](const ChordDiagram &d) {
        const auto chords = d.chords();
        const int size = d.points();
        for (int m = 0; m < n; ++m) {
          for (int f = 0; f < n; ++f) {
            if (f == m)
              continue;
            const Chord moving = chords[static_cast<std::size_t>(m)];
            const Chord fixed = chords[static_cast<std::size_t>(f)];
            for (int e : {moving.first, moving.second}) {
              std::vector<int> ring; // old labels in circular order, e removed
              for (int p = 0; p < size; ++p)
                if (p != e)
                  ring.push_back(p);
              const auto pos_u = std::find(ring.begin(), ring.end(), fixed.first) - ring.begin();
              const auto pos_v = std::find(ring.begin(), ring.end(), fixed.second) - ring.begin();
              FourTermQuadruple quad;
              const std::array<std::ptrdiff_t, 4> insert_at{pos_u + 1, pos_u, pos_v, pos_v + 1};
              for (std::size_t slot = 0; slot < 4; ++slot) {
                std::vector<int> order = ring;
                order.insert(order.begin() + insert_at[slot], e);
                std::vector<int> position(static_cast<std::size_t>(size));
                for (int idx = 0; idx < size; ++idx)
                  position[static_cast<std::size_t>(order[static_cast<std::size_t>(idx)])] = idx;
                std::vector<int> mate(static_cast<std::size_t>(size));
                for (int p = 0; p < size; ++p)
                  mate[static_cast<std::size_t>(position[static_cast<std::size_t>(p)])] =
                      position[static_cast<std::size_t>(d.mate(p))];
                quad.d[slot] = ChordDiagram::from_mate(std::move(mate));
                quad.moving[slot] =
                    quad.d[slot].chord_index_of_point(position[static_cast<std::size_t>(e)]);
                quad.fixed[slot] = quad.d[slot].chord_index_of_point(
                    position[static_cast<std::size_t>(fixed.first)]);
              }
              out.push_back(std::move(quad));
            }
          }
        }
      },
      bound);
  return out;
}

ChordDiagram parse_diagram(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("bad point label '" + std::string(s) + "'");
    return v;
  };
  text = trim(text);
  if (text.empty())
    return ChordDiagram{};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos)
      comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos)
      throw ParseError("chord '" + std::string(item) + "' is not of the form p-q");
    pairs.emplace_back(number(item.substr(0, dash)), number(item.substr(dash + 1)));
    start = comma + 1;
  }
  return ChordDiagram::from_pairs(pairs, PointBase::one);
}

std::string format_diagram(const ChordDiagram &d) {
  std::ostringstream os;
  bool first = true;
  for (const Chord &c : d.chords()) {
    if (!first)
      os << ',';
    first = false;
    os << c.first + 1 << '-' << c.second + 1;
  }
  return os.str();
}

nlohmann::json diagram_to_json(const ChordDiagram &d) {
  nlohmann::json j = nlohmann::json::array();
  for (const Chord &c : d.chords())
    j.push_back({c.first + 1, c.second + 1});
  return j;
}

ChordDiagram diagram_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw ParseError("diagram JSON must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto &item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("diagram JSON entries must be [p, q] integer pairs");
    pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return ChordDiagram::from_pairs(pairs, PointBase::one);
}

} // namespace chordsl2
