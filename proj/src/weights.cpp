#include <chordsl2/weights.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>

namespace chordsl2 {

WeightCache::WeightCache(WeightOptions options) : options_(options) {}

std::optional<IntPoly> WeightCache::lookup(const CanonicalKey &key) const {
  std::shared_lock lock(mutex_);
  const auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void WeightCache::insert(const CanonicalKey &key, IntPoly value) {
  std::unique_lock lock(mutex_);
  table_.insert_or_assign(key, std::move(value));
}

void WeightCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
  misses_ = 0;
}

std::size_t WeightCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void WeightCache::save(std::ostream &out) const {
  std::vector<std::pair<CanonicalKey, IntPoly>> records;
  {
    std::shared_lock lock(mutex_);
    records.assign(table_.begin(), table_.end());
  }
  std::sort(records.begin(), records.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  for (const auto &[key, value] : records)
    out << key.to_hex() << '\t' << nlohmann::json(to_decimal_strings(value)).dump() << '\n';
}

CacheLoadStats WeightCache::load(std::istream &in) {
  CacheLoadStats stats;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    try {
      const auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw ParseError("missing tab separator");
      CanonicalKey key = CanonicalKey::from_hex(std::string_view(line).substr(0, tab));
      std::vector<int> mate(key.bytes.begin(), key.bytes.end());
      (void)ChordDiagram::from_mate(std::move(mate));
      const auto body = nlohmann::json::parse(line.substr(tab + 1));
      if (!body.is_array() ||
          !std::all_of(body.begin(), body.end(), [](const auto &v) { return v.is_string(); }))
        throw ParseError("coefficients must be an array of decimal strings");
      IntPoly value = from_decimal_strings(body.get<std::vector<std::string>>());
      insert(key, std::move(value));
      ++stats.accepted;
    } catch (const Error &) {
      ++stats.rejected;
    } catch (const nlohmann::json::exception &) {
      ++stats.rejected;
    }
  }
  return stats;
}

void WeightCache::save_file(const std::filesystem::path &path) const {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write cache file " + path.string());
  save(out);
}

CacheLoadStats WeightCache::load_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot read cache file " + path.string());
  return load(in);
}

int choose_chord(const ChordDiagram &d) {
  if (d.order() == 0)
    throw PreconditionError("empty diagram has no chord");
  int best = 0;
  int best_k = crossing_count(d, 0);
  for (int a = 1; a < d.order() && best_k > 0; ++a) {
    const int k = crossing_count(d, a);
    if (k < best_k) {
      best = a;
      best_k = k;
    }
  }
  return best;
}

namespace {

IntPoly expand_along(const ChordDiagram &d, int a, WeightCache &cache) {
  const CrossingData cd = crossing_data(d, a);
  const auto k = static_cast<long long>(cd.count());
  IntPoly result = IntPoly{-k, 1} * phi(delete_chord(d, a), cache);
  for (std::size_t p = 0; p < cd.crossing.size(); ++p) {
    for (std::size_t q = p + 1; q < cd.crossing.size(); ++q) {
      const IntPoly diff = delta(d, a, cd.crossing[p], cd.crossing[q], cache);
      if (cache.options().negate_delta)
        result -= diff;
      else
        result += diff;
    }
  }
  return result;
}

} // namespace

IntPoly phi(const ChordDiagram &d, WeightCache &cache) {
  if (d.order() == 0)
    return IntPoly{1};
  if (d.order() == 1)
    return IntPoly::x();
  if (!cache.options().memoize)
    return expand_along(d, choose_chord(d), cache);
  CanonicalKey key = canonical_key(d, cache.options().key_mode);
  if (auto hit = cache.lookup(key))
    return std::move(*hit);
  IntPoly value = expand_along(d, choose_chord(d), cache);
  cache.insert(key, value);
  return value;
}

IntPoly phi_via_chord(const ChordDiagram &d, int a, WeightCache &cache) {
  if (a < 0 || a >= d.order())
    throw BadIndex("chord index out of range");
  if (d.order() == 1)
    return IntPoly::x();
  return expand_along(d, a, cache);
}

IntPoly phi_sl2(const ChordDiagram &d, WeightCache &cache) { return rescale(phi(d, cache), 2); }

IntPoly phi_lambda(const ChordDiagram &d, const Integer &lam, WeightCache &cache) {
  if (lam == 0)
    throw PreconditionError("lambda must be nonzero");
  // phi_lam(y) = lam^-n phi_sl2(lam y) = 2^n lam^-n phi(lam y / 2)
  return rescale(phi(d, cache), 2, lam);
}

IntPoly delta(const ChordDiagram &d, int a, int i, int j, WeightCache &cache) {
  auto [first, second] = surgery_split(d, a, i, j);
  return phi(first, cache) - phi(second, cache);
}

IntPoly pair_delta(const ChordDiagram &d, int s, int t, WeightCache &cache) {
  auto [first, second] = pair_resolutions(d, s, t);
  return phi(first, cache) - phi(second, cache);
}

IntPoly t_sum(const ChordDiagram &d, int lo, int hi, WeightCache &cache) {
  if (lo < 0 || hi >= d.order() || lo > hi)
    throw BadRange("T needs 0 <= lo <= hi < n");
  IntPoly sum;
  for (int s = lo; s <= hi; ++s)
    for (int t = s + 1; t <= hi; ++t)
      sum += pair_delta(d, s, t, cache);
  return sum;
}

IntPoly r_sum(const ChordDiagram &d, int a, int b, int c, int dd, WeightCache &cache) {
  if (a < 0 || a > b || b >= c || c > dd || dd >= d.order())
    throw BadRange("R needs 0 <= a <= b < c <= d < n");
  IntPoly sum;
  for (int s = a; s <= b; ++s)
    for (int t = c; t <= dd; ++t)
      sum += pair_delta(d, s, t, cache);
  return sum;
}

IntPoly family_weight(Family kind, int n, int k, WeightCache &cache) {
  if (n < 0)
    throw BadIndex("order must be nonnegative");
  if (kind == Family::D)
    return phi(make_Dn(n), cache);
  if (n < 1 || k < -1 || k > n - 1)
    throw BadIndex("family index k=" + std::to_string(k) + " outside [-1, " +
                   std::to_string(n - 1) + "]");
  if (kind == Family::A)
    return k == -1 ? IntPoly{} : phi(make_A(n, k), cache);
  if (k == -1)
    return -(IntPoly::x() * phi(make_Dn(n), cache));
  return phi(make_B(n, k), cache);
}

} // namespace chordsl2
