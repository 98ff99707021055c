#include <chordsl2/genocchi.hpp>

#include <string>

namespace chordsl2 {

SeidelTriangle::SeidelTriangle(int i_max) : i_max_(i_max) {
  if (i_max < 1)
    throw BadIndex("Seidel triangle needs at least one column");
  start_.resize(static_cast<std::size_t>(i_max) + 2);
  std::size_t total = 0;
  for (int i = 1; i <= i_max; ++i) {
    start_[static_cast<std::size_t>(i)] = total;
    total += static_cast<std::size_t>(height(i));
  }
  cells_.resize(total);
  auto at = [&](int i, int j) -> Integer & {
    return cells_[start_[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j - 1)];
  };
  at(1, 1) = 1;
  for (int i = 2; i <= i_max; ++i) {
    const int h = height(i);
    if (i % 2 == 0) {
      // g(i, h+1) = 0, fill downwards
      Integer above = 0;
      for (int j = h; j >= 1; --j) {
        at(i, j) = at(i - 1, j) + above;
        above = at(i, j);
      }
    } else {
      Integer below = 0;
      for (int j = 1; j <= h; ++j) {
        const Integer left = j <= height(i - 1) ? at(i - 1, j) : Integer(0);
        at(i, j) = below + left;
        below = at(i, j);
      }
    }
  }
}

const Integer &SeidelTriangle::operator()(int i, int j) const {
  if (i < 1 || i > i_max_ || j < 1 || j > height(i))
    throw BadIndex("Seidel index (" + std::to_string(i) + "," + std::to_string(j) +
                   ") out of range");
  return cells_[start_[static_cast<std::size_t>(i)] + static_cast<std::size_t>(j - 1)];
}

Integer genocchi_G(int n) {
  if (n < 1)
    throw BadIndex("G_{2n} needs n >= 1");
  return SeidelTriangle(2 * n - 1)(2 * n - 1, n);
}

Integer median_H(int n) {
  if (n < 0)
    throw BadIndex("H_{2n+1} needs n >= 0");
  return SeidelTriangle(2 * n + 2)(2 * n + 2, 1);
}

namespace {

Integer normalize_median(const Integer &H, int n) {
  const Integer power = Integer(1) << n;
  if (H % power != 0)
    throw DivisibilityViolation("H_{2n+1} is not divisible by 2^" + std::to_string(n));
  return H / power;
}

} // namespace

Integer normalized_h(int n) { return normalize_median(median_H(n), n); }

std::vector<Integer> genocchi_sequence(int count) {
  std::vector<Integer> out;
  if (count <= 0)
    return out;
  const SeidelTriangle g(2 * count - 1);
  for (int n = 1; n <= count; ++n)
    out.push_back(g(2 * n - 1, n));
  return out;
}

std::vector<Integer> median_sequence(int count) {
  std::vector<Integer> out;
  if (count <= 0)
    return out;
  const SeidelTriangle g(2 * count);
  for (int n = 0; n < count; ++n)
    out.push_back(g(2 * n + 2, 1));
  return out;
}

std::vector<Integer> normalized_median_sequence(int count) {
  std::vector<Integer> out = median_sequence(count);
  for (int n = 0; n < count; ++n)
    out[static_cast<std::size_t>(n)] = normalize_median(out[static_cast<std::size_t>(n)], n);
  return out;
}

KrewerasIntTriangle::KrewerasIntTriangle(int n_max) : n_max_(n_max) {
  if (n_max < 1)
    throw BadIndex("Kreweras triangle needs at least one row");
  cells_.resize(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(n_max + 1) / 2);
  auto at = [&](int n, int k) -> Integer & {
    return cells_[static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 +
                  static_cast<std::size_t>(k - 1)];
  };
  at(1, 1) = 1;
  for (int n = 2; n <= n_max; ++n) {
    Integer sum = 0;
    for (int i = 1; i <= n - 1; ++i)
      sum += at(n - 1, i);
    at(n, 1) = sum;
    at(n, 2) = 2 * at(n, 1) - at(n - 1, 1);
    for (int k = 3; k <= n; ++k)
      at(n, k) = 2 * at(n, k - 1) - at(n, k - 2) - at(n - 1, k - 1) - at(n - 1, k - 2);
  }
}

const Integer &KrewerasIntTriangle::operator()(int n, int k) const {
  if (n < 1 || n > n_max_ || k < 1 || k > n)
    throw BadIndex("Kreweras index (" + std::to_string(n) + "," + std::to_string(k) +
                   ") out of range");
  return cells_[static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 +
                static_cast<std::size_t>(k - 1)];
}

std::vector<Integer> KrewerasIntTriangle::row(int n) const {
  std::vector<Integer> out;
  for (int k = 1; k <= n; ++k)
    out.push_back((*this)(n, k));
  return out;
}

Integer kreweras_h(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw BadIndex("kreweras_h needs 1 <= k <= n");
  return KrewerasIntTriangle(n)(n, k);
}

namespace {

struct DumontSearch {
  int size;
  bool normalized;
  const std::function<void(const Permutation &)> &visit;
  Permutation perm;
  std::vector<bool> used; // by value, 1-based

  void run(int pos) {
    if (pos > size) {
      visit(perm);
      return;
    }
    // odd positions map above themselves, even positions below
    const int lo = pos % 2 == 1 ? pos + 1 : 1;
    const int hi = pos % 2 == 1 ? size : pos - 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)])
        continue;
      // value 2i+1 (i in [n]) must come after value 2i
      if (normalized && v % 2 == 1 && v >= 3 && !used[static_cast<std::size_t>(v - 1)])
        continue;
      used[static_cast<std::size_t>(v)] = true;
      perm[static_cast<std::size_t>(pos - 1)] = v;
      run(pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

void dumont(int n, bool normalized, const std::function<void(const Permutation &)> &visit,
            int bound) {
  if (n < 0)
    throw BadIndex("n must be nonnegative");
  if (n > bound)
    throw BoundExceeded("permutation enumeration bound " + std::to_string(bound) +
                        " exceeded by n = " + std::to_string(n));
  const int size = 2 * n + 2;
  DumontSearch search{size, normalized, visit, Permutation(static_cast<std::size_t>(size)),
                      std::vector<bool>(static_cast<std::size_t>(size) + 1, false)};
  search.run(1);
}

} // namespace

void for_each_pd2(int n, const std::function<void(const Permutation &)> &visit, int bound) {
  dumont(n, false, visit, bound);
}

void for_each_pd2n(int n, const std::function<void(const Permutation &)> &visit, int bound) {
  dumont(n, true, visit, bound);
}

std::vector<Permutation> enumerate_pd2(int n, int bound) {
  std::vector<Permutation> out;
  for_each_pd2(n, [&](const Permutation &p) { out.push_back(p); }, bound);
  return out;
}

std::vector<Permutation> enumerate_pd2n(int n, int bound) {
  std::vector<Permutation> out;
  for_each_pd2n(n, [&](const Permutation &p) { out.push_back(p); }, bound);
  return out;
}

std::uint64_t count_pd2(int n, int bound) {
  std::uint64_t count = 0;
  for_each_pd2(n, [&](const Permutation &) { ++count; }, bound);
  return count;
}

std::vector<std::uint64_t> pd2n_counts_by_first(int n, int bound) {
  if (n < 1)
    throw BadIndex("refinement by sigma(1) needs n >= 1");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  for_each_pd2n(
      n,
      [&](const Permutation &p) {
        const int first = p.front();
        if (first % 2 != 0 || first < 2 || first > 2 * n)
          throw PreconditionError("normalized permutation with sigma(1) = " +
                                  std::to_string(first) + " outside {2, ..., 2n}");
        ++counts[static_cast<std::size_t>(first / 2 - 1)];
      },
      bound);
  return counts;
}

} // namespace chordsl2
