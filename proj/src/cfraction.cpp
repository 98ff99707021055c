#include <chordsl2/cfraction.hpp>

#include <string>

namespace chordsl2 {

namespace {

// Levels 0..depth, with the tail below level depth truncated to nothing.
PolySeries evaluate_jfraction(const LevelWeights &b, const LevelWeights &lam, std::size_t order,
                              std::size_t depth) {
  PolySeries below(order); // F_{depth+1} contribution, starts at 0
  bool have_below = false;
  for (std::size_t level = depth + 1; level-- > 0;) {
    PolySeries denom = PolySeries::one(order);
    if (order >= 1)
      denom[1] -= b(level);
    if (have_below && order >= 2)
      denom -= (below * lam(level + 1)).shifted().shifted();
    below = denom.recip();
    have_below = true;
  }
  return below;
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

} // namespace

PolySeries jfraction_series(const JFractionSpec &spec) {
  if (!spec.b || !spec.lam)
    throw PreconditionError("J-fraction needs both weight generators");
  return evaluate_jfraction(spec.b, spec.lam, spec.order, ceil_half(spec.order));
}

namespace {

void walk(std::size_t remaining, std::size_t height, MotzkinPath &path,
          const std::function<void(const MotzkinPath &)> &visit) {
  if (remaining == 0) {
    if (height == 0)
      visit(path);
    return;
  }
  if (height > remaining)
    return;
  path.push_back(Step::up);
  walk(remaining - 1, height + 1, path, visit);
  path.back() = Step::horizontal;
  walk(remaining - 1, height, path, visit);
  if (height > 0) {
    path.back() = Step::down;
    walk(remaining - 1, height - 1, path, visit);
  }
  path.pop_back();
}

} // namespace

void for_each_motzkin_path(std::size_t n, const std::function<void(const MotzkinPath &)> &visit,
                           std::size_t bound) {
  if (n > bound)
    throw BoundExceeded("Motzkin path enumeration bound " + std::to_string(bound) +
                        " exceeded by n = " + std::to_string(n));
  MotzkinPath path;
  path.reserve(n);
  walk(n, 0, path, visit);
}

IntPoly path_weight(const MotzkinPath &path, const LevelWeights &b, const LevelWeights &lam) {
  IntPoly w{1};
  std::size_t y = 0;
  for (Step s : path) {
    switch (s) {
    case Step::up:
      ++y;
      break;
    case Step::horizontal:
      w *= b(y);
      break;
    case Step::down:
      if (y == 0)
        throw PreconditionError("path goes below the axis");
      w *= lam(y);
      --y;
      break;
    }
  }
  if (y != 0)
    throw PreconditionError("path does not return to height 0");
  return w;
}

IntPoly motzkin_sum_dp(std::size_t n, const LevelWeights &b, const LevelWeights &lam) {
  const std::size_t top = n / 2;
  std::vector<IntPoly> bw(top + 1), lw(top + 1);
  for (std::size_t y = 0; y <= top; ++y) {
    bw[y] = b(y);
    if (y >= 1)
      lw[y] = lam(y);
  }
  // cur[y] = weighted paths of the current length ending at height y
  std::vector<IntPoly> cur(top + 2);
  cur[0] = IntPoly{1};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<IntPoly> next(top + 2);
    const std::size_t left = n - step - 1;
    for (std::size_t y = 0; y <= top; ++y) {
      if (cur[y].is_zero())
        continue;
      if (y + 1 <= left)
        next[y + 1] += cur[y];
      if (y <= left)
        next[y] += cur[y] * bw[y];
      if (y >= 1 && y - 1 <= left)
        next[y - 1] += cur[y] * lw[y];
    }
    cur = std::move(next);
  }
  return cur[0];
}

IntPoly motzkin_sum_paths(std::size_t n, const LevelWeights &b, const LevelWeights &lam,
                          std::size_t bound) {
  IntPoly sum;
  for_each_motzkin_path(n, [&](const MotzkinPath &p) { sum += path_weight(p, b, lam); }, bound);
  return sum;
}

WeightPair complete_diagram_weights() {
  return {[](std::size_t k) {
            const auto kk = static_cast<long long>(k);
            return IntPoly{-kk * (kk + 1), 1};
          },
          [](std::size_t k) {
            const auto kk = static_cast<long long>(k);
            IntPoly lam = IntPoly::monomial(Integer(-kk * kk), 1);
            return lam + IntPoly::constant(binomial(kk, 2) * binomial(kk + 1, 2));
          }};
}

WeightPair unit_weights() {
  return {[](std::size_t) { return IntPoly{1}; }, [](std::size_t) { return IntPoly{1}; }};
}

WeightPair hn_jfraction_weights() {
  return {[](std::size_t k) {
            const auto kk = static_cast<long long>(k);
            return IntPoly::constant(-(kk + 1) * (kk + 2));
          },
          [](std::size_t k) {
            const auto kk = static_cast<long long>(k);
            return IntPoly::constant(binomial(kk + 1, 2) * binomial(kk + 2, 2));
          }};
}

PolySeries sfraction_series(const std::vector<IntPoly> &c, std::size_t order) {
  if (c.size() < order)
    throw InsufficientDepth("S-fraction of order " + std::to_string(order) + " needs " +
                            std::to_string(order) + " terms, got " + std::to_string(c.size()));
  PolySeries value = PolySeries::one(order);
  for (std::size_t level = order; level-- > 0;) {
    PolySeries denom = PolySeries::one(order);
    denom -= (value * c[level]).shifted();
    value = denom.recip();
  }
  return value;
}

std::vector<IntPoly> hn_sfraction_pattern(std::size_t count) {
  std::vector<IntPoly> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(IntPoly::constant(-binomial(static_cast<long long>(i / 2 + 2), 2)));
  return out;
}

PolySeries Contraction::expand(std::size_t order) const {
  PolySeries out(order);
  out[0] = shift;
  if (order == 0)
    return out;
  const std::size_t inner = order - 1;
  const std::size_t depth = ceil_half(inner);
  if (b.size() < depth + 1)
    throw InsufficientDepth("contraction has " + std::to_string(b.size()) +
                            " levels, order " + std::to_string(order) + " needs " +
                            std::to_string(depth + 1));
  const PolySeries j = evaluate_jfraction([this](std::size_t k) { return b.at(k); },
                                          [this](std::size_t k) { return lam.at(k); }, inner,
                                          depth);
  for (std::size_t i = 0; i <= inner; ++i)
    out[i + 1] = factor * j[i];
  return out;
}

Contraction dumont_zeng_contract(const std::vector<IntPoly> &c, std::size_t levels) {
  if (levels == 0)
    throw PreconditionError("contraction needs at least one level");
  if (c.size() < 2 * levels + 1)
    throw InsufficientDepth("contraction to " + std::to_string(levels) + " levels needs " +
                            std::to_string(2 * levels + 1) + " terms, got " +
                            std::to_string(c.size()));
  Contraction out;
  out.shift = c[0];
  out.factor = c[0] * c[1];
  out.b.resize(levels);
  out.lam.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    out.b[k] = c[2 * k + 1] + c[2 * k + 2];
    if (k >= 1)
      out.lam[k] = c[2 * k] * c[2 * k + 1];
  }
  return out;
}

PolySeries sfraction_with_numerator(const std::vector<IntPoly> &c, std::size_t order) {
  if (c.empty())
    throw InsufficientDepth("missing numerator term");
  const std::vector<IntPoly> tail(c.begin() + 1, c.end());
  return sfraction_series(tail, order) * c[0];
}

std::vector<LinearReductionRow> linear_term_reduction_check(std::size_t n_max) {
  if (n_max < 2)
    throw PreconditionError("reduction check needs n_max >= 2");
  const WeightPair full = complete_diagram_weights();
  const WeightPair reduced = hn_jfraction_weights();
  std::vector<LinearReductionRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    LinearReductionRow row{n, motzkin_sum_dp(n, full.b, full.lam).mod_xpow(2),
                          -(IntPoly::x() * motzkin_sum_dp(n - 2, reduced.b, reduced.lam)),
                          false};
    row.pass = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace chordsl2
