#include <chordsl2/identities.hpp>

#include <chordsl2/cfraction.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <thread>

namespace chordsl2 {

using nlohmann::json;

namespace {

using MaybeWitness = std::optional<Witness>;

template <class Body>
CheckReport timed(std::string name, json params, Body &&body) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (MaybeWitness w = body()) {
      r.pass = false;
      r.witness = std::move(w);
    }
  } catch (const std::exception &e) {
    r.pass = false;
    r.witness = Witness{r.params, {}, {}, e.what()};
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
  return r;
}

MaybeWitness compare(json params, const IntPoly &lhs, const IntPoly &rhs,
                     std::string note = {}) {
  if (lhs == rhs)
    return std::nullopt;
  return Witness{std::move(params), lhs, rhs, std::move(note)};
}

MaybeWitness compare(json params, const Integer &lhs, const Integer &rhs, std::string note = {}) {
  return compare(std::move(params), IntPoly::constant(lhs), IntPoly::constant(rhs),
                 std::move(note));
}

Integer sign_pow(int e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

void need(bool ok, const char *what) {
  if (!ok)
    throw BadIndex(what);
}

json poly_json(const IntPoly &p) { return to_decimal_strings(p); }

} // namespace

json to_json(const CheckReport &r) {
  json out{{"name", r.name},
           {"params", r.params},
           {"status", r.pass ? "pass" : "fail"},
           {"millis", r.millis}};
  if (r.witness) {
    json w{{"params", r.witness->params},
           {"lhs", to_string(r.witness->lhs)},
           {"rhs", to_string(r.witness->rhs)},
           {"lhs_coefficients", poly_json(r.witness->lhs)},
           {"rhs_coefficients", poly_json(r.witness->rhs)}};
    if (!r.witness->note.empty())
      w["note"] = r.witness->note;
    out["witness"] = std::move(w);
  }
  return out;
}

json to_json(const std::vector<CheckReport> &reports) {
  json out = json::array();
  for (const auto &r : reports)
    out.push_back(to_json(r));
  return out;
}

IdentityChecker::IdentityChecker(WeightCache &cache, int table_rows)
    : cache_(cache), rows_(std::max(table_rows, 1)), K_(rows_), h_(rows_) {}

CheckReport IdentityChecker::check_A_difference(int n, int k) const {
  need(n >= 1 && k >= 0 && k <= n - 1, "A difference needs n >= 1, k in [0, n-1]");
  need(n - 1 <= rows_, "triangle too small");
  return timed("A_difference", {{"n", n}, {"k", k}}, [&] {
    return compare({{"n", n}, {"k", k}},
                   family_weight(Family::A, n, k - 1, cache_) -
                       family_weight(Family::A, n, k, cache_),
                   K_(n - 1, k));
  });
}

CheckReport IdentityChecker::check_B_difference(int n, int k) const {
  need(n >= 1 && k >= 0 && k <= n - 1, "B difference needs n >= 1, k in [0, n-1]");
  need(n <= rows_, "triangle too small");
  return timed("B_difference", {{"n", n}, {"k", k}}, [&] {
    return compare({{"n", n}, {"k", k}},
                   family_weight(Family::B, n, k - 1, cache_) -
                       family_weight(Family::B, n, n - k - 1, cache_),
                   K_(n, k) - K_(n, k + 1));
  });
}

CheckReport IdentityChecker::check_linear_coefficient(int n) const {
  need(n >= 1, "n >= 1");
  return timed("linear_coefficient", {{"n", n}}, [&] {
    const IntPoly d = family_weight(Family::D, n, 0, cache_);
    return compare({{"n", n}}, d.coeff(1), sign_pow(n - 1) * normalized_h(n - 1));
  });
}

CheckReport IdentityChecker::check_continued_fraction(int n) const {
  need(n >= 1, "n >= 1");
  return timed("continued_fraction", {{"n", n}}, [&] {
    const WeightPair w = complete_diagram_weights();
    const PolySeries s = jfraction_series({w.b, w.lam, static_cast<std::size_t>(n)});
    return compare({{"n", n}}, family_weight(Family::D, n, 0, cache_),
                   s[static_cast<std::size_t>(n)]);
  });
}

CheckReport IdentityChecker::check_delta_on_Dn(int n) const {
  need(n >= 2, "n >= 2");
  return timed("delta_on_Dn", {{"n", n}}, [&]() -> MaybeWitness {
    const ChordDiagram d = make_Dn(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (auto w = compare({{"n", n}, {"i", i}, {"j", j}}, pair_delta(d, i - 1, j - 1, cache_),
                             family_weight(Family::B, n, j - i - 1, cache_) -
                                 family_weight(Family::B, n, n - 1 - (j - i), cache_)))
          return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_A_complement(int n) const {
  need(n >= 2, "n >= 2");
  return timed("A_complement", {{"n", n}}, [&]() -> MaybeWitness {
    const IntPoly rhs = IntPoly::x() * family_weight(Family::D, n - 1, 0, cache_) +
                        family_weight(Family::D, n, 0, cache_);
    for (int k = 1; k <= n - 1; ++k)
      if (auto w = compare({{"n", n}, {"k", k}},
                           family_weight(Family::A, n, k - 1, cache_) +
                               family_weight(Family::A, n, n - k, cache_),
                           rhs))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_T_split(int n) const {
  need(n >= 2, "n >= 2");
  return timed("T_split", {{"n", n}}, [&]() -> MaybeWitness {
    std::vector<std::pair<std::string, ChordDiagram>> diagrams{{"D", make_Dn(n)}};
    for (int k = 0; k <= n - 1; ++k)
      diagrams.emplace_back("A" + std::to_string(k), make_A(n, k));
    for (const auto &[label, d] : diagrams)
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c) {
            const IntPoly lhs = t_sum(d, a - 1, c - 1, cache_);
            const IntPoly rhs = t_sum(d, a - 1, b - 1, cache_) + t_sum(d, b, c - 1, cache_) +
                                r_sum(d, a - 1, b - 1, b, c - 1, cache_);
            if (auto w = compare({{"n", n}, {"a", a}, {"b", b}, {"c", c}}, lhs, rhs,
                                 format_diagram(d)))
              return w;
          }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_last_chord_expansion(int n) const {
  need(n >= 1, "n >= 1");
  return timed("last_chord_expansion", {{"n", n}}, [&]() -> MaybeWitness {
    const IntPoly x = IntPoly::x();
    for (int l = 0; l <= n - 1; ++l) {
      const json at{{"n", n}, {"l", l}};
      const ChordDiagram a = make_A(n, l);
      const IntPoly A = phi(a, cache_);
      const ChordDiagram b_next = make_B(n + 1, l);
      const ChordDiagram a_next = make_A(n + 1, l);
      if (canonical_key(delete_chord(b_next, n)) != canonical_key(a))
        return Witness{at, phi(delete_chord(b_next, n), cache_), A,
                       "last chord of B_{n+1,l} does not leave A_{n,l}"};
      if (canonical_key(delete_chord(a_next, n)) != canonical_key(a))
        return Witness{at, phi(delete_chord(a_next, n), cache_), A,
                       "last chord of A_{n+1,l} does not leave A_{n,l}"};
      const IntPoly tb = l >= 1 ? t_sum(a, 1, l, cache_) : IntPoly{};
      if (auto w = compare(at, phi(b_next, cache_), IntPoly{-l, 1} * A + tb, "B expansion"))
        return w;
      const IntPoly ta = n >= 2 ? t_sum(a, 1, n - 1, cache_) : IntPoly{};
      if (auto w = compare(at, phi(a_next, cache_), (x - IntPoly{n - 1}) * A + ta, "A expansion"))
        return w;
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_four_term(int n) const {
  need(n >= 2, "n >= 2");
  return timed("four_term", {{"n", n}}, [&]() -> MaybeWitness {
    const auto quads = four_term_quadruples(n);
    for (std::size_t q = 0; q < quads.size(); ++q) {
      const auto &d = quads[q].d;
      const IntPoly lhs = phi(d[0], cache_) - phi(d[1], cache_);
      const IntPoly rhs = phi(d[2], cache_) - phi(d[3], cache_);
      if (auto w = compare({{"n", n}, {"quadruple", q}}, lhs, rhs,
                           format_diagram(d[0]) + " ; " + format_diagram(d[1]) + " ; " +
                               format_diagram(d[2]) + " ; " + format_diagram(d[3])))
        return w;
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_chord_independence(int n) const {
  need(n >= 1, "n >= 1");
  return timed("chord_independence", {{"n", n}}, [&]() -> MaybeWitness {
    WeightCache plain(WeightOptions{KeyMode::dihedral, false, cache_.options().negate_delta});
    MaybeWitness found;
    std::size_t index = 0;
    for_each_diagram(n, [&](const ChordDiagram &d) {
      if (found)
        return;
      const IntPoly base = phi(d, cache_);
      for (int a = 0; a < n && !found; ++a)
        found = compare({{"n", n}, {"diagram", index}, {"chord", a + 1}},
                        phi_via_chord(d, a, plain), base, format_diagram(d));
      ++index;
    });
    return found;
  });
}

CheckReport IdentityChecker::check_dihedral_invariance(int n) const {
  need(n >= 1, "n >= 1");
  return timed("dihedral_invariance", {{"n", n}}, [&]() -> MaybeWitness {
    WeightCache plain(WeightOptions{KeyMode::rotation, false, cache_.options().negate_delta});
    MaybeWitness found;
    std::size_t index = 0;
    for_each_diagram(n, [&](const ChordDiagram &d) {
      if (found)
        return;
      const IntPoly base = phi(d, plain);
      found = compare({{"n", n}, {"diagram", index}, {"reflected", true}}, phi(reflect(d), plain),
                      base, format_diagram(d));
      for (int s = 1; s < 2 * n && !found; ++s)
        found = compare({{"n", n}, {"diagram", index}, {"shift", s}}, phi(rotate(d, s), plain),
                        base, format_diagram(d));
      ++index;
    });
    return found;
  });
}

CheckReport IdentityChecker::check_weight_shape(int n) const {
  need(n >= 1, "n >= 1");
  return timed("weight_shape", {{"n", n}}, [&]() -> MaybeWitness {
    MaybeWitness found;
    std::size_t index = 0;
    for_each_diagram(n, [&](const ChordDiagram &d) {
      if (found)
        return;
      const IntPoly p = phi(d, cache_);
      if (!p.is_monic() || p.degree() != static_cast<std::size_t>(n) || p.coeff(0) != 0)
        found = Witness{{{"n", n}, {"diagram", index}},
                        p,
                        IntPoly::monomial(1, static_cast<std::size_t>(n)),
                        "expected monic of degree n divisible by x: " + format_diagram(d)};
      ++index;
    });
    return found;
  });
}

CheckReport IdentityChecker::check_K_shape(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("K_shape", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k) {
      const IntPoly &p = K_(n, k);
      if (!p.is_monic() || p.degree() != static_cast<std::size_t>(n) || p.coeff(0) != 0)
        return Witness{{{"n", n}, {"k", k}},
                       p,
                       IntPoly::monomial(1, static_cast<std::size_t>(n)),
                       "expected monic of degree n with zero constant term"};
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_K_symmetry(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("K_symmetry", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k)
      if (auto w = compare({{"n", n}, {"k", k}}, K_(n, k), K_(n, n + 1 - k)))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_K_difference(int n) const {
  need(n >= 2 && n <= rows_, "row out of range");
  return timed("K_difference", {{"n", n}}, [&]() -> MaybeWitness {
    for (int j = 1; j <= n; ++j) {
      const auto [lhs, rhs] = K_diff_sides(K_, n, j);
      if (auto w = compare({{"n", n}, {"j", j}}, lhs, rhs))
        return w;
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_a_linear(int n) const {
  need(n >= 2 && n <= rows_, "row out of range");
  return timed("a_linear", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k)
      if (auto w = compare({{"n", n}, {"k", k}}, a_coeff(K_, n, k, 1),
                           binomial(n, 2) + 2 * (k - 1) * (n - k)))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_a12(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("a12", {{"n", n}}, [&]() -> MaybeWitness {
    const Integer closed = a12_closed(n);
    if (auto w = compare({{"n", n}}, closed, quadruple_oracle(n), "closed form vs quadruples"))
      return w;
    if (n >= 3)
      return compare({{"n", n}}, closed, a_coeff(K_, n, 1, 2), "closed form vs extraction");
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_a_positive(int n) const {
  need(n >= 2 && n <= rows_, "row out of range");
  return timed("a_positive", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        try {
          (void)a_coeff(K_, n, k, i);
        } catch (const NonPositiveCoefficient &e) {
          return Witness{{{"n", n}, {"k", k}, {"i", i}}, K_(n, k), IntPoly{}, e.what()};
        }
      }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_linear_bridge(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("linear_bridge", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k)
      if (auto w = compare({{"n", n}, {"k", k}}, K_(n, k).coeff(1), sign_pow(n - 1) * h_(n, k)))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_h_difference(int n) const {
  need(n >= 2 && n <= rows_, "row out of range");
  return timed("h_difference", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k) {
      const Integer lhs = h_(n, k) - (k == 1 ? Integer(0) : h_(n, k - 1));
      Integer rhs = 0;
      for (int i = k; i <= n - 1; ++i)
        rhs += h_(n - 1, i);
      for (int i = 1; i <= k - 2; ++i)
        rhs -= h_(n - 1, i);
      if (auto w = compare({{"n", n}, {"k", k}}, lhs, rhs))
        return w;
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_h_symmetry(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("h_symmetry", {{"n", n}}, [&]() -> MaybeWitness {
    for (int k = 1; k <= n; ++k)
      if (auto w = compare({{"n", n}, {"k", k}}, h_(n, k), h_(n, n + 1 - k)))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_median_divisibility(int n) const {
  need(n >= 0 && n <= rows_, "row out of range");
  return timed("median_divisibility", {{"n", n}}, [&]() -> MaybeWitness {
    const Integer H = median_H(n);
    const Integer power = Integer(1) << n;
    if (H % power != 0)
      return Witness{{{"n", n}}, IntPoly::constant(H % power), IntPoly{}, "remainder mod 2^n"};
    if (n == 0)
      return compare({{"n", n}}, H, Integer(1));
    Integer row_sum = 0;
    for (int k = 1; k <= n; ++k)
      row_sum += h_(n, k);
    return compare({{"n", n}}, H / power, row_sum, "h_n against the Kreweras row sum");
  });
}

CheckReport IdentityChecker::check_permutation_counts(int n) const {
  need(n >= 1 && n <= rows_, "row out of range");
  return timed("permutation_counts", {{"n", n}}, [&]() -> MaybeWitness {
    if (auto w = compare({{"n", n}}, Integer(count_pd2(n)), median_H(n), "#PD2 vs H"))
      return w;
    const auto by_first = pd2n_counts_by_first(n);
    for (int k = 1; k <= n; ++k)
      if (auto w = compare({{"n", n}, {"k", k}}, Integer(by_first[static_cast<std::size_t>(k - 1)]),
                           h_(n, k), "#PD2N_{n,k} vs h(n,k)"))
        return w;
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_jfraction_oracle(int order) const {
  need(order >= 0, "order >= 0");
  return timed("jfraction_oracle", {{"order", order}}, [&]() -> MaybeWitness {
    const std::vector<std::pair<std::string, WeightPair>> cases{
        {"complete", complete_diagram_weights()},
        {"unit", unit_weights()},
        {"hn", hn_jfraction_weights()}};
    for (const auto &[label, w] : cases) {
      const PolySeries s = jfraction_series({w.b, w.lam, static_cast<std::size_t>(order)});
      for (int m = 0; m <= order; ++m) {
        const auto mm = static_cast<std::size_t>(m);
        const IntPoly dp = motzkin_sum_dp(mm, w.b, w.lam);
        if (auto wit = compare({{"order", order}, {"m", m}}, s[mm], dp, label + ": fraction vs dp"))
          return wit;
        if (mm <= motzkin_path_bound)
          if (auto wit = compare({{"order", order}, {"m", m}}, dp,
                                 motzkin_sum_paths(mm, w.b, w.lam), label + ": dp vs paths"))
            return wit;
      }
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_contraction(int order) const {
  need(order >= 0, "order >= 0");
  return timed("contraction", {{"order", order}}, [&]() -> MaybeWitness {
    const auto N = static_cast<std::size_t>(order);
    const std::vector<IntPoly> pattern = hn_sfraction_pattern(N + 4);
    const PolySeries s = sfraction_series(pattern, N);
    for (std::size_t m = 0; m <= N; ++m)
      if (auto w = compare({{"order", order}, {"m", m}}, s[m],
                           IntPoly::constant(sign_pow(static_cast<int>(m)) *
                                             normalized_h(static_cast<int>(m))),
                           "S-fraction vs signed h_n"))
        return w;
    std::vector<IntPoly> c{IntPoly{1}};
    c.insert(c.end(), pattern.begin(), pattern.end());
    const std::size_t levels = N / 2 + 1;
    const Contraction z = dumont_zeng_contract(c, levels);
    const PolySeries lhs = sfraction_with_numerator(c, N);
    const PolySeries rhs = z.expand(N);
    for (std::size_t m = 0; m <= N; ++m)
      if (auto w = compare({{"order", order}, {"m", m}}, lhs[m], rhs[m], "S-fraction vs contraction"))
        return w;
    const WeightPair target = hn_jfraction_weights();
    for (std::size_t k = 0; k < levels; ++k) {
      if (auto w = compare({{"order", order}, {"level", k}}, z.b[k], target.b(k), "beta"))
        return w;
      if (k >= 1)
        if (auto w = compare({{"order", order}, {"level", k}}, z.lam[k], target.lam(k), "Lambda"))
          return w;
    }
    return std::nullopt;
  });
}

CheckReport IdentityChecker::check_linear_reduction(int n_max) const {
  need(n_max >= 2, "n_max >= 2");
  return timed("linear_reduction", {{"n_max", n_max}}, [&]() -> MaybeWitness {
    for (const auto &row : linear_term_reduction_check(static_cast<std::size_t>(n_max)))
      if (!row.pass)
        return Witness{{{"n_max", n_max}, {"n", row.n}}, row.lhs, row.rhs, {}};
    return std::nullopt;
  });
}

CheckReport IdentityChecker::run(const std::string &name, const json &params) const {
  auto n = [&] { return params.at("n").get<int>(); };
  using Fn = std::function<CheckReport()>;
  const std::map<std::string, Fn> table{
      {"A_difference", [&] { return check_A_difference(n(), params.at("k").get<int>()); }},
      {"B_difference", [&] { return check_B_difference(n(), params.at("k").get<int>()); }},
      {"linear_coefficient", [&] { return check_linear_coefficient(n()); }},
      {"continued_fraction", [&] { return check_continued_fraction(n()); }},
      {"delta_on_Dn", [&] { return check_delta_on_Dn(n()); }},
      {"A_complement", [&] { return check_A_complement(n()); }},
      {"T_split", [&] { return check_T_split(n()); }},
      {"last_chord_expansion", [&] { return check_last_chord_expansion(n()); }},
      {"four_term", [&] { return check_four_term(n()); }},
      {"chord_independence", [&] { return check_chord_independence(n()); }},
      {"dihedral_invariance", [&] { return check_dihedral_invariance(n()); }},
      {"weight_shape", [&] { return check_weight_shape(n()); }},
      {"K_shape", [&] { return check_K_shape(n()); }},
      {"K_symmetry", [&] { return check_K_symmetry(n()); }},
      {"K_difference", [&] { return check_K_difference(n()); }},
      {"a_linear", [&] { return check_a_linear(n()); }},
      {"a12", [&] { return check_a12(n()); }},
      {"a_positive", [&] { return check_a_positive(n()); }},
      {"linear_bridge", [&] { return check_linear_bridge(n()); }},
      {"h_difference", [&] { return check_h_difference(n()); }},
      {"h_symmetry", [&] { return check_h_symmetry(n()); }},
      {"median_divisibility", [&] { return check_median_divisibility(n()); }},
      {"permutation_counts", [&] { return check_permutation_counts(n()); }},
      {"jfraction_oracle", [&] { return check_jfraction_oracle(params.at("order").get<int>()); }},
      {"contraction", [&] { return check_contraction(params.at("order").get<int>()); }},
      {"linear_reduction", [&] { return check_linear_reduction(params.at("n_max").get<int>()); }},
  };
  const auto it = table.find(name);
  if (it == table.end())
    throw PreconditionError("unknown check " + name);
  return it->second();
}

std::vector<CheckTask> report_tasks(const ReportBudget &budget) {
  std::vector<CheckTask> tasks;
  const int nw = budget.n_weights;
  const int nt = budget.n_tables;
  auto add = [&](const char *name, json params) { tasks.push_back({name, std::move(params)}); };
  auto each_n = [&](const char *name, int lo, int hi) {
    for (int n = lo; n <= hi; ++n)
      add(name, {{"n", n}});
  };
  for (int n = 1; n <= nw; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      add("A_difference", {{"n", n}, {"k", k}});
      add("B_difference", {{"n", n}, {"k", k}});
    }
  each_n("linear_coefficient", 1, nw);
  if (budget.include_continued_fraction)
    each_n("continued_fraction", 1, nw);
  each_n("delta_on_Dn", 2, nw);
  each_n("A_complement", 2, nw);
  each_n("T_split", 2, nw);
  each_n("last_chord_expansion", 1, nw - 1);
  each_n("four_term", 2, std::min(nw, 4));
  each_n("chord_independence", 1, std::min(nw, 4));
  each_n("dihedral_invariance", 1, std::min(nw, 4));
  each_n("weight_shape", 1, std::min(nw, 5));

  each_n("K_shape", 1, nt);
  each_n("K_symmetry", 1, nt);
  each_n("K_difference", 2, nt);
  each_n("a_linear", 2, nt);
  each_n("a12", 1, nt);
  each_n("a_positive", 2, nt);
  each_n("linear_bridge", 1, nt);
  each_n("h_difference", 2, nt);
  each_n("h_symmetry", 1, nt);
  each_n("median_divisibility", 0, nt);
  each_n("permutation_counts", 1, std::min(nt, 4));
  add("jfraction_oracle", {{"order", std::min(nt, 8)}});
  add("contraction", {{"order", std::min(nt, 8)}});
  if (nt >= 2)
    add("linear_reduction", {{"n_max", nt}});
  return tasks;
}

std::vector<CheckReport> full_report(const ReportBudget &budget, WeightCache &cache) {
  if (budget.n_weights < 1 || budget.n_tables < 1)
    throw PreconditionError("budgets must be positive");
  const IdentityChecker checker(cache, std::max(budget.n_weights, budget.n_tables));
  const std::vector<CheckTask> tasks = report_tasks(budget);
  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = checker.run(tasks[i].name, tasks[i].params);
      } catch (const std::exception &e) {
        out[i] = CheckReport{tasks[i].name, tasks[i].params, false,
                             Witness{tasks[i].params, {}, {}, e.what()}, 0};
      }
    }
  };
  const unsigned threads = std::max(1u, budget.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }
  return out;
}

std::vector<CheckReport> full_report(int n_weights, int n_tables, unsigned threads) {
  WeightCache cache;
  return full_report(ReportBudget{n_weights, n_tables, threads, true}, cache);
}

bool all_pass(const std::vector<CheckReport> &reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass; });
}

} // namespace chordsl2
