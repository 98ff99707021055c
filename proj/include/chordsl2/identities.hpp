#pragma once

#include <chordsl2/genocchi.hpp>
#include <chordsl2/kreweras.hpp>
#include <chordsl2/weights.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chordsl2 {

struct Witness {
  nlohmann::json params; // the offending instance
  IntPoly lhs;
  IntPoly rhs;
  std::string note;
};

struct CheckReport {
  std::string name;
  nlohmann::json params;
  bool pass = true;
  std::optional<Witness> witness; // always set when pass is false
  double millis = 0;
};

nlohmann::json to_json(const CheckReport &r);
nlohmann::json to_json(const std::vector<CheckReport> &reports);

// Checks against shared weight cache and precomputed triangles. Every check
// is const apart from cache traffic, so one checker may serve several
// threads.
class IdentityChecker {
public:
  IdentityChecker(WeightCache &cache, int table_rows);

  int table_rows() const noexcept { return rows_; }
  WeightCache &cache() const noexcept { return cache_; }

  // A_{n,k-1} - A_{n,k} = K_{n-1,k}, n >= 1, k in [0, n-1].
  CheckReport check_A_difference(int n, int k) const;
  // B_{n,k-1} - B_{n,n-k-1} = K_{n,k} - K_{n,k+1}, n >= 1, k in [0, n-1].
  CheckReport check_B_difference(int n, int k) const;
  // [x] D_n = (-1)^(n-1) h_{n-1}.
  CheckReport check_linear_coefficient(int n) const;
  // D_n against the t^n coefficient of the complete-diagram J-fraction.
  CheckReport check_continued_fraction(int n) const;
  // pair_delta(D_n; i, j) = B_{n,j-i-1} - B_{n,n-1-(j-i)} for all i < j.
  CheckReport check_delta_on_Dn(int n) const;
  // A_{n,k-1} + A_{n,n-k} = x D_{n-1} + D_n, k in [n-1].
  CheckReport check_A_complement(int n) const;
  // T_{a,c} = T_{a,b} + T_{b+1,c} + R_{a,b,b+1,c} for all a <= b < c on D_n
  // and every A_{n,k}.
  CheckReport check_T_split(int n) const;
  // Expansion of B_{n+1,l} and A_{n+1,l} along the last chord, l in [0, n-1].
  CheckReport check_last_chord_expansion(int n) const;

  // Property suites over the full n-chord universe.
  CheckReport check_four_term(int n) const;
  CheckReport check_chord_independence(int n) const;
  CheckReport check_dihedral_invariance(int n) const;
  CheckReport check_weight_shape(int n) const; // monic, degree n, x | phi

  // Table checks at row n.
  CheckReport check_K_shape(int n) const; // monic, degree n, zero constant term
  CheckReport check_K_symmetry(int n) const;
  CheckReport check_K_difference(int n) const;
  CheckReport check_a_linear(int n) const;   // a(n,k,1) = C(n,2) + 2(k-1)(n-k)
  CheckReport check_a12(int n) const;        // closed form, quadruples, extraction
  CheckReport check_a_positive(int n) const;
  CheckReport check_linear_bridge(int n) const; // [x] K(n,k) = (-1)^(n-1) h(n,k)
  CheckReport check_h_difference(int n) const;
  CheckReport check_h_symmetry(int n) const;
  CheckReport check_median_divisibility(int n) const;
  CheckReport check_permutation_counts(int n) const; // #PD2, #PD2N_{n,k}

  // Series checks up to the given order.
  CheckReport check_jfraction_oracle(int order) const;
  CheckReport check_contraction(int order) const;
  CheckReport check_linear_reduction(int n_max) const;

  // Dispatch by report name for reruns; throws PreconditionError on an
  // unknown name.
  CheckReport run(const std::string &name, const nlohmann::json &params) const;

  const KrewerasPolyTriangle &K() const noexcept { return K_; }
  const KrewerasIntTriangle &h() const noexcept { return h_; }

private:
  WeightCache &cache_;
  int rows_;
  KrewerasPolyTriangle K_;
  KrewerasIntTriangle h_;
};

struct ReportBudget {
  int n_weights = 6;
  int n_tables = 10;
  unsigned threads = 1;
  bool include_continued_fraction = true;
};

struct CheckTask {
  std::string name;
  nlohmann::json params;
};

// The ordered task list behind full_report.
std::vector<CheckTask> report_tasks(const ReportBudget &budget);

// Runs every task; output order follows report_tasks, whatever the thread
// count.
std::vector<CheckReport> full_report(const ReportBudget &budget, WeightCache &cache);
std::vector<CheckReport> full_report(int n_weights, int n_tables, unsigned threads = 1);

bool all_pass(const std::vector<CheckReport> &reports);

} // namespace chordsl2
