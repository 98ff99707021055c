#pragma once

#include <chordsl2/poly.hpp>

#include <cstddef>
#include <functional>
#include <vector>

namespace chordsl2 {

// Level-indexed weight generator.
using LevelWeights = std::function<IntPoly(std::size_t)>;

// 1 / (1 - b_0 t - lam_1 t^2 / (1 - b_1 t - lam_2 t^2 / ...)) modulo t^(order+1).
struct JFractionSpec {
  LevelWeights b;
  LevelWeights lam; // consulted for levels >= 1 only
  std::size_t order = 0;
};

// Bottom-up evaluation over levels 0..ceil(order/2).
PolySeries jfraction_series(const JFractionSpec &spec);

enum class Step : unsigned char { up, horizontal, down };
using MotzkinPath = std::vector<Step>;

inline constexpr std::size_t motzkin_path_bound = 12;

void for_each_motzkin_path(std::size_t n, const std::function<void(const MotzkinPath &)> &visit,
                           std::size_t bound = motzkin_path_bound);
// Up steps weigh 1, a horizontal step at height y weighs b(y), a down step
// from height y weighs lam(y).
IntPoly path_weight(const MotzkinPath &path, const LevelWeights &b, const LevelWeights &lam);

// Sum of path weights over all Motzkin paths of length n.
IntPoly motzkin_sum_dp(std::size_t n, const LevelWeights &b, const LevelWeights &lam);
// Same sum by explicit enumeration; BoundExceeded past the bound.
IntPoly motzkin_sum_paths(std::size_t n, const LevelWeights &b, const LevelWeights &lam,
                          std::size_t bound = motzkin_path_bound);

struct WeightPair {
  LevelWeights b;
  LevelWeights lam;
};

// b_k = x - k(k+1), lam_k = -k^2 x + C(k,2) C(k+1,2)
WeightPair complete_diagram_weights();
// b_k = lam_k = 1
WeightPair unit_weights();
// beta_k = -(k+1)(k+2), Lam_k = C(k+1,2) C(k+2,2)
WeightPair hn_jfraction_weights();

// 1 / (1 - c_0 t / (1 - c_1 t / (1 - ...))) modulo t^(order+1).
// Needs c_0..c_{order-1}; throws InsufficientDepth otherwise.
PolySeries sfraction_series(const std::vector<IntPoly> &c, std::size_t order);

// -C(2,2), -C(2,2), -C(3,2), -C(3,2), -C(4,2), ... (count terms)
std::vector<IntPoly> hn_sfraction_pattern(std::size_t count);

// c_0 / (1 - c_1 t / (1 - c_2 t / ...)) rewritten as
//   shift + factor t / (1 - b_0 t - lam_1 t^2 / (1 - b_1 t - ...))
// with shift = c_0, factor = c_0 c_1, b_k = c_{2k+1} + c_{2k+2},
// lam_k = c_{2k} c_{2k+1}.
struct Contraction {
  IntPoly shift;
  IntPoly factor;
  std::vector<IntPoly> b;   // levels 0..levels-1
  std::vector<IntPoly> lam; // lam[0] unused

  // Throws InsufficientDepth if the stored levels do not reach the order.
  PolySeries expand(std::size_t order) const;
};

// Needs c_0..c_{2 levels}; throws InsufficientDepth otherwise.
Contraction dumont_zeng_contract(const std::vector<IntPoly> &c, std::size_t levels);

// c_0 * sfraction_series(c_1, c_2, ...), the left side of the contraction.
PolySeries sfraction_with_numerator(const std::vector<IntPoly> &c, std::size_t order);

struct LinearReductionRow {
  std::size_t n;
  IntPoly lhs; // complete-diagram Motzkin sum mod x^2
  IntPoly rhs; // -x times the beta/Lam Motzkin sum of length n-2
  bool pass;
};

// Rows for 2 <= n <= n_max; throws PreconditionError if n_max < 2.
std::vector<LinearReductionRow> linear_term_reduction_check(std::size_t n_max);

} // namespace chordsl2
