#pragma once

#include <vector>

#include "quatnf/polynomial.hpp"
#include "quatnf/qpolynomial.hpp"
#include "quatnf/rewrite.hpp"

namespace quatnf {

/// One instance of a generator pattern.
template <class P>
struct Generator {
  Family family;
  /// Which of a family's alternative shapes this is (0 when there is one).
  int shape = 0;
  std::vector<int> indices;
  P element;
};

using GeneratorFamily = Generator<RationalPolynomial>;
using QGeneratorFamily = Generator<QPolynomial>;

/// V2, V3, V4 instances over pairwise distinct indices in 1..n. V3 is
/// symmetric in (i, j) and V4 antisymmetric in (i, k), so those pairs are
/// generated once with i < j and i < k respectively. Throws
/// std::domain_error for n < 2.
std::vector<GeneratorFamily> gen_vector_syzygies(int n);

/// Q0..Q4 instances over pairwise distinct indices, with every choice of
/// p_i in {q_i, q_i'}. Throws std::domain_error for n < 2.
std::vector<QGeneratorFamily> gen_quaternion_syzygies(int n);

/// 2*([v_{i3} v_{i2} V v_{i1}] - [v_{i2} V v_{i1} v_{i3}]) for the index
/// tuple (i1, ..., im), V = v_{i4} ... v_{im}; the Gm/VGm pattern.
RationalPolynomial shifted_bracket_difference(const std::vector<int>& indices);

/// G3 and Gm (4 <= m <= n) over strictly increasing index tuples. Throws
/// std::domain_error for n < 3.
RuleSet gb_multilinear(int n);

/// Which index tuples the VGm family ranges over.
enum class ChainReading {
  /// i1 < i2 < i3 <= i4 <= ... <= i_{m-1} < i_m for m >= 5, and
  /// i1 < i2 < i3 <= i4 for m = 4.
  standard,
  /// The final strict inequality also applied at m = 4, giving
  /// i1 < i2 < i3 < i4.
  strict_at_four,
};

/// VG3 (two bracket shapes and two square shapes) and VGm for 4 <= m <=
/// max_degree. Throws std::domain_error for n < 1 or max_degree < 3.
RuleSet gb_vector(int n, std::size_t max_degree, ChainReading reading = ChainReading::standard);

/// The index tuples the VGm family ranges over for one m.
std::vector<std::vector<int>> vgm_index_tuples(int n, int m, ChainReading reading = ChainReading::standard);

}  // namespace quatnf
