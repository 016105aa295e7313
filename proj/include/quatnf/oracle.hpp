#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quatnf/polynomial.hpp"
#include "quatnf/quaternion.hpp"
#include "quatnf/rewrite.hpp"

namespace quatnf {

/// Values for v1..vn (vectors[i-1]) and s1..sm (scalars[i-1]).
struct Assignment {
  std::vector<RationalQuaternion> vectors;
  std::vector<Rational> scalars;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// The evaluation homomorphism; the empty word maps to 1. Throws
/// std::domain_error when a variable or scalar symbol has no value.
RationalQuaternion evaluate(const RationalPolynomial& p, const Assignment& a);
RationalQuaternion evaluate(const ScalarPolynomial& p, const Assignment& a);

/// Deterministic for a fixed seed: every vector gets integer coordinates
/// uniform in [-9, 9]^3 (redrawn if all zero), every scalar an integer in
/// [-9, 9]. `scalars` defaults to n.
Assignment random_assignment(int n, std::uint64_t seed, int scalars = -1);

/// Seed of trial `t` of a zero test started with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t t);

struct ZeroTestResult {
  std::size_t trials = 0;
  /// Index of the first trial with a nonzero value.
  std::optional<std::size_t> witness_trial;
  std::optional<Assignment> witness;
  RationalQuaternion witness_value;

  bool passed() const noexcept { return !witness_trial.has_value(); }
};

/// Evaluates `p` at `trials` seeded random assignments and stops at the
/// first nonzero value. Throws std::invalid_argument for trials < 1.
ZeroTestResult zero_test(const RationalPolynomial& p, std::size_t trials, std::uint64_t seed = 0);
ZeroTestResult zero_test(const ScalarPolynomial& p, std::size_t trials, std::uint64_t seed = 0);

struct DimensionOptions {
  /// Restrict to permutation words of 1..d (requires d <= n).
  bool multilinear = false;
  /// Upper bound on the number of words in the slice.
  std::size_t guard = 10000;
};

struct DimensionReport {
  int n = 0;
  std::size_t degree = 0;
  bool multilinear = false;
  std::size_t words = 0;
  /// Rank of the ideal slice spanned by w1*g*w2.
  std::size_t rank = 0;
  std::size_t factorfree_normal = 0;
  std::size_t structural_normal = 0;
  /// The leading words of the echelonized slice are exactly the words that
  /// some lead of the base divides.
  bool leads_match = false;

  std::size_t rank_normal() const noexcept { return words - rank; }
  bool passed() const noexcept {
    return rank_normal() == factorfree_normal && rank_normal() == structural_normal && leads_match;
  }
};

/// Counts degree-d normal words three ways: words minus the exact rank of
/// the ideal slice, words free of base leads, and words accepted by the
/// structural predicate. Throws std::domain_error when the slice exceeds the
/// guard or multilinear mode has d > n.
DimensionReport dimension_check(int n, std::size_t d, const std::vector<RationalPolynomial>& generators,
                                const RuleSet& base, const DimensionOptions& options = {});

}  // namespace quatnf
