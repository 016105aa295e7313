#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quatnf/polynomial.hpp"

namespace quatnf {

/// Provenance of a generator or base element.
enum class Family : std::uint8_t {
  V2, V3, V4,
  Q0, Q1, Q2, Q3, Q4,
  G3, Gm,
  VG3sq, VGm,
  Completed,
};

std::string family_name(Family f);

/// A monic base element `lead - rhs`, used left to right as `lead -> rhs`.
/// Every word of `rhs` is smaller than `lead` and has the same multiset.
struct RewriteRule {
  Word lead;
  RationalPolynomial rhs;
  Family family = Family::Completed;
  /// Distinguishes the two shapes of the G3 and VG3sq families.
  int shape = 0;
  std::vector<int> indices;

  /// lead - rhs.
  RationalPolynomial element() const;
  /// e.g. `G3(1,2,3)#2`.
  std::string label() const;
};

/// Makes `element` monic and splits off its leading word. Throws
/// std::domain_error for the zero polynomial.
RewriteRule make_rule(const RationalPolynomial& element, Family family = Family::Completed,
                      int shape = 0, std::vector<int> indices = {});

/// Position of a rule's lead inside a word.
struct Match {
  std::size_t position;
  std::size_t rule;
};

/// An indexed family of rewrite rules. Constructing from a vector sorts the
/// rules canonically (degree, family, shape, index tuple, lead); `append`
/// keeps insertion order and is meant for incremental construction.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<RewriteRule> rules);

  void append(RewriteRule rule);

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const RewriteRule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Leftmost occurrence of any lead in `w`; at a tie the first rule in
  /// order wins.
  std::optional<Match> find_leftmost(const Word& w) const;
  /// Every (position, rule) whose lead occurs in `w`.
  std::vector<Match> all_matches(const Word& w) const;

  /// Index of the first rule with exactly this lead.
  std::optional<std::size_t> rule_for_lead(const Word& lead) const;

  /// The same rules without the one at `index`.
  RuleSet without(std::size_t index) const;

 private:
  void index_rule(std::size_t i);

  std::vector<RewriteRule> rules_;
  std::unordered_map<std::string, std::size_t, WordHash, std::equal_to<>> by_lead_;
  std::vector<std::size_t> lead_lengths_;
  std::size_t max_degree_ = 0;
};

/// Leftmost offset of `lead` in `w`; the empty lead matches at 0.
std::optional<std::size_t> find_factor(const Word& w, const Word& lead);

/// Rewrites the highest reducible term of `p` once, at its leftmost match.
template <Coefficient C>
std::pair<Polynomial<C>, bool> reduce_once(const Polynomial<C>& p, const RuleSet& base);

/// Fixed point of reduce_once.
template <Coefficient C>
Polynomial<C> normalize(const Polynomial<C>& p, const RuleSet& base);

/// Normalizes with a random choice of reducible term, occurrence and rule at
/// every step. Used to test that normal forms do not depend on strategy.
template <Coefficient C>
Polynomial<C> normalize_randomized(const Polynomial<C>& p, const RuleSet& base, std::mt19937_64& rng);

enum class NormalMode { general, multilinear };

/// Decides membership of `w` in the double-ascending (multilinear) or
/// double-nondescending (general) normal-word shapes. Throws
/// std::domain_error in multilinear mode when a letter repeats.
bool is_normal_structural(const Word& w, NormalMode mode);

/// No lead of `base` is a factor of `w`.
bool is_normal_factorfree(const Word& w, const RuleSet& base);

/// Two leads occurring in one word at overlapping offsets.
struct Obstruction {
  std::size_t rule_a;
  std::size_t rule_b;
  Word overlap_word;
  std::size_t offset_a;
  std::size_t offset_b;
};

/// All proper suffix-prefix overlaps (including self-overlaps) and all
/// containments between distinct rules whose overlap word has degree at
/// most `max_degree`.
std::vector<Obstruction> overlaps(const RuleSet& base, std::size_t max_degree);

/// a*rhs_a*b - c*rhs_b*d for the two factorizations of the overlap word.
RationalPolynomial s_polynomial(const RuleSet& base, const Obstruction& ob);

struct Residue {
  Obstruction obstruction;
  RationalPolynomial residue;
};

/// Normal form of an ideal generator that the base fails to reduce to 0.
struct GeneratorResidue {
  std::size_t generator;
  RationalPolynomial residue;
};

struct GroebnerReport {
  std::size_t obstructions_checked = 0;
  std::size_t generators_checked = 0;
  std::vector<Residue> residues;
  std::vector<GeneratorResidue> generator_residues;

  bool confluent() const noexcept { return residues.empty() && generator_residues.empty(); }
};

struct GroebnerCheckOptions {
  /// Only overlap words and generators with pairwise distinct letters.
  bool multilinear_only = false;
  /// Generators of the ideal; each one of degree <= max_degree must
  /// normalize to 0, so that the base generates the whole ideal.
  std::vector<RationalPolynomial> generators;
};

/// Normalizes every S-polynomial up to `max_degree`, and every generator in
/// `options`, and reports the nonzero residues in order.
GroebnerReport check_groebner(const RuleSet& base, std::size_t max_degree,
                              const GroebnerCheckOptions& options = {});

struct CompletionOptions {
  std::size_t rule_cap = 100000;
};

class CompletionLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree-bounded completion of homogeneous generators: works degree by
/// degree, adding monic normalized residues of generators and S-polynomials
/// until none of degree <= max_degree remain. Throws std::domain_error for
/// inhomogeneous input and CompletionLimitExceeded past the rule cap.
RuleSet complete(const std::vector<RationalPolynomial>& generators, std::size_t max_degree,
                 const CompletionOptions& options = {});

/// Normalizes every rule's rhs against the whole base.
RuleSet inter_reduce(const RuleSet& base);

extern template std::pair<RationalPolynomial, bool> reduce_once(const RationalPolynomial&, const RuleSet&);
extern template std::pair<ScalarPolynomial, bool> reduce_once(const ScalarPolynomial&, const RuleSet&);
extern template RationalPolynomial normalize(const RationalPolynomial&, const RuleSet&);
extern template ScalarPolynomial normalize(const ScalarPolynomial&, const RuleSet&);
extern template RationalPolynomial normalize_randomized(const RationalPolynomial&, const RuleSet&,
                                                        std::mt19937_64&);
extern template ScalarPolynomial normalize_randomized(const ScalarPolynomial&, const RuleSet&,
                                                      std::mt19937_64&);

}  // namespace quatnf
