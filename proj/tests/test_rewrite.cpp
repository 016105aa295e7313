#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quatnf/format.hpp"
#include "quatnf/oracle.hpp"
#include "quatnf/rewrite.hpp"
#include "quatnf/syzygy.hpp"
#include "support.hpp"

using namespace quatnf;
using namespace quatnf::test;

namespace {

std::set<Word> leads(const RuleSet& base) {
  std::set<Word> out;
  for (const auto& r : base.rules()) out.insert(r.lead);
  return out;
}

std::vector<RationalPolynomial> elements(const std::vector<GeneratorFamily>& gens) {
  std::vector<RationalPolynomial> out;
  for (const auto& g : gens) out.push_back(g.element);
  return out;
}

}  // namespace

TEST_CASE("find_factor") {
  CHECK(find_factor(Word{2, 4, 1, 3}, Word{4, 1, 3}) == 1U);
  CHECK_FALSE(find_factor(Word{1, 2, 3}, Word{3, 2, 1}).has_value());
  CHECK(find_factor(Word{1, 2}, Word{}) == 0U);
  CHECK(find_factor(Word{2, 1, 2, 1}, Word{2, 1}) == 0U);
}

TEST_CASE("make_rule") {
  const auto r = make_rule(c(3) * w({2, 1}) - c(3) * w({1, 2}));
  CHECK(r.lead == Word{2, 1});
  CHECK(r.rhs == w({1, 2}));
  CHECK_THROWS_AS(make_rule(RationalPolynomial{}), std::domain_error);
}

TEST_CASE("reduce_once") {
  const RuleSet base = gb_vector(3, 3);
  auto [once, changed] = reduce_once(w({3, 2, 1}), base);
  CHECK(changed);
  CHECK(once == w({1, 2, 3}) + w({1, 3, 2}) - w({2, 3, 1}));
  auto [same, unchanged] = reduce_once(w({1, 2, 3}), base);
  CHECK_FALSE(unchanged);
  CHECK(same == w({1, 2, 3}));
  auto [zero, zero_changed] = reduce_once(RationalPolynomial{}, base);
  CHECK_FALSE(zero_changed);
  CHECK(zero.is_zero());
}

TEST_CASE("normalize examples") {
  const auto g3 = w({3, 2, 1}) - w({1, 2, 3}) - w({1, 3, 2}) + w({2, 3, 1});
  CHECK(normalize(v(4) * g3, gb_vector(4, 4)).is_zero());
  CHECK(normalize(w({2, 2, 1}), gb_vector(2, 3)) == w({1, 2, 2}));
  const auto inner = w({4, 2, 3}) + w({2, 4, 3}) - w({3, 4, 2}) - w({3, 2, 4});
  CHECK(normalize(w({5, 1}) * inner, gb_vector(5, 5)).is_zero());
  CHECK(normalize(c(7), gb_vector(2, 3)) == c(7));
}

TEST_CASE("normal forms over scalar symbols") {
  const ScalarPolynomial s1(ScalarCoeff::symbol(1));
  const auto p = s1 * lift(w({2, 2, 1})) + lift(w({3, 2, 1}));
  const auto n = normalize(p, gb_vector(3, 3));
  CHECK(n == s1 * lift(w({1, 2, 2})) + lift(normalize(w({3, 2, 1}), gb_vector(3, 3))));
}

TEST_CASE("structural predicate examples") {
  CHECK(is_normal_structural(Word{1, 2, 3}, NormalMode::multilinear));
  CHECK(is_normal_structural(Word{1, 2, 3}, NormalMode::general));
  CHECK_FALSE(is_normal_structural(Word{3, 2, 4, 1}, NormalMode::multilinear));
  CHECK_FALSE(is_normal_structural(Word{3, 2, 4, 1}, NormalMode::general));
  CHECK_FALSE(is_normal_structural(Word{2, 4, 1, 3}, NormalMode::multilinear));
  CHECK_FALSE(is_normal_structural(Word{2, 2, 1}, NormalMode::general));
  CHECK(is_normal_structural(Word{}, NormalMode::general));
  CHECK_THROWS_AS(is_normal_structural(Word{1, 2, 1}, NormalMode::multilinear), std::domain_error);
}

TEST_CASE("factor-free predicate examples") {
  const RuleSet base = gb_vector(4, 4);
  CHECK(is_normal_factorfree(Word{1, 3, 2, 4}, base));
  CHECK_FALSE(is_normal_factorfree(Word{3, 2, 1}, base));
  CHECK(is_normal_factorfree(Word{}, base));
}

TEST_CASE("predicates agree on all short words") {
  for (int n = 1; n <= 3; ++n) {
    const RuleSet base = gb_vector(std::max(n, 1), 5);
    for (std::size_t d = 0; d <= 5; ++d) {
      for (const auto& x : all_words(n, d)) {
        REQUIRE(is_normal_structural(x, NormalMode::general) == is_normal_factorfree(x, base));
      }
    }
  }
  const RuleSet ml = gb_multilinear(5);
  for (int d = 1; d <= 5; ++d) {
    for (const auto& x : permutation_words(d)) {
      REQUIRE(is_normal_structural(x, NormalMode::multilinear) == is_normal_factorfree(x, ml));
    }
  }
}

TEST_CASE("overlaps") {
  const RuleSet squares = gb_vector(2, 3);
  const auto obs = overlaps(squares, 4);
  bool found = false;
  for (const auto& ob : obs) {
    const auto& a = squares[ob.rule_a].lead;
    const auto& b = squares[ob.rule_b].lead;
    REQUIRE(ob.overlap_word.subword(ob.offset_a, a.degree()) == a);
    REQUIRE(ob.overlap_word.subword(ob.offset_b, b.degree()) == b);
    REQUIRE(ob.offset_a < ob.offset_b + b.degree());
    REQUIRE(ob.offset_b < ob.offset_a + a.degree());
    REQUIRE(ob.overlap_word.degree() <= 4);
    if (ob.overlap_word == Word{2, 2, 1, 1}) found = true;
  }
  CHECK(found);

  RuleSet single;
  single.append(make_rule(w({2, 1}) - w({1, 2})));
  CHECK(overlaps(single, 6).empty());

  RuleSet self;
  self.append(make_rule(w({1, 1}) - w({1})));
  const auto self_obs = overlaps(self, 3);
  REQUIRE(self_obs.size() == 1);
  CHECK(self_obs[0].overlap_word == Word{1, 1, 1});
}

TEST_CASE("s-polynomials of a confluent base reduce to zero") {
  const RuleSet base = gb_vector(3, 5);
  for (const auto& ob : overlaps(base, 5)) REQUIRE(normalize(s_polynomial(base, ob), base).is_zero());
}

TEST_CASE("Groebner checks") {
  const auto general = check_groebner(gb_vector(4, 6), 6);
  CHECK(general.confluent());
  CHECK(general.obstructions_checked > 0);

  const auto multilinear = check_groebner(gb_multilinear(5), 6, {true, elements(gen_vector_syzygies(5))});
  CHECK(multilinear.confluent());
  CHECK(multilinear.generators_checked > 0);

  const RuleSet full = gb_multilinear(4);
  const auto g4 = full.rule_for_lead(Word{3, 2, 4, 1});
  REQUIRE(g4.has_value());
  const GroebnerCheckOptions with_generators{true, elements(gen_vector_syzygies(4))};
  CHECK(check_groebner(full, 6, with_generators).confluent());
  const auto broken = check_groebner(full.without(*g4), 6, with_generators);
  REQUIRE_FALSE(broken.confluent());
  std::set<Word> residue_leads;
  for (const auto& r : broken.residues) residue_leads.insert(r.residue.leading_word());
  for (const auto& r : broken.generator_residues) residue_leads.insert(r.residue.leading_word());
  CHECK(residue_leads == std::set<Word>{Word{3, 2, 4, 1}});
  // Overlaps alone cannot see the missing rule: the G3 overlaps still resolve.
  CHECK(check_groebner(full.without(*g4), 6, {true}).confluent());
}

TEST_CASE("the strict chain reading is not a Groebner base") {
  const auto report = check_groebner(gb_vector(3, 5, ChainReading::strict_at_four), 5);
  CHECK_FALSE(report.confluent());
}

TEST_CASE("completion") {
  CHECK(complete({}, 5).empty());
  CHECK(leads(complete(elements(gen_vector_syzygies(3)), 4)) == leads(gb_vector(3, 4)));
  const RuleSet two = complete(elements(gen_vector_syzygies(2)), 4);
  CHECK(leads(two) == std::set<Word>{Word{2, 2, 1}, Word{2, 1, 1}});
  CHECK_THROWS_AS(complete(elements(gen_vector_syzygies(3)), 5, {3}), CompletionLimitExceeded);
  CHECK_THROWS_AS(complete({w({1, 2}) - v(1)}, 3), std::domain_error);
  const RuleSet completed = complete(elements(gen_vector_syzygies(3)), 5);
  for (const auto& r : completed.rules()) {
    REQUIRE(zero_test(r.element(), 20, 5).passed());
  }
}

TEST_CASE("inter-reduction") {
  const RuleSet base = gb_multilinear(4);
  const RuleSet reduced = inter_reduce(base);
  CHECK(leads(reduced) == leads(base));
  for (const auto& r : reduced.rules()) {
    for (const auto& [word, coeff] : r.rhs.terms()) REQUIRE(is_normal_factorfree(word, reduced));
  }
  const auto g4 = reduced.rule_for_lead(Word{3, 2, 4, 1});
  REQUIRE(g4.has_value());
  CHECK(reduced[*g4].rhs.coeff(Word{3, 1, 4, 2}) == 1);
  CHECK(check_groebner(inter_reduce(gb_vector(4, 6)), 6).confluent());
  std::mt19937_64 rng(9);
  const RuleSet general = gb_vector(4, 5), general_reduced = inter_reduce(general);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_polynomial(rng, 4, 5);
    REQUIRE(normalize(p, general) == normalize(p, general_reduced));
  }
}

TEST_CASE("normal forms do not depend on the reduction strategy") {
  const RuleSet base = gb_vector(4, 5);
  std::mt19937_64 rng(11);
  std::mt19937_64 choice(12);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_polynomial(rng, 1 + t % 4, 5);
    REQUIRE(normalize(p, base) == normalize_randomized(p, base, choice));
  }
}

TEST_CASE("normalization is linear, graded and sound") {
  const RuleSet base = gb_vector(4, 5);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_polynomial(rng, 4, 5);
    const auto r = random_polynomial(rng, 4, 5);
    const auto np = normalize(p, base);
    REQUIRE(normalize(p + r, base) == np + normalize(r, base));
    REQUIRE(normalize(p * q(-3, 7), base) == np * q(-3, 7));
    for (const auto& [word, coeff] : np.terms()) {
      REQUIRE(is_normal_factorfree(word, base));
      REQUIRE(multidegree(p).count(word.multiset()) == 1);
    }
    if (t < 40) REQUIRE(zero_test(p - np, 50, static_cast<std::uint64_t>(t)).passed());
  }
}
