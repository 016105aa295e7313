#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatnf/format.hpp"
#include "quatnf/oracle.hpp"
#include "quatnf/qvars.hpp"
#include "quatnf/syzygy.hpp"
#include "support.hpp"

using namespace quatnf;
using namespace quatnf::test;

namespace {

std::size_t count_family(const std::vector<GeneratorFamily>& gens, Family f) {
  return static_cast<std::size_t>(std::count_if(gens.begin(), gens.end(), [&](const auto& g) { return g.family == f; }));
}

std::size_t count_family(const std::vector<QGeneratorFamily>& gens, Family f) {
  return static_cast<std::size_t>(std::count_if(gens.begin(), gens.end(), [&](const auto& g) { return g.family == f; }));
}

// Brute force over [1..n]^m against the printed chain.
std::set<std::vector<int>> chain_tuples(int n, int m, bool strict_last) {
  std::set<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(m), 1);
  while (true) {
    bool ok = t[0] < t[1] && t[1] < t[2];
    for (int k = 3; k < m && ok; ++k) {
      const bool last = k == m - 1;
      ok = (last && strict_last) ? t[k - 1] < t[k] : t[k - 1] <= t[k];
    }
    if (ok) out.insert(t);
    int k = m - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == n) t[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++t[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

TEST_CASE("vector generators at n = 2") {
  const auto gens = gen_vector_syzygies(2);
  CHECK(count_family(gens, Family::V2) == 2);
  CHECK(count_family(gens, Family::V3) == 0);
  CHECK(count_family(gens, Family::V4) == 0);
  CHECK(gens[0].element == w({1, 1, 2}) - w({2, 1, 1}));
  CHECK(gens[1].element == w({2, 2, 1}) - w({1, 2, 2}));
  CHECK_THROWS_AS(gen_vector_syzygies(1), std::domain_error);
}

TEST_CASE("vector generator shapes and counts") {
  const auto gens = gen_vector_syzygies(3);
  const auto sym = v(1) * v(2) + v(2) * v(1);
  const auto v3 = sym * v(3) - v(3) * sym;
  CHECK(std::any_of(gens.begin(), gens.end(), [&](const auto& g) {
    return g.family == Family::V3 && g.indices == std::vector<int>{1, 2, 3} && g.element == v3;
  }));
  for (int n = 2; n <= 6; ++n) {
    const auto all = gen_vector_syzygies(n);
    const std::size_t N = static_cast<std::size_t>(n);
    CHECK(count_family(all, Family::V2) == N * (N - 1));
    CHECK(count_family(all, Family::V3) == N * (N - 1) / 2 * (N - 2));
    CHECK(count_family(all, Family::V4) == (N < 4 ? 0 : N * (N - 1) / 2 * (N - 2) * (N - 3)));
  }
}

TEST_CASE("vector generators are homogeneous and vanish under evaluation") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : gen_vector_syzygies(n)) {
      REQUIRE(multidegree(g.element).size() == 1);
      REQUIRE(zero_test(g.element, 100, 7).passed());
    }
  }
}

TEST_CASE("quaternionic generator examples") {
  const auto gens = gen_quaternion_syzygies(2);
  const auto q1 = QPolynomial::q(1), q1b = QPolynomial::qbar(1), q2 = QPolynomial::q(2);
  CHECK(gens[0].family == Family::Q0);
  CHECK(gens[0].element == q1 * q1b - q1b * q1);
  const auto q1_elem = (q1 + q1b) * q2 - q2 * (q1 + q1b);
  CHECK(std::any_of(gens.begin(), gens.end(), [&](const auto& g) {
    return g.family == Family::Q1 && g.indices == std::vector<int>{1, 2} && g.element == q1_elem;
  }));
  CHECK_THROWS_AS(gen_quaternion_syzygies(1), std::domain_error);
  for (int n = 2; n <= 4; ++n) {
    const auto all = gen_quaternion_syzygies(n);
    const std::size_t N = static_cast<std::size_t>(n);
    CHECK(count_family(all, Family::Q0) == N);
    CHECK(count_family(all, Family::Q1) == 2 * N * (N - 1));
    CHECK(count_family(all, Family::Q2) == 2 * N * (N - 1));
    CHECK(count_family(all, Family::Q3) == 8 * N * (N - 1) * (N - 2));
    CHECK(count_family(all, Family::Q4) == (N < 4 ? 0 : 16 * N * (N - 1) * (N - 2) * (N - 3)));
  }
}

TEST_CASE("quaternionic generators split and normalize to zero") {
  const RuleSet base = gb_vector(3, 3);
  for (const auto& g : gen_quaternion_syzygies(3)) {
    INFO(to_string(g.element));
    REQUIRE(normalize_q(g.element, base).is_zero());
  }
}

TEST_CASE("multilinear base at n = 3") {
  const RuleSet base = gb_multilinear(3);
  REQUIRE(base.size() == 2);
  // 2[v3v2v1] - 2[v1v3v2] written out word by word.
  const auto element = (w({3, 2, 1}) - w({1, 2, 3})) - (w({1, 3, 2}) - w({2, 3, 1}));
  CHECK(base[0].lead == Word{3, 2, 1});
  CHECK(base[0].element() == element);
  CHECK(to_string(base[0].rhs) == "-v2*v3*v1 + v1*v3*v2 + v1*v2*v3");
  CHECK(base[1].lead == Word{3, 1, 2});
  CHECK_THROWS_AS(gb_multilinear(2), std::domain_error);
}

TEST_CASE("multilinear base at n = 4") {
  const RuleSet base = gb_multilinear(4);
  std::size_t g3 = 0, gm = 0;
  for (const auto& r : base.rules()) (r.family == Family::G3 ? g3 : gm) += 1;
  CHECK(g3 == 8);
  CHECK(gm == 1);
  const auto g4 = base.rule_for_lead(Word{3, 2, 4, 1});
  REQUIRE(g4.has_value());
  // 2[v3v2v4v1] - 2[v2v4v1v3], each bracket of a 4-word being (W + W^dagger)/2.
  const auto element = w({3, 2, 4, 1}) + w({1, 4, 2, 3}) - w({2, 4, 1, 3}) - w({3, 1, 4, 2});
  CHECK(base[*g4].element() == element);
  CHECK(base[*g4].rhs == w({3, 1, 4, 2}) + w({2, 4, 1, 3}) - w({1, 4, 2, 3}));
}

TEST_CASE("vector base at n = 2 and degree 3") {
  const RuleSet base = gb_vector(2, 3);
  REQUIRE(base.size() == 2);
  std::set<std::pair<Word, std::string>> rules;
  for (const auto& r : base.rules()) rules.insert({r.lead, to_string(r.rhs)});
  CHECK(rules.count({Word{2, 2, 1}, "v1*v2*v2"}) == 1);
  CHECK(rules.count({Word{2, 1, 1}, "v1*v1*v2"}) == 1);
  CHECK_THROWS_AS(gb_vector(0, 3), std::domain_error);
  CHECK_THROWS_AS(gb_vector(3, 2), std::domain_error);
}

TEST_CASE("index chains match brute-force enumeration") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 4; m <= 7; ++m) {
      const auto standard = vgm_index_tuples(n, m);
      const auto strict = vgm_index_tuples(n, m, ChainReading::strict_at_four);
      CHECK(std::set(standard.begin(), standard.end()) == chain_tuples(n, m, m >= 5));
      CHECK(std::set(strict.begin(), strict.end()) == chain_tuples(n, m, true));
    }
  }
  const auto five = vgm_index_tuples(3, 5);
  CHECK(five.empty());
  CHECK(vgm_index_tuples(3, 4) == std::vector<std::vector<int>>{{1, 2, 3, 3}});
  CHECK(vgm_index_tuples(3, 4, ChainReading::strict_at_four).empty());
}

TEST_CASE("VGm leading words") {
  const RuleSet base = gb_vector(5, 7);
  std::size_t seen = 0;
  for (const auto& r : base.rules()) {
    if (r.family != Family::VGm) continue;
    const auto& i = r.indices;
    Word expected = Word::letter(i[2]) * Word::letter(i[1]);
    for (std::size_t k = 3; k < i.size(); ++k) expected *= Word::letter(i[k]);
    expected *= Word::letter(i[0]);
    REQUIRE(r.lead == expected);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("base elements are monic, homogeneous and in the kernel") {
  for (const RuleSet& base : {gb_vector(4, 6), gb_multilinear(5)}) {
    for (const auto& r : base.rules()) {
      const auto e = r.element();
      REQUIRE(e.leading_word() == r.lead);
      REQUIRE(e.leading_coeff() == 1);
      REQUIRE(multidegree(e).size() == 1);
      REQUIRE(zero_test(e, 100, 3).passed());
    }
  }
}

TEST_CASE("leading words are pairwise factor-free") {
  for (int n = 1; n <= 5; ++n) {
    for (std::size_t d = 3; d <= 7; ++d) {
      const RuleSet base = gb_vector(n, d);
      for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t b = 0; b < base.size(); ++b) {
          if (a == b) continue;
          REQUIRE_FALSE(find_factor(base[b].lead, base[a].lead).has_value());
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    const RuleSet base = gb_multilinear(n);
    for (std::size_t a = 0; a < base.size(); ++a) {
      for (std::size_t b = 0; b < base.size(); ++b) {
        if (a != b) REQUIRE_FALSE(find_factor(base[b].lead, base[a].lead).has_value());
      }
    }
  }
}

TEST_CASE("multilinear base is the multilinear part of the vector base") {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::pair<Word, std::string>> general, multilinear;
    const RuleSet vector_base = gb_vector(n, static_cast<std::size_t>(n));
    const RuleSet multilinear_base = gb_multilinear(n);
    for (const auto& r : vector_base.rules()) {
      if (r.lead.is_multilinear()) general.insert({r.lead, to_string(r.rhs)});
    }
    for (const auto& r : multilinear_base.rules()) multilinear.insert({r.lead, to_string(r.rhs)});
    CHECK(general == multilinear);
  }
}

TEST_CASE("shifted bracket difference needs three indices") {
  CHECK_THROWS_AS(shifted_bracket_difference({1, 2}), std::domain_error);
  const auto three = shifted_bracket_difference({1, 2, 3});
  CHECK(three == (w({3, 2, 1}) - w({1, 2, 3})) - (w({2, 1, 3}) - w({3, 1, 2})));
  CHECK(three.leading_word() == gb_multilinear(3)[0].lead);
}
