// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "quatnf/corpus.hpp"
#include "quatnf/format.hpp"
#include "quatnf/oracle.hpp"
#include "quatnf/qvars.hpp"
#include "quatnf/rewrite.hpp"
#include "quatnf/syzygy.hpp"
#include "support.hpp"

using namespace quatnf;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

std::vector<RationalPolynomial> vector_generators(int n) {
  std::vector<RationalPolynomial> out;
  for (const auto& g : gen_vector_syzygies(n)) out.push_back(g.element);
  return out;
}

std::set<Word> leads(const RuleSet& base) {
  std::set<Word> out;
  for (const auto& r : base.rules()) out.insert(r.lead);
  return out;
}

// Words over 1..n with pairwise distinct letters, all lengths.
void injective_words(int n, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  for (int l = 1; l <= n; ++l) {
    if (std::find(cur.begin(), cur.end(), static_cast<Letter>(l)) != cur.end()) continue;
    Word next = cur * Word::letter(l);
    injective_words(n, next, out);
  }
}

void generator_soundness(Outcome& o) {
  std::size_t vector_count = 0, q_count = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : gen_vector_syzygies(n)) {
      ++vector_count;
      if (!zero_test(g.element, 100).passed()) o.fail("vector generator nonzero at n=" + std::to_string(n));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const RuleSet base = gb_vector(n, 4);
    for (const auto& g : gen_quaternion_syzygies(n)) {
      ++q_count;
      if (!normalize_q(g.element, base).is_zero()) o.fail("quaternionic generator " + to_string(g.element));
    }
  }
  if (o.passed) {
    o.detail << vector_count << " vector generators (n<=5) zero on 100 trials; " << q_count
             << " quaternionic generators (n<=4) normalize to 0";
  }
}

void groebner_general(Outcome& o) {
  for (auto [n, d] : {std::pair{2, 6}, {3, 6}, {4, 6}, {5, 5}}) {
    const auto report = check_groebner(gb_vector(n, d), d, {false, vector_generators(n)});
    o.detail << "(" << n << "," << d << "): " << report.obstructions_checked << " obstructions ";
    if (!report.confluent()) o.fail("nonzero residues at (" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
  if (o.passed) o.detail << "all reduce to 0, generators reduce to 0";
}

void groebner_multilinear(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    const auto report = check_groebner(gb_multilinear(n), 6, {true, vector_generators(n)});
    if (!report.confluent()) o.fail("nonzero residue at n=" + std::to_string(n));
  }
  const RuleSet full = gb_multilinear(4);
  const auto g4 = full.rule_for_lead(Word{3, 2, 4, 1});
  if (!g4) {
    o.fail("no rule with lead v3*v2*v4*v1");
    return;
  }
  const auto broken = check_groebner(full.without(*g4), 6, {true, vector_generators(4)});
  std::set<Word> residue_leads;
  for (const auto& r : broken.residues) residue_leads.insert(r.residue.leading_word());
  for (const auto& r : broken.generator_residues) residue_leads.insert(r.residue.leading_word());
  if (broken.confluent()) o.fail("dropping G4 left the check passing");
  if (residue_leads != std::set<Word>{Word{3, 2, 4, 1}}) o.fail("residues after dropping G4 lead elsewhere");
  if (o.passed) {
    o.detail << "n=3..5 confluent at degree <= 6; without G4: " << broken.residues.size() + broken.generator_residues.size()
             << " residues, all led by v3*v2*v4*v1";
  }
}

void completion_agreement(Outcome& o) {
  for (auto [n, d] : {std::pair{2, 5}, {3, 5}, {4, 4}}) {
    const RuleSet completed = complete(vector_generators(n), d);
    const bool same = leads(completed) == leads(gb_vector(n, d));
    o.detail << "(" << n << "," << d << "): " << completed.size() << " rules " << (same ? "agree " : "differ ");
    if (!same) o.fail("lead sets differ at (" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
}

void dimension_counts(Outcome& o) {
  for (auto [n, d] : {std::pair{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
    const auto r = dimension_check(n, d, vector_generators(n), gb_vector(n, std::max(d, 3)));
    o.detail << "(" << n << "," << d << "): " << r.rank_normal() << "/" << r.words << " ";
    if (!r.passed()) o.fail("count mismatch at (" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
  for (int n : {3, 4}) {
    const auto r = dimension_check(n, n, vector_generators(n), gb_multilinear(n), {true});
    o.detail << "multilinear n=" << n << ": " << r.rank_normal() << "/" << r.words << " ";
    if (!r.passed()) o.fail("multilinear count mismatch at n=" + std::to_string(n));
    if (n == 3 && (r.words != 6 || r.rank_normal() != 4)) o.fail("multilinear n=3 is not 4 normal of 6");
  }
}

void identity_corpus_check(Outcome& o) {
  const auto corpus = identity_corpus();
  std::map<std::pair<int, std::size_t>, RuleSet> bases;
  std::size_t failures = 0;
  for (const auto& id : corpus) {
    const int n = std::max<int>(1, id.element.max_letter());
    const std::size_t d = std::max<std::size_t>(3, id.element.degree());
    auto it = bases.find({n, d});
    if (it == bases.end()) it = bases.emplace(std::pair{n, d}, gb_vector(n, d)).first;
    const bool normal_zero = normalize(id.element, it->second).is_zero();
    const bool eval_zero = zero_test(id.element, 100).passed();
    if (!normal_zero || !eval_zero) {
      ++failures;
      if (failures <= 5) o.fail(id.name + (normal_zero ? "" : " has nonzero normal form") + (eval_zero ? "" : " evaluates nonzero"));
    }
  }
  if (o.passed) o.detail << corpus.size() << " identities normalize to 0 and pass 100 trials";
}

void confluence(Outcome& o) {
  std::map<int, RuleSet> bases;
  std::mt19937_64 rng(2024), choice(7);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const auto p = test::random_polynomial(rng, n, 5);
    auto it = bases.find(n);
    if (it == bases.end()) it = bases.emplace(n, gb_vector(n, 5)).first;
    if (normalize(p, it->second) != normalize_randomized(p, it->second, choice)) {
      o.fail("strategies disagree on " + to_string(p));
    }
  }
  if (o.passed) o.detail << "1000 random polynomials, identical normal forms";
}

void predicate_equivalence(Outcome& o) {
  const RuleSet general = gb_vector(4, 6);
  std::size_t count = 0;
  for (std::size_t d = 0; d <= 6; ++d) {
    for (const auto& x : all_words(4, d)) {
      ++count;
      if (is_normal_structural(x, NormalMode::general) != is_normal_factorfree(x, general)) {
        o.fail("general mode disagrees on " + to_string(x));
      }
    }
  }
  const RuleSet multilinear = gb_multilinear(4);
  std::vector<Word> words;
  Word empty;
  injective_words(4, empty, words);
  for (const auto& x : words) {
    if (is_normal_structural(x, NormalMode::multilinear) != is_normal_factorfree(x, multilinear)) {
      o.fail("multilinear mode disagrees on " + to_string(x));
    }
  }
  if (o.passed) o.detail << count << " words (general) and " << words.size() << " multilinear words agree";
}

void semantic_soundness(Outcome& o) {
  const RuleSet base = gb_vector(4, 6);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto p = test::random_polynomial(rng, 4, 6, 8);
    if (!zero_test(p - normalize(p, base), 50, static_cast<std::uint64_t>(t)).passed()) {
      o.fail("p - normalize(p) nonzero for " + to_string(p));
    }
  }
  if (o.passed) o.detail << "200 random polynomials, 50 assignments each";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"generator soundness", generator_soundness},
      {"Groebner property, general base", groebner_general},
      {"Groebner property, multilinear base", groebner_multilinear},
      {"completion agreement", completion_agreement},
      {"normal-form counting", dimension_counts},
      {"identity corpus", identity_corpus_check},
      {"confluence", confluence},
      {"predicate equivalence", predicate_equivalence},
      {"semantic soundness", semantic_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail.str() << " ["
              << std::fixed << std::setprecision(2) << elapsed.count() << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
