#include "quatnf/rewrite.hpp"

#include <algorithm>
#include <string_view>
#include <tuple>

namespace quatnf {

std::string family_name(Family f) {
  switch (f) {
    case Family::V2: return "V2";
    case Family::V3: return "V3";
    case Family::V4: return "V4";
    case Family::Q0: return "Q0";
    case Family::Q1: return "Q1";
    case Family::Q2: return "Q2";
    case Family::Q3: return "Q3";
    case Family::Q4: return "Q4";
    case Family::G3: return "G3";
    case Family::Gm: return "Gm";
    case Family::VG3sq: return "VG3sq";
    case Family::VGm: return "VGm";
    case Family::Completed: return "completed";
  }
  return "?";
}

RationalPolynomial RewriteRule::element() const {
  return RationalPolynomial::term(lead) - rhs;
}

std::string RewriteRule::label() const {
  std::string name = family_name(family);
  if (family == Family::Gm) name = "G" + std::to_string(indices.size());
  if (family == Family::VGm) name = "VG" + std::to_string(indices.size());
  std::string out = name + "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  out += ')';
  if (shape) out += "#" + std::to_string(shape);
  return out;
}

RewriteRule make_rule(const RationalPolynomial& element, Family family, int shape,
                      std::vector<int> indices) {
  if (element.is_zero()) throw std::domain_error("cannot make a rule from the zero polynomial");
  RationalPolynomial monic = element;
  monic *= Rational(1) / element.leading_coeff();
  RewriteRule rule;
  rule.lead = monic.leading_word();
  rule.rhs = RationalPolynomial::term(rule.lead) - monic;
  rule.family = family;
  rule.shape = shape;
  rule.indices = std::move(indices);
  return rule;
}

RuleSet::RuleSet(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  std::stable_sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) {
    return std::forward_as_tuple(a.lead.degree(), a.family, a.shape, a.indices, a.lead) <
           std::forward_as_tuple(b.lead.degree(), b.family, b.shape, b.indices, b.lead);
  });
  for (std::size_t i = 0; i < rules_.size(); ++i) index_rule(i);
}

void RuleSet::append(RewriteRule rule) {
  rules_.push_back(std::move(rule));
  index_rule(rules_.size() - 1);
}

void RuleSet::index_rule(std::size_t i) {
  const Word& lead = rules_[i].lead;
  by_lead_.try_emplace(lead.bytes(), i);
  auto it = std::lower_bound(lead_lengths_.begin(), lead_lengths_.end(), lead.degree());
  if (it == lead_lengths_.end() || *it != lead.degree()) lead_lengths_.insert(it, lead.degree());
  max_degree_ = std::max(max_degree_, lead.degree());
}

std::optional<Match> RuleSet::find_leftmost(const Word& w) const {
  const std::string_view bytes = w.bytes();
  for (std::size_t pos = 0; pos <= bytes.size(); ++pos) {
    std::optional<std::size_t> best;
    for (std::size_t len : lead_lengths_) {
      if (pos + len > bytes.size()) break;
      auto it = by_lead_.find(bytes.substr(pos, len));
      if (it != by_lead_.end() && (!best || it->second < *best)) best = it->second;
    }
    if (best) return Match{pos, *best};
  }
  return std::nullopt;
}

std::vector<Match> RuleSet::all_matches(const Word& w) const {
  std::vector<Match> out;
  const std::string_view bytes = w.bytes();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const std::string& lead = rules_[i].lead.bytes();
    for (auto pos = bytes.find(lead); pos != std::string_view::npos; pos = bytes.find(lead, pos + 1)) {
      out.push_back(Match{pos, i});
      if (lead.empty()) break;
    }
  }
  return out;
}

std::optional<std::size_t> RuleSet::rule_for_lead(const Word& lead) const {
  auto it = by_lead_.find(std::string_view(lead.bytes()));
  if (it == by_lead_.end()) return std::nullopt;
  return it->second;
}

RuleSet RuleSet::without(std::size_t index) const {
  RuleSet out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i != index) out.append(rules_[i]);
  }
  return out;
}

std::optional<std::size_t> find_factor(const Word& w, const Word& lead) { return w.find(lead); }

namespace {

// Adds c * (prefix * rhs * suffix) for the match of `rule` at `pos` in `w`.
template <Coefficient C>
void add_rewrite(Polynomial<C>& target, const Word& w, const C& c, const RewriteRule& rule,
                 std::size_t pos) {
  const Word prefix = w.subword(0, pos);
  const Word suffix = w.subword(pos + rule.lead.degree());
  for (const auto& [rw, rc] : rule.rhs.terms()) {
    C t = c;
    t *= rc;
    target.add_term(prefix * rw * suffix, t);
  }
}

}  // namespace

template <Coefficient C>
std::pair<Polynomial<C>, bool> reduce_once(const Polynomial<C>& p, const RuleSet& base) {
  for (const auto& [w, c] : p.terms()) {
    auto m = base.find_leftmost(w);
    if (!m) continue;
    Polynomial<C> out = p;
    out.sub_term(w, c);
    add_rewrite(out, w, c, base[m->rule], m->position);
    return {std::move(out), true};
  }
  return {p, false};
}

template <Coefficient C>
Polynomial<C> normalize(const Polynomial<C>& p, const RuleSet& base) {
  // Every rewrite only produces words below the one it replaces, so popping
  // the leading term of the work list always visits the highest pending term.
  Polynomial<C> work = p;
  Polynomial<C> result;
  while (!work.is_zero()) {
    auto [w, c] = work.pop_leading();
    auto m = base.find_leftmost(w);
    if (!m) {
      result.push_back_lower(std::move(w), std::move(c));
      continue;
    }
    add_rewrite(work, w, c, base[m->rule], m->position);
  }
  return result;
}

template <Coefficient C>
Polynomial<C> normalize_randomized(const Polynomial<C>& p, const RuleSet& base, std::mt19937_64& rng) {
  Polynomial<C> cur = p;
  while (true) {
    std::vector<std::pair<const Word*, std::vector<Match>>> reducible;
    for (const auto& [w, c] : cur.terms()) {
      auto matches = base.all_matches(w);
      if (!matches.empty()) reducible.emplace_back(&w, std::move(matches));
    }
    if (reducible.empty()) return cur;
    auto& [wp, matches] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    const Match m = matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng)];
    const Word w = *wp;
    const C c = cur.coeff(w);
    cur.sub_term(w, c);
    add_rewrite(cur, w, c, base[m.rule], m.position);
  }
}

template std::pair<RationalPolynomial, bool> reduce_once(const RationalPolynomial&, const RuleSet&);
template std::pair<ScalarPolynomial, bool> reduce_once(const ScalarPolynomial&, const RuleSet&);
template RationalPolynomial normalize(const RationalPolynomial&, const RuleSet&);
template ScalarPolynomial normalize(const ScalarPolynomial&, const RuleSet&);
template RationalPolynomial normalize_randomized(const RationalPolynomial&, const RuleSet&, std::mt19937_64&);
template ScalarPolynomial normalize_randomized(const ScalarPolynomial&, const RuleSet&, std::mt19937_64&);

bool is_normal_structural(const Word& w, NormalMode mode) {
  if (mode == NormalMode::multilinear && !w.is_multilinear()) {
    throw std::domain_error("multilinear normality asked of a word with a repeated letter");
  }
  // Bottoms (z) sit exactly at descents. A bottom can never start a new
  // descent, since it would then have to be a peak as well.
  const std::size_t n = w.degree();
  std::vector<bool> bottom(n, false);
  for (std::size_t p = 1; p < n; ++p) {
    if (w[p - 1] > w[p]) {
      if (bottom[p - 1]) return false;
      bottom[p] = true;
    }
  }
  // The non-bottom letters (the Y blocks with their peaks) and the bottoms
  // each form a non-descending sequence; with distinct letters that is
  // ascending.
  int last_main = 0;
  int last_bottom = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const int l = w[p];
    int& last = bottom[p] ? last_bottom : last_main;
    if (l < last) return false;
    last = l;
  }
  if (mode == NormalMode::general) {
    // A peak must strictly exceed the trailing letter of a nonempty Y block
    // in front of it.
    for (std::size_t p = 2; p < n; ++p) {
      if (bottom[p] && !bottom[p - 2] && w[p - 2] >= w[p - 1]) return false;
    }
  }
  return true;
}

bool is_normal_factorfree(const Word& w, const RuleSet& base) { return !base.find_leftmost(w); }

std::vector<Obstruction> overlaps(const RuleSet& base, std::size_t max_degree) {
  std::vector<Obstruction> out;
  const auto& rules = base.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lead;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lead;
      const std::size_t shorter = std::min(la.degree(), lb.degree());
      for (std::size_t k = 1; k < shorter; ++k) {
        const std::size_t degree = la.degree() + lb.degree() - k;
        if (degree > max_degree) continue;
        if (la.bytes().compare(la.degree() - k, k, lb.bytes(), 0, k) != 0) continue;
        out.push_back(Obstruction{a, b, la * lb.subword(k), 0, la.degree() - k});
      }
      if (a == b || lb.degree() > la.degree() || la.degree() > max_degree) continue;
      if (la == lb && b < a) continue;
      for (auto pos = la.find(lb); pos; pos = la.find(lb, *pos + 1)) {
        out.push_back(Obstruction{a, b, la, 0, *pos});
        if (lb.empty()) break;
      }
    }
  }
  return out;
}

RationalPolynomial s_polynomial(const RuleSet& base, const Obstruction& ob) {
  RationalPolynomial out;
  const Rational one(1);
  add_rewrite(out, ob.overlap_word, one, base[ob.rule_a], ob.offset_a);
  add_rewrite(out, ob.overlap_word, Rational(-1), base[ob.rule_b], ob.offset_b);
  return out;
}

GroebnerReport check_groebner(const RuleSet& base, std::size_t max_degree,
                              const GroebnerCheckOptions& options) {
  GroebnerReport report;
  for (auto& ob : overlaps(base, max_degree)) {
    if (options.multilinear_only && !ob.overlap_word.is_multilinear()) continue;
    ++report.obstructions_checked;
    auto residue = normalize(s_polynomial(base, ob), base);
    if (!residue.is_zero()) report.residues.push_back(Residue{std::move(ob), std::move(residue)});
  }
  for (std::size_t i = 0; i < options.generators.size(); ++i) {
    const auto& g = options.generators[i];
    if (g.degree() > max_degree) continue;
    if (options.multilinear_only && !std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) {
          return t.first.is_multilinear();
        })) {
      continue;
    }
    ++report.generators_checked;
    auto residue = normalize(g, base);
    if (!residue.is_zero()) report.generator_residues.push_back(GeneratorResidue{i, std::move(residue)});
  }
  return report;
}

RuleSet complete(const std::vector<RationalPolynomial>& generators, std::size_t max_degree,
                 const CompletionOptions& options) {
  std::vector<std::vector<RationalPolynomial>> by_degree(max_degree + 1);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const std::size_t d = g.degree();
    for (const auto& [w, c] : g.terms()) {
      if (w.degree() != d) throw std::domain_error("completion needs homogeneous generators");
    }
    if (d <= max_degree) by_degree[d].push_back(g);
  }

  // With homogeneous input, S-polynomials of degree d only involve rules of
  // lower degree, and the degree-d round is plain elimination.
  RuleSet current;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    std::vector<RationalPolynomial> candidates = std::move(by_degree[d]);
    for (const auto& ob : overlaps(current, d)) {
      if (ob.overlap_word.degree() == d) candidates.push_back(s_polynomial(current, ob));
    }
    for (const auto& c : candidates) {
      auto r = normalize(c, current);
      if (r.is_zero()) continue;
      current.append(make_rule(r));
      if (current.size() > options.rule_cap) {
        throw CompletionLimitExceeded("completion exceeded the cap of " +
                                      std::to_string(options.rule_cap) + " rules");
      }
    }
  }
  return RuleSet(current.rules());
}

RuleSet inter_reduce(const RuleSet& base) {
  std::vector<RewriteRule> out = base.rules();
  for (auto& rule : out) rule.rhs = normalize(rule.rhs, base);
  return RuleSet(std::move(out));
}

}  // namespace quatnf
