#include "quatnf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quatnf/corpus.hpp"
#include "quatnf/format.hpp"
#include "quatnf/oracle.hpp"
#include "quatnf/parser.hpp"
#include "quatnf/qvars.hpp"
#include "quatnf/syzygy.hpp"

namespace quatnf::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int vars = 0;
  int max_deg = 0;
  int deg = 0;
  int max_n = 6;
  int trials = 100;
  std::uint64_t seed = 0;
  std::size_t cap = 100000;
  bool multilinear = false;
  bool tail_reduce = false;
  bool strict_chain = false;
  bool compare = false;
  std::vector<std::string> drop;
  std::vector<std::string> exprs;
};

std::vector<std::string> expressions(const Options& o, const std::string& input) {
  if (!o.exprs.empty() && !(o.exprs.size() == 1 && o.exprs[0] == "-")) return o.exprs;
  std::vector<std::string> out;
  std::istringstream in(input);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  if (out.empty()) throw UsageError("no expression given");
  return out;
}

void require_vars(const Options& o, int minimum) {
  if (o.vars < minimum) throw UsageError("--vars must be at least " + std::to_string(minimum));
}

std::string rule_line(const RewriteRule& r) { return to_string(r.lead) + " -> " + to_string(r.rhs); }

std::string base_text(const RuleSet& base) {
  std::string out;
  for (const auto& r : base.rules()) out += rule_line(r) + "\n";
  return out;
}

RuleSet vector_base(const Options& o, std::size_t degree) {
  const auto reading = o.strict_chain ? ChainReading::strict_at_four : ChainReading::standard;
  RuleSet base = gb_vector(o.vars, std::max<std::size_t>(degree, 3), reading);
  return o.tail_reduce ? inter_reduce(base) : base;
}

std::size_t degree_bound(const Options& o, std::size_t input_degree) {
  if (o.max_deg == 0) return input_degree;
  if (static_cast<std::size_t>(o.max_deg) < input_degree) {
    throw UsageError("expression degree " + std::to_string(input_degree) + " exceeds --max-deg");
  }
  return static_cast<std::size_t>(o.max_deg);
}

Word parse_word(const std::string& text, int vars) {
  const RationalPolynomial p = parse_vector_polynomial(text);
  if (p.size() != 1 || p.leading_coeff() != 1) throw UsageError("expected a single word, got '" + text + "'");
  if (p.max_letter() > vars) throw UsageError("'" + text + "' uses a variable above --vars");
  return p.leading_word();
}

Result cmd_normalize(const Options& o, const std::string& input) {
  require_vars(o, 1);
  Result r;
  for (const auto& text : expressions(o, input)) {
    const ParsedExpression e = parse_expression(text);
    if (e.quaternionic) {
      const QPolynomial q = e.q_polynomial();
      if (q.max_index() > o.vars) throw UsageError("'" + text + "' uses a variable above --vars");
      const std::size_t d = degree_bound(o, q.degree());
      r.out += to_string(normalize_q(q, vector_base(o, d))) + "\n";
      continue;
    }
    if (e.value.max_letter() > o.vars) throw UsageError("'" + text + "' uses a variable above --vars");
    const RuleSet base = vector_base(o, degree_bound(o, e.value.degree()));
    if (e.has_scalar_symbols()) {
      r.out += to_string(normalize(e.value, base)) + "\n";
    } else {
      r.out += to_string(normalize(e.vector_polynomial(), base)) + "\n";
    }
  }
  return r;
}

Result cmd_check_normal(const Options& o, const std::string& input) {
  require_vars(o, 1);
  Result r;
  for (const auto& text : expressions(o, input)) {
    const Word w = parse_word(text, o.vars);
    const RuleSet base = o.multilinear ? gb_multilinear(std::max(o.vars, 3)) : vector_base(o, w.degree());
    const auto mode = o.multilinear ? NormalMode::multilinear : NormalMode::general;
    if (o.multilinear && !w.is_multilinear()) throw UsageError("'" + text + "' repeats a variable");
    const bool structural = is_normal_structural(w, mode);
    const auto match = base.find_leftmost(w);
    std::string line = to_string(w) + ": ";
    if (match) {
      line += "not normal, contains " + to_string(base[match->rule].lead) + " at " + std::to_string(match->position);
    } else {
      line += "normal";
    }
    if (structural == match.has_value()) {
      line += " (structural predicate disagrees)";
      r.exit_code = 1;
    }
    r.out += line + "\n";
  }
  return r;
}

Result cmd_gb(const Options& o) {
  Result r;
  if (o.multilinear) {
    require_vars(o, 3);
    const RuleSet base = gb_multilinear(o.vars);
    r.out = base_text(o.tail_reduce ? inter_reduce(base) : base);
    return r;
  }
  require_vars(o, 1);
  if (o.max_deg < 3) throw UsageError("--max-deg must be at least 3");
  r.out = base_text(vector_base(o, static_cast<std::size_t>(o.max_deg)));
  return r;
}

Result cmd_verify_groebner(const Options& o) {
  require_vars(o, o.multilinear ? 3 : 1);
  if (o.max_deg < 3) throw UsageError("--max-deg must be at least 3");
  const auto d = static_cast<std::size_t>(o.max_deg);
  RuleSet base = o.multilinear ? gb_multilinear(o.vars) : vector_base(o, d);
  for (const auto& text : o.drop) {
    const Word lead = parse_word(text, o.vars);
    const auto index = base.rule_for_lead(lead);
    if (!index) throw UsageError("no rule with lead " + to_string(lead));
    base = base.without(*index);
  }
  GroebnerCheckOptions options{o.multilinear, {}};
  std::vector<GeneratorFamily> gens;
  if (o.vars >= 2) gens = gen_vector_syzygies(o.vars);
  for (const auto& g : gens) options.generators.push_back(g.element);
  const GroebnerReport report = check_groebner(base, d, options);
  Result r;
  r.out = std::to_string(base.size()) + " rules, " + std::to_string(report.obstructions_checked) +
          " obstructions up to degree " + std::to_string(d) + ", " + std::to_string(report.generators_checked) +
          " generators\n";
  r.out += report.generator_residues.empty() ? "all generators reduce to 0\n" : "";
  r.out += report.residues.empty() ? "all S-polynomials reduce to 0\n" : "";
  if (report.confluent()) return r;
  for (const auto& res : report.generator_residues) {
    const auto& g = gens[res.generator];
    std::string label = family_name(g.family) + "(";
    for (std::size_t i = 0; i < g.indices.size(); ++i) label += (i ? "," : "") + std::to_string(g.indices[i]);
    r.out += "generator " + label + ") residue: " + to_string(res.residue) + "\n";
  }
  for (const auto& res : report.residues) {
    r.out += "residue at " + to_string(res.obstruction.overlap_word) + " (" + base[res.obstruction.rule_a].label() +
             ", " + base[res.obstruction.rule_b].label() + "): " + to_string(res.residue) + "\n";
  }
  r.out += std::to_string(report.residues.size() + report.generator_residues.size()) + " nonzero residues\n";
  r.exit_code = 1;
  return r;
}

std::string assignment_text(const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    out += (i ? ", v" : "v") + std::to_string(i + 1) + " = " + to_string(a.vectors[i]);
  }
  for (std::size_t i = 0; i < a.scalars.size(); ++i) out += ", s" + std::to_string(i + 1) + " = " + to_string(a.scalars[i]);
  return out;
}

Result cmd_zero_test(const Options& o, const std::string& input) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  Result r;
  for (const auto& text : expressions(o, input)) {
    const ParsedExpression e = parse_expression(text);
    const ScalarPolynomial p = e.quaternionic ? split(e.q_polynomial()) : e.value;
    const ZeroTestResult z = zero_test(p, static_cast<std::size_t>(o.trials), o.seed);
    if (z.passed()) {
      r.out += "zero on all " + std::to_string(z.trials) + " trials\n";
    } else {
      r.out += "counterexample at trial " + std::to_string(*z.witness_trial) + ": " + assignment_text(*z.witness) +
               " gives " + to_string(z.witness_value) + "\n";
      r.exit_code = 1;
    }
  }
  return r;
}

Result cmd_dim_check(const Options& o) {
  require_vars(o, o.multilinear ? 3 : 2);
  const int d = o.multilinear ? (o.deg == 0 ? o.vars : o.deg) : o.deg;
  if (d < 1) throw UsageError("--deg must be at least 1");
  std::vector<RationalPolynomial> gens;
  for (auto& g : gen_vector_syzygies(o.vars)) gens.push_back(std::move(g.element));
  const RuleSet base = o.multilinear ? gb_multilinear(o.vars) : gb_vector(o.vars, std::max(d, 3));
  DimensionOptions options;
  options.multilinear = o.multilinear;
  const DimensionReport rep = dimension_check(o.vars, static_cast<std::size_t>(d), gens, base, options);
  Result r;
  r.out = std::string(o.multilinear ? "multilinear " : "") + "n=" + std::to_string(rep.n) +
          " d=" + std::to_string(rep.degree) + ": " + std::to_string(rep.words) + " words, rank " +
          std::to_string(rep.rank) + ", normal by rank " + std::to_string(rep.rank_normal()) + ", factor-free " +
          std::to_string(rep.factorfree_normal) + ", structural " + std::to_string(rep.structural_normal) +
          ", leading words " + (rep.leads_match ? "match" : "differ") + "\n";
  r.out += rep.passed() ? "counts agree\n" : "counts disagree\n";
  r.exit_code = rep.passed() ? 0 : 1;
  return r;
}

Result cmd_identities(const Options& o) {
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const std::vector<Identity> corpus = identity_corpus(o.max_n, o.seed);
  std::map<std::pair<int, std::size_t>, RuleSet> bases;
  struct Tally {
    std::size_t count = 0;
    std::vector<std::string> normal_failures, zero_failures;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  for (const auto& id : corpus) {
    if (!tallies.count(id.family)) order.push_back(id.family);
    Tally& t = tallies[id.family];
    ++t.count;
    const int n = std::max<int>(1, id.element.max_letter());
    const std::size_t d = std::max<std::size_t>(3, id.element.degree());
    auto it = bases.find({n, d});
    if (it == bases.end()) it = bases.emplace(std::pair{n, d}, gb_vector(n, d)).first;
    if (!normalize(id.element, it->second).is_zero()) t.normal_failures.push_back(id.name);
    if (!zero_test(id.element, static_cast<std::size_t>(o.trials), o.seed).passed()) t.zero_failures.push_back(id.name);
  }
  Result r;
  for (const auto& family : order) {
    const Tally& t = tallies[family];
    const bool ok = t.normal_failures.empty() && t.zero_failures.empty();
    r.out += (ok ? "pass " : "FAIL ") + family + ": " + std::to_string(t.count) + " instances";
    if (ok) {
      r.out += ", normal form 0, zero test " + std::to_string(o.trials) + " trials\n";
      continue;
    }
    r.exit_code = 1;
    r.out += "\n";
    for (const auto& name : t.normal_failures) r.out += "  nonzero normal form: " + name + "\n";
    for (const auto& name : t.zero_failures) r.out += "  nonzero evaluation: " + name + "\n";
  }
  return r;
}

Result cmd_complete(const Options& o) {
  require_vars(o, 2);
  if (o.max_deg < 3) throw UsageError("--max-deg must be at least 3");
  const auto d = static_cast<std::size_t>(o.max_deg);
  std::vector<RationalPolynomial> gens;
  for (auto& g : gen_vector_syzygies(o.vars)) gens.push_back(std::move(g.element));
  Result r;
  RuleSet completed;
  try {
    completed = complete(gens, d, {o.cap});
  } catch (const CompletionLimitExceeded& e) {
    r.err = std::string(e.what()) + "\n";
    r.exit_code = 1;
    return r;
  }
  r.out = base_text(completed);
  if (o.compare) {
    std::set<Word> got, want;
    for (const auto& rule : completed.rules()) got.insert(rule.lead);
    const RuleSet closed = vector_base(o, d);
    for (const auto& rule : closed.rules()) want.insert(rule.lead);
    for (const auto& w : got) {
      if (!want.count(w)) r.out += "only in completion: " + to_string(w) + "\n";
    }
    for (const auto& w : want) {
      if (!got.count(w)) r.out += "only in closed form: " + to_string(w) + "\n";
    }
    const bool same = got == want;
    r.out += same ? "leading words agree\n" : "leading words differ\n";
    r.exit_code = same ? 0 : 1;
  }
  return r;
}

}  // namespace

Result run(const std::vector<std::string>& args, const std::string& input) {
  CLI::App app{"Normal forms in quaternionic polynomial rings", "quatnf"};
  app.require_subcommand(1);
  Options o;

  auto vars = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--vars", o.vars, "number of vector variables");
    if (required) opt->required();
  };
  auto seeded = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
    c->add_option("--trials", o.trials, "random assignments per test")->capture_default_str();
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of each expression");
  vars(normalize_cmd, true);
  normalize_cmd->add_option("--max-deg", o.max_deg, "degree bound of the base (default: input degree)");
  normalize_cmd->add_flag("--tail-reduce", o.tail_reduce, "inter-reduce the base first");
  normalize_cmd->add_flag("--strict-chain", o.strict_chain, "use the strict index chain at degree 4");
  normalize_cmd->add_option("expr", o.exprs, "expressions (default: one per stdin line)");

  auto* check_cmd = app.add_subcommand("check-normal", "test whether words are normal");
  vars(check_cmd, true);
  check_cmd->add_flag("--multilinear", o.multilinear, "use the multilinear base and predicate");
  check_cmd->add_option("word", o.exprs, "words (default: one per stdin line)");

  auto* gb_cmd = app.add_subcommand("gb", "print the base, one rule per line");
  vars(gb_cmd, true);
  gb_cmd->add_option("--max-deg", o.max_deg, "largest rule degree");
  gb_cmd->add_flag("--multilinear", o.multilinear, "multilinear base");
  gb_cmd->add_flag("--tail-reduce", o.tail_reduce, "inter-reduce rule tails");
  gb_cmd->add_flag("--strict-chain", o.strict_chain, "use the strict index chain at degree 4");

  auto* verify_cmd = app.add_subcommand("verify-groebner", "reduce every S-polynomial of the base");
  vars(verify_cmd, true);
  verify_cmd->add_option("--max-deg", o.max_deg, "largest overlap degree")->required();
  verify_cmd->add_flag("--multilinear", o.multilinear, "multilinear base, overlaps without repeated letters");
  verify_cmd->add_flag("--strict-chain", o.strict_chain, "use the strict index chain at degree 4");
  verify_cmd->add_option("--drop", o.drop, "remove the rule with this lead first");

  auto* zero_cmd = app.add_subcommand("zero-test", "evaluate at random quaternion assignments");
  seeded(zero_cmd);
  zero_cmd->add_option("expr", o.exprs, "expressions (default: one per stdin line)");

  auto* dim_cmd = app.add_subcommand("dim-check", "count normal words by exact rank");
  vars(dim_cmd, true);
  dim_cmd->add_option("--deg", o.deg, "word degree (multilinear default: --vars)");
  dim_cmd->add_flag("--multilinear", o.multilinear, "permutation words of 1..deg");

  auto* ids_cmd = app.add_subcommand("identities", "check the identity corpus");
  ids_cmd->add_option("--max-n", o.max_n, "largest variable index")->capture_default_str();
  seeded(ids_cmd);

  auto* complete_cmd = app.add_subcommand("complete", "complete the vector generators degree by degree");
  vars(complete_cmd, true);
  complete_cmd->add_option("--max-deg", o.max_deg, "degree bound")->required();
  complete_cmd->add_option("--cap", o.cap, "rule count limit")->capture_default_str();
  complete_cmd->add_flag("--compare", o.compare, "compare leading words with the closed-form base");
  complete_cmd->add_flag("--strict-chain", o.strict_chain, "compare against the strict index chain");

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    if (normalize_cmd->parsed()) return cmd_normalize(o, input);
    if (check_cmd->parsed()) return cmd_check_normal(o, input);
    if (gb_cmd->parsed()) return cmd_gb(o);
    if (verify_cmd->parsed()) return cmd_verify_groebner(o);
    if (zero_cmd->parsed()) return cmd_zero_test(o, input);
    if (dim_cmd->parsed()) return cmd_dim_check(o);
    if (ids_cmd->parsed()) return cmd_identities(o);
    if (complete_cmd->parsed()) return cmd_complete(o);
  } catch (const ParseError& e) {
    return {2, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
  return {2, "", "error: no command\n"};
}

}  // namespace quatnf::cli
