#include "quatnf/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace quatnf {

std::ostream& operator<<(std::ostream& os, const RationalQuaternion& q) {
  return os << '(' << to_string(q.a) << ", " << to_string(q.b) << ", " << to_string(q.c) << ", " << to_string(q.d)
            << ')';
}

std::string to_string(const RationalQuaternion& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace {

using IntegerQuaternion = Quaternion<Integer>;

bool integral(const Assignment& a) {
  return std::all_of(a.vectors.begin(), a.vectors.end(), [](const RationalQuaternion& q) {
    return q.a.get_den() == 1 && q.b.get_den() == 1 && q.c.get_den() == 1 && q.d.get_den() == 1;
  });
}

IntegerQuaternion to_integer(const RationalQuaternion& q) {
  return {q.a.get_num(), q.b.get_num(), q.c.get_num(), q.d.get_num()};
}

// Sum of coeff * value(word), computing word values with shared prefixes.
template <class T>
RationalQuaternion sum_terms(std::vector<std::pair<std::string, Rational>> terms, const std::vector<Quaternion<T>>& letters) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  Integer den = 1;
  for (const auto& [w, c] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

  std::vector<Quaternion<T>> prefix{Quaternion<T>::identity()};
  const std::string* previous = nullptr;
  Quaternion<T> acc;
  for (const auto& [w, c] : terms) {
    std::size_t common = 0;
    if (previous != nullptr) {
      const std::size_t limit = std::min(previous->size(), w.size());
      while (common < limit && (*previous)[common] == w[common]) ++common;
    }
    prefix.resize(common + 1);
    for (std::size_t i = common; i < w.size(); ++i) {
      prefix.push_back(qmul(prefix.back(), letters[static_cast<Letter>(w[i]) - 1]));
    }
    const Integer scaled = c.get_num() * (den / c.get_den());
    acc += prefix.back() * T(scaled);
    previous = &w;
  }

  RationalQuaternion out{Rational(acc.a), Rational(acc.b), Rational(acc.c), Rational(acc.d)};
  out *= Rational(1, den);
  out.a.canonicalize();
  out.b.canonicalize();
  out.c.canonicalize();
  out.d.canonicalize();
  return out;
}

RationalQuaternion evaluate_terms(std::vector<std::pair<std::string, Rational>> terms, const Assignment& a) {
  for (const auto& [w, c] : terms) {
    for (char l : w) {
      if (static_cast<Letter>(l) > a.vectors.size()) {
        throw std::domain_error("no value for v" + std::to_string(static_cast<Letter>(l)));
      }
    }
  }
  if (integral(a)) {
    std::vector<IntegerQuaternion> letters;
    letters.reserve(a.vectors.size());
    for (const auto& q : a.vectors) letters.push_back(to_integer(q));
    return sum_terms(std::move(terms), letters);
  }
  return sum_terms(std::move(terms), a.vectors);
}

int draw(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(-9, 9)(rng); }

template <class P>
ZeroTestResult zero_test_impl(const P& p, std::size_t trials, std::uint64_t seed, int scalars) {
  if (trials < 1) throw std::invalid_argument("zero test needs at least one trial");
  const int n = std::max<int>(1, p.max_letter());
  ZeroTestResult result;
  for (std::size_t t = 0; t < trials; ++t) {
    ++result.trials;
    Assignment a = random_assignment(n, trial_seed(seed, t), scalars);
    RationalQuaternion value = evaluate(p, a);
    if (!value.is_zero()) {
      result.witness_trial = t;
      result.witness = std::move(a);
      result.witness_value = std::move(value);
      break;
    }
  }
  return result;
}

}  // namespace

RationalQuaternion evaluate(const RationalPolynomial& p, const Assignment& a) {
  std::vector<std::pair<std::string, Rational>> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p.terms()) terms.emplace_back(w.bytes(), c);
  return evaluate_terms(std::move(terms), a);
}

RationalQuaternion evaluate(const ScalarPolynomial& p, const Assignment& a) {
  std::vector<std::pair<std::string, Rational>> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p.terms()) {
    Rational value = c.evaluate(a.scalars);
    if (!is_zero(value)) terms.emplace_back(w.bytes(), std::move(value));
  }
  return evaluate_terms(std::move(terms), a);
}

Assignment random_assignment(int n, std::uint64_t seed, int scalars) {
  if (scalars < 0) scalars = n;
  std::mt19937_64 rng(seed);
  Assignment a;
  a.vectors.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    int x = 0, y = 0, z = 0;
    while (x == 0 && y == 0 && z == 0) {
      x = draw(rng);
      y = draw(rng);
      z = draw(rng);
    }
    a.vectors.push_back(RationalQuaternion::pure(x, y, z));
  }
  for (int i = 0; i < scalars; ++i) a.scalars.emplace_back(draw(rng));
  return a;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ZeroTestResult zero_test(const RationalPolynomial& p, std::size_t trials, std::uint64_t seed) {
  return zero_test_impl(p, trials, seed, 0);
}

ZeroTestResult zero_test(const ScalarPolynomial& p, std::size_t trials, std::uint64_t seed) {
  int scalars = 0;
  for (const auto& [w, c] : p.terms()) scalars = std::max(scalars, c.max_symbol());
  return zero_test_impl(p, trials, seed, scalars);
}

namespace {

using Row = std::map<Word, Integer, std::greater<>>;

Row integer_row(const RationalPolynomial& p) {
  Integer den = 1;
  for (const auto& [w, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Row row;
  for (const auto& [w, c] : p.terms()) row.emplace(w, c.get_num() * (den / c.get_den()));
  return row;
}

void make_primitive(Row& row) {
  Integer g = 0;
  for (const auto& [w, c] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  const bool flip = row.begin()->second < 0;
  if (g != 1 || flip) {
    if (flip) g = -g;
    for (auto& [w, c] : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// row := pivot_lead * row - row_lead * pivot, which cancels the lead.
void eliminate(Row& row, const Row& pivot) {
  const Integer a = pivot.begin()->second;
  const Integer b = row.begin()->second;
  for (auto& [w, c] : row) c *= a;
  for (const auto& [w, c] : pivot) {
    auto [it, inserted] = row.try_emplace(w, 0);
    it->second -= b * c;
    if (it->second == 0) row.erase(it);
  }
}

// Fraction-free row echelon form keyed by leading word.
class Echelon {
 public:
  void insert(const RationalPolynomial& p) {
    Row row = integer_row(p);
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) {
        make_primitive(row);
        Word lead = row.begin()->first;
        pivots_.emplace(std::move(lead), std::move(row));
        return;
      }
      eliminate(row, it->second);
      if (!row.empty()) make_primitive(row);
    }
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::set<Word> leads() const {
    std::set<Word> out;
    for (const auto& [w, r] : pivots_) out.insert(w);
    return out;
  }

 private:
  std::map<Word, Row, std::greater<>> pivots_;
};

std::vector<Word> permutations_of(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out;
  do {
    Word w;
    for (int l : letters) w *= Word::letter(l);
    out.push_back(std::move(w));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

DimensionReport dimension_check(int n, std::size_t d, const std::vector<RationalPolynomial>& generators,
                                const RuleSet& base, const DimensionOptions& options) {
  if (n < 1) throw std::domain_error("dimension check needs n >= 1");
  DimensionReport report;
  report.n = n;
  report.degree = d;
  report.multilinear = options.multilinear;

  std::vector<Word> words;
  if (options.multilinear) {
    if (d > static_cast<std::size_t>(n)) throw std::domain_error("multilinear dimension check needs d <= n");
    std::size_t count = 1;
    for (std::size_t i = 2; i <= d; ++i) {
      count *= i;
      if (count > options.guard) throw std::domain_error("dimension check exceeds the word guard");
    }
    words = permutation_words(d);
  } else {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      count *= static_cast<std::size_t>(n);
      if (count > options.guard) throw std::domain_error("dimension check exceeds the word guard");
    }
    words = all_words(n, d);
  }
  report.words = words.size();

  Echelon echelon;
  for (const auto& g : generators) {
    if (g.is_zero() || g.degree() > d || g.max_letter() > n) continue;
    const std::size_t e = g.degree();
    if (options.multilinear) {
      const Word& lead = g.leading_word();
      if (!lead.is_multilinear() || lead.max_letter() > d) continue;
      std::vector<int> rest;
      for (int l = 1; l <= static_cast<int>(d); ++l) {
        if (!lead.find(Word::letter(l)).has_value()) rest.push_back(l);
      }
      for (const Word& perm : permutations_of(rest)) {
        for (std::size_t k = 0; k <= perm.degree(); ++k) {
          const auto left = RationalPolynomial::term(perm.subword(0, k));
          const auto right = RationalPolynomial::term(perm.subword(k, perm.degree() - k));
          echelon.insert(left * g * right);
        }
      }
    } else {
      for (std::size_t k = 0; k + e <= d; ++k) {
        for (const Word& w1 : all_words(n, k)) {
          const auto left = RationalPolynomial::term(w1);
          const auto lg = left * g;
          for (const Word& w2 : all_words(n, d - e - k)) echelon.insert(lg * RationalPolynomial::term(w2));
        }
      }
    }
  }
  report.rank = echelon.rank();

  const NormalMode mode = options.multilinear ? NormalMode::multilinear : NormalMode::general;
  std::set<Word> reducible;
  for (const Word& w : words) {
    if (is_normal_factorfree(w, base)) {
      ++report.factorfree_normal;
    } else {
      reducible.insert(w);
    }
    if (is_normal_structural(w, mode)) ++report.structural_normal;
  }
  report.leads_match = echelon.leads() == reducible;
  return report;
}

}  // namespace quatnf
