#include "quatnf/syzygy.hpp"

#include <stdexcept>

namespace quatnf {

namespace {

RationalPolynomial v(int i) { return RationalPolynomial::variable(i); }

Word word_of(const std::vector<int>& letters) {
  Word w;
  for (int l : letters) w *= Word::letter(l);
  return w;
}

// 2*[W] for the word with these letters.
RationalPolynomial twice_bracket(const std::vector<int>& letters) {
  return bracket(word_of(letters)) * Rational(2);
}

QPolynomial qp(int i, unsigned mask, int bit) { return QPolynomial::p(i, (mask >> bit) & 1U); }
QPolynomial qp_bar(int i, unsigned mask, int bit) { return QPolynomial::p(i, !((mask >> bit) & 1U)); }

}  // namespace

std::vector<GeneratorFamily> gen_vector_syzygies(int n) {
  if (n < 2) throw std::domain_error("vector syzygies need n >= 2");
  std::vector<GeneratorFamily> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({Family::V2, 0, {i, j}, v(i) * v(i) * v(j) - v(j) * v(i) * v(i)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto sym = v(i) * v(j) + v(j) * v(i);
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.push_back({Family::V3, 0, {i, j, k}, sym * v(k) - v(k) * sym});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == k) continue;
        const auto anti = v(i) * v(j) * v(k) - v(k) * v(j) * v(i);
        for (int l = 1; l <= n; ++l) {
          if (l == i || l == j || l == k) continue;
          out.push_back({Family::V4, 0, {i, j, k, l}, anti * v(l) - v(l) * anti});
        }
      }
    }
  }
  return out;
}

std::vector<QGeneratorFamily> gen_quaternion_syzygies(int n) {
  if (n < 2) throw std::domain_error("quaternion syzygies need n >= 2");
  std::vector<QGeneratorFamily> out;
  const auto q = [](int i) { return QPolynomial::q(i); };
  const auto qb = [](int i) { return QPolynomial::qbar(i); };

  for (int i = 1; i <= n; ++i) {
    out.push_back({Family::Q0, 0, {i}, q(i) * qb(i) - qb(i) * q(i)});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (unsigned mask = 0; mask < 2; ++mask) {
        const auto pj = qp(j, mask, 0);
        const auto sum = q(i) + qb(i);
        out.push_back({Family::Q1, static_cast<int>(mask), {i, j}, sum * pj - pj * sum});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (unsigned mask = 0; mask < 2; ++mask) {
        const auto pj = qp(j, mask, 0);
        const auto norm = q(i) * qb(i);
        out.push_back({Family::Q2, static_cast<int>(mask), {i, j}, norm * pj - pj * norm});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        for (unsigned mask = 0; mask < 8; ++mask) {
          const auto inner = qp(i, mask, 0) * qp(j, mask, 1) + qp_bar(j, mask, 1) * qp_bar(i, mask, 0);
          const auto pk = qp(k, mask, 2);
          out.push_back({Family::Q3, static_cast<int>(mask), {i, j, k}, inner * pk - pk * inner});
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          for (unsigned mask = 0; mask < 16; ++mask) {
            const auto inner = qp(i, mask, 0) * qp(j, mask, 1) * qp(k, mask, 2) +
                               qp_bar(k, mask, 2) * qp_bar(j, mask, 1) * qp_bar(i, mask, 0);
            const auto pl = qp(l, mask, 3);
            out.push_back({Family::Q4, static_cast<int>(mask), {i, j, k, l}, inner * pl - pl * inner});
          }
        }
      }
    }
  }
  return out;
}

RationalPolynomial shifted_bracket_difference(const std::vector<int>& idx) {
  if (idx.size() < 3) throw std::domain_error("shifted bracket difference needs at least 3 indices");
  std::vector<int> first{idx[2], idx[1]};
  std::vector<int> second{idx[1]};
  for (std::size_t t = 3; t < idx.size(); ++t) {
    first.push_back(idx[t]);
    second.push_back(idx[t]);
  }
  first.push_back(idx[0]);
  second.push_back(idx[0]);
  second.push_back(idx[2]);
  return twice_bracket(first) - twice_bracket(second);
}

namespace {

// The two G3 shapes for i1 < i2 < i3.
void push_g3(std::vector<RewriteRule>& rules, int i1, int i2, int i3) {
  rules.push_back(make_rule(twice_bracket({i3, i2, i1}) - twice_bracket({i1, i3, i2}), Family::G3, 1,
                            {i1, i2, i3}));
  rules.push_back(make_rule(twice_bracket({i3, i1, i2}) - twice_bracket({i2, i3, i1}), Family::G3, 2,
                            {i1, i2, i3}));
}

void strict_tuples(int n, int m, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i <= n; ++i) {
    cur.push_back(i);
    strict_tuples(n, m, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

RuleSet gb_multilinear(int n) {
  if (n < 3) throw std::domain_error("multilinear base needs n >= 3");
  std::vector<RewriteRule> rules;
  for (int m = 3; m <= n; ++m) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    strict_tuples(n, m, 1, cur, tuples);
    for (const auto& t : tuples) {
      if (m == 3) {
        push_g3(rules, t[0], t[1], t[2]);
      } else {
        rules.push_back(make_rule(shifted_bracket_difference(t), Family::Gm, 0, t));
      }
    }
  }
  return RuleSet(std::move(rules));
}

std::vector<std::vector<int>> vgm_index_tuples(int n, int m, ChainReading reading) {
  std::vector<std::vector<int>> out;
  if (m < 4) return out;
  std::vector<std::vector<int>> heads;
  std::vector<int> cur;
  strict_tuples(n, 3, 1, cur, heads);
  for (const auto& head : heads) {
    // Extend with i4 <= ... <= i_m, all >= i3, the last one strict.
    std::vector<int> t = head;
    auto extend = [&](auto&& self) -> void {
      const int pos = static_cast<int>(t.size());
      if (pos == m) {
        out.push_back(t);
        return;
      }
      const bool last = pos == m - 1;
      const bool strict = last && (m > 4 || reading == ChainReading::strict_at_four);
      for (int i = t.back() + (strict ? 1 : 0); i <= n; ++i) {
        t.push_back(i);
        self(self);
        t.pop_back();
      }
    };
    extend(extend);
  }
  return out;
}

RuleSet gb_vector(int n, std::size_t max_degree, ChainReading reading) {
  if (n < 1) throw std::domain_error("vector base needs n >= 1");
  if (max_degree < 3) throw std::domain_error("vector base needs max_degree >= 3");
  std::vector<RewriteRule> rules;
  for (int i1 = 1; i1 <= n; ++i1) {
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      for (int i3 = i2 + 1; i3 <= n; ++i3) push_g3(rules, i1, i2, i3);
      rules.push_back(make_rule(v(i2) * v(i2) * v(i1) - v(i1) * v(i2) * v(i2), Family::VG3sq, 1, {i1, i2}));
      rules.push_back(make_rule(v(i2) * v(i1) * v(i1) - v(i1) * v(i1) * v(i2), Family::VG3sq, 2, {i1, i2}));
    }
  }
  for (int m = 4; m <= static_cast<int>(max_degree); ++m) {
    for (const auto& t : vgm_index_tuples(n, m, reading)) {
      rules.push_back(make_rule(shifted_bracket_difference(t), Family::VGm, 0, t));
    }
  }
  return RuleSet(std::move(rules));
}

}  // namespace quatnf
