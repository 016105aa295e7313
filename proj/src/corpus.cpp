#include "quatnf/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace quatnf {

namespace {

using Poly = RationalPolynomial;
using Indices = std::vector<int>;

Poly v(int i) { return Poly::variable(i); }

Poly word(const Indices& idx) {
  Word w;
  for (int i : idx) w *= Word::letter(i);
  return Poly::term(std::move(w));
}

Poly br(const Poly& p) { return bracket(p); }
Poly br(const Indices& idx) { return bracket(word(idx)); }
Poly vec(const Poly& p) { return vector_part(p); }
Poly half(const Poly& p) { return p * Rational(1, 2); }

Indices reversed(Indices idx) {
  std::reverse(idx.begin(), idx.end());
  return idx;
}

Indices concat(std::initializer_list<Indices> parts) {
  Indices out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string label(const std::string& family, const Indices& idx) {
  std::string out = family + "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(idx[i]);
  }
  return out + ")";
}

// Every tuple in {1..n}^k.
void for_each_tuple(int n, int k, const std::function<void(const Indices&)>& f) {
  Indices t(static_cast<std::size_t>(k), 1);
  while (true) {
    f(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n) t[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) return;
    ++t[static_cast<std::size_t>(pos)];
  }
}

class Builder {
 public:
  explicit Builder(std::vector<Identity>& out) : out_(out) {}

  void add(const std::string& family, const Indices& idx, Poly element) {
    out_.push_back({family, label(family, idx), std::move(element)});
  }

 private:
  std::vector<Identity>& out_;
};

// Sign of the permutation that lists `chosen` positions first, then the rest.
int bipartition_sign(const std::vector<std::size_t>& chosen) {
  std::size_t inversions = 0;
  for (std::size_t r = 0; r < chosen.size(); ++r) inversions += chosen[r] - r;
  return inversions % 2 == 0 ? 1 : -1;
}

// Sum over all (h, m-h) bipartitions of `seq` of sign * f(first, second).
Poly bipartition_sum(const Indices& seq, std::size_t h, const std::function<Poly(const Indices&, const Indices&)>& f) {
  const std::size_t m = seq.size();
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(h), true);
  Poly sum;
  do {
    Indices first, second;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) {
        first.push_back(seq[i]);
        chosen.push_back(i);
      } else {
        second.push_back(seq[i]);
      }
    }
    sum += f(first, second) * Rational(bipartition_sign(chosen));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sum;
}

Poly eq4_a(const Indices& seq) {
  Poly rhs;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    Indices rest;
    for (std::size_t t = 1; t < seq.size(); ++t) {
      if (t != i) rest.push_back(seq[t]);
    }
    const int sign = (i + 1) % 2 == 0 ? 1 : -1;
    rhs += br({seq[0], seq[i]}) * br(rest) * Rational(sign);
  }
  return br(seq) - rhs;
}

Poly eq4_b(const Indices& seq) {
  return vec(word(seq)) -
         bipartition_sum(seq, seq.size() - 1, [](const Indices& a, const Indices& b) { return br(a) * word(b); });
}

Poly eq4_c(const Indices& seq) {
  return vec(word(seq)) -
         bipartition_sum(seq, seq.size() - 2, [](const Indices& a, const Indices& b) { return br(a) * vec(word(b)); });
}

Poly eq4_d(const Indices& seq) {
  return br(seq) -
         bipartition_sum(seq, seq.size() - 3, [](const Indices& a, const Indices& b) { return br(a) * br(b); });
}

// 3x3 determinant of [v_{rows[r]} v_{cols[c]}], products taken in row order.
Poly bracket_determinant(const Indices& rows, const Indices& cols) {
  Indices perm{0, 1, 2};
  Poly det;
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    Poly prod(Rational(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t r = 0; r < 3; ++r) prod = prod * br({rows[r], cols[static_cast<std::size_t>(perm[r])]});
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

void bracket_product_determinant(Builder& b, const Indices& t) {
  const Indices rows{t[0], t[1], t[2]};
  const Indices cols{t[3], t[4], t[5]};
  const Poly c56 = cross(v(t[4]), v(t[5]));
  const Poly det = bracket_determinant(rows, cols);
  const Poly expanded = -br({t[0], t[3]}) * br(cross(v(t[1]), v(t[2])) * c56) +
                        br({t[1], t[3]}) * br(cross(v(t[0]), v(t[2])) * c56) -
                        br({t[2], t[3]}) * br(cross(v(t[0]), v(t[1])) * c56);
  const Poly inner = br(v(t[1]) * v(t[2]) * c56) * v(t[0]) - br(v(t[0]) * v(t[2]) * c56) * v(t[1]) +
                     br(v(t[0]) * v(t[1]) * c56) * v(t[2]);
  const Poly collected = -br(inner * v(t[3]));
  const Poly simplified = -br(rows) * br(c56 * v(t[3]));

  b.add("lemma1", t, br(rows) * br(cols) + det);
  b.add("lemma1-expand", t, det - expanded);
  b.add("lemma1-collect", t, expanded - collected);
  b.add("lemma1-cramer", t, collected - simplified);
  b.add("lemma1-close", t, simplified + br(rows) * br(cols));
}

Poly g3_difference(int top, int a, int b) {
  // 2*([v_top v_a v_b] - [v_b v_top v_a]).
  return word({top, a, b}) - word({b, a, top}) - word({b, top, a}) + word({a, top, b});
}

void shifted_tail_overlap(Builder& b, int q, int w, const Indices& y) {
  const Indices yr = reversed(y);
  const Rational s(q % 2 == 0 ? 1 : -1);
  const Poly inner = word(concat({{3, 2}, y, {1}})) + word(concat({{3, 1}, yr, {2}})) * s -
                     word(concat({{1}, yr, {2, 3}})) * s - word(concat({{2}, y, {1, 3}}));
  b.add("step12-h", concat({{q, w}, y}), v(w) * inner);
}

void split_peak_overlap(Builder& b, int q, const Indices& y) {
  const Poly inner = word({q, 1, q - 1}) - word({q - 1, 1, q}) - word({q - 1, q, 1}) + word({1, q, q - 1});
  b.add("step15-h", concat({{q}, y}), word(concat({{3, 2}, y})) * inner);
}

}  // namespace

std::vector<Identity> identity_corpus(int max_n, std::uint64_t seed) {
  std::vector<Identity> out;
  Builder b(out);
  std::mt19937_64 rng(seed);
  const int small = std::min(max_n, 4);
  auto random_letter = [&](int n) { return std::uniform_int_distribution<int>(1, n)(rng); };
  auto random_word = [&](int n, std::size_t len) {
    Indices w(len);
    for (int& l : w) l = random_letter(n);
    return w;
  };

  if (small >= 1) {
    for_each_tuple(small, 2, [&](const Indices& t) {
      b.add("eq7-line1", t, word({t[0], t[0], t[1]}) - word({t[1], t[0], t[0]}));
    });
    for_each_tuple(small, 3, [&](const Indices& t) {
      const Poly sym = word({t[0], t[1]}) + word({t[1], t[0]});
      b.add("eq7-line2", t, sym * v(t[2]) - v(t[2]) * sym);
      b.add("shift3", t, br(t) - br({t[2], t[0], t[1]}));
      b.add("eq9-line1", t,
            cross(cross(v(t[0]), v(t[1])), v(t[2])) - (br({t[1], t[2]}) * v(t[0]) - br({t[0], t[2]}) * v(t[1])));
      b.add("eq9-line1-alt", t, cross(cross(v(t[0]), v(t[1])), v(t[2])) - half(word(t) - word({t[2], t[0], t[1]})));
    });
    for_each_tuple(small, 4, [&](const Indices& t) {
      const Poly anti = word({t[0], t[1], t[2]}) - word({t[2], t[1], t[0]});
      b.add("eq7-line3", t, anti * v(t[3]) - v(t[3]) * anti);
      b.add("shift4", t, br(t) - br({t[3], t[0], t[1], t[2]}));
      b.add("cramer1", t,
            br({t[0], t[1], t[2]}) * v(t[3]) - br({t[0], t[1], t[3]}) * v(t[2]) + br({t[0], t[2], t[3]}) * v(t[1]) -
                v(t[0]) * br({t[1], t[2], t[3]}));
      const Poly cij = cross(v(t[0]), v(t[1]));
      const Poly ckl = cross(v(t[2]), v(t[3]));
      b.add("eq9-line2", t, br(cij * ckl) - (br({t[0], t[3]}) * br({t[1], t[2]}) - br({t[0], t[2]}) * br({t[1], t[3]})));
      b.add("eq9-line2-alt", t, br(cij * ckl) - br(v(t[0]) * v(t[1]) * ckl));
      b.add("eq9-line3", t, cross(cij, ckl) - (br({t[1], t[2], t[3]}) * v(t[0]) - br({t[0], t[2], t[3]}) * v(t[1])));
      b.add("eq9-line3-alt", t, cross(cij, ckl) - half(word(t) - word({t[2], t[3], t[0], t[1]})));
    });
    for_each_tuple(small, 5, [&](const Indices& t) {
      const Poly c = cross(v(t[0]), v(t[1]));
      b.add("cramer2", t,
            br(c * v(t[2]) * v(t[3])) * v(t[4]) - br(c * v(t[2]) * v(t[4])) * v(t[3]) +
                br(c * v(t[3]) * v(t[4])) * v(t[2]) - br({t[2], t[3], t[4]}) * c);
    });
  }

  for_each_tuple(std::min(max_n, 3), 2, [&](const Indices& t) {
    const Poly c = cross(v(t[0]), v(t[1]));
    b.add("n2-bracket", t, br(c * v(t[0]) * v(t[1])) - c * c);
    b.add("n2-expand", t,
          c * c - (word({t[0], t[1], t[0], t[1]}) + word({t[1], t[0], t[1], t[0]}) -
                   word({t[0], t[0], t[1], t[1]}) * Rational(2)) *
                      Rational(1, 4));
  });

  if (max_n >= 6) {
    bracket_product_determinant(b, {1, 2, 3, 4, 5, 6});
    for (int s = 0; s < 10; ++s) bracket_product_determinant(b, random_word(6, 6));
  }

  // Shift invariance of brackets of arbitrary words.
  if (small >= 1) {
    for (std::size_t len = 0; len <= 4; ++len) {
      for (int s = 0; s < 10; ++s) {
        const int i = random_letter(small);
        const Indices w = random_word(small, len);
        b.add("prop1-shift", concat({{i}, w}), br(concat({{i}, w})) - br(concat({w, {i}})));
        b.add("prop1-commute", concat({{i}, w}), v(i) * br(w) - br(w) * v(i));
      }
    }
  }

  // Grade expansions, on the ascending word and on random words.
  const std::vector<std::pair<std::string, std::function<Poly(const Indices&)>>> expansions{
      {"eq4-a", eq4_a}, {"eq4-b", eq4_b}, {"eq4-c", eq4_c}, {"eq4-d", eq4_d}};
  const std::vector<std::vector<std::size_t>> lengths{{4, 6}, {3, 5}, {4, 6}, {5}};
  for (std::size_t e = 0; e < expansions.size(); ++e) {
    for (std::size_t m : lengths[e]) {
      if (static_cast<int>(m) <= max_n) {
        Indices ascending(m);
        std::iota(ascending.begin(), ascending.end(), 1);
        b.add(expansions[e].first, ascending, expansions[e].second(ascending));
      }
      for (int s = 0; s < 4 && small >= 1; ++s) {
        const Indices w = random_word(small, m);
        b.add(expansions[e].first, w, expansions[e].second(w));
      }
    }
  }

  if (max_n >= 4) {
    b.add("step3-h", {4, 3, 2, 1}, v(4) * g3_difference(3, 2, 1));
    b.add("step3-h", {4, 3, 1, 2}, v(4) * g3_difference(3, 1, 2));
  }

  if (max_n >= 5) {
    Indices p{1, 2, 3};
    do {
      const Poly inner = word({4, p[1], p[2]}) + word({p[1], 4, p[2]}) - word({p[2], 4, p[1]}) - word({p[2], p[1], 4});
      b.add("step11-h", p, word({5, p[0]}) * inner);
    } while (std::next_permutation(p.begin(), p.end()));

    shifted_tail_overlap(b, 5, 4, {5});
    shifted_tail_overlap(b, 5, 5, {4});
    b.add("step14-h", {3, 2, 5, 1, 4}, word({3, 2}) * g3_difference(5, 1, 4));
    split_peak_overlap(b, 5, {});
  }
  if (max_n >= 6) {
    shifted_tail_overlap(b, 6, 4, {5, 6});
    shifted_tail_overlap(b, 6, 5, {4, 6});
    shifted_tail_overlap(b, 6, 6, {4, 5});
    b.add("step13-h", {4, 3, 5, 6, 2, 1}, word({4, 3, 5}) * g3_difference(6, 2, 1));
    b.add("step13-h", {4, 3, 5, 6, 1, 2}, word({4, 3, 5}) * g3_difference(6, 1, 2));
    b.add("step13-h", {4, 2, 5, 6, 1, 3}, word({4, 2, 5}) * g3_difference(6, 1, 3));
    split_peak_overlap(b, 6, {4});
  }

  // Commutation identities for pairs of words with disjoint letters.
  for (int j = 1; j <= max_n; ++j) {
    for (int k = 1; j + k <= max_n; ++k) {
      for (int s = 0; s < 2; ++s) {
        Indices letters(static_cast<std::size_t>(max_n));
        std::iota(letters.begin(), letters.end(), 1);
        std::shuffle(letters.begin(), letters.end(), rng);
        const Indices vj(letters.begin(), letters.begin() + j);
        const Indices vk(letters.begin() + j, letters.begin() + j + k);
        const Poly wj = word(vj);
        const Poly wk = word(vk);
        const Poly wjr = word(reversed(vj));
        const Poly wkr = word(reversed(vk));
        const Rational sk(k % 2 == 0 ? 1 : -1);
        const Rational sjk((j + k) % 2 == 0 ? 1 : -1);
        const Poly sym = wk + wkr * sk;
        b.add("eq25-center", concat({vj, {0}, vk}), sym * wj - wj * sym);
        b.add("eq25-swap", concat({vj, {0}, vk}), wj * wk - wk * wj - (wjr * wkr - wkr * wjr) * sjk);
      }
    }
  }

  // The induced order-reducing transformation, over i1, i2 below every other letter.
  for (std::size_t a = 0; a + 3 <= static_cast<std::size_t>(max_n); ++a) {
    for (const auto& [i1, i2] : {std::pair{1, 2}, std::pair{2, 1}}) {
      Indices upper(a + 1);
      std::iota(upper.begin(), upper.end(), 3);
      do {
        const int i3 = upper[0];
        const Indices va(upper.begin() + 1, upper.end());
        const Indices var = reversed(va);
        const Rational sa(a % 2 == 0 ? 1 : -1);
        const Poly lhs = word(concat({{i3}, va, {i1, i2}}));
        const Poly rhs = v(i2) * (word(concat({va, {i1, i3}})) + word(concat({{i3, i1}, var})) * sa) -
                         word(concat({{i1}, var, {i3, i2}})) * sa;
        b.add("eq26", concat({{i1, i2, i3}, va}), lhs - rhs);
      } while (std::next_permutation(upper.begin(), upper.end()));
    }
  }

  return out;
}

}  // namespace quatnf
