#include "quatnf/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quatnf {

namespace {

char checked_letter(int index) {
  if (index < 1 || index > 255) {
    throw std::domain_error("variable index out of range 1..255: " + std::to_string(index));
  }
  return static_cast<char>(static_cast<unsigned char>(index));
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) letters_.push_back(checked_letter(l));
}

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) letters_.push_back(checked_letter(l));
}

Word Word::letter(int index) { return Word(std::string(1, checked_letter(index))); }

Word Word::reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend())); }

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
  if (from > letters_.size()) return std::nullopt;
  auto pos = letters_.find(factor.letters_, from);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

Letter Word::max_letter() const noexcept {
  Letter m = 0;
  for (Letter l : *this) m = std::max(m, l);
  return m;
}

bool Word::is_multilinear() const noexcept {
  std::uint64_t seen[4] = {0, 0, 0, 0};
  for (Letter l : *this) {
    auto& slot = seen[l / 64];
    const std::uint64_t bit = std::uint64_t{1} << (l % 64);
    if (slot & bit) return false;
    slot |= bit;
  }
  return true;
}

Word Word::multiset() const {
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end(),
            [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
  return Word(std::move(sorted));
}

std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<Word> out;
  if (n < 1) return length == 0 ? std::vector<Word>{Word{}} : out;
  std::string cur(length, checked_letter(1));
  while (true) {
    out.emplace_back(cur);
    std::size_t i = length;
    while (i > 0) {
      --i;
      auto& c = reinterpret_cast<unsigned char&>(cur[i]);
      if (c < n) {
        ++c;
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), checked_letter(1));
        break;
      }
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<Word> permutation_words(int d) {
  std::string cur;
  for (int i = 1; i <= d; ++i) cur.push_back(checked_letter(i));
  std::vector<Word> out;
  do {
    out.emplace_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  }));
  return out;
}

}  // namespace quatnf
