#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quatnf {

using Letter = std::uint8_t;

/// Degree-lexicographic "greater" on byte strings: longer first, then
/// letterwise with the higher byte winning. Used to keep term maps sorted
/// from the leading term down.
struct DeglexGreater {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.compare(b) > 0;
  }
};

/// A monomial of the free monoid: a finite sequence of variable indices
/// (1..255). The empty word is the identity.
///
/// Letters are stored as bytes in a std::string so short words stay inline
/// and comparison reduces to memcmp.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const Letter> letters);
  explicit Word(std::string bytes) : letters_(std::move(bytes)) {}

  static Word letter(int index);

  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i]);
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[degree() - 1]; }

  const Letter* begin() const noexcept {
    return reinterpret_cast<const Letter*>(letters_.data());
  }
  const Letter* end() const noexcept { return begin() + letters_.size(); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  Word reversed() const;

  /// Leftmost offset >= `from` at which `factor` occurs; the empty factor
  /// occurs at `from`.
  std::optional<std::size_t> find(const Word& factor,
                                  std::size_t from = 0) const;

  /// Largest letter index, 0 for the empty word.
  Letter max_letter() const noexcept;
  /// True when no letter repeats.
  bool is_multilinear() const noexcept;
  /// The letters sorted ascending; the canonical form of the word's multiset.
  Word multiset() const;

  const std::string& bytes() const noexcept { return letters_; }

  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic order with v1 < v2 < ... < vn.
  friend std::strong_ordering operator<=>(const Word& a,
                                          const Word& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

inline std::strong_ordering word_cmp(const Word& a, const Word& b) noexcept {
  return a <=> b;
}

struct WordHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
  std::size_t operator()(const Word& w) const noexcept {
    return (*this)(std::string_view(w.bytes()));
  }
};

/// All words of the given length over letters 1..n, ascending.
std::vector<Word> all_words(int n, std::size_t length);

/// All permutations of the letters 1..d, ascending.
std::vector<Word> permutation_words(int d);

}  // namespace quatnf
