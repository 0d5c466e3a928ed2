#pragma once
// Words over the ordered alphabet A_k = {a_0 < a_1 < ... < a_{k-1}}, prefix
// combinatorics, the dictionary order, and (maximal) prefix codes.
//
// Letters are stored as integer values 0..k-1. k is capped at 10 so that
// every word prints as a plain digit string; the empty word prints as "-".

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gk1/error.hpp"

namespace gk1 {

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 10;

struct Alphabet {
  int k;

  explicit Alphabet(int size) : k(size) {
    if (k < kMinAlphabet || k > kMaxAlphabet)
      fail(Errc::InvalidAlphabet,
           "alphabet size must be between " + std::to_string(kMinAlphabet) + " and " +
               std::to_string(kMaxAlphabet) + ", got " + std::to_string(size));
  }

  bool operator==(const Alphabet&) const = default;
};

class Word {
public:
  Word() = default;  // the empty word

  static Word single(int letter) { return Word().append(letter); }

  // Inverse of str(): digit string, or "-" for the empty word.
  static Word parse(std::string_view text) {
    if (text == "-") return Word();
    if (text.empty())
      fail(Errc::ParseError, "empty word token (the empty word is written \"-\")");
    Word w;
    w.letters_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9')
        fail(Errc::ParseError, std::string("invalid character '") + c + "' in word at position " +
                                   std::to_string(i + 1));
      w.letters_.push_back(static_cast<char>(c - '0'));
    }
    return w;
  }

  std::string str() const {
    if (letters_.empty()) return "-";
    std::string out;
    out.reserve(letters_.size());
    for (char a : letters_) out.push_back(static_cast<char>('0' + a));
    return out;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_[i]; }
  int back() const { return letters_.back(); }

  // largest letter value used, -1 for the empty word
  int max_letter() const {
    int m = -1;
    for (char a : letters_) m = std::max(m, static_cast<int>(a));
    return m;
  }

  bool fits(Alphabet a) const { return max_letter() < a.k; }

  Word append(int letter) const {
    if (letter < 0 || letter >= kMaxAlphabet)
      fail(Errc::InvalidWord, "letter value " + std::to_string(letter) + " out of range");
    Word w(*this);
    w.letters_.push_back(static_cast<char>(letter));
    return w;
  }

  // first n letters
  Word prefix(std::size_t n) const {
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
    return w;
  }

  // letters from position `from` to the end
  Word suffix(std::size_t from) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end());
    return w;
  }

  Word parent() const { return prefix(size() - 1); }

  // does `m` occur at position pos of this word?
  bool matches_at(std::size_t pos, const Word& m) const {
    if (pos + m.size() > size()) return false;
    return std::equal(m.letters_.begin(), m.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  friend Word operator+(const Word& a, const Word& b) {
    Word w(a);
    w.letters_.append(b.letters_);
    return w;
  }

  bool operator==(const Word&) const = default;

private:
  std::string letters_;  // raw letter values, not ASCII
};

// u <=_dict v iff u <=_pref v, or the first letter after the longest common
// prefix is smaller in u. Equal only for identical words.
inline std::strong_ordering dict_compare(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u.letter(i) != v.letter(i)) return u.letter(i) <=> v.letter(i);
  return u.size() <=> v.size();
}

inline bool operator<(const Word& a, const Word& b) { return dict_compare(a, b) < 0; }

// true iff x = p u for some word u
inline bool is_prefix(const Word& p, const Word& x) { return x.matches_at(0, p); }

inline bool is_strict_prefix(const Word& p, const Word& x) {
  return p.size() < x.size() && is_prefix(p, x);
}

inline bool prefix_comparable(const Word& x, const Word& y) {
  return is_prefix(x, y) || is_prefix(y, x);
}

namespace detail {

// Caller passes the words dict-sorted. Distinct words are prefix-free iff no
// word prefixes its immediate successor; duplicates also show up as adjacent.
inline bool sorted_is_prefix_free(const std::vector<Word>& sorted) {
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (is_prefix(sorted[i], sorted[i + 1])) return false;
  return true;
}

// Exact evaluation of the Kraft equality sum_{p} k^-|p| = 1. Working upward
// from the deepest level, the running count must be an exact multiple of k at
// every step; any remainder proves the sum is not 1.
inline bool kraft_sum_is_one(const std::vector<Word>& words, Alphabet a) {
  std::size_t max_len = 0;
  for (const Word& w : words) max_len = std::max(max_len, w.size());
  std::vector<std::uint64_t> count(max_len + 1, 0);
  for (const Word& w : words) ++count[w.size()];
  std::uint64_t carry = 0;
  for (std::size_t d = max_len; d >= 1; --d) {
    carry += count[d];
    if (carry % static_cast<std::uint64_t>(a.k) != 0) return false;
    carry /= static_cast<std::uint64_t>(a.k);
  }
  return carry + count[0] == 1;
}

}  // namespace detail

// Members are treated as a set: repeated words are rejected as prefix-code
// violations, the same way two comparable words are.
inline bool is_prefix_code(const std::vector<Word>& words, Alphabet a) {
  if (words.empty()) return false;
  for (const Word& w : words)
    if (!w.fits(a)) return false;
  std::vector<Word> sorted(words);
  std::sort(sorted.begin(), sorted.end());
  return detail::sorted_is_prefix_free(sorted);
}

// A finite prefix code is maximal iff its Kraft sum equals 1 exactly.
inline bool is_maximal_prefix_code(const std::vector<Word>& words, Alphabet a) {
  return is_prefix_code(words, a) && detail::kraft_sum_is_one(words, a);
}

class PrefixCode {
public:
  PrefixCode(Alphabet a, std::vector<Word> members) : k_(a), members_(std::move(members)) {
    if (members_.empty()) fail(Errc::NotAPrefixCode, "a prefix code must be nonempty");
    for (const Word& w : members_)
      if (!w.fits(a))
        fail(Errc::InvalidWord, "word " + w.str() + " uses a letter outside A_" + std::to_string(a.k));
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i + 1 < members_.size(); ++i)
      if (is_prefix(members_[i], members_[i + 1]))
        fail(Errc::NotAPrefixCode,
             "not a prefix code: " + members_[i].str() + " is a prefix of " + members_[i + 1].str());
  }

  Alphabet alphabet() const { return k_; }
  int k() const { return k_.k; }
  const std::vector<Word>& members() const { return members_; }  // dict-sorted
  std::size_t size() const { return members_.size(); }

  // index in dictionary order, -1 if absent
  int index_of(const Word& w) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), w);
    if (it == members_.end() || *it != w) return -1;
    return static_cast<int>(it - members_.begin());
  }

  bool contains(const Word& w) const { return index_of(w) >= 0; }

  bool is_maximal() const { return detail::kraft_sum_is_one(members_, k_); }

  bool operator==(const PrefixCode&) const = default;

private:
  Alphabet k_;
  std::vector<Word> members_;
};

// Set of strict prefixes of the members: the interior vertices of the code's
// prefix tree. Dict-sorted.
inline std::vector<Word> spref(const PrefixCode& code) {
  std::set<Word> prefixes;
  for (const Word& p : code.members())
    for (std::size_t n = 0; n < p.size(); ++n) prefixes.insert(p.prefix(n));
  return {prefixes.begin(), prefixes.end()};
}

// Number of members dict-smaller than p; the dict-minimum has rank 0.
inline int rank(const PrefixCode& code, const Word& p) {
  int i = code.index_of(p);
  if (i < 0) fail(Errc::NotAMember, p.str() + " is not a member of the code");
  return i;
}

// P u spref(P)·{a_2, ..., a_{k-1}} for a finite maximal binary prefix code P:
// a finite maximal prefix code over A_k with |P| + (k-2)(|P|-1) members.
inline PrefixCode extend_to_k(const PrefixCode& binary, Alphabet target) {
  if (binary.k() != 2 || !binary.is_maximal())
    fail(Errc::NotMaximalBinaryCode, "extend_to_k needs a finite maximal prefix code over 2 letters");
  std::vector<Word> out = binary.members();
  for (const Word& x : spref(binary))
    for (int i = 2; i < target.k; ++i) out.push_back(x.append(i));
  return PrefixCode(target, std::move(out));
}

struct Factorization {
  std::vector<Word> factors;  // each a member of the code
  Word remainder;             // in spref(code) u {empty}

  bool operator==(const Factorization&) const = default;
};

// Unique factorization w = c_1 c_2 ... c_m r over a finite maximal prefix
// code, stripping member prefixes greedily until only a strict prefix of a
// member (possibly the empty word) remains.
inline Factorization decompose(const Word& w, const PrefixCode& code) {
  if (!code.is_maximal()) fail(Errc::InvalidQuery, "decompose needs a maximal prefix code");
  if (code.contains(Word())) {
    // code == {empty word}; only the empty word factors over it
    if (!w.empty())
      fail(Errc::InvalidQuery, "cannot decompose a nonempty word over the code {-}");
    return Factorization{};
  }
  Factorization out;
  std::size_t pos = 0;
  for (;;) {
    const Word* hit = nullptr;
    for (const Word& m : code.members())
      if (w.matches_at(pos, m)) {
        hit = &m;
        break;
      }
    if (hit == nullptr) break;
    out.factors.push_back(*hit);
    pos += hit->size();
  }
  out.remainder = w.suffix(pos);
  return out;
}

// (P \ {p}) u p·A_k: split the leaf p into its k children. The result is
// maximal iff P was.
inline PrefixCode restrict_code(const PrefixCode& code, const Word& p) {
  if (!code.contains(p)) fail(Errc::NotAMember, p.str() + " is not a member of the code");
  std::vector<Word> out;
  out.reserve(code.size() - 1 + static_cast<std::size_t>(code.k()));
  for (const Word& m : code.members())
    if (m != p) out.push_back(m);
  for (int a = 0; a < code.k(); ++a) out.push_back(p.append(a));
  return PrefixCode(code.alphabet(), std::move(out));
}

}  // namespace gk1
