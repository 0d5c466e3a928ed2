#pragma once
// Exhaustive enumeration of finite maximal binary prefix codes (equivalently,
// binary trees: Catalan(n-1) codes with n leaves). The verification suites
// sweep these instead of trusting random sampling alone.

#include <vector>

#include "gk1/words.hpp"

namespace gk1 {

// All maximal binary prefix codes with exactly `leaves` members, dict-sorted,
// in a deterministic order.
inline std::vector<std::vector<Word>> binary_codes_exact(int leaves) {
  if (leaves == 1) return {{Word()}};
  std::vector<std::vector<Word>> out;
  for (int left = 1; left < leaves; ++left) {
    for (const std::vector<Word>& l : binary_codes_exact(left)) {
      for (const std::vector<Word>& r : binary_codes_exact(leaves - left)) {
        std::vector<Word> code;
        code.reserve(l.size() + r.size());
        for (const Word& w : l) code.push_back(Word::single(0) + w);
        for (const Word& w : r) code.push_back(Word::single(1) + w);
        out.push_back(std::move(code));
      }
    }
  }
  return out;
}

inline std::vector<std::vector<Word>> binary_codes_up_to(int leaves) {
  std::vector<std::vector<Word>> out;
  for (int n = 1; n <= leaves; ++n)
    for (std::vector<Word>& c : binary_codes_exact(n)) out.push_back(std::move(c));
  return out;
}

// All words of a given length over A_k, in dictionary order.
inline std::vector<Word> all_words_of_length(Alphabet a, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t d = 0; d < length; ++d) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(a.k));
    for (const Word& w : out)
      for (int c = 0; c < a.k; ++c) next.push_back(w.append(c));
    out = std::move(next);
  }
  return out;
}

// All words of length <= `length` over A_k.
inline std::vector<Word> all_words_up_to(Alphabet a, std::size_t length) {
  std::vector<Word> out;
  for (std::size_t d = 0; d <= length; ++d)
    for (Word& w : all_words_of_length(a, d)) out.push_back(std::move(w));
  return out;
}

}  // namespace gk1
