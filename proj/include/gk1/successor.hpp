#pragma once
// The *a_i-successor: for a finite maximal binary prefix code P and a member
// p, the nearest right-neighbor of p in spref(P)·a_i under the dictionary
// order of the three-letter alphabet {a_0, a_1, a_i}. This is the device that
// lets a binary table determine the extra entries of a k-ary table.
//
// Two implementations are kept side by side on purpose:
//   succ_iterative - the literal descending-rank recurrence (the defining
//                    construction), retained permanently as the oracle;
//   succ_formula   - the closed form (u a_1 a_0^m)'_i = u a_i.
// Their agreement is part of the verification suite, not an assumption.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gk1/error.hpp"
#include "gk1/words.hpp"

namespace gk1 {

struct SuccessorQuery {
  PrefixCode code;  // finite maximal over {a_0, a_1}, at least 2 members
  Word member;      // element of code
  int letter;       // the extra letter a_i, 2 <= i <= 9
};

inline bool in_zero_star(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.letter(i) != 0) return false;
  return true;
}

namespace detail {

inline void check_successor_inputs(const PrefixCode& code, int letter) {
  if (code.k() != 2) fail(Errc::InvalidQuery, "successors are defined over binary base codes only");
  if (code.size() < 2) fail(Errc::InvalidQuery, "successors need a code with at least 2 members");
  if (!code.is_maximal()) fail(Errc::InvalidQuery, "successors need a maximal prefix code");
  if (letter < 2 || letter >= kMaxAlphabet)
    fail(Errc::InvalidQuery, "successor letter index must be in [2, " +
                                 std::to_string(kMaxAlphabet - 1) + "], got " + std::to_string(letter));
}

inline void check_query(const SuccessorQuery& q) {
  check_successor_inputs(q.code, q.letter);
  if (!q.code.contains(q.member))
    fail(Errc::InvalidQuery, q.member.str() + " is not a member of the code");
}

// The order on {a_0, a_1, a_i} is positional (a_0 < a_1 < a_i), realized by
// relabeling a_i to index 2 before comparing.
inline Word relabel_three(const Word& w, int letter) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out = out.append(w.letter(i) == letter ? 2 : w.letter(i));
  return out;
}

}  // namespace detail

// Descending-rank recurrence: with the members listed p_1 <_dict ... <_dict
// p_l, the successor of p_j is the dict-minimum x a_i in spref(P)·a_i that is
// dict-greater than p_j and not already assigned to some p_m with m > j.
// The dict-minimum member (the one in a_0^*) has no successor.
inline std::optional<Word> succ_iterative(const SuccessorQuery& q) {
  detail::check_query(q);
  if (in_zero_star(q.member)) return std::nullopt;
  const std::vector<Word>& members = q.code.members();
  const int target = q.code.index_of(q.member);

  std::vector<std::pair<Word, Word>> pool;  // (x a_i, relabeled key)
  for (const Word& x : spref(q.code)) {
    Word candidate = x.append(q.letter);
    pool.emplace_back(candidate, detail::relabel_three(candidate, q.letter));
  }
  std::set<Word> assigned;
  for (int j = static_cast<int>(members.size()) - 1; j >= target; --j) {
    const Word key = detail::relabel_three(members[static_cast<std::size_t>(j)], q.letter);
    const std::pair<Word, Word>* best = nullptr;
    for (const std::pair<Word, Word>& c : pool) {
      if (assigned.count(c.first) != 0) continue;
      if (!(key < c.second)) continue;
      if (best == nullptr || c.second < best->second) best = &c;
    }
    if (best == nullptr)
      throw std::logic_error("successor recurrence ran out of candidates for " +
                             members[static_cast<std::size_t>(j)].str());
    if (j == target) return best->first;
    assigned.insert(best->first);
  }
  return std::nullopt;  // unreachable: target > 0 was handled in the loop
}

// Closed form: every member outside a_0^* factors uniquely as u a_1 a_0^m,
// and its successor is u a_i.
inline std::optional<Word> succ_formula(const SuccessorQuery& q) {
  detail::check_query(q);
  if (in_zero_star(q.member)) return std::nullopt;
  std::size_t last_one = q.member.size();
  for (std::size_t i = q.member.size(); i-- > 0;)
    if (q.member.letter(i) == 1) {
      last_one = i;
      break;
    }
  return q.member.prefix(last_one).append(q.letter);
}

// The full successor map p -> (p)'_i for p in P \ a_0^*, sorted by dictionary
// order of p. Its image is exactly spref(P)·a_i and the map is injective.
inline std::vector<std::pair<Word, Word>> succ_all(const PrefixCode& code, int letter) {
  detail::check_successor_inputs(code, letter);
  std::vector<std::pair<Word, Word>> out;
  for (const Word& p : code.members()) {
    if (in_zero_star(p)) continue;
    SuccessorQuery q{code, p, letter};
    out.emplace_back(p, *succ_formula(q));
  }
  return out;
}

}  // namespace gk1
