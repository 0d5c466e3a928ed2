#pragma once
// Embeddings between the groups G_{k,1}:
//
//   iota         G_{2,1} -> G_{k,1} for k >= 3, through the mixed subgroup
//                G_{k,1}(0,1|2|...|k-1). The binary table is shifted into the
//                a_1-subtree, the pair (a_0, a_0) is added, and the remaining
//                entries are filled in by *a_i-successors.
//   theta        G_{2,1} -> G_{2,1}, the isomorphism onto the partial fixator
//                of a_0·{a_0,a_1}^* (the displayed table map: prepend a_1 to
//                every word and add the pair (a_0, a_0)).
//   higman_embed G_{K,1} -> G_{k,1} when K = 1 + (k-1)d, by substituting a
//                maximal prefix code of size K for the alphabet letterwise.
//   embed_any    the composite giving G_{i,1} -> G_{j,1} for all i, j >= 2.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk1/error.hpp"
#include "gk1/successor.hpp"
#include "gk1/tables.hpp"
#include "gk1/words.hpp"

namespace gk1 {

// A bijection from the alphabet A_K onto a maximal prefix code of size K over
// A_k; position j encodes letter a_j. Such a code exists iff K = 1 + (k-1)d.
class CodeEncoding {
public:
  CodeEncoding(Alphabet source, Alphabet target, std::vector<Word> code)
      : source_(source), target_(target), code_(std::move(code)) {
    if (static_cast<int>(code_.size()) != source_.k)
      fail(Errc::InvalidEncoding, "encoding needs exactly " + std::to_string(source_.k) +
                                      " code words, got " + std::to_string(code_.size()));
    if (!is_maximal_prefix_code(code_, target_))
      fail(Errc::InvalidEncoding,
           "encoding code words must form a maximal prefix code over A_" + std::to_string(target_.k));
  }

  Alphabet source() const { return source_; }
  Alphabet target() const { return target_; }
  int source_k() const { return source_.k; }
  const std::vector<Word>& code() const { return code_; }

  // letterwise substitution a_j -> code[j]
  Word encode(const Word& w) const {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) out = out + code_[static_cast<std::size_t>(w.letter(i))];
    return out;
  }

private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> code_;
};

// The "right comb" code of size K over A_k: starting from A_k itself, keep
// replacing the dict-maximum member w by w·A_k. For k = 2 this yields
// {a_0, a_1 a_0, a_1 a_1 a_0, ...} tails. Members are listed in dictionary
// order, so letter a_j maps to the j-th member.
inline CodeEncoding canonical_code(int size, Alphabet target) {
  if (size < 2 || (size - 1) % (target.k - 1) != 0)
    fail(Errc::ImpossibleCodeSize, "no maximal prefix code of size " + std::to_string(size) +
                                       " over " + std::to_string(target.k) + " letters");
  std::vector<Word> members;
  for (int a = 0; a < target.k; ++a) members.push_back(Word::single(a));
  while (static_cast<int>(members.size()) < size) {
    Word leaf = members.back();
    members.pop_back();
    for (int a = 0; a < target.k; ++a) members.push_back(leaf.append(a));
  }
  return CodeEncoding(Alphabet(size), target, std::move(members));
}

struct FixatorSpec {
  Word prefix;  // generator of the right ideal prefix·A*
};

namespace detail {

// successor map over {a_0} u a_1·C as a lookup table
inline std::map<Word, Word> shifted_successors(const PrefixCode& code, int letter) {
  std::vector<Word> shifted{Word::single(0)};
  for (const Word& w : code.members()) shifted.push_back(Word::single(1) + w);
  PrefixCode lifted(Alphabet(2), std::move(shifted));
  std::map<Word, Word> out;
  for (std::pair<Word, Word>& p : succ_all(lifted, letter)) out.insert(std::move(p));
  return out;
}

}  // namespace detail

// The raw iota table, before any extension: {(a_0, a_0)} u {(a_1 p, a_1 q)}
// u, for each extra letter a_i, {((a_1 p)'_i, (a_1 q)'_i)} with successors
// taken in {a_0} u a_1·domC (resp. {a_0} u a_1·imC). Exposed separately from
// iota() so that commutation with one-step restriction can be checked on raw
// tables.
inline Table iota_table(const Table& t, Alphabet target) {
  if (t.k() != 2) fail(Errc::AlphabetMismatch, "iota embeds binary elements only");
  if (target.k < 3) fail(Errc::AlphabetMismatch, "iota needs a target alphabet with k >= 3");
  std::vector<std::string> problems = diagnose(t);
  if (!problems.empty()) fail(Errc::InvalidTable, "invalid table: " + problems.front());

  std::vector<Entry> out;
  out.push_back(Entry{Word::single(0), Word::single(0)});
  const Word one = Word::single(1);
  for (const Entry& e : t.entries()) out.push_back(Entry{one + e.dom, one + e.img});
  const PrefixCode dom = domain_code(t);
  const PrefixCode img = image_code(t);
  for (int i = 2; i < target.k; ++i) {
    std::map<Word, Word> succ_dom = detail::shifted_successors(dom, i);
    std::map<Word, Word> succ_img = detail::shifted_successors(img, i);
    for (const Entry& e : t.entries())
      out.push_back(Entry{succ_dom.at(one + e.dom), succ_img.at(one + e.img)});
  }
  return Table(target, std::move(out));
}

inline GroupElement iota(const GroupElement& g, Alphabet target) {
  return maximum_extension(iota_table(g.table(), target));
}

// Membership in G_{k,1}(0,1|2|...|k-1), checked pairwise on the canonical
// table: every word lies in {a_0,a_1}^* or {a_0,a_1}^*·a_i, and each pair
// (p, q) has matching class. The pairwise check decides membership for the
// whole map because classes propagate along p w -> q w.
inline bool in_mixed_subgroup(const GroupElement& f) {
  if (f.k() < 3) fail(Errc::InvalidQuery, "the mixed subgroup is defined for k >= 3");
  // class of w: 0 if w in {a_0,a_1}^*, i if w in {a_0,a_1}^*·a_i, -1 otherwise
  auto word_class = [](const Word& w) -> int {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w.letter(i) >= 2) return -1;
    if (w.empty() || w.back() < 2) return 0;
    return w.back();
  };
  for (const Entry& e : f.table().entries()) {
    int cd = word_class(e.dom);
    int ci = word_class(e.img);
    if (cd < 0 || ci < 0 || cd != ci) return false;
  }
  return true;
}

// The isomorphism of G_{2,1} onto the subgroup fixing the a_0-subtree
// pointwise: {(x, y)} -> {(a_0, a_0)} u {(a_1 x, a_1 y)}. Naming conventions
// disagree on whether this target is written as the fixator of the a_0- or
// the a_1-ideal; the image tables produced here partially fix a_0·A_2^*.
inline GroupElement theta(const GroupElement& g) {
  if (g.k() != 2) fail(Errc::AlphabetMismatch, "theta is defined on binary elements");
  std::vector<Entry> out;
  out.push_back(Entry{Word::single(0), Word::single(0)});
  const Word one = Word::single(1);
  for (const Entry& e : g.table().entries()) out.push_back(Entry{one + e.dom, one + e.img});
  return maximum_extension(Table(g.alphabet(), std::move(out)));
}

namespace detail {

// Depth-first sweep of prefix·A^* down to the bound. Once x reaches a table
// pair (p, q), f(x u) = q u for the whole subtree: fixed iff p == q, so the
// subtree need not be expanded further. When p != q, some extension of x
// within the depth bound lies in Im(f) as well (imC is maximal), witnessing a
// moved point of prefix·A* n Dom(f) n Im(f).
inline bool pfix_dfs(const Table& t, const Word& x, std::size_t bound) {
  if (const Entry* e = t.entry_for_prefix_of(x)) return e->dom == e->img;
  if (x.size() >= bound) return true;
  for (int a = 0; a < t.k(); ++a)
    if (!pfix_dfs(t, x.append(a), bound)) return false;
  return true;
}

}  // namespace detail

// Does f fix every x in prefix·A* n Dom(f) n Im(f)? Any violation is
// witnessed at depth |prefix| + 2·maxlen + 1: the table pair covering x and
// an image-code prefix certifying x in Im(f) are both bounded by maxlen.
inline bool pfix_check(const GroupElement& f, const FixatorSpec& s) {
  if (!s.prefix.fits(f.alphabet()))
    fail(Errc::AlphabetMismatch, "fixator prefix uses letters outside the element's alphabet");
  const std::size_t bound = s.prefix.size() + 2 * f.table().max_word_length() + 1;
  return detail::pfix_dfs(f.table(), s.prefix, bound);
}

// Letterwise code substitution. The conjugation law
// apply(higman_embed(g), enc(x)) = enc(apply(g, x)) holds on Dom(g).
inline GroupElement higman_embed(const GroupElement& g, const CodeEncoding& enc) {
  if (g.k() != enc.source_k())
    fail(Errc::AlphabetMismatch, "element is over " + std::to_string(g.k()) +
                                     " letters but the encoding expects " + std::to_string(enc.source_k()));
  std::vector<Entry> out;
  out.reserve(g.table().size());
  for (const Entry& e : g.table().entries()) out.push_back(Entry{enc.encode(e.dom), enc.encode(e.img)});
  return maximum_extension(Table(enc.target(), std::move(out)));
}

enum class EmbedRoute { Identity, Higman, Iota, HigmanThenIota };

inline EmbedRoute embed_route(int source_k, int target_k) {
  if (source_k == target_k) return EmbedRoute::Identity;
  if (target_k == 2) return EmbedRoute::Higman;
  if (source_k == 2) return EmbedRoute::Iota;
  return EmbedRoute::HigmanThenIota;
}

inline const char* embed_route_name(EmbedRoute r) {
  switch (r) {
    case EmbedRoute::Identity:       return "identity";
    case EmbedRoute::Higman:         return "higman";
    case EmbedRoute::Iota:           return "iota";
    case EmbedRoute::HigmanThenIota: return "higman+iota";
  }
  return "?";
}

// G_{i,1} -> G_{j,1} for any i, j >= 2. Cross-arity embeddings are routed
// through G_{2,1}: a size-i code over two letters always exists, and iota
// covers 2 -> j. The direct Higman step i -> j exists only when
// i = 1 + (j-1)d, so the chain is the one uniform composite.
inline GroupElement embed_any(const GroupElement& g, Alphabet target) {
  switch (embed_route(g.k(), target.k)) {
    case EmbedRoute::Identity: return g;
    case EmbedRoute::Higman:   return higman_embed(g, canonical_code(g.k(), target));
    case EmbedRoute::Iota:     return iota(g, target);
    case EmbedRoute::HigmanThenIota:
      return iota(higman_embed(g, canonical_code(g.k(), Alphabet(2))), target);
  }
  fail(Errc::InvalidQuery, "unreachable embed route");
}

}  // namespace gk1
