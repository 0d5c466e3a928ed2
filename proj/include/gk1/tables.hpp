#pragma once
// Tables of injective right-ideal morphisms of A_k^*: finite bijections
// between two finite maximal prefix codes. A GroupElement is a table in
// canonical form (maximally extended, pairs sorted by dictionary order of
// the domain word); multiplication is composition followed by maximum
// extension.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk1/error.hpp"
#include "gk1/rng.hpp"
#include "gk1/words.hpp"

namespace gk1 {

struct Entry {
  Word dom;
  Word img;

  bool operator==(const Entry&) const = default;
};

inline bool entry_dom_less(const Entry& a, const Entry& b) { return a.dom < b.dom; }

class Table {
public:
  Table(Alphabet a, std::vector<Entry> entries) : k_(a), entries_(std::move(entries)) {}

  Alphabet alphabet() const { return k_; }
  int k() const { return k_.k; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const Entry* entry_with_dom(const Word& p) const {
    for (const Entry& e : entries_)
      if (e.dom == p) return &e;
    return nullptr;
  }

  // the entry whose domain word is a prefix of x, if any
  const Entry* entry_for_prefix_of(const Word& x) const {
    for (const Entry& e : entries_)
      if (is_prefix(e.dom, x)) return &e;
    return nullptr;
  }

  std::size_t max_word_length() const {
    std::size_t m = 0;
    for (const Entry& e : entries_) m = std::max({m, e.dom.size(), e.img.size()});
    return m;
  }

  bool operator==(const Table&) const = default;

private:
  Alphabet k_;
  std::vector<Entry> entries_;
};

// One problem string per violated invariant; empty means the table is a valid
// representative of an element of RI^fin_k.
inline std::vector<std::string> diagnose(const Table& t) {
  std::vector<std::string> problems;
  if (t.entries().empty()) {
    problems.push_back("table has no pairs");
    return problems;
  }
  std::vector<Word> doms, imgs;
  for (const Entry& e : t.entries()) {
    if (!e.dom.fits(t.alphabet()))
      problems.push_back("domain word " + e.dom.str() + " uses a letter outside A_" + std::to_string(t.k()));
    if (!e.img.fits(t.alphabet()))
      problems.push_back("image word " + e.img.str() + " uses a letter outside A_" + std::to_string(t.k()));
    doms.push_back(e.dom);
    imgs.push_back(e.img);
  }
  if (!problems.empty()) return problems;

  std::sort(doms.begin(), doms.end());
  std::sort(imgs.begin(), imgs.end());
  // duplicates count as violations too: the pair map must be a bijection
  if (!detail::sorted_is_prefix_free(doms)) problems.push_back("domC not a prefix code");
  if (!detail::sorted_is_prefix_free(imgs)) problems.push_back("imC not a prefix code");
  if (problems.empty()) {
    if (!detail::kraft_sum_is_one(doms, t.alphabet()))
      problems.push_back("domC not maximal (Kraft sum != 1)");
    if (!detail::kraft_sum_is_one(imgs, t.alphabet()))
      problems.push_back("imC not maximal (Kraft sum != 1)");
  }
  return problems;
}

inline bool validate(const Table& t) { return diagnose(t).empty(); }

inline PrefixCode domain_code(const Table& t) {
  std::vector<Word> doms;
  for (const Entry& e : t.entries()) doms.push_back(e.dom);
  return PrefixCode(t.alphabet(), std::move(doms));
}

inline PrefixCode image_code(const Table& t) {
  std::vector<Word> imgs;
  for (const Entry& e : t.entries()) imgs.push_back(e.img);
  return PrefixCode(t.alphabet(), std::move(imgs));
}

// f(p w) = f(p) w for p in domC; words with no prefix in domC are outside
// Dom(f), which is a normal outcome, not an error.
inline std::optional<Word> apply(const Table& t, const Word& x) {
  const Entry* e = t.entry_for_prefix_of(x);
  if (e == nullptr) return std::nullopt;
  return e->img + x.suffix(e->dom.size());
}

// All words p such that the k pairs (p a, q a), a in A_k, sit in the table
// with a common q and can be merged into the single pair (p, q).
inline std::vector<Word> extension_sites(const Table& t) {
  std::vector<Word> sites;
  for (const Entry& e : t.entries()) {
    if (e.dom.empty() || e.dom.back() != 0) continue;
    if (e.img.empty() || e.img.back() != 0) continue;
    const Word p = e.dom.parent();
    const Word q = e.img.parent();
    bool ok = true;
    for (int a = 1; a < t.k(); ++a) {
      const Entry* sibling = t.entry_with_dom(p.append(a));
      if (sibling == nullptr || sibling->img != q.append(a)) {
        ok = false;
        break;
      }
    }
    if (ok) sites.push_back(p);
  }
  return sites;
}

// Merge the k child pairs of `parent` into one pair. Pre: `parent` is an
// extension site of t.
inline Table extend_at(const Table& t, const Word& parent) {
  const Entry* first = t.entry_with_dom(parent.append(0));
  if (first == nullptr) fail(Errc::InvalidQuery, parent.str() + " is not an extension site");
  const Word q = first->img.parent();
  std::vector<Entry> out;
  out.reserve(t.size() - static_cast<std::size_t>(t.k()) + 1);
  for (const Entry& e : t.entries())
    if (!(e.dom.size() == parent.size() + 1 && is_prefix(parent, e.dom))) out.push_back(e);
  out.push_back(Entry{parent, q});
  return Table(t.alphabet(), std::move(out));
}

// One extension step at the first applicable site (deterministic scan), or
// nothing when the table is already maximally extended.
inline std::optional<Table> extension_step(const Table& t) {
  std::vector<Word> sites = extension_sites(t);
  if (sites.empty()) return std::nullopt;
  return extend_at(t, sites.front());
}

class GroupElement {
public:
  static GroupElement identity(Alphabet a) { return GroupElement(Table(a, {Entry{Word(), Word()}})); }

  const Table& table() const { return table_; }
  Alphabet alphabet() const { return table_.alphabet(); }
  int k() const { return table_.k(); }

  bool operator==(const GroupElement&) const = default;

private:
  explicit GroupElement(Table t) : table_(std::move(t)) {}
  friend GroupElement maximum_extension(Table t);

  Table table_;
};

// Canonical form: apply extension steps until none applies (the result does
// not depend on the order of steps; the verification suite checks that), then
// sort pairs by dictionary order of the domain word. Sites found in one scan
// have disjoint child pairs, so the whole batch can be merged before
// rescanning.
inline GroupElement maximum_extension(Table t) {
  std::vector<std::string> problems = diagnose(t);
  if (!problems.empty()) fail(Errc::InvalidTable, "invalid table: " + problems.front());
  for (;;) {
    std::vector<Word> sites = extension_sites(t);
    if (sites.empty()) break;
    for (const Word& p : sites) t = extend_at(t, p);
  }
  std::vector<Entry> entries = t.entries();
  std::sort(entries.begin(), entries.end(), entry_dom_less);
  return GroupElement(Table(t.alphabet(), std::move(entries)));
}

inline std::optional<Word> apply(const GroupElement& g, const Word& x) { return apply(g.table(), x); }

// Split the pair at p into its k child pairs; the inverse of one extension
// step. domC is only defined for valid tables, so an invalid table cannot
// have p in its domain code.
inline Table restriction_step(const Table& t, const Word& p) {
  if (!validate(t) || t.entry_with_dom(p) == nullptr)
    fail(Errc::NotInDomainCode, p.str() + " is not in the domain code of a valid table");
  const Entry* e = t.entry_with_dom(p);
  std::vector<Entry> out;
  out.reserve(t.size() - 1 + static_cast<std::size_t>(t.k()));
  for (const Entry& other : t.entries())
    if (other.dom != p) out.push_back(other);
  for (int a = 0; a < t.k(); ++a) out.push_back(Entry{e->dom.append(a), e->img.append(a)});
  return Table(t.alphabet(), std::move(out));
}

// h o g, g applied first. g is refined (restriction steps) until every image
// word of g has a prefix in domC(h); both codes being finite maximal makes
// that depth bounded. h is never refined; the final maximum extension erases
// the asymmetry.
inline GroupElement compose(const GroupElement& h, const GroupElement& g) {
  if (h.alphabet() != g.alphabet())
    fail(Errc::AlphabetMismatch, "cannot compose elements over different alphabets");
  const Table& ht = h.table();
  std::vector<Entry> work = g.table().entries();
  std::vector<Entry> out;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Entry e = work[i];
    if (std::optional<Word> y = apply(ht, e.img)) {
      out.push_back(Entry{e.dom, std::move(*y)});
    } else {
      for (int a = 0; a < g.k(); ++a) work.push_back(Entry{e.dom.append(a), e.img.append(a)});
    }
  }
  return maximum_extension(Table(g.alphabet(), std::move(out)));
}

inline GroupElement invert(const GroupElement& g) {
  std::vector<Entry> swapped;
  swapped.reserve(g.table().size());
  for (const Entry& e : g.table().entries()) swapped.push_back(Entry{e.img, e.dom});
  return maximum_extension(Table(g.alphabet(), std::move(swapped)));
}

inline bool equals(const GroupElement& f, const GroupElement& g) { return f == g; }

// Grow a random maximal prefix code by splitting a uniformly random leaf
// until `leaves` members exist. Reaches every tree shape with positive
// probability.
inline std::vector<Word> random_code_words(Alphabet a, int leaves, Rng& rng) {
  std::vector<Word> words{Word()};
  while (static_cast<int>(words.size()) < leaves) {
    std::size_t i = static_cast<std::size_t>(rng.below(words.size()));
    Word leaf = words[i];
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(i));
    for (int c = 0; c < a.k; ++c) words.push_back(leaf.append(c));
  }
  return words;
}

inline PrefixCode random_maximal_code(Alphabet a, int leaves, Rng& rng) {
  return PrefixCode(a, random_code_words(a, leaves, rng));
}

// Two random maximal codes with `leaves` members each and a random bijection,
// maximally extended (so the canonical form may have fewer pairs).
// A maximal code over A_k has 1 + (k-1)d members, hence the size constraint.
inline GroupElement random_element(Alphabet a, int leaves, std::uint64_t seed) {
  if (leaves < 1 || (leaves - 1) % (a.k - 1) != 0)
    fail(Errc::ImpossibleCodeSize, "no maximal prefix code of size " + std::to_string(leaves) +
                                       " over " + std::to_string(a.k) + " letters");
  Rng rng(seed);
  std::vector<Word> doms = random_code_words(a, leaves, rng);
  std::vector<Word> imgs = random_code_words(a, leaves, rng);
  std::sort(doms.begin(), doms.end());
  std::sort(imgs.begin(), imgs.end());
  std::vector<std::size_t> perm(doms.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Entry> entries;
  entries.reserve(doms.size());
  for (std::size_t i = 0; i < doms.size(); ++i) entries.push_back(Entry{doms[i], imgs[perm[i]]});
  return maximum_extension(Table(a, std::move(entries)));
}

}  // namespace gk1
