#include "doctest.h"
#include "test_helpers.hpp"

#include <algorithm>
#include <set>

using namespace gk1;
using testutil::E;
using testutil::T;
using testutil::W;
using testutil::WL;

namespace {

GroupElement swap01() { return E(2, {{"0", "1"}, {"1", "0"}}); }

// Structural membership oracle for the mixed subgroup, built from the shape
// of its tables: the binary-class pairs use maximal binary codes on both
// sides, and for each extra letter a_i the a_i-class domain (image) words are
// exactly spref of the binary domain (image) block, with matching classes.
bool mixed_shape_oracle(const GroupElement& f) {
  const int k = f.k();
  auto word_class = [](const Word& w) -> int {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w.letter(i) >= 2) return -1;
    if (w.empty() || w.back() < 2) return 0;
    return w.back();
  };
  std::vector<Word> dom_binary, img_binary;
  std::vector<std::vector<Word>> dom_tail(static_cast<std::size_t>(k)), img_tail(static_cast<std::size_t>(k));
  for (const Entry& e : f.table().entries()) {
    int cd = word_class(e.dom);
    int ci = word_class(e.img);
    if (cd < 0 || ci < 0 || cd != ci) return false;
    if (cd == 0) {
      dom_binary.push_back(e.dom);
      img_binary.push_back(e.img);
    } else {
      dom_tail[static_cast<std::size_t>(cd)].push_back(e.dom.parent());
      img_tail[static_cast<std::size_t>(ci)].push_back(e.img.parent());
    }
  }
  if (!is_maximal_prefix_code(dom_binary, Alphabet(2))) return false;
  if (!is_maximal_prefix_code(img_binary, Alphabet(2))) return false;
  std::vector<Word> dom_spref = spref(PrefixCode(Alphabet(2), dom_binary));
  std::vector<Word> img_spref = spref(PrefixCode(Alphabet(2), img_binary));
  for (int i = 2; i < k; ++i) {
    auto& dt = dom_tail[static_cast<std::size_t>(i)];
    auto& it = img_tail[static_cast<std::size_t>(i)];
    std::sort(dt.begin(), dt.end());
    std::sort(it.begin(), it.end());
    if (dt != dom_spref || it != img_spref) return false;
  }
  return true;
}

// Plain depth-bounded fixator oracle: enumerate every x in prefix·A^* up to
// `depth` letters that lies in Dom(f) n Im(f) and test f(x) = x pointwise.
bool pfix_oracle(const GroupElement& f, const Word& prefix, std::size_t depth) {
  PrefixCode img = image_code(f.table());
  auto in_image = [&](const Word& x) {
    for (const Word& q : img.members())
      if (is_prefix(q, x)) return true;
    return false;
  };
  for (const Word& tail : all_words_up_to(f.alphabet(), depth - std::min(depth, prefix.size()))) {
    Word x = prefix + tail;
    std::optional<Word> fx = apply(f, x);
    if (!fx || !in_image(x)) continue;
    if (*fx != x) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("embeddings") {

TEST_CASE("iota on the transposition, k = 3") {
  GroupElement image = iota(swap01(), Alphabet(3));
  CHECK(serialize(image) == "G 3\n0 -> 0\n10 -> 11\n11 -> 10\n12 -> 2\n2 -> 12\n");
  CHECK(in_mixed_subgroup(image));
}

TEST_CASE("iota on a three-pair element, k = 3") {
  GroupElement g = E(2, {{"0", "10"}, {"10", "0"}, {"11", "11"}});
  GroupElement image = iota(g, Alphabet(3));
  GroupElement expected =
      E(3, {{"0", "0"}, {"10", "110"}, {"110", "10"}, {"111", "111"}, {"2", "12"}, {"12", "2"}, {"112", "112"}});
  CHECK(image == expected);
  CHECK(in_mixed_subgroup(image));
}

TEST_CASE("iota maps the identity to the identity") {
  for (int k : {3, 4, 5})
    CHECK(iota(GroupElement::identity(Alphabet(2)), Alphabet(k)) == GroupElement::identity(Alphabet(k)));
}

TEST_CASE("iota rejects wrong alphabets") {
  CHECK_THROWS_AS(iota(GroupElement::identity(Alphabet(3)), Alphabet(4)), Error);
  CHECK_THROWS_AS(iota(swap01(), Alphabet(2)), Error);
}

TEST_CASE("in_mixed_subgroup") {
  CHECK(in_mixed_subgroup(GroupElement::identity(Alphabet(3))));
  CHECK_FALSE(in_mixed_subgroup(E(3, {{"0", "1"}, {"1", "2"}, {"2", "0"}})));
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    GroupElement g = random_element(Alphabet(2), rng.in(1, 10), rng.next());
    CHECK(in_mixed_subgroup(iota(g, Alphabet(3))));
    CHECK(in_mixed_subgroup(iota(g, Alphabet(5))));
  }
}

TEST_CASE("pairwise membership test agrees with the table-shape oracle") {
  Rng rng(42);
  int mixed_seen = 0, other_seen = 0;
  for (int t = 0; t < 120; ++t) {
    int k = rng.in(3, 5);
    GroupElement f = (t % 2 == 0) ? iota(random_element(Alphabet(2), rng.in(1, 9), rng.next()), Alphabet(k))
                                  : random_element(Alphabet(k), 1 + (k - 1) * rng.in(0, 4), rng.next());
    bool member = in_mixed_subgroup(f);
    CHECK(member == mixed_shape_oracle(f));
    (member ? mixed_seen : other_seen) += 1;
  }
  CHECK(mixed_seen > 0);
  CHECK(other_seen > 0);
}

TEST_CASE("theta") {
  GroupElement id = GroupElement::identity(Alphabet(2));
  CHECK(theta(id) == id);
  CHECK(theta(swap01()) == E(2, {{"0", "0"}, {"10", "11"}, {"11", "10"}}));
  CHECK(theta(E(2, {{"00", "0"}, {"01", "10"}, {"1", "11"}})) ==
        E(2, {{"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}}));
}

TEST_CASE("theta is a homomorphism and injective on a seeded sample") {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    GroupElement g = random_element(Alphabet(2), rng.in(1, 13), rng.next());
    GroupElement h = random_element(Alphabet(2), rng.in(1, 13), rng.next());
    CHECK(theta(compose(h, g)) == compose(theta(h), theta(g)));
    if (!(g == h)) CHECK_FALSE(theta(g) == theta(h));
    CHECK(pfix_check(theta(g), FixatorSpec{W("0")}));
  }
}

TEST_CASE("pfix_check") {
  GroupElement id = GroupElement::identity(Alphabet(2));
  CHECK(pfix_check(id, FixatorSpec{W("-")}));
  CHECK(pfix_check(id, FixatorSpec{W("0110")}));
  CHECK_FALSE(pfix_check(swap01(), FixatorSpec{W("0")}));  // witness: f(00) = 10
  CHECK(apply(swap01(), W("00")) == W("10"));
  CHECK_THROWS_AS(pfix_check(id, FixatorSpec{W("2")}), Error);
}

TEST_CASE("pfix_check agrees with a deeper exhaustive oracle") {
  Rng rng(44);
  for (int t = 0; t < 50; ++t) {
    int k = rng.in(2, 3);
    GroupElement f = random_element(Alphabet(k), 1 + (k - 1) * rng.in(0, 5 - k), rng.next());
    Word prefix;
    int len = rng.in(0, 4 - k);
    for (int i = 0; i < len; ++i) prefix = prefix.append(rng.in(0, k - 1));
    std::size_t bound = prefix.size() + 2 * f.table().max_word_length() + 1;
    CHECK(pfix_check(f, FixatorSpec{prefix}) == pfix_oracle(f, prefix, bound + 2));
  }
}

TEST_CASE("canonical_code") {
  CHECK(canonical_code(3, Alphabet(2)).code() == WL("0,10,11"));
  CHECK(canonical_code(2, Alphabet(2)).code() == WL("0,1"));
  CHECK(canonical_code(5, Alphabet(3)).code() == WL("0,1,20,21,22"));
  CHECK_THROWS_AS(canonical_code(4, Alphabet(3)), Error);
  for (int k : {2, 3, 4}) {
    for (int size = 2; size <= 10; ++size) {
      if ((size - 1) % (k - 1) != 0) continue;
      CodeEncoding enc = canonical_code(size, Alphabet(k));
      CHECK(static_cast<int>(enc.code().size()) == size);
      CHECK(is_maximal_prefix_code(enc.code(), Alphabet(k)));
    }
  }
}

TEST_CASE("code encodings validate their data") {
  CHECK_THROWS_AS(CodeEncoding(Alphabet(3), Alphabet(2), WL("0,10")), Error);     // wrong size
  CHECK_THROWS_AS(CodeEncoding(Alphabet(3), Alphabet(2), WL("0,10,110")), Error); // not maximal
  CHECK_THROWS_AS(CodeEncoding(Alphabet(2), Alphabet(2), WL("0,2")), Error);      // letter range
}

TEST_CASE("higman_embed") {
  CodeEncoding enc = canonical_code(3, Alphabet(2));
  GroupElement cyclic = E(3, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
  GroupElement embedded = higman_embed(cyclic, enc);
  CHECK(embedded == E(2, {{"0", "10"}, {"10", "11"}, {"11", "0"}}));
  CHECK(higman_embed(GroupElement::identity(Alphabet(3)), enc) == GroupElement::identity(Alphabet(2)));
  CHECK(higman_embed(E(3, {{"0", "0"}, {"1", "2"}, {"2", "1"}}), enc) ==
        E(2, {{"0", "0"}, {"10", "11"}, {"11", "10"}}));
  // homomorphy via the compose oracle on the example element
  CHECK(higman_embed(compose(cyclic, cyclic), enc) == compose(embedded, embedded));
  CHECK_THROWS_AS(higman_embed(swap01(), enc), Error);  // source alphabet mismatch
}

TEST_CASE("higman conjugation law on a seeded sample") {
  Rng rng(45);
  CodeEncoding enc = canonical_code(5, Alphabet(3));
  for (int t = 0; t < 20; ++t) {
    GroupElement g = random_element(Alphabet(5), 1 + 4 * rng.in(0, 3), rng.next());
    GroupElement eg = higman_embed(g, enc);
    for (const Entry& e : g.table().entries())
      for (const Word& s : all_words_up_to(Alphabet(5), 2)) {
        Word x = e.dom + s;
        CHECK(apply(eg, enc.encode(x)) == enc.encode(*apply(g, x)));
      }
  }
}

TEST_CASE("embed_any dispatch") {
  GroupElement s = swap01();
  CHECK(embed_any(s, Alphabet(3)) == iota(s, Alphabet(3)));
  GroupElement cyclic = E(3, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
  CHECK(embed_any(cyclic, Alphabet(3)) == cyclic);
  CHECK(embed_any(cyclic, Alphabet(2)) == higman_embed(cyclic, canonical_code(3, Alphabet(2))));
  GroupElement g4 = random_element(Alphabet(4), 7, 77);
  CHECK(embed_any(g4, Alphabet(3)) ==
        iota(higman_embed(g4, canonical_code(4, Alphabet(2))), Alphabet(3)));
  CHECK(embed_route(4, 3) == EmbedRoute::HigmanThenIota);
  CHECK(embed_route(2, 2) == EmbedRoute::Identity);
}

TEST_CASE("embed_any chain case is a homomorphism on a seeded sample") {
  Rng rng(46);
  for (int t = 0; t < 15; ++t) {
    GroupElement g = random_element(Alphabet(4), 1 + 3 * rng.in(0, 4), rng.next());
    GroupElement h = random_element(Alphabet(4), 1 + 3 * rng.in(0, 4), rng.next());
    CHECK(embed_any(compose(h, g), Alphabet(3)) ==
          compose(embed_any(h, Alphabet(3)), embed_any(g, Alphabet(3))));
  }
}

TEST_CASE("iota images fix the a_0-subtree pointwise") {
  Rng rng(47);
  for (int t = 0; t < 25; ++t) {
    int k = rng.in(3, 5);
    GroupElement image = iota(random_element(Alphabet(2), rng.in(1, 13), rng.next()), Alphabet(k));
    for (const Word& w : all_words_up_to(Alphabet(k), 3)) {
      Word x = Word::single(0) + w;
      CHECK(apply(image, x) == x);
    }
  }
}

TEST_CASE("iota representative independence via raw-table commutation") {
  Rng rng(48);
  for (int t = 0; t < 40; ++t) {
    int k = rng.in(3, 5);
    GroupElement g = random_element(Alphabet(2), rng.in(1, 13), rng.next());
    const auto& entries = g.table().entries();
    const Word& split = entries[static_cast<std::size_t>(rng.below(entries.size()))].dom;
    Table restricted = restriction_step(g.table(), split);
    // any restriction of the canonical table embeds to the same element
    CHECK(maximum_extension(iota_table(restricted, Alphabet(k))) == iota(g, Alphabet(k)));
  }
}

}  // TEST_SUITE
