#pragma once
// The verification harness: eleven seeded property suites, one per acceptance
// criterion, runnable from the CLI (`verify`) and from the acceptance test
// binary. Everything is exact, so suites pass with zero mismatches or fail.
//
// trials < 0 selects the built-in per-suite counts; trials = 0 skips the
// randomized portions (exhaustive sweeps always run); any other value
// replaces the per-unit randomized count. Reports are deterministic given
// (trials, seed); wall time is kept out of the formatted report body.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gk1/embeddings.hpp"
#include "gk1/enumerate.hpp"
#include "gk1/io.hpp"
#include "gk1/rng.hpp"
#include "gk1/successor.hpp"
#include "gk1/tables.hpp"
#include "gk1/words.hpp"

namespace gk1::verify {

struct Failure {
  std::string message;
  std::uint64_t seed = 0;  // 0 for exhaustive cases
  std::string inputs;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  long long random_trials = 0;
  std::string exhaustive;  // summary of the exhaustive portion, empty if none
  std::vector<Failure> failures;  // first few, see total_failures
  long long total_failures = 0;
  double seconds = 0.0;

  bool passed() const { return total_failures == 0; }
};

struct Options {
  long long trials = -1;  // -1: built-in counts; 0: exhaustive only
  std::uint64_t seed = 1;
};

namespace detail {

constexpr std::size_t kMaxRecordedFailures = 5;

inline long long count_or(const Options& opt, long long built_in) {
  return opt.trials < 0 ? built_in : opt.trials;
}

class SuiteRun {
public:
  SuiteRun(std::string name, int criterion) {
    result_.name = std::move(name);
    result_.criterion = criterion;
  }

  void context(std::uint64_t seed, std::string inputs) {
    seed_ = seed;
    inputs_ = std::move(inputs);
  }

  void check(bool ok, const std::string& message) {
    if (ok) return;
    ++result_.total_failures;
    if (result_.failures.size() < kMaxRecordedFailures)
      result_.failures.push_back(Failure{message, seed_, inputs_});
  }

  SuiteResult& result() { return result_; }

private:
  SuiteResult result_;
  std::uint64_t seed_ = 0;
  std::string inputs_;
};

inline std::string words_str(const std::vector<Word>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) s += ',';
    s += ws[i].str();
  }
  return s;
}

inline std::string opt_word_str(const std::optional<Word>& w) { return w ? w->str() : "(none)"; }

inline std::vector<int> valid_leaf_counts(int k, int max_leaves) {
  std::vector<int> out;
  for (int n = 1; n <= max_leaves; ++n)
    if ((n - 1) % (k - 1) == 0) out.push_back(n);
  return out;
}

inline GroupElement random_element_over(Alphabet a, int max_leaves, Rng& rng) {
  std::vector<int> sizes = valid_leaf_counts(a.k, max_leaves);
  int leaves = sizes[static_cast<std::size_t>(rng.below(sizes.size()))];
  return random_element(a, leaves, rng.next());
}

inline std::vector<Entry> sorted_entries(const Table& t) {
  std::vector<Entry> es = t.entries();
  std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) {
    return a.dom != b.dom ? a.dom < b.dom : a.img < b.img;
  });
  return es;
}

// every canonical element of G_{2,1} whose table has at most 3 pairs
inline const std::vector<GroupElement>& small_canonical_elements() {
  static const std::vector<GroupElement> elems = [] {
    std::vector<GroupElement> out;
    std::set<std::string> seen;
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<Word>> codes = binary_codes_exact(n);
      for (const std::vector<Word>& dom : codes) {
        for (const std::vector<Word>& img : codes) {
          std::vector<std::size_t> perm(static_cast<std::size_t>(n));
          for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
          do {
            std::vector<Entry> entries;
            for (std::size_t i = 0; i < perm.size(); ++i) entries.push_back(Entry{dom[i], img[perm[i]]});
            GroupElement g = maximum_extension(Table(Alphabet(2), std::move(entries)));
            if (seen.insert(serialize(g)).second) out.push_back(g);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
    return out;
  }();
  return elems;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. successor formula == defining recurrence
// ---------------------------------------------------------------------------

template <class SuccFn>
SuiteResult run_succ_formula_suite(const Options& opt, SuccFn&& formula) {
  detail::SuiteRun run("succ-formula", 1);
  auto sweep_code = [&](const PrefixCode& code) {
    for (int i : {2, 3}) {
      for (const Word& p : code.members()) {
        SuccessorQuery q{code, p, i};
        std::optional<Word> by_def = succ_iterative(q);
        std::optional<Word> by_formula = formula(q);
        run.check(by_def == by_formula,
                  "formula gives " + detail::opt_word_str(by_formula) + " but the recurrence gives " +
                      detail::opt_word_str(by_def));
      }
    }
  };

  std::vector<std::vector<Word>> codes = binary_codes_up_to(6);
  run.result().exhaustive = std::to_string(codes.size()) + " codes x i in {2,3}";
  for (const std::vector<Word>& words : codes) {
    PrefixCode code(Alphabet(2), words);
    if (code.size() < 2) {
      // the singleton {empty} admits no successor queries by convention
      run.context(0, "code={-}");
      bool rejected = false;
      try {
        succ_iterative(SuccessorQuery{code, Word(), 2});
      } catch (const Error& e) {
        rejected = e.code() == Errc::InvalidQuery;
      }
      run.check(rejected, "queries over the singleton code must raise InvalidQuery");
      continue;
    }
    run.context(0, "code=" + detail::words_str(code.members()));
    sweep_code(code);
  }

  long long trials = detail::count_or(opt, 500);
  for (long long t = 0; t < trials; ++t) {
    std::uint64_t seed = mix_seed(opt.seed, 0x0100 + static_cast<std::uint64_t>(t));
    Rng rng(seed);
    PrefixCode code = random_maximal_code(Alphabet(2), rng.in(2, 12), rng);
    run.context(seed, "code=" + detail::words_str(code.members()));
    sweep_code(code);
  }
  run.result().random_trials = trials;
  return run.result();
}

inline SuiteResult suite_succ_formula(const Options& opt) {
  return run_succ_formula_suite(opt, [](const SuccessorQuery& q) { return succ_formula(q); });
}

// ---------------------------------------------------------------------------
// 2. successor image identity: image(succ_all(P, i)) = spref(P)·a_i
// ---------------------------------------------------------------------------

inline SuiteResult suite_succ_image(const Options&) {
  detail::SuiteRun run("succ-image", 2);
  std::vector<std::vector<Word>> codes = binary_codes_up_to(6);
  run.result().exhaustive = std::to_string(codes.size()) + " codes x i in {2,3}";
  for (const std::vector<Word>& words : codes) {
    PrefixCode code(Alphabet(2), words);
    if (code.size() < 2) continue;
    run.context(0, "code=" + detail::words_str(code.members()));
    for (int i : {2, 3}) {
      std::vector<Word> image;
      for (const std::pair<Word, Word>& p : succ_all(code, i)) image.push_back(p.second);
      std::sort(image.begin(), image.end());
      std::vector<Word> expected;
      for (const Word& x : spref(code)) expected.push_back(x.append(i));
      std::sort(expected.begin(), expected.end());
      run.check(image == expected, "successor image {" + detail::words_str(image) +
                                       "} differs from spref(P)a_" + std::to_string(i) + " = {" +
                                       detail::words_str(expected) + "}");
    }
  }
  return run.result();
}

// ---------------------------------------------------------------------------
// 3. successor behavior under one-step restriction
// ---------------------------------------------------------------------------

inline SuiteResult suite_succ_restriction(const Options&) {
  detail::SuiteRun run("succ-restriction", 3);
  std::vector<std::vector<Word>> codes = binary_codes_up_to(6);
  run.result().exhaustive = std::to_string(codes.size()) + " codes, every split leaf, i in {2,3}";
  for (const std::vector<Word>& words : codes) {
    PrefixCode code(Alphabet(2), words);
    for (const Word& split : code.members()) {
      PrefixCode restricted = restrict_code(code, split);
      for (int i : {2, 3}) {
        run.context(0, "code=" + detail::words_str(code.members()) + " split=" + split.str() +
                           " i=" + std::to_string(i));
        std::optional<Word> child0 = succ_iterative(SuccessorQuery{restricted, split.append(0), i});
        std::optional<Word> child1 = succ_iterative(SuccessorQuery{restricted, split.append(1), i});
        run.check(child1 == std::optional<Word>(split.append(i)),
                  "(p a_1)' = " + detail::opt_word_str(child1) + ", expected p a_i = " +
                      split.append(i).str());
        if (in_zero_star(split)) {
          run.check(!child0.has_value(),
                    "(p a_0)' should not exist for p in a_0^*, got " + detail::opt_word_str(child0));
        } else {
          std::optional<Word> parent_succ = succ_iterative(SuccessorQuery{code, split, i});
          run.check(child0 == parent_succ, "(p a_0)' = " + detail::opt_word_str(child0) +
                                               ", expected (p)' = " + detail::opt_word_str(parent_succ));
        }
        // members untouched by the split keep their successors
        if (code.size() >= 2) {
          for (const Word& other : code.members()) {
            if (other == split) continue;
            std::optional<Word> before = succ_iterative(SuccessorQuery{code, other, i});
            std::optional<Word> after = succ_iterative(SuccessorQuery{restricted, other, i});
            run.check(before == after, "successor of untouched member " + other.str() + " changed from " +
                                           detail::opt_word_str(before) + " to " +
                                           detail::opt_word_str(after));
          }
        }
      }
    }
  }
  return run.result();
}

// ---------------------------------------------------------------------------
// 4. iota is a homomorphism
// ---------------------------------------------------------------------------

inline SuiteResult suite_iota_hom(const Options& opt) {
  detail::SuiteRun run("iota-hom", 4);
  const std::vector<GroupElement>& small = detail::small_canonical_elements();
  run.result().exhaustive =
      "all ordered pairs of the " + std::to_string(small.size()) + " canonical elements with <= 3 pairs";
  for (int k : {3, 4, 5}) {
    Alphabet target(k);
    for (const GroupElement& g : small) {
      for (const GroupElement& h : small) {
        run.context(0, "k=" + std::to_string(k) + " g=[" + one_line(g) + "] h=[" + one_line(h) + "]");
        run.check(iota(compose(h, g), target) == compose(iota(h, target), iota(g, target)),
                  "iota(h o g) != iota(h) o iota(g)");
      }
    }
  }

  long long trials = detail::count_or(opt, 200);
  for (int k : {3, 4, 5}) {
    Alphabet target(k);
    for (long long t = 0; t < trials; ++t) {
      std::uint64_t seed = mix_seed(opt.seed, 0x0400 + static_cast<std::uint64_t>(k * 1000 + t));
      Rng rng(seed);
      GroupElement g = detail::random_element_over(Alphabet(2), 13, rng);
      GroupElement h = detail::random_element_over(Alphabet(2), 13, rng);
      run.context(seed, "k=" + std::to_string(k) + " g=[" + one_line(g) + "] h=[" + one_line(h) + "]");
      run.check(iota(compose(h, g), target) == compose(iota(h, target), iota(g, target)),
                "iota(h o g) != iota(h) o iota(g)");
    }
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 5. iota commutes with one-step restriction (raw tables)
// ---------------------------------------------------------------------------

inline SuiteResult suite_iota_commute(const Options& opt) {
  detail::SuiteRun run("iota-commute", 5);
  long long trials = detail::count_or(opt, 200);
  for (int k : {3, 4, 5}) {
    Alphabet target(k);
    for (long long t = 0; t < trials; ++t) {
      std::uint64_t seed = mix_seed(opt.seed, 0x0500 + static_cast<std::uint64_t>(k * 1000 + t));
      Rng rng(seed);
      GroupElement g = detail::random_element_over(Alphabet(2), 13, rng);
      const std::vector<Entry>& entries = g.table().entries();
      const Word& split = entries[static_cast<std::size_t>(rng.below(entries.size()))].dom;
      run.context(seed, "k=" + std::to_string(k) + " g=[" + one_line(g) + "] split=" + split.str());
      Table restricted_first = iota_table(restriction_step(g.table(), split), target);
      Table embedded_first = restriction_step(iota_table(g.table(), target), Word::single(1) + split);
      run.check(detail::sorted_entries(restricted_first) == detail::sorted_entries(embedded_first),
                "iota(restr_p(g)) and restr_{a_1 p}(iota(g)) differ as pair sets");
    }
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 6. iota injectivity, subgroup membership, fixed a_0-subtree
// ---------------------------------------------------------------------------

inline SuiteResult suite_iota_inject(const Options& opt) {
  detail::SuiteRun run("iota-inject", 6);
  long long wanted = detail::count_or(opt, 500);
  std::vector<GroupElement> sample;
  std::set<std::string> seen;
  for (long long t = 0; static_cast<long long>(sample.size()) < wanted && t < 40 * wanted + 64; ++t) {
    std::uint64_t seed = mix_seed(opt.seed, 0x0600 + static_cast<std::uint64_t>(t));
    Rng rng(seed);
    GroupElement g = detail::random_element_over(Alphabet(2), 13, rng);
    if (seen.insert(serialize(g)).second) sample.push_back(g);
  }
  run.context(0, "sample generation");
  run.check(static_cast<long long>(sample.size()) == wanted,
            "could not collect " + std::to_string(wanted) + " distinct elements");

  for (int k : {3, 4, 5}) {
    Alphabet target(k);
    std::vector<Word> tails = all_words_up_to(target, 5);
    std::set<std::string> images;
    for (const GroupElement& g : sample) {
      GroupElement image = iota(g, target);
      run.context(0, "k=" + std::to_string(k) + " g=[" + one_line(g) + "]");
      run.check(images.insert(serialize(image)).second, "iota image collides with an earlier one");
      run.check(in_mixed_subgroup(image), "iota image is outside the mixed subgroup");
      bool fixes = true;
      for (const Word& w : tails) {
        Word x = Word::single(0) + w;
        if (apply(image, x) != std::optional<Word>(x)) {
          fixes = false;
          break;
        }
      }
      run.check(fixes, "iota image moves a point of the a_0-subtree");
    }
  }
  run.result().random_trials = wanted;
  return run.result();
}

// ---------------------------------------------------------------------------
// 7. group axioms and maximum-extension confluence
// ---------------------------------------------------------------------------

inline SuiteResult suite_group_axioms(const Options& opt) {
  detail::SuiteRun run("group-axioms", 7);
  long long trials = detail::count_or(opt, 200);
  for (int k : {2, 3, 4}) {
    Alphabet a(k);
    GroupElement id = GroupElement::identity(a);
    for (long long t = 0; t < trials; ++t) {
      std::uint64_t seed = mix_seed(opt.seed, 0x0700 + static_cast<std::uint64_t>(k * 1000 + t));
      Rng rng(seed);
      GroupElement f = detail::random_element_over(a, 13, rng);
      GroupElement g = detail::random_element_over(a, 13, rng);
      GroupElement h = detail::random_element_over(a, 13, rng);
      run.context(seed, "k=" + std::to_string(k) + " f=[" + one_line(f) + "] g=[" + one_line(g) +
                            "] h=[" + one_line(h) + "]");
      run.check(compose(f, compose(g, h)) == compose(compose(f, g), h), "composition is not associative");
      run.check(compose(g, id) == g, "right identity fails");
      run.check(compose(id, g) == g, "left identity fails");
      run.check(compose(invert(g), g) == id, "invert(g) o g != identity");
      run.check(compose(g, invert(g)) == id, "g o invert(g) != identity");
      const std::vector<Entry>& entries = g.table().entries();
      const Word& split = entries[static_cast<std::size_t>(rng.below(entries.size()))].dom;
      run.check(maximum_extension(restriction_step(g.table(), split)) == g,
                "restriction followed by maximum extension is not the identity");
    }
  }

  // confluence: shuffled extension orders reach the same canonical form
  for (long long t = 0; t < trials; ++t) {
    std::uint64_t seed = mix_seed(opt.seed, 0x0780 + static_cast<std::uint64_t>(t));
    Rng rng(seed);
    int k = rng.in(2, 4);
    Alphabet a(k);
    GroupElement g = detail::random_element_over(a, 13, rng);
    Table inflated = g.table();
    int splits = rng.in(1, 5);
    for (int s = 0; s < splits; ++s) {
      const std::vector<Entry>& entries = inflated.entries();
      inflated = restriction_step(inflated, entries[static_cast<std::size_t>(rng.below(entries.size()))].dom);
    }
    run.context(seed, "k=" + std::to_string(k) + " table=[" + one_line(inflated) + "]");
    Table shuffled = inflated;
    for (;;) {
      std::vector<Word> sites = extension_sites(shuffled);
      if (sites.empty()) break;
      shuffled = extend_at(shuffled, sites[static_cast<std::size_t>(rng.below(sites.size()))]);
    }
    GroupElement in_order = maximum_extension(inflated);
    run.check(detail::sorted_entries(shuffled) == detail::sorted_entries(in_order.table()),
              "shuffled extension order reached a different normal form");
    run.check(in_order == g, "re-extended table differs from the original element");
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 8. Higman code-substitution embedding
// ---------------------------------------------------------------------------

inline SuiteResult suite_higman(const Options& opt) {
  detail::SuiteRun run("higman", 8);
  const std::vector<std::pair<int, int>> shapes{{3, 2}, {4, 2}, {5, 2}, {5, 3}};
  long long trials = detail::count_or(opt, 200);
  for (const std::pair<int, int>& shape : shapes) {
    const int source_k = shape.first;
    const int target_k = shape.second;
    Alphabet source(source_k), target(target_k);
    CodeEncoding enc = canonical_code(source_k, target);
    run.context(0, "K=" + std::to_string(source_k) + " k=" + std::to_string(target_k));
    run.check(static_cast<int>(enc.code().size()) == source_k &&
                  (source_k - 1) % (target_k - 1) == 0,
              "canonical code size is not of the form 1 + (k-1)d");
    std::vector<Word> suffixes = all_words_up_to(source, 3);
    for (long long t = 0; t < trials; ++t) {
      std::uint64_t seed = mix_seed(opt.seed, 0x0800 + static_cast<std::uint64_t>(source_k * 10000 +
                                                                                  target_k * 1000 + t));
      Rng rng(seed);
      GroupElement g = detail::random_element_over(source, 13, rng);
      GroupElement h = detail::random_element_over(source, 13, rng);
      GroupElement eg = higman_embed(g, enc);
      run.context(seed, "K=" + std::to_string(source_k) + " k=" + std::to_string(target_k) + " g=[" +
                            one_line(g) + "] h=[" + one_line(h) + "]");
      run.check(higman_embed(compose(h, g), enc) == compose(higman_embed(h, enc), eg),
                "higman_embed(h o g) != higman_embed(h) o higman_embed(g)");
      bool conjugation = true;
      for (const Entry& e : g.table().entries()) {
        for (const Word& s : suffixes) {
          Word x = e.dom + s;
          std::optional<Word> lhs = apply(eg, enc.encode(x));
          std::optional<Word> rhs_raw = apply(g, x);
          if (!lhs || !rhs_raw || *lhs != enc.encode(*rhs_raw)) {
            conjugation = false;
            break;
          }
        }
        if (!conjugation) break;
      }
      run.check(conjugation, "conjugation law apply(enc(g), enc(x)) = enc(apply(g, x)) fails");
    }
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 9. embed_any is a homomorphism for every source/target pair
// ---------------------------------------------------------------------------

inline SuiteResult suite_embed_any(const Options& opt) {
  detail::SuiteRun run("embed-any", 9);
  long long trials = detail::count_or(opt, 200);
  for (int i = 2; i <= 5; ++i) {
    for (int j = 2; j <= 5; ++j) {
      Alphabet source(i), target(j);
      for (long long t = 0; t < trials; ++t) {
        std::uint64_t seed =
            mix_seed(opt.seed, 0x0900 + static_cast<std::uint64_t>(i * 100000 + j * 10000 + t));
        Rng rng(seed);
        GroupElement g = detail::random_element_over(source, 13, rng);
        GroupElement h = detail::random_element_over(source, 13, rng);
        run.context(seed, "i=" + std::to_string(i) + " j=" + std::to_string(j) + " g=[" + one_line(g) +
                              "] h=[" + one_line(h) + "]");
        GroupElement eg = embed_any(g, target);
        GroupElement eh = embed_any(h, target);
        run.check(embed_any(compose(h, g), target) == compose(eh, eg),
                  "embed(h o g) != embed(h) o embed(g)");
        if (!(g == h)) run.check(!(eg == eh), "distinct elements embed to the same image");
      }
    }
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 10. theta and partial fixators
// ---------------------------------------------------------------------------

inline SuiteResult suite_theta_pfix(const Options& opt) {
  detail::SuiteRun run("theta-pfix", 10);
  Alphabet binary(2);
  const FixatorSpec zero{Word::single(0)};

  run.context(0, "transposition witness");
  GroupElement swap01 = maximum_extension(
      Table(binary, {Entry{Word::single(0), Word::single(1)}, Entry{Word::single(1), Word::single(0)}}));
  run.check(!pfix_check(swap01, zero), "pfix_check fails to reject the transposition on a_0 A*");
  run.check(pfix_check(GroupElement::identity(binary), zero), "identity must partially fix a_0 A*");
  run.result().exhaustive = "transposition and identity witnesses";

  long long trials = detail::count_or(opt, 200);
  for (long long t = 0; t < trials; ++t) {
    std::uint64_t seed = mix_seed(opt.seed, 0x0a00 + static_cast<std::uint64_t>(t));
    Rng rng(seed);
    GroupElement g = detail::random_element_over(binary, 13, rng);
    GroupElement h = detail::random_element_over(binary, 13, rng);
    run.context(seed, "g=[" + one_line(g) + "] h=[" + one_line(h) + "]");
    run.check(theta(compose(h, g)) == compose(theta(h), theta(g)), "theta(h o g) != theta(h) o theta(g)");
    if (!(g == h)) run.check(!(theta(g) == theta(h)), "theta collapses distinct elements");
    run.check(pfix_check(theta(g), zero), "theta image does not partially fix a_0 A*");
    // identity partially fixes every right ideal
    Word w;
    int len = rng.in(0, 4);
    for (int d = 0; d < len; ++d) w = w.append(rng.in(0, 1));
    run.check(pfix_check(GroupElement::identity(binary), FixatorSpec{w}),
              "identity must partially fix " + w.str() + " A*");
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------
// 11. serialization round-trip and byte stability
// ---------------------------------------------------------------------------

inline SuiteResult suite_serialization(const Options& opt) {
  detail::SuiteRun run("serialization", 11);
  long long trials = detail::count_or(opt, 200);
  for (int k : {2, 3, 4, 5}) {
    Alphabet a(k);
    for (long long t = 0; t < trials; ++t) {
      std::uint64_t seed = mix_seed(opt.seed, 0x0b00 + static_cast<std::uint64_t>(k * 1000 + t));
      Rng rng(seed);
      GroupElement g = detail::random_element_over(a, 13, rng);
      run.context(seed, "k=" + std::to_string(k) + " g=[" + one_line(g) + "]");
      std::string text = serialize(g);
      Table parsed = parse_element(text);
      run.check(parsed == g.table(), "parse(serialize(g)) differs from g");
      run.check(serialize(maximum_extension(parsed)) == text, "canonical output is not byte-stable");
    }
  }
  run.result().random_trials = trials;
  return run.result();
}

// ---------------------------------------------------------------------------

struct SuiteInfo {
  const char* name;
  int criterion;
  SuiteResult (*fn)(const Options&);
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"succ-formula", 1, suite_succ_formula},
      {"succ-image", 2, suite_succ_image},
      {"succ-restriction", 3, suite_succ_restriction},
      {"iota-hom", 4, suite_iota_hom},
      {"iota-commute", 5, suite_iota_commute},
      {"iota-inject", 6, suite_iota_inject},
      {"group-axioms", 7, suite_group_axioms},
      {"higman", 8, suite_higman},
      {"embed-any", 9, suite_embed_any},
      {"theta-pfix", 10, suite_theta_pfix},
      {"serialization", 11, suite_serialization},
  };
  return all;
}

inline std::vector<SuiteResult> run_all(const Options& opt, const std::vector<std::string>& only = {}) {
  for (const std::string& name : only) {
    bool known = false;
    for (const SuiteInfo& s : suites()) known = known || name == s.name;
    if (!known) fail(Errc::InvalidQuery, "unknown suite '" + name + "'");
  }
  std::vector<SuiteResult> results;
  for (const SuiteInfo& s : suites()) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = s.fn(opt);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

inline bool all_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.passed()) return false;
  return true;
}

// Deterministic for fixed (trials, seed): timings are reported separately.
inline std::string format_report(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const SuiteResult& r : results) {
    out += "suite " + r.name + ": " + (r.passed() ? "PASS" : "FAIL");
    if (!r.exhaustive.empty()) out += " exhaustive[" + r.exhaustive + "]";
    out += " trials=" + std::to_string(r.random_trials);
    if (r.random_trials == 0) out += " (skipped-random, exhaustive-only)";
    if (!r.passed()) out += " failures=" + std::to_string(r.total_failures);
    out += "\n";
    for (const Failure& f : r.failures)
      out += "  seed=" + std::to_string(f.seed) + " inputs: " + f.inputs + ": " + f.message + "\n";
    if (r.total_failures > static_cast<long long>(r.failures.size()))
      out += "  ... and " + std::to_string(r.total_failures - static_cast<long long>(r.failures.size())) +
             " more\n";
  }
  int passed = 0;
  for (const SuiteResult& r : results) passed += r.passed() ? 1 : 0;
  out += "verify: " + std::string(all_passed(results) ? "PASS" : "FAIL") + " (" + std::to_string(passed) +
         "/" + std::to_string(results.size()) + " suites)\n";
  return out;
}

inline std::string format_timing(const std::vector<SuiteResult>& results) {
  std::string out;
  double total = 0;
  char buf[64];
  for (const SuiteResult& r : results) {
    std::snprintf(buf, sizeof buf, "# timing: %s %.3fs\n", r.name.c_str(), r.seconds);
    out += buf;
    total += r.seconds;
  }
  std::snprintf(buf, sizeof buf, "# timing: total %.3fs\n", total);
  out += buf;
  return out;
}

}  // namespace gk1::verify
