// gk1 - exact computation in the Higman-Thompson groups G_{k,1}.
//
// Elements travel through files or pipes in the canonical format
//   G <k>
//   <p> -> <q>
// so subcommands compose in shell pipelines. Exit codes: 0 success,
// 1 property/validation failure, 2 usage or parse error. Every failure
// path prints a one-line machine-parsable reason as its final output line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gk1/gk1.hpp"

namespace {

gk1::Table read_table(const std::string& path) {
  if (path == "-") return gk1::parse_element(std::cin);
  std::ifstream in(path);
  if (!in) gk1::fail(gk1::Errc::ParseError, "cannot open " + path);
  return gk1::parse_element(in);
}

gk1::GroupElement read_element(const std::string& path) {
  return gk1::maximum_extension(read_table(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the Higman-Thompson groups G_{k,1}"};
  app.require_subcommand(1);
  int rc = 0;

  // validate
  std::string validate_path;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check the table invariants of an element file");
  cmd_validate->add_option("file", validate_path, "element file, or - for stdin")->required();
  cmd_validate->callback([&] {
    std::vector<std::string> problems = gk1::diagnose(read_table(validate_path));
    if (problems.empty()) {
      std::cout << "ok\n";
      return;
    }
    for (const std::string& p : problems) std::cerr << p << "\n";
    std::cout << "error: InvalidTable: " << problems.front() << std::endl;
    rc = 1;
  });

  // normalize
  std::string normalize_path;
  CLI::App* cmd_normalize = app.add_subcommand("normalize", "print the canonical form of an element");
  cmd_normalize->add_option("file", normalize_path, "element file, or - for stdin")->required();
  cmd_normalize->callback([&] { std::cout << gk1::serialize(read_element(normalize_path)); });

  // compose
  std::string compose_f, compose_g;
  CLI::App* cmd_compose =
      app.add_subcommand("compose", "compose two elements (the second argument acts first)");
  cmd_compose->add_option("f", compose_f, "element file for the outer map")->required();
  cmd_compose->add_option("g", compose_g, "element file for the inner map")->required();
  cmd_compose->callback(
      [&] { std::cout << gk1::serialize(gk1::compose(read_element(compose_f), read_element(compose_g))); });

  // invert
  std::string invert_path;
  CLI::App* cmd_invert = app.add_subcommand("invert", "invert an element");
  cmd_invert->add_option("file", invert_path, "element file, or - for stdin")->required();
  cmd_invert->callback([&] { std::cout << gk1::serialize(gk1::invert(read_element(invert_path))); });

  // apply
  std::string apply_path, apply_word;
  CLI::App* cmd_apply = app.add_subcommand("apply", "apply an element to a word");
  cmd_apply->add_option("file", apply_path, "element file, or - for stdin")->required();
  cmd_apply->add_option("word", apply_word, "digit-string word, - for the empty word")->required();
  cmd_apply->callback([&] {
    gk1::GroupElement g = read_element(apply_path);
    gk1::Word x = gk1::Word::parse(apply_word);
    if (!x.fits(g.alphabet()))
      gk1::fail(gk1::Errc::ParseError, "word " + x.str() + " uses letters outside A_" + std::to_string(g.k()));
    std::optional<gk1::Word> y = gk1::apply(g, x);
    std::cout << (y ? y->str() : "undefined") << "\n";
  });

  // embed
  std::string embed_path, embed_via = "auto", embed_code;
  int embed_to = 0;
  CLI::App* cmd_embed = app.add_subcommand("embed", "embed an element into another G_{k,1}");
  cmd_embed->add_option("file", embed_path, "element file, or - for stdin")->required();
  cmd_embed->add_option("--to", embed_to, "target alphabet size")->required();
  cmd_embed->add_option("--via", embed_via, "route: auto, iota, or higman")
      ->check(CLI::IsMember({"auto", "iota", "higman"}));
  cmd_embed->add_option("--code", embed_code, "comma-separated code words for a custom higman encoding");
  cmd_embed->callback([&] {
    gk1::GroupElement g = read_element(embed_path);
    gk1::Alphabet target(embed_to);
    gk1::GroupElement out = [&] {
      if (embed_via == "iota") return gk1::iota(g, target);
      if (embed_via == "higman") {
        if (!embed_code.empty())
          return gk1::higman_embed(
              g, gk1::CodeEncoding(g.alphabet(), target, gk1::parse_word_list(embed_code)));
        try {
          return gk1::higman_embed(g, gk1::canonical_code(g.k(), target));
        } catch (const gk1::Error& e) {
          if (e.code() == gk1::Errc::ImpossibleCodeSize)
            gk1::fail(e.code(), std::string(e.what()) + " (hint: --via auto routes through G_{2,1})");
          throw;
        }
      }
      std::cerr << "route: " << gk1::embed_route_name(gk1::embed_route(g.k(), target.k)) << "\n";
      return gk1::embed_any(g, target);
    }();
    std::cout << gk1::serialize(out);
  });

  // check
  CLI::App* cmd_check = app.add_subcommand("check", "decide a property of an element");
  cmd_check->require_subcommand(1);
  std::string check_mixed_path;
  CLI::App* cmd_check_mixed =
      cmd_check->add_subcommand("subgroup-mixed", "membership in G_{k,1}(0,1|2|...|k-1)");
  cmd_check_mixed->add_option("file", check_mixed_path, "element file, or - for stdin")->required();
  cmd_check_mixed->callback([&] {
    bool member = gk1::in_mixed_subgroup(read_element(check_mixed_path));
    std::cout << (member ? "true" : "false") << "\n";
    rc = member ? 0 : 1;
  });
  std::string check_pfix_path, check_pfix_prefix;
  CLI::App* cmd_check_pfix =
      cmd_check->add_subcommand("pfix", "partial fixing of the right ideal <prefix>·A*");
  cmd_check_pfix->add_option("file", check_pfix_path, "element file, or - for stdin")->required();
  cmd_check_pfix->add_option("--prefix", check_pfix_prefix, "ideal generator word")->required();
  cmd_check_pfix->callback([&] {
    bool fixes =
        gk1::pfix_check(read_element(check_pfix_path), gk1::FixatorSpec{gk1::Word::parse(check_pfix_prefix)});
    std::cout << (fixes ? "true" : "false") << "\n";
    rc = fixes ? 0 : 1;
  });

  // succ
  std::string succ_code;
  int succ_letter = 2;
  CLI::App* cmd_succ = app.add_subcommand("succ", "print the *a_i-successor map of a binary code");
  cmd_succ->add_option("--code", succ_code, "comma-separated maximal binary prefix code")->required();
  cmd_succ->add_option("--letter", succ_letter, "extra letter index i, 2..9")->required();
  cmd_succ->callback([&] {
    gk1::PrefixCode code(gk1::Alphabet(2), gk1::parse_word_list(succ_code));
    for (const auto& [from, to] : gk1::succ_all(code, succ_letter))
      std::cout << from.str() << " -> " << to.str() << "\n";
  });

  // random
  int random_k = 2, random_leaves = 1;
  std::uint64_t random_seed = 0;
  CLI::App* cmd_random = app.add_subcommand("random", "generate a seeded random element");
  cmd_random->add_option("--k", random_k, "alphabet size")->required();
  cmd_random->add_option("--leaves", random_leaves, "code size before extension (1 mod k-1)")->required();
  cmd_random->add_option("--seed", random_seed, "seed");
  cmd_random->callback([&] {
    std::cout << gk1::serialize(gk1::random_element(gk1::Alphabet(random_k), random_leaves, random_seed));
  });

  // verify
  long long verify_trials = -1;
  std::uint64_t verify_seed = 1;
  std::vector<std::string> verify_suites;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the property suites");
  cmd_verify->add_option("--trials", verify_trials,
                         "random trials per unit (-1: built-in counts, 0: exhaustive only)");
  cmd_verify->add_option("--seed", verify_seed, "base seed");
  cmd_verify->add_option("--suite", verify_suites, "run only the named suites (repeatable)");
  cmd_verify->callback([&] {
    gk1::verify::Options opt;
    opt.trials = verify_trials;
    opt.seed = verify_seed;
    std::vector<gk1::verify::SuiteResult> results = gk1::verify::run_all(opt, verify_suites);
    std::cout << gk1::verify::format_report(results);
    std::cerr << gk1::verify::format_timing(results);
    rc = gk1::verify::all_passed(results) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gk1::Error& e) {
    std::cout << "error: " << gk1::errc_name(e.code()) << ": " << e.what() << std::endl;
    return e.code() == gk1::Errc::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << "error: Internal: " << e.what() << std::endl;
    return 1;
  }
  return rc;
}
