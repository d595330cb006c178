// Command-line frontend for the boolfn library.  Every subcommand is a
// thin wrapper: parse arguments, call one library operation, print the
// rendered result.  Terms are read from standard input so parentheses
// survive shell quoting.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boolfn/bitvec.hpp"
#include "boolfn/circuit.hpp"
#include "boolfn/mtbdd.hpp"
#include "boolfn/pairing.hpp"
#include "boolfn/ranking.hpp"
#include "boolfn/term_io.hpp"

namespace {

using boolfn::Bdd;
using boolfn::GateLibrary;
using boolfn::Mtbdd;
using boolfn::Nat;

Nat parse_nat(const std::string& text, const std::string& what) {
  try {
    Nat n(text, 10);
    if (sgn(n) < 0) throw std::invalid_argument("negative");
    return n;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(what + ": expected a natural number, got '" +
                                text + "'");
  }
}

GateLibrary parse_library(const std::string& text) {
  if (text == "mixops") return boolfn::mixops;
  if (text == "symops") return boolfn::symops;
  if (text == "asymops") return boolfn::asymops;
  GateLibrary lib;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int code = -1;
    try {
      code = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw std::invalid_argument("--lib: expected opcode list or library name, got '" +
                                  text + "'");
    lib.push_back(boolfn::op_from_code(code));
  }
  if (lib.empty()) throw std::invalid_argument("--lib: empty gate library");
  return lib;
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

Bdd bdd_from_stdin() {
  boolfn::Term term = boolfn::parse_term(read_stdin());
  if (!std::holds_alternative<Bdd>(term))
    throw std::invalid_argument("expected a BDD term on standard input");
  return std::get<Bdd>(std::move(term));
}

Mtbdd mtbdd_from_stdin() {
  boolfn::Term term = boolfn::parse_term(read_stdin());
  if (!std::holds_alternative<Mtbdd>(term))
    throw std::invalid_argument("expected an MTBDD term on standard input");
  return std::get<Mtbdd>(std::move(term));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean functions as truth-table integers: exact circuit "
               "synthesis, decision-diagram codecs, pairing and ranking"};
  app.require_subcommand(1);

  std::string lib_text;
  std::string tt_text;
  std::string max_leaves_text;
  std::string n_text;
  std::string i_text;
  std::string j_text;
  int nvars = 0;
  int value_bits = 0;
  long count = 0;
  bool plain = false;

  auto* synth = app.add_subcommand("synth", "Synthesize a minimal circuit");
  synth->add_option("--lib", lib_text,
                    "Gate opcodes (comma-separated codes 0..4, or "
                    "mixops/symops/asymops)")->required();
  synth->add_option("--nvars", nvars, "Number of input variables")->required();
  synth->add_option("--tt", tt_text, "Target truth table")->required();
  synth->add_option("--max-leaves", max_leaves_text, "Leaf budget override");
  synth->callback([&] {
    GateLibrary lib = parse_library(lib_text);
    Nat tt = parse_nat(tt_text, "--tt");
    if (max_leaves_text.empty()) {
      std::cout << boolfn::synth_line(lib, nvars, tt) << '\n';
      return;
    }
    Nat budget = parse_nat(max_leaves_text, "--max-leaves");
    boolfn::Candidate c = boolfn::first_match(lib, nvars, budget, tt);
    std::cout << tt.get_str() << ":"
              << boolfn::format_tree(nvars, boolfn::decode_candidate(nvars, c))
              << '\n';
  });

  auto* synth_all = app.add_subcommand(
      "synth-all", "Synthesize every function of nvars variables");
  synth_all->add_option("--lib", lib_text, "Gate opcodes or library name")
      ->required();
  synth_all->add_option("--nvars", nvars, "Number of input variables")
      ->required();
  synth_all->callback([&] {
    GateLibrary lib = parse_library(lib_text);
    Nat mask = boolfn::all_ones(nvars);
    for (Nat tt = 0; tt <= mask; ++tt)
      std::cout << boolfn::synth_line(lib, nvars, tt) << '\n';
  });

  auto* bdd = app.add_subcommand("bdd", "Decision-diagram codecs");
  bdd->require_subcommand(1);
  auto* bdd_encode = bdd->add_subcommand("encode", "Truth table -> BDD term");
  bdd_encode->add_option("--nvars", nvars, "Number of variables")->required();
  bdd_encode->add_option("--tt", tt_text, "Truth table")->required();
  bdd_encode->add_flag("--plain", plain, "Emit the complete tree, unreduced");
  bdd_encode->callback([&] {
    Nat tt = parse_nat(tt_text, "--tt");
    Bdd b = plain ? boolfn::plain_bdd(nvars, tt) : boolfn::reduced_bdd(nvars, tt);
    std::cout << boolfn::render(b) << '\n';
  });
  auto decode_action = [&] {
    std::cout << boolfn::eval_bdd(bdd_from_stdin()).get_str() << '\n';
  };
  bdd->add_subcommand("decode", "BDD term (stdin) -> truth table")
      ->callback(decode_action);
  bdd->add_subcommand("eval", "Alias of decode")->callback(decode_action);

  auto* rank = app.add_subcommand("rank", "BDD term (stdin) -> rank");
  rank->callback(
      [&] { std::cout << boolfn::rank_bdd(bdd_from_stdin()).get_str() << '\n'; });

  auto* unrank = app.add_subcommand("unrank", "Rank -> BDD term");
  unrank->add_option("--n", n_text, "Rank")->required();
  unrank->add_flag("--plain", plain, "Emit the complete tree, unreduced");
  unrank->callback([&] {
    Nat n = parse_nat(n_text, "--n");
    Bdd b = plain ? boolfn::unrank_plain_bdd(n) : boolfn::unrank_bdd(n);
    std::cout << boolfn::render(b) << '\n';
  });

  auto* enumerate = app.add_subcommand("enumerate", "Stream BDDs in rank order");
  enumerate->add_option("--count", count, "How many to print")->required();
  enumerate->add_flag("--plain", plain, "Emit complete trees, unreduced");
  enumerate->callback([&] {
    boolfn::BddStream stream(plain);
    for (long i = 0; i < count; ++i)
      std::cout << boolfn::render(stream.next()) << '\n';
  });

  auto* pair = app.add_subcommand("pair", "Interleave two naturals");
  pair->add_option("--i", i_text, "First component")->required();
  pair->add_option("--j", j_text, "Second component")->required();
  pair->callback([&] {
    std::cout << boolfn::interleave(parse_nat(i_text, "--i"),
                                    parse_nat(j_text, "--j"))
                     .get_str()
              << '\n';
  });

  auto* unpair = app.add_subcommand("unpair", "Split a natural into components");
  unpair->add_option("--n", n_text, "Paired value")->required();
  unpair->callback([&] {
    auto [a, b] = boolfn::deinterleave(parse_nat(n_text, "--n"));
    std::cout << a.get_str() << ' ' << b.get_str() << '\n';
  });

  auto* mtbdd = app.add_subcommand("mtbdd", "Multi-terminal codecs");
  mtbdd->require_subcommand(1);
  auto* mt_encode = mtbdd->add_subcommand("encode", "Truth table -> MTBDD term");
  mt_encode->add_option("--m", value_bits, "Output width in bits")->required();
  mt_encode->add_option("--n", nvars, "Number of input variables")->required();
  mt_encode->add_option("--tt", tt_text, "Truth table")->required();
  mt_encode->callback([&] {
    std::cout << boolfn::render(boolfn::to_mtbdd(value_bits, nvars,
                                                 parse_nat(tt_text, "--tt")))
              << '\n';
  });
  mtbdd->add_subcommand("decode", "MTBDD term (stdin) -> truth table")
      ->callback([&] {
        std::cout << boolfn::from_mtbdd(mtbdd_from_stdin()).get_str() << '\n';
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "boolfn: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
