#include "boolfn/circuit.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using boolfn::all_ones;
using boolfn::asymops;
using boolfn::bindings;
using boolfn::Candidate;
using boolfn::CandidateStream;
using boolfn::CircuitTree;
using boolfn::decode_candidate;
using boolfn::decode_input;
using boolfn::eval_circuit;
using boolfn::first_match;
using boolfn::fold_circuit;
using boolfn::format_tree;
using boolfn::gate_count;
using boolfn::gate_trees;
using boolfn::GateLibrary;
using boolfn::input_value;
using boolfn::input_values;
using boolfn::leaf_count;
using boolfn::mixops;
using boolfn::Nat;
using boolfn::OpCode;
using boolfn::symops;
using boolfn::synth_all;
using boolfn::synth_line;
using boolfn::synthesize;
using boolfn::var_maps;
using boolfn::VarMap;

namespace {

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<Nat> nats(std::initializer_list<long> xs) {
  return std::vector<Nat>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("input encoding covers variables and constants") {
  Nat m = all_ones(2);
  CHECK(input_value(m, 2, 2) == 15);
  CHECK(input_value(m, 2, 3) == 0);
  CHECK(input_value(m, 2, 1) == 5);
  CHECK_THROWS_AS(input_value(m, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(input_value(m, 2, -1), std::invalid_argument);
}

TEST_CASE("input_values order is pinned") {
  CHECK(input_values(2) == nats({0, 15, 3, 5}));
  CHECK(input_values(3) == nats({0, 255, 15, 51, 85}));
  CHECK(input_values(1) == nats({0, 3, 1}));
}

TEST_CASE("decode_input inverts the encoding") {
  std::vector<int> decoded2;
  for (const Nat& v : input_values(2)) decoded2.push_back(decode_input(2, v));
  CHECK(decoded2 == std::vector<int>{3, 2, 0, 1});
  std::vector<int> decoded3;
  for (const Nat& v : input_values(3)) decoded3.push_back(decode_input(3, v));
  CHECK(decoded3 == std::vector<int>{4, 3, 0, 1, 2});
  CHECK(decode_input(2, Nat(15)) == 2);
  CHECK_THROWS_AS(decode_input(2, Nat(7)), std::invalid_argument);
}

TEST_CASE("bindings enumerate with position 0 fastest") {
  auto bs = bindings(2, nats({0, 3, 5}));
  std::vector<std::vector<Nat>> want = {
      {Nat(0), Nat(0)}, {Nat(3), Nat(0)}, {Nat(5), Nat(0)},
      {Nat(0), Nat(3)}, {Nat(3), Nat(3)}, {Nat(5), Nat(3)},
      {Nat(0), Nat(5)}, {Nat(3), Nat(5)}, {Nat(5), Nat(5)}};
  CHECK(bs == want);
  CHECK(bindings(0, nats({1, 2})) == std::vector<std::vector<Nat>>{{}});
  CHECK(bindings(1, nats({7})) == std::vector<std::vector<Nat>>{{Nat(7)}});
}

TEST_CASE("var_maps preserve bindings order") {
  auto vms = var_maps(2, nats({3, 5}));
  REQUIRE(vms.size() == 4);
  CHECK(vms[0] == nats({3, 3}));
  CHECK(vms[1] == nats({5, 3}));
  CHECK(vms[2] == nats({3, 5}));
  CHECK(vms[3] == nats({5, 5}));
  CHECK(var_maps(1, nats({0})) == std::vector<VarMap>{nats({0})});
  CHECK(var_maps(3, nats({3, 5})).size() == 8);
  CHECK_THROWS_AS(var_maps(0, nats({3})), std::invalid_argument);
}

TEST_CASE("gate_trees base cases and counts") {
  auto single = gate_trees(mixops, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == CircuitTree::leaf(0));

  auto two = gate_trees({OpCode::Nand}, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == CircuitTree::gate(OpCode::Nand, CircuitTree::leaf(0),
                                    CircuitTree::leaf(1)));

  for (int g : {1, 2, 5}) {
    GateLibrary lib;
    for (int c = 0; c < g; ++c) lib.push_back(boolfn::op_from_code(c));
    for (int n = 1; n <= 5; ++n) {
      long want = catalan(n - 1);
      for (int i = 1; i < n; ++i) want *= g;
      CHECK(gate_trees(lib, n).size() == static_cast<std::size_t>(want));
    }
  }
  CHECK_THROWS_AS(gate_trees({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(gate_trees(mixops, 0), std::invalid_argument);
}

TEST_CASE("gate_trees order: split ascending, left, right, op fastest") {
  auto L = [](int i) { return CircuitTree::leaf(i); };
  auto N = [](CircuitTree a, CircuitTree b) {
    return CircuitTree::gate(OpCode::Nand, a, b);
  };
  auto R = [](CircuitTree a, CircuitTree b) {
    return CircuitTree::gate(OpCode::Nor, a, b);
  };
  auto ts = gate_trees(symops, 3);
  std::vector<CircuitTree> want = {
      N(L(0), N(L(1), L(2))), R(L(0), N(L(1), L(2))),
      N(L(0), R(L(1), L(2))), R(L(0), R(L(1), L(2))),
      N(N(L(0), L(1)), L(2)), R(N(L(0), L(1)), L(2)),
      N(R(L(0), L(1)), L(2)), R(R(L(0), L(1)), L(2))};
  REQUIRE(ts.size() == want.size());
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == want[i]);
}

TEST_CASE("fold computes sizes and evaluation") {
  auto t = CircuitTree::gate(OpCode::Nor, CircuitTree::leaf(0),
                             CircuitTree::leaf(1));
  CHECK(gate_count(t) == 1);
  CHECK(leaf_count(t) == 2);

  Nat m = all_ones(2);
  VarMap vm = nats({3, 5});
  CHECK(eval_circuit(m, t, vm) == boolfn::apply_op(m, OpCode::Nor, 3, 5));
}

TEST_CASE("candidate stream starts with the constant-0 leaf") {
  CandidateStream s({OpCode::Nand}, 2, Nat(8));
  auto c = s.next();
  REQUIRE(c.has_value());
  CHECK(c->tree == CircuitTree::leaf(0));
  CHECK(c->varmap == nats({0}));
  CHECK(c->value == 0);
}

TEST_CASE("candidate stream counts per leaf block") {
  // (nvars + 2)^k * catalan(k-1) * |lib|^(k-1) candidates for each k
  CandidateStream s(mixops, 2, Nat(3));
  std::vector<long> per_k(4, 0);
  Nat mask = all_ones(2);
  while (auto c = s.next()) {
    CHECK(c->value <= mask);
    CHECK(eval_circuit(mask, c->tree, c->varmap) == c->value);
    per_k[static_cast<std::size_t>(leaf_count(c->tree))]++;
  }
  CHECK(per_k[1] == 4);
  CHECK(per_k[2] == 16 * 1 * 2);
  CHECK(per_k[3] == 64 * 2 * 4);
}

TEST_CASE("candidate stream is deterministic") {
  CandidateStream a(asymops, 2, Nat(3));
  CandidateStream b(asymops, 2, Nat(3));
  for (int i = 0; i < 500; ++i) {
    auto ca = a.next();
    auto cb = b.next();
    REQUIRE(ca.has_value() == cb.has_value());
    if (!ca) break;
    CHECK(ca->tree == cb->tree);
    CHECK(ca->varmap == cb->varmap);
    CHECK(ca->value == cb->value);
  }
}

TEST_CASE("stream rejects bad setups") {
  CHECK_THROWS_AS(CandidateStream({}, 2, Nat(3)), std::invalid_argument);
  CHECK_THROWS_AS(CandidateStream(mixops, 0, Nat(3)), std::invalid_argument);
  CandidateStream empty(mixops, 2, Nat(0));
  CHECK_FALSE(empty.next().has_value());
}

TEST_CASE("first_match reproduces the nor-only candidate for tt 1") {
  Candidate c = first_match({OpCode::Nor}, 2, Nat(8), Nat(1));
  auto L = [](int i) { return CircuitTree::leaf(i); };
  auto R = [](CircuitTree a, CircuitTree b) {
    return CircuitTree::gate(OpCode::Nor, a, b);
  };
  CHECK(c.tree == R(R(L(0), L(1)), R(L(2), L(3))));
  CHECK(c.varmap == nats({5, 0, 3, 0}));
  CHECK(c.value == 1);

  CircuitTree decoded = decode_candidate(2, c);
  CHECK(decoded == R(R(L(1), L(3)), R(L(0), L(3))));
}

TEST_CASE("first_match finds constant 0 immediately") {
  Candidate c = first_match(mixops, 3, Nat(8), Nat(0));
  CHECK(c.tree == CircuitTree::leaf(0));
  CHECK(c.varmap == nats({0}));
  CHECK(c.value == 0);
}

TEST_CASE("first_match agrees with a scan of the stream") {
  for (unsigned tt = 0; tt < 16; ++tt) {
    Candidate direct = first_match(mixops, 2, Nat(6), Nat(tt));
    CandidateStream s(mixops, 2, Nat(6));
    while (auto c = s.next()) {
      if (c->value == tt) {
        CHECK(direct.tree == c->tree);
        CHECK(direct.varmap == c->varmap);
        break;
      }
    }
  }
}

TEST_CASE("first_match validates the target and budget") {
  CHECK_THROWS_AS(first_match(mixops, 2, Nat(8), Nat(16)), std::out_of_range);
  CHECK_THROWS_WITH_AS(first_match({OpCode::Nand}, 2, Nat(3), Nat(6)),
                       "no circuit within 3 leaves", std::runtime_error);
}

TEST_CASE("decoding rewrites occurrence leaves") {
  auto L = [](int i) { return CircuitTree::leaf(i); };
  Candidate c{CircuitTree::gate(OpCode::Nor, L(0), L(1)), nats({5, 3}), Nat(4)};
  CHECK(decode_candidate(2, c) == CircuitTree::gate(OpCode::Nor, L(1), L(0)));

  Candidate one{L(0), nats({15}), Nat(15)};
  CHECK(decode_candidate(2, one) == L(2));
}

TEST_CASE("format_tree renders decoded leaves and gates") {
  auto L = [](int i) { return CircuitTree::leaf(i); };
  auto t = CircuitTree::gate(OpCode::Xor, L(0),
                             CircuitTree::gate(OpCode::Nor, L(1), L(0)));
  CHECK(format_tree(2, t) == "xor(x0,nor(x1,x0))");
  CHECK(format_tree(2, L(2)) == "1");
  CHECK(format_tree(2, L(3)) == "0");
}

TEST_CASE("synthesis reproduces the published circuits") {
  CHECK(synth_line({OpCode::Nand}, 2, Nat(6)) ==
        "6:nand(nand(x0,nand(x1,1)),nand(x1,nand(x0,1)))");
  CHECK(synth_line(symops, 3, Nat(83)) ==
        "83:nor(nor(x2,x0),nor(x1,nor(x0,0)))");
  CHECK(synth_line({OpCode::Less, OpCode::Xor}, 3, Nat(83)) ==
        "83:xor(x1,less(xor(x2,x1),x0))");
  CHECK(format_tree(3, synthesize(mixops, 3, Nat(83))) ==
        "nand(impl(x2,x0),nand(x1,x0))");
}

TEST_CASE("synthesized circuits re-evaluate to their targets") {
  for (unsigned tt = 0; tt < 16; ++tt) {
    CircuitTree t = synthesize(mixops, 2, Nat(tt));
    CHECK(oracles::eval_circuit_rows(t, 2) == tt);
    CHECK(gate_count(t) == leaf_count(t) - 1);
  }
  CircuitTree ite3 = synthesize(asymops, 3, Nat(83));
  CHECK(oracles::eval_circuit_rows(ite3, 3) == 83);
  CircuitTree t71 = synthesize(asymops, 3, Nat(71));
  CHECK(oracles::eval_circuit_rows(t71, 3) == 71);
}

TEST_CASE("first matches are leaf-minimal (exhaustive oracle)") {
  oracles::CandidateValues oracle({0, 2}, 2);
  for (unsigned tt = 0; tt < 16; ++tt) {
    CircuitTree t = synthesize(mixops, 2, Nat(tt));
    CHECK(leaf_count(t) == oracle.min_leaves(tt, 8));
  }
}

TEST_CASE("synth_all covers every function once") {
  auto lines = synth_all(mixops, 2);
  REQUIRE(lines.size() == 16);
  CHECK(lines[0].substr(0, 2) == "0:");
  for (unsigned tt = 0; tt < 16; ++tt)
    CHECK(lines[tt] == synth_line(mixops, 2, Nat(tt)));
}
