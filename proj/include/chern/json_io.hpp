#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chern/chern_numbers.hpp"
#include "chern/invariants.hpp"

namespace chern {

// All parsers throw SchemaError with a diagnostic naming the offending key
// or cell; malformed input is never silently repaired or zero-filled.

std::string read_file(const std::string& path);

struct BettiInput {
    PoincarePoly P;
    std::optional<Integer> b4_minus;
};

// {"d":8,"betti":[1,0,23,0,276,0,23,0,1]} with optional "connected",
// "duality" (inferred from the list when absent) and "b4_minus".
BettiInput parse_betti_json(const std::string& text);
std::string render_betti_json(const PoincarePoly& P);

// {"n":2,"h":[[1,0,1],[0,20,0],[1,0,1]]} with h[p][q] layout.
HodgeDiamond parse_hodge_json(const std::string& text);
std::string render_hodge_json(const HodgeDiamond& H);

// {"n":3,"c1_zero":true,"pairings":{"c3":-200,"c1*c2":0,"c1^3":0}}.
ChernNumbers parse_chern_json(const std::string& text);
std::string render_chern_json(const ChernNumbers& data);

// {"m":7,"beta":[1,1,1,1,1,1,1]} listing beta_2..beta_{2m}.
QKBetti parse_qk_json(const std::string& text);
std::string render_qk_json(const QKBetti& beta);

// Shipped fixture files.

struct KummerFixture {
    std::vector<Integer> k2_betti;
    Integer k8_euler;
};
KummerFixture load_kummer_fixture(const std::string& fixture_dir);

struct G2Fixture {
    std::vector<std::vector<Integer>> examples;  // each a b_0..b_7 list
};
G2Fixture load_g2_fixture(const std::string& fixture_dir);

struct Spin7Fixture {
    PoincarePoly P;
    Integer b4_minus;
};
Spin7Fixture load_spin7_fixture(const std::string& fixture_dir);

struct QKFixtureSet {
    int m = 0;
    std::map<std::string, QKBetti> fixtures;
};
QKFixtureSet load_qk_fixture(const std::string& fixture_dir);

}  // namespace chern
