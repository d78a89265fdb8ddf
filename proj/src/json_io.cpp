#include "chern/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chern/chernpoly.hpp"

namespace chern {
namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("input is not valid JSON");
    return j;
}

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing required key '" + key + "'");
    return *it;
}

int int_field(const json& j, const std::string& key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError("key '" + key + "' must be an integer");
    return v.get<int>();
}

Integer integer_value(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
    return Integer(static_cast<long>(v.get<long long>()));
}

std::vector<Integer> integer_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw SchemaError(where + " must be an array of integers");
    std::vector<Integer> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(integer_value(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

long long to_ll(const Integer& x, const std::string& where) {
    if (!x.fits_slong_p()) throw SchemaError(where + " does not fit a 64-bit integer");
    return static_cast<long long>(x.get_si());
}

json integer_list_json(const std::vector<Integer>& xs, const std::string& where) {
    json arr = json::array();
    for (const Integer& x : xs) arr.push_back(to_ll(x, where));
    return arr;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

BettiInput parse_betti_json(const std::string& text) {
    json j = parse_text(text);
    const int d = int_field(j, "d");
    if (d < 0) throw SchemaError("key 'd' must be non-negative");
    std::vector<Integer> betti = integer_list(field(j, "betti"), "betti");
    if (betti.size() != static_cast<std::size_t>(d) + 1)
        throw SchemaError("betti list has " + std::to_string(betti.size()) + " entries, expected " +
                          std::to_string(d + 1));

    bool connected, duality;
    if (j.contains("connected")) {
        if (!j["connected"].is_boolean()) throw SchemaError("key 'connected' must be a boolean");
        connected = j["connected"].get<bool>();
    } else {
        connected = !betti.empty() && betti[0] >= 1;
    }
    if (j.contains("duality")) {
        if (!j["duality"].is_boolean()) throw SchemaError("key 'duality' must be a boolean");
        duality = j["duality"].get<bool>();
    } else {
        duality = true;
        for (int k = 0; 2 * k <= d; ++k)
            if (betti[static_cast<std::size_t>(k)] != betti[static_cast<std::size_t>(d - k)])
                duality = false;
    }

    BettiInput in;
    in.P = PoincarePoly::from_betti(d, std::move(betti), connected, duality);
    if (j.contains("b4_minus")) in.b4_minus = integer_value(j["b4_minus"], "b4_minus");
    return in;
}

std::string render_betti_json(const PoincarePoly& P) {
    json j;
    j["d"] = P.d;
    j["betti"] = integer_list_json(P.betti, "betti");
    j["connected"] = P.connected;
    j["duality"] = P.duality;
    return j.dump();
}

HodgeDiamond parse_hodge_json(const std::string& text) {
    json j = parse_text(text);
    const int n = int_field(j, "n");
    if (n < 0) throw SchemaError("key 'n' must be non-negative");
    const json& grid = field(j, "h");
    if (!grid.is_array() || grid.size() != static_cast<std::size_t>(n) + 1)
        throw SchemaError("key 'h' must be an array of n+1 rows");
    std::vector<std::vector<Integer>> h;
    h.reserve(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) {
        std::vector<Integer> row = integer_list(grid[p], "h[" + std::to_string(p) + "]");
        if (row.size() != static_cast<std::size_t>(n) + 1)
            throw SchemaError("row h[" + std::to_string(p) + "] has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n + 1));
        h.push_back(std::move(row));
    }
    return HodgeDiamond::from_grid(n, std::move(h));
}

std::string render_hodge_json(const HodgeDiamond& H) {
    json j;
    j["n"] = H.n;
    json rows = json::array();
    for (const auto& row : H.h) rows.push_back(integer_list_json(row, "h"));
    j["h"] = rows;
    return j.dump();
}

ChernNumbers parse_chern_json(const std::string& text) {
    json j = parse_text(text);
    ChernNumbers data;
    data.n = int_field(j, "n");
    if (data.n < 1) throw SchemaError("key 'n' must be at least 1");
    if (j.contains("c1_zero")) {
        if (!j["c1_zero"].is_boolean()) throw SchemaError("key 'c1_zero' must be a boolean");
        data.c1_zero = j["c1_zero"].get<bool>();
    }
    const json& pairings = field(j, "pairings");
    if (!pairings.is_object()) throw SchemaError("key 'pairings' must be an object");
    for (const auto& [key, value] : pairings.items()) {
        std::vector<int> exps = ChernPoly::parse_monomial_key(key);
        if (chern_weight(exps) != data.n)
            throw SchemaError("pairing '" + key + "' has weight " +
                              std::to_string(chern_weight(exps)) + ", expected " +
                              std::to_string(data.n));
        data.pairings[key] = integer_value(value, "pairing '" + key + "'");
    }
    return data;
}

std::string render_chern_json(const ChernNumbers& data) {
    json j;
    j["n"] = data.n;
    j["c1_zero"] = data.c1_zero;
    json p = json::object();
    for (const auto& [key, value] : data.pairings) p[key] = to_ll(value, "pairing '" + key + "'");
    j["pairings"] = p;
    return j.dump();
}

QKBetti parse_qk_json(const std::string& text) {
    json j = parse_text(text);
    const int m = int_field(j, "m");
    std::vector<Integer> beta = integer_list(field(j, "beta"), "beta");
    if (beta.size() != static_cast<std::size_t>(m))
        throw SchemaError("beta list has " + std::to_string(beta.size()) + " entries, expected " +
                          std::to_string(m));
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] < 0)
            throw SchemaError("beta[" + std::to_string(i) + "] must be non-negative");
    return QKBetti::from_beta(m, std::move(beta));
}

std::string render_qk_json(const QKBetti& beta) {
    json j;
    j["m"] = beta.m;
    j["beta"] = integer_list_json(beta.beta, "beta");
    return j.dump();
}

KummerFixture load_kummer_fixture(const std::string& fixture_dir) {
    json j = parse_text(read_file(fixture_dir + "/kummer.json"));
    KummerFixture fx;
    fx.k2_betti = integer_list(field(j, "k2_betti"), "k2_betti");
    if (fx.k2_betti.size() != 9) throw SchemaError("k2_betti must list b_0..b_8");
    fx.k8_euler = integer_value(field(j, "k8_euler"), "k8_euler");
    return fx;
}

G2Fixture load_g2_fixture(const std::string& fixture_dir) {
    json j = parse_text(read_file(fixture_dir + "/g2.json"));
    if (int_field(j, "d") != 7) throw SchemaError("g2 fixture must declare d = 7");
    const json& examples = field(j, "examples");
    if (!examples.is_array() || examples.empty())
        throw SchemaError("key 'examples' must be a non-empty array");
    G2Fixture fx;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        std::vector<Integer> b =
            integer_list(examples[i], "examples[" + std::to_string(i) + "]");
        if (b.size() != 8)
            throw SchemaError("examples[" + std::to_string(i) + "] must list b_0..b_7");
        fx.examples.push_back(std::move(b));
    }
    return fx;
}

Spin7Fixture load_spin7_fixture(const std::string& fixture_dir) {
    BettiInput in = parse_betti_json(read_file(fixture_dir + "/spin7.json"));
    if (in.P.d != 8) throw SchemaError("spin7 fixture must declare d = 8");
    if (!in.b4_minus) throw SchemaError("spin7 fixture must carry b4_minus");
    Spin7Fixture fx;
    fx.P = std::move(in.P);
    fx.b4_minus = *in.b4_minus;
    return fx;
}

QKFixtureSet load_qk_fixture(const std::string& fixture_dir) {
    json j = parse_text(read_file(fixture_dir + "/qk_m7.json"));
    QKFixtureSet set;
    set.m = int_field(j, "m");
    const json& fixtures = field(j, "fixtures");
    if (!fixtures.is_object() || fixtures.empty())
        throw SchemaError("key 'fixtures' must be a non-empty object");
    for (const auto& [name, value] : fixtures.items()) {
        std::vector<Integer> beta = integer_list(value, "fixtures['" + name + "']");
        if (beta.size() != static_cast<std::size_t>(set.m))
            throw SchemaError("fixtures['" + name + "'] must list beta_2..beta_" +
                              std::to_string(2 * set.m));
        set.fixtures.emplace(name, QKBetti::from_beta(set.m, std::move(beta)));
    }
    return set;
}

}  // namespace chern
