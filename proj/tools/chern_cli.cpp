#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "chern/charclass.hpp"
#include "chern/chern_numbers.hpp"
#include "chern/chernpoly.hpp"
#include "chern/hilbert.hpp"
#include "chern/invariants.hpp"
#include "chern/json_io.hpp"
#include "chern/manifolds.hpp"
#include "chern/moduli.hpp"
#include "chern/rational.hpp"
#include "chern/report.hpp"
#include "chern/symmetric.hpp"
#include "chern/verify.hpp"

namespace {

using namespace chern;

std::string resolve_fixture_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CHERN_FIXTURE_DIR"); env != nullptr && *env != '\0')
        return env;
#ifdef CHERN_DEFAULT_FIXTURE_DIR
    return CHERN_DEFAULT_FIXTURE_DIR;
#else
    return "";
#endif
}

int emit_report(const Report& rep, Format fmt) {
    std::cout << render(rep, fmt);
    return rep.ok() ? 0 : 1;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string latex_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            case '_': out += "\\_"; break;
            default: out += c;
        }
    }
    return out;
}

// Key/value rows in the requested format (non-JSON paths of sym/hilb).
void emit_rows(const std::string& title,
               const std::vector<std::pair<std::string, std::string>>& rows, Format fmt) {
    switch (fmt) {
        case Format::Table: {
            if (!title.empty()) std::cout << "== " << title << " ==\n";
            std::size_t width = 0;
            for (const auto& [key, value] : rows) width = std::max(width, key.size());
            for (const auto& [key, value] : rows)
                std::cout << key << std::string(width - key.size() + 2, ' ') << value << "\n";
            return;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            for (const auto& [key, value] : rows) j[key] = value;
            std::cout << j.dump(2) << "\n";
            return;
        }
        case Format::Csv: {
            std::cout << "key,value\n";
            for (const auto& [key, value] : rows)
                std::cout << csv_cell(key) << "," << csv_cell(value) << "\n";
            return;
        }
        case Format::Latex: {
            std::cout << "\\begin{tabular}{ll}\n";
            if (!title.empty())
                std::cout << "\\multicolumn{2}{l}{" << latex_cell(title) << "}\\\\\n";
            std::cout << "\\hline\n";
            for (const auto& [key, value] : rows)
                std::cout << latex_cell(key) << " & " << latex_cell(value) << "\\\\\n";
            std::cout << "\\hline\n\\end{tabular}\n";
            return;
        }
    }
}

int run_kclass(int n, int k, const std::string& subst, bool also_verify, Format fmt) {
    check_dimension(n);
    if (k < 0 || k > n)
        throw SchemaError("order k = " + std::to_string(k) + " outside [0, " + std::to_string(n) +
                          "]");
    ChernPoly K = kclass(n, k);
    if (!subst.empty()) {
        if (subst != "c1=0")
            throw SchemaError("unsupported substitution '" + subst + "' (only c1=0)");
        K = substitute(K, {{1, ChernPoly()}});
    }
    switch (fmt) {
        case Format::Latex:
            std::cout << K.latex() << "\n";
            break;
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["k"] = k;
            if (!subst.empty()) j["subst"] = subst;
            j["value"] = K.str();
            j["latex"] = K.latex();
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "n,k,value\n"
                      << n << "," << k << "," << csv_cell(K.str()) << "\n";
            break;
        case Format::Table:
            std::cout << K.str() << "\n";
            break;
    }
    if (also_verify) return emit_report(verify_kclass_lemmas(n), fmt);
    return 0;
}

SurfaceBetti resolve_surface(const std::string& name) {
    if (name == "k3" || name == "K3") return SurfaceBetti::k3();
    if (name == "t4" || name == "T4" || name == "torus") return SurfaceBetti::torus();
    if (name == "cp2" || name == "CP2" || name == "p2") return SurfaceBetti::cp2();
    const BettiInput in = parse_betti_json(read_file(name));
    if (in.P.d != 4)
        throw SchemaError("surface file must carry d = 4 Betti data, got d = " +
                          std::to_string(in.P.d));
    return SurfaceBetti::from_betti(in.P.betti);
}

int run_products(const std::string& surface, int m, bool hilbert_scheme, Format fmt) {
    const SurfaceBetti S = resolve_surface(surface);
    const PoincarePoly P = hilbert_scheme ? hilb_poincare(S, m) : sym_product_poincare(S, m);
    const Integer e = P.euler();
    const Rational cap = phi_cap(P);
    const std::string phi_text = e != 0 ? phi_small(P).str() : "undefined (e = 0)";
    const std::string kind = hilbert_scheme ? "S^[" + std::to_string(m) + "]"
                                            : "S^(" + std::to_string(m) + ")";

    if (fmt == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(render_betti_json(P));
        j["scheme"] = kind;
        j["m"] = m;
        j["euler"] = e.get_str();
        j["Phi"] = cap.str();
        j["phi"] = phi_text;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("scheme", kind);
    rows.emplace_back("d", std::to_string(P.d));
    for (int j = 0; j <= P.d; ++j)
        rows.emplace_back("b_" + std::to_string(j), P.b(j).get_str());
    rows.emplace_back("e", e.get_str());
    rows.emplace_back("Phi", cap.str());
    rows.emplace_back("phi", phi_text);
    emit_rows(kind + " over a surface with betti " +
                  [&S] {
                      std::string s = "(";
                      for (int j = 0; j <= 4; ++j) {
                          if (j) s += ",";
                          s += S.b(j).get_str();
                      }
                      return s + ")";
                  }(),
              rows, fmt);
    return 0;
}

int run_invariants(const std::string& betti_file, const std::string& hodge_file,
                   const std::string& chern_file, const std::string& qk_file, Format fmt) {
    const int given = (betti_file.empty() ? 0 : 1) + (hodge_file.empty() ? 0 : 1) +
                      (chern_file.empty() ? 0 : 1) + (qk_file.empty() ? 0 : 1);
    if (given != 1) throw SchemaError("pass exactly one of --betti, --hodge, --chern, --qk");

    if (!betti_file.empty()) {
        const BettiInput in = parse_betti_json(read_file(betti_file));
        const PoincarePoly& P = in.P;
        Report rep("invariants of Betti data (d = " + std::to_string(P.d) + ")");
        rep.pass("e(M)", P.euler().get_str());
        if (P.d % 2 == 0) {
            const Rational cap = phi_cap(P);
            if (P.d % 4 == 0)
                rep.pass("Phi", cap.str());
            else
                rep.pass("Phi (d = 2 mod 4: vanishing is not forced)", cap.str());
            rep.pass("phi", P.euler() != 0 ? phi_small(P).str() : "undefined (e = 0)");
        }
        if (P.duality) {
            if (P.d == 7) {
                const Integer q = g2_quantity(P);
                rep.check(q == 0, "G2 screen: P'(-1) = 0", "value " + q.get_str());
            }
            if (P.d % 4 == 0 && P.d > 0) {
                const auto [lhs, rhs] = fo_form(P);
                rep.pass("fourth-order form (lhs, rhs)",
                         "(" + lhs.get_str() + ", " + rhs.get_str() + ")");
                rep.merge(hk_report(P));
            }
            if (P.d == 8) rep.merge(spin7_report(P, in.b4_minus));
        } else {
            rep.pass("holonomy screens skipped", "Betti data does not satisfy duality");
        }
        return emit_report(rep, fmt);
    }
    if (!hodge_file.empty()) {
        const HodgeDiamond H = parse_hodge_json(read_file(hodge_file));
        Report rep("invariants of Hodge data (n = " + std::to_string(H.n) + ")");
        const PoincarePoly P = hodge_to_poincare(H);
        const ChiPoly chi = hodge_to_chi(H);
        rep.pass("e(M)", H.euler().get_str());
        std::string chis = "(";
        for (int p = 0; p <= H.n; ++p) {
            if (p) chis += ",";
            chis += chi.at(p).get_str();
        }
        chis += ")";
        rep.pass("chi^p", chis);
        rep.pass("Phi", phi_cap(P).str());
        rep.pass("phi", P.euler() != 0 ? phi_small(P).str() : "undefined (e = 0)");
        rep.pass("psi", chi.euler() != 0 ? psi(chi).str() : "undefined (chi(-1) = 0)");
        rep.merge(phi_lemma_check(H));
        return emit_report(rep, fmt);
    }
    if (!chern_file.empty()) {
        const ChernNumbers data = parse_chern_json(read_file(chern_file));
        Report rep("invariants of Chern data (n = " + std::to_string(data.n) + ")");
        rep.pass("e(M) = <c_n>", data.euler().get_str());
        rep.pass("c1 = 0 declared", data.c1_zero ? "yes" : "no");
        rep.pass("gamma = <c1 c_{n-1}>/<c_n>",
                 data.euler() != 0 ? gamma(data).str() : "undefined (e = 0)");
        const ChiPoly chi = chi_from_chern(data);
        std::string chis = "(";
        for (int p = 0; p <= data.n; ++p) {
            if (p) chis += ",";
            chis += chi.at(p).get_str();
        }
        chis += ")";
        rep.pass("chi^p by Riemann-Roch", chis);
        rep.merge(theorem_checks(data));
        rep.merge(divisibility_suite(data));
        return emit_report(rep, fmt);
    }
    const QKBetti beta = parse_qk_json(read_file(qk_file));
    Report rep("quaternion-Kaehler primitive Betti data (m = " + std::to_string(beta.m) + ")");
    const Rational v = qk_constraint(beta);
    rep.check(v.is_zero(), "weighted balance sum vanishes", "sum = " + v.str());
    return emit_report(rep, fmt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic-class and cohomology toolkit"};
    app.require_subcommand(1);

    std::string format_name = "table";
    std::string fixture_flag;
    app.add_option("--format", format_name, "output format: table, json, csv, latex");
    app.add_option("--fixture-dir", fixture_flag,
                   "fixture directory (overrides CHERN_FIXTURE_DIR)");

    auto* kclass_cmd = app.add_subcommand("kclass", "print the weight-n class K(n,k)");
    kclass_cmd->fallthrough();
    int kc_n = 0, kc_k = 0;
    std::string kc_subst;
    bool kc_verify = false;
    kclass_cmd->add_option("--n", kc_n, "complex dimension (1..10)")->required();
    kclass_cmd->add_option("--k", kc_k, "order (0..n)")->required();
    kclass_cmd->add_option("--subst", kc_subst, "substitution, only c1=0");
    kclass_cmd->add_flag("--verify", kc_verify, "also run the closed-form checks for this n");

    auto* sym_cmd = app.add_subcommand("sym", "Betti table of the m-th symmetric product");
    sym_cmd->fallthrough();
    std::string sym_surface = "k3";
    int sym_m = 0;
    sym_cmd->add_option("--surface", sym_surface, "preset (k3, t4, cp2) or a Betti JSON file");
    sym_cmd->add_option("--m", sym_m, "order m")->required();

    auto* hilb_cmd = app.add_subcommand("hilb", "Betti table of the m-point Hilbert scheme");
    hilb_cmd->fallthrough();
    std::string hilb_surface = "k3";
    int hilb_m = 0;
    hilb_cmd->add_option("--surface", hilb_surface, "preset (k3, t4, cp2) or a Betti JSON file");
    hilb_cmd->add_option("--m", hilb_m, "order m")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    std::string suite = "all";
    VerifyOptions vo;
    verify_cmd->add_option("--suite", suite,
                           "lemmas, theorems, hilbert, moduli, holonomy, or all");
    verify_cmd->add_option("--n-max", vo.n_max, "dimension ceiling for the sweeps");
    verify_cmd->add_option("--g-max", vo.g_max, "genus ceiling for the moduli sweep");
    verify_cmd->add_option("--m-max", vo.m_max, "order ceiling for product sweeps");
    verify_cmd->add_option("--trials", vo.trials, "random instances per family");
    verify_cmd->add_option("--seed", vo.seed, "RNG seed");

    auto* inv_cmd = app.add_subcommand("invariants", "evaluate invariants of a JSON input");
    inv_cmd->fallthrough();
    std::string betti_file, hodge_file, chern_file, qk_file;
    inv_cmd->add_option("--betti", betti_file, "Betti-number JSON file");
    inv_cmd->add_option("--hodge", hodge_file, "Hodge-diamond JSON file");
    inv_cmd->add_option("--chern", chern_file, "Chern-number JSON file");
    inv_cmd->add_option("--qk", qk_file, "primitive-Betti JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format_name);
        if (*kclass_cmd) return run_kclass(kc_n, kc_k, kc_subst, kc_verify, fmt);
        if (*sym_cmd) return run_products(sym_surface, sym_m, false, fmt);
        if (*hilb_cmd) return run_products(hilb_surface, hilb_m, true, fmt);
        if (*verify_cmd) {
            vo.fixture_dir = resolve_fixture_dir(fixture_flag);
            return emit_report(verify_suite(suite, vo), fmt);
        }
        if (*inv_cmd) return run_invariants(betti_file, hodge_file, chern_file, qk_file, fmt);
        return 2;
    } catch (const SchemaError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    }
}
