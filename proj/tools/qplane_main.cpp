// Command-line front end: expression normalization, basis conversion,
// seminorm sweeps, representation dumps, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration or input
// error.  QPLANE_SAMPLES overrides the boundary sampling density.

#include "qplane/acceptance.hpp"
#include "qplane/omega.hpp"
#include "qplane/parse.hpp"
#include "qplane/plane.hpp"
#include "qplane/representations.hpp"
#include "qplane/seminorms.hpp"
#include "qplane/serialize.hpp"
#include "qplane/verifiers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using namespace qplane;

struct GlobalOpts {
    std::string mode = "exact";
    std::string q_text;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 7;
    int trunc = 16;
};

// Stream that targets --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file: " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Accepts both exact scalar text ("1/2", "1/2+1/3*i") and float literals
// ("0.3", "0.3+0.1i").
Complex parse_q_value(const std::string& text) {
    try {
        return parse_gaussian(text).to_complex();
    } catch (const std::exception&) {
        return parse_complex(text);
    }
}

void emit(const GlobalOpts& g, const std::string& text, const Json& json) {
    Output out(g.out_path);
    if (g.format == "json")
        out.os() << json.dump(2) << "\n";
    else
        out.os() << text << "\n";
}

int cmd_normalize(const GlobalOpts& g, const std::string& expr) {
    PlaneElement a = parse_to_element(expr);
    emit(g, a.str(), element_to_json(a));
    return 0;
}

int cmd_convert(const GlobalOpts& g, const std::string& to, const std::string& expr) {
    PlaneElement a = parse_to_element(expr);
    OmegaUElement w = to_omega(a);
    if (to == "omega") {
        emit(g, w.str(), omega_to_json(w));
    } else if (to == "betagamma") {
        BetaGammaForm bg = to_beta_gamma(w);
        std::string text;
        for (const auto& [k, c] : bg.beta)
            text += "beta[" + std::to_string(k.i) + "," + std::to_string(k.j) + "] = " + c.str() +
                    "\n";
        for (const auto& [k, c] : bg.gamma)
            text += "gamma[" + std::to_string(k.i) + "," + std::to_string(k.j) + "] = " + c.str() +
                    "\n";
        if (!text.empty()) text.pop_back();
        emit(g, text, beta_gamma_to_json(bg));
    } else if (to == "pairs") {
        PairSequence p = to_pairs(w, PairConvention::RPhiXY);
        std::string text = "convention: rphixy";
        for (std::size_t n = 0; n < p.levels.size(); ++n) {
            text += "\nlevel " + std::to_string(n) + ": f = [";
            const auto& [f, gpoly] = p.levels[n];
            for (int k = 0; k <= f.degree(); ++k)
                text += (k ? ", " : "") + f.coefficient(k).str();
            text += "], g = [";
            for (int k = 0; k <= gpoly.degree(); ++k)
                text += (k ? ", " : "") + gpoly.coefficient(k).str();
            text += "]";
        }
        emit(g, text, pairs_to_json(p));
    } else {
        throw Error("unknown conversion target: " + to);
    }
    return 0;
}

int cmd_seminorm(const GlobalOpts& g, const std::string& family, double r, int index_max,
                 const std::string& expr) {
    PlaneElement a = parse_to_element(expr);
    const Complex q = parse_q_value(g.q_text.empty() ? "1/2" : g.q_text);
    BetaGammaForm bg = to_beta_gamma(to_omega(a));
    std::vector<SeminormRow> rows;
    for (int index = 0; index <= index_max; ++index) {
        SeminormRow row;
        row.family = family;
        row.index = index;
        row.r = r;
        row.rho = 0.0;
        double v = 0.0;
        if (family == "coef_x")
            v = coef_norm(a, q, r, NormAxis::FixedX, index);
        else if (family == "coef_y")
            v = coef_norm(a, q, r, NormAxis::FixedY, index);
        else if (family == "level_beta")
            v = level_norm_beta(bg, q, r, index);
        else if (family == "level_gamma")
            v = level_norm_gamma(bg, q, r, index);
        else
            throw Error("unknown seminorm family: " + family);
        row.lower = v;
        row.upper = v;
        rows.push_back(row);
    }
    Output out(g.out_path);
    if (g.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json obj = {{"norm_family", row.family},
                        {"index", row.index},
                        {"r", row.r},
                        {"value", row.lower}};
            arr.push_back(obj);
        }
        out.os() << arr.dump(2) << "\n";
    } else {
        write_seminorm_csv(out.os(), rows);
    }
    return 0;
}

int cmd_rep(const GlobalOpts& g, const std::string& family_name, const std::string& param_text,
            int growth_n, int eta_jmax, const std::string& expr) {
    const RepFamily family = family_name == "mu" ? RepFamily::PiPrimeMu : RepFamily::PiLambda;
    if (eta_jmax >= 0) {
        EtaParams ep;
        ep.family = family;
        ep.param = parse_gaussian(param_text);
        auto report = eta_report(to_omega(parse_to_element(expr.empty() ? "u" : expr)), ep,
                                 eta_jmax);
        Output out(g.out_path);
        if (g.format == "json") {
            Json arr = Json::array();
            for (const auto& c : eta_report_checks(report)) arr.push_back(check_to_json(c));
            out.os() << arr.dump(2) << "\n";
        } else {
            const char* kind = family == RepFamily::PiLambda ? "row" : "column";
            for (const auto& e : report.entries) {
                out.os() << kind << " entry " << e.j << ": action = " << e.oracle.str()
                         << "; published = " << e.published.str()
                         << "; corrected = " << e.corrected.str() << "; "
                         << to_string(e.status) << "\n";
            }
        }
        return 0;
    }
    if (growth_n > 0) {
        const Complex q = parse_q_value(g.q_text.empty() ? "1/2" : g.q_text);
        const Complex param = parse_q_value(param_text);
        auto profile = growth_profile(family, param, q, std::max(g.trunc, growth_n + 2), growth_n);
        Output out(g.out_path);
        out.os() << growth_csv(profile);
        return 0;
    }
    PlaneElement a = parse_to_element(expr.empty() ? "u" : expr);
    if (g.mode == "float") {
        const Complex q = parse_q_value(g.q_text.empty() ? "1/2" : g.q_text);
        Generators<Complex> gen = build_generators(family, parse_q_value(param_text), q, g.trunc);
        CMatrix m = rep_apply(gen, a, q);
        std::string text;
        for (int i = 0; i < m.dim(); ++i) {
            for (int j = 0; j < m.dim(); ++j) {
                std::ostringstream cell;
                cell << m.at(i, j);
                text += (j ? " " : "") + cell.str();
            }
            text += "\n";
        }
        text.pop_back();
        emit(g, text, matrix_to_json(m));
    } else {
        Generators<QScalar> gen = build_generators(family, parse_gaussian(param_text), g.trunc);
        QMatrix m = rep_apply(gen, a);
        std::string text;
        for (int i = 0; i < m.dim(); ++i) {
            text += "row " + std::to_string(i) + ":";
            for (int j = 0; j < m.dim(); ++j) {
                const QScalar& c = m.at(i, j);
                if (!c.is_zero())
                    text += " [" + std::to_string(j) + "] " + c.str() + ";";
            }
            text += "\n";
        }
        text.pop_back();
        emit(g, text, matrix_to_json(m));
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
    if (suite != "all") throw Error("unknown suite: " + suite);
    AcceptanceConfig cfg;
    cfg.seed = g.seed;
    auto results = run_acceptance(cfg);
    Output out(g.out_path);
    if (g.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"details", r.details}});
        out.os() << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " ("
                 << r.seconds << "s) " << r.details;
            out.os() << line.str() << "\n";
        }
        int passed = 0;
        for (const auto& r : results) passed += r.pass ? 1 : 0;
        out.os() << passed << "/" << results.size() << " criteria passed\n";
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"quantum plane toolkit"};
    app.require_subcommand(1);
    app.add_option("--mode", g.mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--q", g.q_text, "deformation value for float evaluations");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", g.out_path, "write output to a file");
    app.add_option("--seed", g.seed, "master seed for randomized sweeps");
    app.add_option("--trunc", g.trunc, "matrix truncation size")->check(CLI::PositiveNumber);

    std::string expr;
    auto* normalize = app.add_subcommand("normalize", "print the canonical y^k x^l form");
    normalize->fallthrough();
    normalize->add_option("expr", expr, "expression")->required();

    std::string convert_to = "omega";
    auto* convert = app.add_subcommand("convert", "convert between bases");
    convert->fallthrough();
    convert->add_option("--to", convert_to, "target basis")
        ->check(CLI::IsMember({"omega", "betagamma", "pairs"}));
    convert->add_option("expr", expr, "expression")->required();

    std::string family = "coef_x";
    double r = 0.5;
    int index_max = 6;
    auto* seminorm = app.add_subcommand("seminorm", "evaluate a norm family over an index grid");
    seminorm->fallthrough();
    seminorm->add_option("--family", family, "norm family")
        ->check(CLI::IsMember({"coef_x", "coef_y", "level_beta", "level_gamma"}));
    seminorm->add_option("--r", r, "radius")->check(CLI::PositiveNumber);
    seminorm->add_option("--index-max", index_max, "largest index");
    seminorm->add_option("expr", expr, "expression")->required();

    std::string rep_family = "lambda";
    std::string param = "1";
    int growth_n = 0;
    int eta_jmax = -1;
    auto* rep = app.add_subcommand("rep", "matrix image of an element, or a growth profile");
    rep->fallthrough();
    rep->add_option("--family", rep_family, "representation family")
        ->check(CLI::IsMember({"lambda", "mu"}));
    rep->add_option("--param", param, "representation parameter");
    rep->add_option("--growth", growth_n, "emit the growth profile up to this power");
    rep->add_option("--eta", eta_jmax, "emit first-row/column entries up to this index");
    rep->add_option("expr", expr, "expression");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->fallthrough();
    verify->add_option("--suite", suite, "suite name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(g, expr);
        if (convert->parsed()) return cmd_convert(g, convert_to, expr);
        if (seminorm->parsed()) return cmd_seminorm(g, family, r, index_max, expr);
        if (rep->parsed()) return cmd_rep(g, rep_family, param, growth_n, eta_jmax, expr);
        if (verify->parsed()) return cmd_verify(g, suite);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
