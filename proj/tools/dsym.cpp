// Command-line surface for the double symmetric functions library.
//
// Subcommands map one-to-one onto library operations; output is
// deterministic text (the canonical golden-test format) or JSON with a
// versioned schema.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "dsym/dsym.hpp"

using namespace dsym;

namespace {

// --------------------------------------------------------------------------
// Argument parsing helpers
// --------------------------------------------------------------------------

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty() && s != "0") {
        std::stringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
            parts.push_back(v);
        }
    }
    return Partition{std::move(parts)};
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

// rat_from_string with a tolerated leading '+'
Rational parse_rat(const std::string& s) {
    return rat_from_string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

// Custom spec file: one line per index `i = n/d`, plus an optional
// `default = p*i + q` line with p, q rational.
ASpec parse_custom_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    ASpec spec;
    spec.kind = ASpec::Kind::custom;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip_spaces(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad spec line (no '='): " + line);
        std::string lhs = t.substr(0, eq), rhs = t.substr(eq + 1);
        if (lhs == "default") {
            // affine expression p*i + q (each piece optional)
            static const std::regex affine(
                R"(^([+-]?\d+(?:/\d+)?\*)?i([+-]\d+(?:/\d+)?)?$|^([+-]?\d+(?:/\d+)?)$)");
            std::smatch m;
            if (!std::regex_match(rhs, m, affine))
                throw std::invalid_argument("bad affine default: " + rhs);
            Rational p = 0, q = 0;
            if (m[3].matched) {
                q = parse_rat(m[3].str());
            } else {
                std::string ps = m[1].str();
                p = ps.empty() ? Rational(1) : parse_rat(ps.substr(0, ps.size() - 1));
                if (m[2].matched) q = parse_rat(m[2].str());
            }
            spec.affine_default = {p, q};
        } else {
            spec.custom[std::stoi(lhs)] = parse_rat(rhs);
        }
    }
    return spec;
}

ASpec parse_spec(const std::string& s) {
    if (s == "zero") return ASpec::zero();
    if (s == "shifted") return ASpec::shifted();
    if (s == "frobenius") return ASpec::frobenius();
    if (s.rfind("generic:", 0) == 0) return ASpec::generic(std::stoull(s.substr(8)));
    if (s.rfind("custom:", 0) == 0) return parse_custom_spec(s.substr(7));
    throw std::invalid_argument(
        "bad --spec (expected zero|shifted|frobenius|generic:<seed>|custom:<file>): " + s);
}

// --------------------------------------------------------------------------
// Output helpers
// --------------------------------------------------------------------------

struct Output {
    bool json = false;
    bool use_spec = false;
    ASpec spec;

    void poly(const APoly& p) const {
        if (use_spec) {
            Rational v = p.evaluate(spec);
            if (json)
                std::cout << nlohmann::json{{"schema", 1}, {"value", rat_to_string(v)}}.dump()
                          << "\n";
            else
                std::cout << rat_to_string(v) << "\n";
            return;
        }
        if (json)
            std::cout << nlohmann::json{{"schema", 1}, {"result", p.to_json()}}.dump() << "\n";
        else
            std::cout << p.to_string() << "\n";
    }

    void xpoly(const XPoly& p) const {
        XPoly q = p;
        if (use_spec)
            q = p.map_coeffs([&](const APoly& c) { return APoly(c.evaluate(spec)); });
        if (json)
            std::cout << nlohmann::json{{"schema", 1}, {"result", q.to_json()}}.dump() << "\n";
        else
            std::cout << q.to_string() << "\n";
    }

    void expansion(const std::map<Partition, APoly>& coeffs, const std::string& symbol) const {
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (auto& [lam, c] : coeffs) {
                nlohmann::json entry{{"shape", lam.parts()}};
                if (use_spec)
                    entry["value"] = rat_to_string(c.evaluate(spec));
                else
                    entry["coeff"] = c.to_json();
                arr.push_back(entry);
            }
            std::cout << nlohmann::json{{"schema", 1}, {"coeffs", arr}}.dump() << "\n";
            return;
        }
        for (auto& [lam, c] : coeffs) {
            std::string val = use_spec ? rat_to_string(c.evaluate(spec)) : c.to_string();
            std::cout << symbol << "[" << lam.to_string() << "]: " << val << "\n";
        }
    }
};

int domain_error(const std::string& kind, const std::string& what) {
    std::cerr << kind << ": " << what << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "dsym: exact computations with double Schur functions, dual Schur series and "
        "their transition polynomials.\n"
        "Partitions are comma lists (e.g. --lambda 3,2,1; empty: 0).  Transition\n"
        "computations at target size s use truncation degree D = s and ambient\n"
        "alphabet size n = s unless overridden by --degree/--nx."};
    app.require_subcommand(1);

    bool json = false;
    std::string spec_str;
    app.add_flag("--json", json, "JSON output (schema version 1)");
    app.add_option("--spec", spec_str,
                   "numeric specialization: zero|shifted|frobenius|generic:<seed>|custom:<file>;"
                   " evaluates all coefficients");

    std::string lam_s, mu_s, nu_s, rho_s, method = "";
    int nx = 0, degree = -1;
    bool dual = false, forgotten = false;
    std::string suite = "all";

    auto* c_ds = app.add_subcommand("double-schur", "double Schur polynomial s_lambda(x||a)");
    c_ds->add_option("--lambda", lam_s, "shape")->required();
    c_ds->add_option("--nx", nx, "number of x variables")->required();

    auto* c_dual = app.add_subcommand(
        "dual-schur", "dual Schur series shat_mu in the classical Schur basis");
    c_dual->add_option("--mu", mu_s, "shape")->required();
    c_dual->add_option("--degree", degree, "truncation degree (default |mu|)");
    c_dual->add_option("--method", method, "flagged|determinant|combinatorial|alternant");
    c_dual->add_option("--nx", nx, "alphabet size for combinatorial/alternant");

    auto* c_skew = app.add_subcommand("skew", "skew double Schur polynomial s_{nu/mu}(x||a)");
    c_skew->add_option("--nu", nu_s, "outer shape")->required();
    c_skew->add_option("--mu", mu_s, "inner shape")->required();
    c_skew->add_option("--nx", nx, "number of x variables")->required();
    c_skew->add_option("--method", method, "A|Aprime|rho");

    auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson polynomial c^nu_{lambda mu}(a)");
    c_lr->add_option("--lambda", lam_s, "shape")->required();
    c_lr->add_option("--mu", mu_s, "shape")->required();
    c_lr->add_option("--nu", nu_s, "shape")->required();

    auto* c_dlr = app.add_subcommand("duallr", "dual LR polynomial chat^nu_{lambda mu}(a)");
    c_dlr->add_option("--lambda", lam_s, "shape")->required();
    c_dlr->add_option("--mu", mu_s, "shape")->required();
    c_dlr->add_option("--nu", nu_s, "shape")->required();
    c_dlr->add_option("--method", method, "skew|tableau|classical (default skew)");
    c_dlr->add_option("--nx", nx, "alphabet size for the tableau method");

    auto* c_k = app.add_subcommand("kostka", "Kostka polynomial K_{lambda mu}(a)");
    c_k->add_option("--lambda", lam_s, "shape")->required();
    c_k->add_option("--mu", mu_s, "shape")->required();
    c_k->add_flag("--dual", dual, "the dual-side polynomial Khat_{lambda mu}(a)");
    c_k->add_option("--degree", degree, "truncation degree (default |lambda|)");

    auto* c_chi = app.add_subcommand("char", "character polynomial chi^lambda_mu(a)");
    c_chi->add_option("--lambda", lam_s, "shape")->required();
    c_chi->add_option("--mu", mu_s, "shape")->required();
    c_chi->add_flag("--dual", dual, "the dual-side polynomial chihat^lambda_mu(a)");

    auto* c_m = app.add_subcommand(
        "monomial", "double monomial function m_lambda in the double Schur basis");
    c_m->add_option("--lambda", lam_s, "shape")->required();
    c_m->add_flag("--forgotten", forgotten, "the forgotten function f_lambda instead");

    auto* c_cauchy = app.add_subcommand("cauchy", "verify the Cauchy kernel identities");
    c_cauchy->add_option("--nx", nx, "variables per alphabet (default 2)");
    c_cauchy->add_option("--degree", degree, "truncation degree (default 4)");

    auto* c_hook = app.add_subcommand(
        "hook-identities", "hook-product identities for characters and Kostka values");
    c_hook->add_option("--lambda", lam_s, "shape")->required();
    c_hook->add_option("--mu", mu_s, "shape")->required();
    c_hook->add_option("--nu", nu_s, "outer shape: check the LR hook identity instead");

    auto* c_eval = app.add_subcommand("eval",
                                      "evaluate s_lambda(a_rho||a) (vanishing/hook values)");
    c_eval->add_option("--lambda", lam_s, "shape")->required();
    c_eval->add_option("--rho", rho_s, "evaluation shape")->required();

    auto* c_verify = app.add_subcommand("verify", "run the acceptance verification suites");
    c_verify->add_option("--suite", suite, "suite name or 'all'");

    // global flags (--json/--spec) may appear after the subcommand arguments
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // argument-shaped inputs parse first; failures are usage errors
    Partition lam, mu, nu, rho;
    Output out;
    try {
        lam = parse_partition(lam_s);
        mu = parse_partition(mu_s);
        nu = parse_partition(nu_s);
        rho = parse_partition(rho_s);
        out.json = json;
        if (!spec_str.empty()) {
            out.use_spec = true;
            out.spec = parse_spec(spec_str);
        }
        if (c_dual->parsed() && !method.empty() && method != "flagged" &&
            method != "determinant" && method != "combinatorial" && method != "alternant")
            throw std::invalid_argument("bad --method: " + method);
        if (c_skew->parsed() && !method.empty() && method != "A" && method != "Aprime" &&
            method != "rho")
            throw std::invalid_argument("bad --method: " + method);
        if (c_dlr->parsed() && !method.empty() && method != "skew" && method != "tableau" &&
            method != "classical")
            throw std::invalid_argument("bad --method: " + method);
        if (c_verify->parsed() && suite != "all") {
            bool known = false;
            for (const auto& [name, fn] : acceptance_suites())
                if (name == suite) known = true;
            if (!known) throw std::invalid_argument("unknown suite: " + suite);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_ds->parsed()) {
            out.xpoly(double_schur_tableau(lam, nx));
        } else if (c_dual->parsed()) {
            int D = degree >= 0 ? degree : mu.size();
            DualSchurMethod m = DualSchurMethod::flagged;
            if (method == "determinant") m = DualSchurMethod::determinant;
            if (method == "combinatorial") m = DualSchurMethod::combinatorial;
            if (method == "alternant") m = DualSchurMethod::alternant;
            if ((m == DualSchurMethod::combinatorial || m == DualSchurMethod::alternant) &&
                nx <= 0) {
                std::cerr << "usage error: --nx required for the finite-alphabet methods\n";
                return 2;
            }
            out.expansion(dual_schur(mu, D, m, nx).coeffs, "s");
        } else if (c_skew->parsed()) {
            SkewMethod m = SkewMethod::supertableau_A;
            if (method == "Aprime") m = SkewMethod::supertableau_Aprime;
            if (method == "rho") m = SkewMethod::rho_sum;
            out.xpoly(skew_double_schur(SkewShape(nu, mu), nx, m));
        } else if (c_lr->parsed()) {
            out.poly(lr_polynomial(lam, mu, nu));
        } else if (c_dlr->parsed()) {
            if (method == "tableau") {
                int n = nx;
                if (n <= 0) {
                    // smallest alphabet covering every column and the shape lambda
                    Partition nuc = nu.conjugate(), muc = mu.conjugate();
                    n = std::max(1, lam.length());
                    for (int j = 1; j <= nu.part(1); ++j)
                        n = std::max(n, nuc.part(j) - muc.part(j));
                }
                out.poly(dual_lr_via_supertableaux(lam, mu, nu, n));
            } else if (method == "classical") {
                out.poly(dual_lr_via_classical(lam, mu, nu));
            } else {
                out.poly(dual_lr_via_skew(lam, mu, nu));
            }
        } else if (c_k->parsed()) {
            if (dual)
                out.poly(kostka_dual(lam, mu));
            else
                out.poly(kostka(lam, mu, degree >= 0 ? degree : lam.size()));
        } else if (c_chi->parsed()) {
            out.poly(dual ? char_dual(lam, mu) : char_poly(lam, mu));
        } else if (c_m->parsed()) {
            DoubleSym u = forgotten ? double_forgotten(lam) : double_monomial(lam);
            out.expansion(u.coeffs, "s");
        } else if (c_cauchy->parsed()) {
            int n = nx > 0 ? nx : 2;
            int D = degree >= 0 ? degree : 4;
            CauchyReport rep = cauchy_check(n, D);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& item : rep.items)
                    arr.push_back({{"name", item.name}, {"pass", item.pass}});
                std::cout << nlohmann::json{{"schema", 1}, {"items", arr}}.dump() << "\n";
            } else {
                for (const auto& item : rep.items)
                    std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name
                              << (item.pass ? "" : " -- " + item.detail) << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        } else if (c_hook->parsed()) {
            std::vector<HookReport::Item> items;
            if (!nu_s.empty()) {
                items.push_back(hook_lr_identity(lam, mu, nu));
            } else {
                if (lam.size() != mu.size())
                    return domain_error("SizeMismatch",
                                        "|lambda| != |mu| for lambda=(" + lam.to_string() +
                                            "), mu=(" + mu.to_string() + ")");
                HookReport rep = hook_identities(lam, mu);
                items = rep.items;
            }
            bool all = true;
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& item : items) {
                    arr.push_back({{"name", item.name},
                                   {"computed", rat_to_string(item.computed)},
                                   {"oracle", rat_to_string(item.oracle)},
                                   {"pass", item.pass}});
                    all = all && item.pass;
                }
                std::cout << nlohmann::json{{"schema", 1}, {"items", arr}}.dump() << "\n";
            } else {
                for (const auto& item : items) {
                    std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name << ": "
                              << rat_to_string(item.computed) << " vs "
                              << rat_to_string(item.oracle) << "\n";
                    all = all && item.pass;
                }
            }
            return all ? 0 : 1;
        } else if (c_eval->parsed()) {
            int n = std::max(lam.length(), rho.length()) + 1;
            out.poly(evaluate_at(double_schur_tableau(lam, n), a_mu_point(rho, n)));
        } else if (c_verify->parsed()) {
            bool all = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [name, fn] : acceptance_suites()) {
                if (suite != "all" && suite != name) continue;
                SuiteResult r = run_acceptance_suite(name);
                all = all && r.pass;
                if (json) {
                    arr.push_back({{"name", r.name},
                                   {"pass", r.pass},
                                   {"checks", r.checks},
                                   {"detail", r.detail}});
                } else {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks
                              << " checks)" << (r.pass ? "" : " -- " + r.detail) << std::endl;
                }
            }
            if (json)
                std::cout << nlohmann::json{{"schema", 1}, {"suites", arr}}.dump() << "\n";
            return all ? 0 : 1;
        }
        return 0;
    } catch (const TruncationTooSmall& e) {
        return domain_error("TruncationTooSmall", e.what());
    } catch (const ColumnBoundViolated& e) {
        return domain_error("ColumnBoundViolated", e.what());
    } catch (const DegenerateSpec& e) {
        return domain_error("DegenerateSpec", e.what());
    } catch (const MissingIndex& e) {
        return domain_error("MissingIndex", e.what());
    } catch (const NotSymmetric& e) {
        return domain_error("NotSymmetric", e.what());
    } catch (const WrongBasis& e) {
        return domain_error("WrongBasis", e.what());
    } catch (const NotDivisible& e) {
        return domain_error("NotDivisible", e.what());
    } catch (const NotLinear& e) {
        return domain_error("NotLinear", e.what());
    } catch (const std::exception& e) {
        return domain_error("error", e.what());
    }
}
