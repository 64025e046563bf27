// Command-line surface: evaluate the polynomial families, run named
// verification suites, and print parameter/weight/grid tables.
//
// Parameters come from an optional JSON config; the unit-circle parameters
// s and u are given as angles in radians so |s| = |u| = 1 holds exactly.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaw/checks.hpp"
#include "qaw/core.hpp"
#include "qaw/multivariate.hpp"
#include "qaw/univariate.hpp"
#include "qaw/verify.hpp"

using nlohmann::json;
using namespace qaw;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct CliConfig {
    checks::RunConfig run;
    double t = 2.5;
    long n = 3;
    std::vector<long> mvec;
    std::vector<double> points{0.9, 0.41, 1.7};  // angles on the torus
    long rows = 5;
};

CliConfig load_config(const std::string& path) {
    CliConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw DomainViolation("config: cannot open " + path);
    json j;
    in >> j;
    auto& r = cfg.run;
    r.q = j.value("q", r.q);
    r.k = j.value("k", r.k);
    r.s_angle = j.value("s_angle", r.s_angle);
    r.u_angle = j.value("u_angle", r.u_angle);
    if (j.contains("kvec")) {
        std::vector<double> kv = j["kvec"].get<std::vector<double>>();
        if (kv.size() == 2) r.kvec2 = kv;
        else if (kv.size() == 3) r.kvec3 = kv;
        else throw DomainViolation("config: kvec must have 2 or 3 entries");
    }
    cfg.t = j.value("t", cfg.t);
    cfg.n = j.value("n", cfg.n);
    if (j.contains("mvec")) cfg.mvec = j["mvec"].get<std::vector<long>>();
    if (j.contains("points")) cfg.points = j["points"].get<std::vector<double>>();
    cfg.rows = j.value("rows", cfg.rows);
    if (!(cfg.run.q > 0.0 && cfg.run.q < 1.0))
        throw DomainViolation("config: q must lie strictly in (0,1)");
    if (std::abs(cfg.t) < 1.0 / cfg.run.q)
        throw DomainViolation("config: |t| must be at least 1/q");
    return cfg;
}

// ---- output plumbing ----

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt(cplx v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real(), v.imag());
    return buf;
}

void emit_table(const Table& t, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
    } else {
        json arr = json::array();
        for (auto& row : t.rows) {
            json obj;
            for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
                obj[t.columns[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw DomainViolation("cannot open output path " + out_path);
        f << os.str();
    }
}

json report_json(const CheckResult& r) {
    json obj;
    obj["check"] = r.check;
    obj["params"] = r.params;
    obj["residual"] = r.residual;
    obj["tol"] = r.tol;
    obj["pass"] = r.pass;
    obj["nodes"] = r.nodes;
    obj["seconds"] = r.seconds;
    obj["seed"] = r.seed;
    return obj;
}

void emit_reports(const std::vector<CheckResult>& rs, const std::string& format,
                  const std::string& out_path) {
    std::ostringstream os;
    if (format == "csv") {
        os << "check,residual,tol,pass,nodes,seconds,seed\n";
        for (auto& r : rs)
            os << r.check << "," << fmt(r.residual) << "," << fmt(r.tol) << ","
               << (r.pass ? "true" : "false") << "," << r.nodes << "," << fmt(r.seconds) << ","
               << r.seed << "\n";
    } else {
        json arr = json::array();
        for (auto& r : rs) arr.push_back(report_json(r));
        os << arr.dump(2) << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw DomainViolation("cannot open output path " + out_path);
        f << os.str();
    }
}

// ---- eval ----

Table run_eval(const std::string& target, const CliConfig& cfg) {
    QContext ctx = cfg.run.ctx();
    const double q = cfg.run.q, q2 = q * q;
    BetaParams bp{cfg.run.s(), cfg.run.u(), cfg.t, cfg.run.k};
    Table t;
    if (target == "asc") {
        t.columns = {"point", "value"};
        cplx a = bp.s * std::pow(q, cfg.run.k), b = std::pow(q, cfg.run.k) / bp.s;
        for (double ang : cfg.points) {
            cplx x = unit_circle(ang);
            t.rows.push_back({fmt(ang), fmt(alsalam_chihara(cfg.n, x, a, b, q2, ctx))});
        }
    } else if (target == "aw") {
        t.columns = {"point", "value"};
        AWQuad p = beta_aw_params(bp, q);
        for (double ang : cfg.points) {
            cplx x = unit_circle(ang);
            t.rows.push_back({fmt(ang), fmt(askey_wilson(cfg.n, x, p.a, p.b, p.c, p.d, q2, ctx))});
        }
    } else if (target == "v") {
        t.columns = {"point", "value"};
        for (double ang : cfg.points) {
            cplx x = unit_circle(ang);
            t.rows.push_back({fmt(ang), fmt(eigfun_v(cfg.n, x, bp, ctx))});
        }
    } else if (target == "vtilde") {
        t.columns = {"m", "value"};
        for (long m = 0; m < cfg.rows; ++m)
            t.rows.push_back({fmt(static_cast<double>(m)),
                              fmt(eigfun_vtilde_grid(cfg.n, m, bp, ctx))});
    } else if (target == "pbeta") {
        t.columns = {"point", "m", "sum", "closed", "recurrence"};
        const double qi = 1.0 / q;
        for (double ang : cfg.points) {
            cplx x = unit_circle(ang);
            std::vector<cplx> P(cfg.rows + 1);
            P[0] = kernel_p_base(x, bp, ctx);
            cplx lam = (x + 1.0 / x - bp.s - 1.0 / bp.s) / (qi - q);
            for (long m = 0; m + 1 <= cfg.rows; ++m) {
                double y = cfg.t * std::pow(q, -cfg.run.k - 2.0 * m);
                cplx Ap = coef_A_beta(cplx(y), cplx(cfg.t), bp.s, bp.u, cfg.run.k, qi);
                cplx Am = coef_A_beta(cplx(1.0 / y), cplx(cfg.t), bp.s, bp.u, cfg.run.k, qi);
                cplx Bm = coef_B_beta(cplx(y), cplx(cfg.t), bp.s, bp.u, cfg.run.k, qi);
                cplx prev = (m == 0) ? cplx(0.0) : P[m - 1];
                P[m + 1] = (lam * P[m] - Bm * P[m] - Am * prev) / Ap;
            }
            for (long m = 0; m < cfg.rows; ++m)
                t.rows.push_back({fmt(ang), fmt(static_cast<double>(m)),
                                  fmt(kernel_p_sum(x, m, bp, ctx)),
                                  fmt(kernel_p_closed(x, m, bp, ctx)), fmt(P[m])});
        }
    } else if (target == "gr" || target == "mv_pbeta") {
        t.columns = {"mvec", "product", "closed"};
        std::vector<double> kv = cfg.run.kvec3;
        std::vector<long> m = cfg.mvec.empty() ? std::vector<long>{1, 0, 1} : cfg.mvec;
        if (m.size() == 2) kv = cfg.run.kvec2;
        if (m.size() != kv.size()) throw DomainViolation("eval: mvec length must be 2 or 3");
        MultiBetaParams mb{cfg.run.s(), cfg.run.u(), cfg.t, kv};
        mb.validate(ctx);
        std::vector<cplx> xs;
        for (std::size_t i = 0; i < kv.size(); ++i)
            xs.push_back(unit_circle(cfg.points[i % cfg.points.size()]));
        std::ostringstream ms;
        for (std::size_t i = 0; i < m.size(); ++i) ms << (i ? " " : "") << m[i];
        t.rows.push_back({ms.str(), fmt(mv_pbeta_product(xs, m, mb, ctx)),
                          fmt(mv_pbeta_closed(xs, m, mb, ctx))});
    } else {
        throw DomainViolation("eval: unknown target " + target);
    }
    return t;
}

// ---- table ----

Table run_table(const std::string& kind, const CliConfig& cfg) {
    QContext ctx = cfg.run.ctx();
    Table t;
    if (kind == "alpha") {
        MultiBetaParams mb{cfg.run.s(), cfg.run.u(), cfg.t, cfg.run.kvec3};
        std::vector<cplx> al = alpha_vector(mb, cfg.run.q);
        t.columns = {"j", "alpha"};
        for (std::size_t j = 0; j < al.size(); ++j)
            t.rows.push_back({fmt(static_cast<double>(j)), fmt(al[j])});
    } else if (kind == "grid") {
        BetaParams bp{cfg.run.s(), cfg.run.u(), cfg.t, cfg.run.k};
        t.columns = {"m", "y"};
        for (long m = 0; m < cfg.rows; ++m)
            t.rows.push_back({fmt(static_cast<double>(m)),
                              fmt(cfg.t * std::pow(cfg.run.q, -cfg.run.k - 2.0 * m))});
    } else if (kind == "weights") {
        BetaParams bp{cfg.run.s(), cfg.run.u(), cfg.t, cfg.run.k};
        bp.validate(ctx);
        t.columns = {"m", "wtilde"};
        for (long m = 0; m < cfg.rows; ++m)
            t.rows.push_back({fmt(static_cast<double>(m)),
                              fmt(kernel_weight_grid(m, bp, ctx).real())});
    } else {
        throw DomainViolation("table: unknown kind " + kind);
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Askey-Wilson polynomial family evaluator and verifier"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, format = "json", out_path;
    long seed = -1;
    double tol = 0.0;
    app.add_option("--config", config_path, "JSON parameter file");
    app.add_option("--format", format, "output format (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--seed", seed, "RNG seed for randomized identity sweeps");
    app.add_option("--tol", tol, "tolerance override for all checks");

    std::string eval_target, verify_suite = "all", table_kind;
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate a polynomial family");
    c_eval->add_option("target", eval_target, "asc | aw | v | vtilde | pbeta | gr | mv_pbeta")
        ->required();
    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", verify_suite,
                         "qseries | hopf | univariate | operators | multivariate | all");
    CLI::App* c_table = app.add_subcommand("table", "print parameter/grid/weight tables");
    c_table->add_option("kind", table_kind, "weights | grid | alpha")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CliConfig cfg = load_config(config_path);
        if (seed >= 0) cfg.run.seed = static_cast<std::uint64_t>(seed);
        if (tol > 0.0) cfg.run.tol_override = tol;

        if (c_eval->parsed()) {
            emit_table(run_eval(eval_target, cfg), format, out_path);
            return 0;
        }
        if (c_table->parsed()) {
            emit_table(run_table(table_kind, cfg), format, out_path);
            return 0;
        }
        // verify
        std::vector<std::string> names;
        if (verify_suite == "all") {
            for (auto& [name, fn] : checks::registry()) names.push_back(name);
        } else {
            bool found = false;
            for (auto& [suite, list] : checks::suites())
                if (suite == verify_suite) {
                    names = list;
                    found = true;
                }
            if (!found) throw DomainViolation("verify: unknown suite " + verify_suite);
        }
        std::vector<CheckResult> results;
        bool all_pass = true;
        for (auto& name : names) {
            for (auto& [rname, fn] : checks::registry())
                if (rname == name) {
                    CheckResult r = fn(cfg.run);
                    all_pass = all_pass && r.pass;
                    results.push_back(std::move(r));
                }
        }
        emit_reports(results, format, out_path);
        if (!all_pass) {
            for (auto& r : results)
                if (!r.pass) std::cerr << "FAILED: " << r.check << "\n";
            return kExitNumerical;
        }
        return 0;
    } catch (const DomainViolation& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
