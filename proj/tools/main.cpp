// rigidmod: exact generating series of rigid orbifold Hilbert schemes of ADE
// quotient surfaces, their eta-product expressions, cusp orders and
// multiplier systems.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or domain error.

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "rigidmod/catalog.hpp"
#include "rigidmod/errors.hpp"
#include "rigidmod/global_series.hpp"
#include "rigidmod/multiplier.hpp"
#include "rigidmod/numeric_eval.hpp"
#include "rigidmod/partitions.hpp"
#include "rigidmod/quiver.hpp"
#include "rigidmod/rigid_theta.hpp"
#include "rigidmod/root_system.hpp"
#include "rigidmod/serialize.hpp"
#include "rigidmod/verify.hpp"

namespace {

using namespace rigidmod;

void print_series(const QSeries& s, const std::string& format, const std::string& label) {
    if (format == "json") {
        std::cout << qseries_to_json(s).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "exponent,coefficient\n";
        for (auto& [e, c] : s.terms())
            std::cout << exp24_to_string(e) << "," << q_to_string(c) << "\n";
    } else {
        std::cout << "# " << label << ", exact through q^(" << exp24_to_string(s.trunc())
                  << ")\n";
        for (auto& [e, c] : s.terms())
            std::cout << exp24_to_string(e) << " " << q_to_string(c) << "\n";
    }
}

void print_profile_plain(const EtaProduct& f, const OrderProfile& p) {
    std::cout << "eta     " << f.to_string() << "\n";
    std::cout << "level   " << f.level() << "\n";
    std::cout << "weight  " << q_to_string(f.weight()) << "\n";
    std::cout << "class   " << to_string(p.cls) << "\n";
    for (auto& [c, o] : p.divisor_orders)
        std::cout << "ord(1/" << c << ") = " << q_to_string(o) << "\n";
    std::cout << "ord(inf) = " << q_to_string(p.order_inf) << "\n";
}

std::vector<RootSystem> parse_root_list(const std::string& tokens) {
    std::vector<RootSystem> out;
    std::stringstream ss(tokens);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_root_token(item));
    return out;
}

GammaElement parse_matrix(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw ParseError("matrix entry '" + item + "' is not an integer");
        }
    }
    if (v.size() != 4) throw ParseError("--matrix expects a,b,c,d");
    return GammaElement(v[0], v[1], v[2], v[3]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ADE orbifold series, eta products and multiplier systems"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key-value config file presetting options");

    long long trunc = 200;
    std::uint64_t seed = 1;
    std::string format = "plain";

    // shared option targets; each subcommand registers the ones it uses
    auto add_trunc = [&](CLI::App* cmd) {
        cmd->add_option("--trunc", trunc, "truncation order in integer powers of q")
            ->envname("RIGIDMOD_TRUNC")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed for sampled checks")
            ->envname("RIGIDMOD_SEED");
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed));
    };

    // series
    auto* cmd_series = app.add_subcommand("series", "expand a local generating series");
    std::string root_tok = "A1", which = "rigid";
    cmd_series->add_option("--root", root_tok, "root system token, e.g. A2, D4, E8")
        ->required();
    cmd_series->add_option("--which", which, "rigid | orbifold | goettsche")
        ->check(CLI::IsMember({"rigid", "orbifold", "goettsche"}));
    add_trunc(cmd_series);
    add_format(cmd_series, {"plain", "json", "csv"});

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the identity/profile suite");
    std::string verify_root_tok = "all";
    int samples = 1000, numeric_samples = 50;
    double tol = 1e-9;
    cmd_verify->add_option("--root", verify_root_tok, "root token or 'all'");
    cmd_verify->add_option("--samples", samples, "random group elements per root");
    cmd_verify->add_option("--numeric-samples", numeric_samples,
                           "random elements for the numeric law");
    cmd_verify->add_option("--tol", tol, "numeric residual tolerance");
    add_trunc(cmd_verify);
    add_seed(cmd_verify);
    add_format(cmd_verify, {"plain", "json"});

    // cusps
    auto* cmd_cusps = app.add_subcommand("cusps", "cusp orders of an eta product");
    std::string eta_str;
    long long single_cusp = 0;
    bool all_divisors = false;
    cmd_cusps->add_option("--eta", eta_str, "eta product as m:a_m comma list")->required();
    cmd_cusps->add_flag("--all-divisors", all_divisors,
                        "tabulate every divisor of the level (default)");
    cmd_cusps->add_option("--cusp", single_cusp, "order at the single cusp 1/c");
    add_format(cmd_cusps, {"plain", "json", "csv"});

    // multiplier
    auto* cmd_mult = app.add_subcommand("multiplier", "multiplier of an eta product");
    std::string matrix_str;
    cmd_mult->add_option("--eta", eta_str, "eta product as m:a_m comma list")->required();
    cmd_mult->add_option("--matrix", matrix_str, "group element a,b,c,d")->required();
    add_format(cmd_mult, {"plain", "json"});

    // quiver
    auto* cmd_quiver = app.add_subcommand("quiver", "dimension-vector arithmetic");
    bool do_verify_dim = false, do_support = false;
    long long bound = 3;
    cmd_quiver->add_option("--root", root_tok, "root system token")->required();
    cmd_quiver->add_flag("--verify-dim", do_verify_dim, "check dim = 2k on a hypercube");
    cmd_quiver->add_option("--bound", bound, "hypercube bound for --verify-dim");
    cmd_quiver->add_flag("--support", do_support, "emit the zero-dimensional support series");
    add_trunc(cmd_quiver);
    add_format(cmd_quiver, {"plain", "json", "csv"});

    // global
    auto* cmd_global = app.add_subcommand("global", "compose local series globally");
    long long group_order = 1;
    std::string points_str;
    cmd_global->add_option("--group-order", group_order, "order k of the acting group")
        ->required();
    cmd_global->add_option("--points", points_str,
                           "comma list of singular-point types, e.g. A1,A1 (may be empty)");
    add_trunc(cmd_global);
    add_format(cmd_global, {"plain", "json"});

    // table-appendix
    auto* cmd_table = app.add_subcommand(
        "table-appendix", "cusp-order table of the E-type entries as CSV");
    add_format(cmd_table, {"csv"});

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force partition oracle");
    bool do_partitions = false;
    long long up_to = 30;
    cmd_oracle->add_flag("--partitions", do_partitions, "enumerate partition counts");
    cmd_oracle->add_option("--up-to", up_to, "largest size to enumerate");

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "eta products attached to a root system");
    std::string show = "eta,orders,weight";
    cmd_catalog->add_option("--root", root_tok, "root system token")->required();
    cmd_catalog->add_option("--show", show, "comma list of eta,orders,weight");
    add_format(cmd_catalog, {"plain", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_series)) {
            RootSystem rs = parse_root_token(root_tok);
            QSeries s = which == "rigid"      ? rigid_series(rs, trunc)
                        : which == "orbifold" ? orbifold_series(rs, trunc)
                                              : goettsche_factor(rs, trunc);
            print_series(s, format, which + " series of " + rs.token());
            return 0;
        }

        if (app.got_subcommand(cmd_verify)) {
            VerifyOptions opts;
            opts.trunc_q = trunc;
            opts.multiplier_samples = samples;
            opts.numeric_samples = numeric_samples;
            opts.seed = seed;
            opts.tolerance = tol;
            std::vector<RootSystem> roots = verify_root_tok == "all"
                                                ? standard_sweep()
                                                : parse_root_list(verify_root_tok);
            std::vector<RootReport> reports = verify_many(roots, opts);
            bool all = true;
            for (auto& r : reports) all = all && r.pass;
            if (format == "json") {
                Json out = Json::array();
                for (auto& r : reports) out.push_back(report_to_json(r));
                std::cout << Json{{"pass", all}, {"reports", std::move(out)}}.dump() << "\n";
            } else {
                for (auto& r : reports) {
                    std::cout << r.root << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
                    for (auto& c : r.checks) {
                        std::cout << "  " << c.name << ": " << (c.pass ? "ok" : "FAIL");
                        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                        std::cout << "\n";
                    }
                }
                std::cout << (all ? "PASS" : "FAIL") << "\n";
            }
            return all ? 0 : 1;
        }

        if (app.got_subcommand(cmd_cusps)) {
            EtaProduct f = EtaProduct::from_string(eta_str);
            if (single_cusp > 0 && !all_divisors) {
                Q o = cusp_order(f, single_cusp);
                if (format == "json")
                    std::cout << Json{{"cusp", single_cusp}, {"order", rational_to_json(o)}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "ord(1/" << single_cusp << ") = " << q_to_string(o) << "\n";
                return 0;
            }
            OrderProfile p = order_profile(f);
            if (format == "json") {
                Json out = order_profile_to_json(p);
                out["eta"] = f.to_string();
                out["level"] = f.level();
                out["weight"] = rational_to_json(f.weight());
                std::cout << out.dump() << "\n";
            } else if (format == "csv") {
                std::cout << "cusp,order\n";
                for (auto& [c, o] : p.divisor_orders)
                    std::cout << c << "," << q_to_string(o) << "\n";
                std::cout << "inf," << q_to_string(p.order_inf) << "\n";
            } else {
                print_profile_plain(f, p);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_mult)) {
            EtaProduct f = EtaProduct::from_string(eta_str);
            GammaElement A = parse_matrix(matrix_str);
            UnitRoot24 vp = product_multiplier_petersson(f, A);
            UnitRoot24 vc = product_multiplier_closed(f, A);
            if (format == "json") {
                std::cout << Json{{"eta", f.to_string()},
                                  {"matrix", A.to_string()},
                                  {"petersson", vp.to_string()},
                                  {"closed", vc.to_string()},
                                  {"agree", vp == vc}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "petersson " << vp.to_string() << "\n";
                std::cout << "closed    " << vc.to_string() << "\n";
                std::cout << "agree     " << (vp == vc ? "yes" : "NO") << "\n";
            }
            return vp == vc ? 0 : 1;
        }

        if (app.got_subcommand(cmd_quiver)) {
            RootSystem rs = parse_root_token(root_tok);
            if (do_verify_dim) {
                bool ok = verify_dim_is_2k(rs, bound);
                std::cout << "dim = 2k on [0," << bound << "]^" << (rs.n + 1) << ": "
                          << (ok ? "PASS" : "FAIL") << "\n";
                if (!ok) return 1;
            }
            if (do_support) {
                QSeries s = zero_dim_support(rs, trunc);
                print_series(s, format, "zero-dimensional support of " + rs.token());
            }
            if (!do_verify_dim && !do_support)
                throw ParseError("quiver: pass --verify-dim and/or --support");
            return 0;
        }

        if (app.got_subcommand(cmd_global)) {
            GlobalOrbifold g(group_order,
                             points_str.empty() ? std::vector<RootSystem>{}
                                                : parse_root_list(points_str));
            QSeries s = global_rigid_series(g, trunc);
            GlobalModularData data = global_modular_data(g);
            if (format == "json") {
                Json out;
                out["group_order"] = g.k;
                Json pts = Json::array();
                for (auto& rs : g.points) pts.push_back(rs.token());
                out["points"] = std::move(pts);
                out["series"] = qseries_to_json(s);
                out["prefactor_exp"] = rational_to_json(data.prefactor_exp);
                out["weight"] = rational_to_json(data.weight);
                out["level"] = data.level;
                out["eta"] = data.eta.to_string();
                out["profile"] = order_profile_to_json(data.profile);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "prefactor exponent " << q_to_string(data.prefactor_exp) << "\n";
                std::cout << "weight             " << q_to_string(data.weight) << "\n";
                std::cout << "level              " << data.level << "\n";
                std::cout << "eta                " << data.eta.to_string() << "\n";
                print_series(s, "plain", "global rigid series");
            }
            return 0;
        }

        if (app.got_subcommand(cmd_table)) {
            std::cout << e_type_order_table_csv();
            return 0;
        }

        if (app.got_subcommand(cmd_oracle)) {
            if (!do_partitions) throw ParseError("oracle: pass --partitions");
            for (long long m = 0; m <= up_to; ++m)
                std::cout << m << " " << partition_count(m) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_catalog)) {
            RootSystem rs = parse_root_token(root_tok);
            DeltaCatalogEntry ent = catalog_entry(rs);
            bool show_eta = show.find("eta") != std::string::npos;
            bool show_orders = show.find("orders") != std::string::npos;
            bool show_weight = show.find("weight") != std::string::npos;
            if (format == "json") {
                Json out;
                out["root"] = rs.token();
                out["k"] = rs.k;
                if (show_eta) {
                    out["z_eta"] = ent.z_eta.to_string();
                    out["r_eta"] = ent.r_eta.to_string();
                }
                if (show_weight) out["weight"] = rational_to_json(ent.r_eta.weight());
                if (show_orders) out["profile"] = order_profile_to_json(order_profile(ent.r_eta));
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "root   " << rs.token() << " (k = " << rs.k << ")\n";
                if (show_eta) {
                    std::cout << "z_eta  " << ent.z_eta.to_string() << "\n";
                    std::cout << "r_eta  " << ent.r_eta.to_string() << "\n";
                }
                if (show_weight)
                    std::cout << "weight " << q_to_string(ent.r_eta.weight()) << "\n";
                if (show_orders) print_profile_plain(ent.r_eta, order_profile(ent.r_eta));
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
