#include "chernum/catalog.hpp"
#include "chernum/chern.hpp"
#include "chernum/cobordism.hpp"
#include "chernum/divisibility.hpp"
#include "chernum/inversion.hpp"
#include "chernum/json_io.hpp"
#include "chernum/polytopes.hpp"
#include "chernum/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chernum;

constexpr int kDefaultCap = 12;

struct Options {
    bool json = false;
    bool unsafe_n = false;
};

int checked(int value, const char* what, const Options& opt) {
    if (value < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
    if (!opt.unsafe_n && value > kDefaultCap)
        throw std::invalid_argument(std::string(what) + " exceeds the default bound " +
                                    std::to_string(kDefaultCap) +
                                    " (pass --unsafe-n to override)");
    return value;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string theta_pretty(const ThetaExpr& e) { return to_string(e); }

std::string rational_str(const Rational& r) { return coeff_string(r); }

void print_polynomial(const Options& opt, const PolyZ& poly, const std::string& label,
                      const std::string& var) {
    if (opt.json) {
        emit(poly_to_json(poly));
    } else {
        std::cout << label << " = " << to_string(poly, var) << "\n";
    }
}

int cmd_lagrange(const Options& opt, int n, const std::string& route, const std::string& var) {
    n = checked(n, "n", opt);
    if (route == "both") {
        InversionResult a = lagrange_polynomial(n, LagrangeRoute::recursive);
        InversionResult b = lagrange_polynomial(n, LagrangeRoute::direct_formula);
        if (a.polynomial != b.polynomial) {
            std::cerr << "route disagreement for L_" << n << "\n";
            return 1;
        }
        print_polynomial(opt, a.polynomial, "L_" + std::to_string(n), var);
        return 0;
    }
    LagrangeRoute r = route == "direct" ? LagrangeRoute::direct_formula : LagrangeRoute::recursive;
    print_polynomial(opt, lagrange_polynomial(n, r).polynomial, "L_" + std::to_string(n), var);
    return 0;
}

int cmd_multinv(const Options& opt, int n, bool hat, const std::string& route,
                const std::string& var) {
    n = checked(n, "n", opt);
    if (hat) {
        print_polynomial(opt, hat_mult_inversion(n), "hatM_" + std::to_string(n), var);
        return 0;
    }
    if (route == "both") {
        InversionResult a = mult_inversion_polynomial(n, MultInvRoute::recursive);
        InversionResult b = mult_inversion_polynomial(n, MultInvRoute::determinant);
        if (a.polynomial != b.polynomial) {
            std::cerr << "route disagreement for M_" << n << "\n";
            return 1;
        }
        print_polynomial(opt, a.polynomial, "M_" + std::to_string(n), var);
        return 0;
    }
    MultInvRoute r = route == "determinant" ? MultInvRoute::determinant : MultInvRoute::recursive;
    print_polynomial(opt, mult_inversion_polynomial(n, r).polynomial, "M_" + std::to_string(n),
                     var);
    return 0;
}

int cmd_chern_cpn(const Options& opt, int n, const std::string& bundle) {
    n = checked(n, "n", opt);
    PolyZ gf = bundle == "normal" ? cpn_normal_gf(n) : cpn_tangent_gf(n);
    print_polynomial(opt, gf, "C^" + bundle + "(CP^" + std::to_string(n) + ")", "t");
    return 0;
}

int cmd_chern_theta(const Options& opt, int n, int k) {
    n = checked(n, "n", opt);
    k = checked(k, "k", opt);
    PolyZ tangent, normal;
    std::string label = "Theta^" + std::to_string(n);
    if (k == 1) {
        tangent = theta_tangent_gf(n);
        normal = theta_normal_gf(n);
    } else {
        ThetaPowerGF gf = theta_power_gf(n, k);
        tangent = gf.tangent;
        normal = gf.normal;
        label += "(" + std::to_string(k) + ")";
    }
    if (opt.json) {
        Json j;
        j["tangent"] = poly_to_json(tangent);
        j["normal"] = poly_to_json(normal);
        emit(j);
    } else {
        std::cout << "C^tangent(" << label << ") = " << to_string(tangent, "t") << "\n";
        std::cout << "C^normal(" << label << ") = " << to_string(normal, "t") << "\n";
    }
    return 0;
}

int cmd_chern_hypersurface(const Options& opt, int m, int d) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    checked(m - 1, "m-1", opt);
    d = checked(d, "d", opt);
    PolyZ gf = hypersurface_gf(m, d);
    print_polynomial(opt, gf,
                     "C^tangent(V_" + std::to_string(d) + " in CP^" + std::to_string(m) + ")",
                     "t");
    return 0;
}

int cmd_cobordism_log(const Options& opt, int max_n) {
    max_n = checked(max_n, "N", opt);
    std::vector<ThetaExpr> classes = mischenko_logarithm(max_n);
    if (opt.json) {
        Json j = Json::array();
        for (int n = 1; n <= max_n; ++n) {
            Json entry;
            entry["n"] = n;
            entry["class"] = poly_to_json(classes[static_cast<size_t>(n - 1)]);
            j.push_back(std::move(entry));
        }
        emit(j);
    } else {
        for (int n = 1; n <= max_n; ++n)
            std::cout << "[CP^" << n
                      << "] = " << theta_pretty(classes[static_cast<size_t>(n - 1)]) << "\n";
    }
    return 0;
}

int cmd_cobordism_decompose(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j = Json::parse(in);
    ChernRecord record = record_from_json(j);
    checked(record.dimension, "dimension", opt);
    if (record.convention == Convention::tangent) record = convert_record(record);
    ThetaExpr expansion = decompose_in_theta(record);
    if (opt.json) {
        emit(poly_to_json(expansion));
    } else {
        std::cout << "[" << record.name << "] = " << theta_pretty(expansion) << "\n";
    }
    return 0;
}

void print_census(const Options& opt, const FaceCensus& census) {
    if (opt.json) {
        emit(census_to_json(census));
        return;
    }
    std::cout << to_string(census.polytope) << ", n = " << census.n << "\n";
    Int total = 0;
    for (int k = 1; k <= census.n; ++k) {
        Int dim_total = 0;
        std::ostringstream types;
        bool first = true;
        for (const auto& [p, c] : census.counts) {
            if (p.size() != k) continue;
            dim_total += c;
            types << (first ? "" : ", ") << p.to_string() << ":" << c.str();
            first = false;
        }
        if (dim_total == 0) continue;
        total += dim_total;
        std::cout << "  dim " << census.n - k << ": " << dim_total.str() << "  [" << types.str()
                  << "]\n";
    }
    std::cout << "  total " << total.str() << "\n";
}

int cmd_faces(const Options& opt, const std::string& kind, int n) {
    n = checked(n, "n", opt);
    FaceCensus census =
        kind == "assoc" ? dissection_census(n) : ordered_partition_census(n);
    print_census(opt, census);
    return 0;
}

void print_verdict_row(const std::string& label, const SurfaceRecord& s,
                       const DivisibilityVerdict& v) {
    std::cout << label << ": c1^2 = " << s.c1sq.str() << ", c2 = " << s.c2.str()
              << ", gcd = " << v.d.str() << ", chi = " << v.chi.str()
              << (v.extremely_divisible ? "  [extremely divisible]" : "") << "\n";
}

int cmd_div_family(const Options& opt, const std::string& family, int bound) {
    Json rows = Json::array();
    if (family == "delpezzo") {
        for (const auto& [d, v] : del_pezzo_scan()) {
            SurfaceRecord s = del_pezzo_surface(d);
            if (opt.json) {
                Json row = surface_to_json(s);
                row["verdict"] = verdict_to_json(v);
                rows.push_back(std::move(row));
            } else {
                print_verdict_row("S_" + std::to_string(d), s, v);
            }
        }
    } else if (family == "toric") {
        for (const auto& [n, v] : toric_surface_scan(bound)) {
            SurfaceRecord s = toric_surface(n);
            if (opt.json) {
                Json row = surface_to_json(s);
                row["verdict"] = verdict_to_json(v);
                rows.push_back(std::move(row));
            } else {
                print_verdict_row("X_" + std::to_string(n), s, v);
            }
        }
    } else { // hypersurface
        for (const auto& [d, v] : hypersurface_scan(bound)) {
            SurfaceRecord s = hypersurface_surface(d);
            if (opt.json) {
                Json row = surface_to_json(s);
                row["verdict"] = verdict_to_json(v);
                rows.push_back(std::move(row));
            } else {
                print_verdict_row("V_" + std::to_string(d), s, v);
            }
        }
    }
    if (opt.json) emit(rows);
    return 0;
}

int cmd_div_catalog(const Options& opt, const std::string& path) {
    Catalog catalog;
    if (path.empty()) {
        catalog = builtin_catalog();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        catalog = parse_catalog(text.str());
    }
    Json out;
    if (opt.json) out["version"] = catalog.version;
    if (!opt.json) std::cout << "catalog version " << catalog.version << "\n";
    Json surfaces = Json::array();
    for (const CatalogSurface& cs : catalog.surfaces) {
        DivisibilityVerdict v = surface_verdict(cs.surface);
        Rational tau = surface_signature(cs.surface);
        if (opt.json) {
            Json row = surface_to_json(cs.surface);
            row["verdict"] = verdict_to_json(v);
            row["signature"] = rational_str(tau);
            row["signature_integral"] = is_integral(tau);
            row["todd"] = rational_str(surface_todd(cs.surface));
            row["slope"] = rational_str(chern_slope(cs.surface).slope);
            if (!cs.note.empty()) row["note"] = cs.note;
            surfaces.push_back(std::move(row));
        } else {
            std::cout << cs.surface.name << ": c1^2 = " << cs.surface.c1sq.str()
                      << ", c2 = " << cs.surface.c2.str() << ", gcd = " << v.d.str()
                      << ", tau = " << rational_str(tau)
                      << (is_integral(tau) ? "" : " (non-integral: inconsistent input)")
                      << ", slope = " << rational_str(chern_slope(cs.surface).slope)
                      << (v.extremely_divisible ? "  [extremely divisible]" : "") << "\n";
        }
    }
    Json records = Json::array();
    for (const CatalogRecord& cr : catalog.records) {
        DivisibilityVerdict v = gcd_chern_numbers(cr.record);
        if (opt.json) {
            Json row = record_to_json(cr.record);
            row["verdict"] = verdict_to_json(v);
            if (!cr.note.empty()) row["note"] = cr.note;
            records.push_back(std::move(row));
        } else {
            std::cout << cr.record.name << " (dim " << cr.record.dimension
                      << "): gcd = " << v.d.str() << ", chi = " << v.chi.str()
                      << (v.extremely_divisible ? "  [extremely divisible]" : "")
                      << (v.witnessed ? "  [witnessed on partial data]" : "") << "\n";
        }
    }
    if (opt.json) {
        out["surfaces"] = std::move(surfaces);
        out["records"] = std::move(records);
        out["notes"] = catalog.notes;
        emit(out);
    } else {
        for (const std::string& note : catalog.notes) std::cout << "note: " << note << "\n";
    }
    return 0;
}

int cmd_div_record(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j = Json::parse(in);
    ChernRecord record = record_from_json(j);
    checked(record.dimension, "dimension", opt);
    DivisibilityVerdict v = gcd_chern_numbers(record);
    if (opt.json) {
        Json row = record_to_json(record);
        row["verdict"] = verdict_to_json(v);
        emit(row);
    } else {
        std::cout << record.name << " (dim " << record.dimension << ", "
                  << to_string(record.convention) << "): gcd = " << v.d.str()
                  << ", chi = " << v.chi.str()
                  << (v.extremely_divisible ? "  [extremely divisible]" : "")
                  << (v.witnessed ? "  [witnessed on partial data]" : "") << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, int max_n, const std::string& suite) {
    max_n = checked(max_n, "max-n", opt);
    std::vector<CheckResult> results = run_verification(max_n, suite == "fast");
    if (opt.json) {
        Json j = Json::array();
        for (const CheckResult& r : results)
            j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit(j);
    } else {
        for (const CheckResult& r : results)
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " — " << r.detail
                      << "\n";
        size_t passed = 0;
        for (const CheckResult& r : results) passed += r.passed ? 1 : 0;
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of inversion polynomials, characteristic-number "
                 "generating functions and divisibility verdicts"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    const char* env_format = std::getenv("CHERNUM_FORMAT");
    if (env_format && std::string(env_format) == "json") opt.json = true;
    app.add_flag("--json,!--text", opt.json, "emit JSON instead of text");
    app.add_flag("--unsafe-n", opt.unsafe_n, "lift the default bound n <= 12");

    int n = 1, k = 1, m = 3, d = 1, max_n = 8, bound = 12;
    std::string route = "recursive", var, bundle = "tangent", path, suite = "all";

    CLI::App* lagrange_cmd = app.add_subcommand("lagrange", "Lagrange inversion polynomial L_n");
    lagrange_cmd->add_option("n", n, "weight")->required();
    lagrange_cmd->add_option("--route", route, "recursive|direct|both")
        ->check(CLI::IsMember({"recursive", "direct", "both"}));
    lagrange_cmd->add_option("--var", var, "display variable name");

    CLI::App* multinv_cmd =
        app.add_subcommand("multinv", "multiplicative inversion polynomial M_n");
    multinv_cmd->add_option("n", n, "weight")->required();
    bool hat = false;
    multinv_cmd->add_flag("--hat", hat, "exponential-form variant n! M_n(p_k/k!)");
    multinv_cmd->add_option("--route", route, "recursive|determinant|both")
        ->check(CLI::IsMember({"recursive", "determinant", "both"}));
    multinv_cmd->add_option("--var", var, "display variable name");

    CLI::App* bell_cmd = app.add_subcommand("bell", "partial ordinary Bell polynomial B_{n,k}");
    bell_cmd->add_option("n", n, "degree")->required();
    bell_cmd->add_option("k", k, "power")->required();
    bell_cmd->add_option("--var", var, "display variable name");

    CLI::App* hess_cmd =
        app.add_subcommand("hessenberg", "symbolic Hessenberg determinant of order n");
    hess_cmd->add_option("n", n, "order")->required();
    hess_cmd->add_option("--var", var, "display variable name");

    CLI::App* chern_cmd = app.add_subcommand("chern", "characteristic-number generating functions");
    chern_cmd->require_subcommand(1);
    CLI::App* cpn_cmd = chern_cmd->add_subcommand("cpn", "projective space CP^n");
    cpn_cmd->add_option("n", n, "dimension")->required();
    cpn_cmd->add_option("--bundle", bundle, "tangent|normal")
        ->check(CLI::IsMember({"tangent", "normal"}));
    CLI::App* theta_cmd = chern_cmd->add_subcommand("theta", "theta divisor Theta^n");
    theta_cmd->add_option("n", n, "dimension")->required();
    theta_cmd->add_option("--power", k, "section of the k-th power of the polarisation");
    CLI::App* hyper_cmd =
        chern_cmd->add_subcommand("hypersurface", "degree-d hypersurface in CP^m");
    hyper_cmd->add_option("m", m, "ambient projective dimension")->required();
    hyper_cmd->add_option("d", d, "degree")->required();

    CLI::App* cob_cmd = app.add_subcommand("cobordism", "theta-basis expansions");
    cob_cmd->require_subcommand(1);
    CLI::App* log_cmd = cob_cmd->add_subcommand("log", "CP^n classes from the formal-group log");
    log_cmd->add_option("N", max_n, "largest dimension")->required();
    CLI::App* dec_cmd = cob_cmd->add_subcommand("decompose", "expand a Chern record");
    dec_cmd->add_option("record", path, "ChernRecord JSON file")->required();

    CLI::App* faces_cmd = app.add_subcommand("faces", "polytope face censuses");
    faces_cmd->require_subcommand(1);
    CLI::App* assoc_cmd = faces_cmd->add_subcommand("assoc", "associahedron (dissections)");
    assoc_cmd->add_option("n", n, "weight")->required();
    CLI::App* perm_cmd = faces_cmd->add_subcommand("perm", "permutohedron (ordered set partitions)");
    perm_cmd->add_option("n", n, "weight")->required();

    CLI::App* div_cmd = app.add_subcommand("divisibility", "divisibility scans and records");
    div_cmd->require_subcommand(1);
    CLI::App* dp_cmd = div_cmd->add_subcommand("delpezzo", "del Pezzo surfaces S_1..S_9");
    CLI::App* toric_cmd = div_cmd->add_subcommand("toric", "toric surfaces of N-gons");
    toric_cmd->add_option("--max-n", bound, "largest N (default 12)");
    CLI::App* hs_cmd = div_cmd->add_subcommand("hypersurface", "surfaces V_d in CP^3");
    int max_d = 6;
    hs_cmd->add_option("--max-d", max_d, "largest degree (default 6)");
    CLI::App* cat_cmd = div_cmd->add_subcommand("catalog", "built-in catalog verdicts");
    std::string catalog_path;
    cat_cmd->add_option("--file", catalog_path, "catalog JSON file (default: built-in)");
    CLI::App* rec_cmd = div_cmd->add_subcommand("record", "verdict for a ChernRecord JSON file");
    rec_cmd->add_option("record", path, "ChernRecord JSON file")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
    verify_cmd->add_option("--max-n", max_n, "weight bound (default 8)");
    verify_cmd->add_option("--suite", suite, "all|fast")
        ->check(CLI::IsMember({"all", "fast"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*lagrange_cmd)
            return cmd_lagrange(opt, n, route, var.empty() ? "a" : var);
        if (*multinv_cmd)
            return cmd_multinv(opt, n, hat, route, var.empty() ? (hat ? "p" : "z") : var);
        if (*bell_cmd) {
            checked(n, "n", opt);
            print_polynomial(opt, bell_partial(n, k),
                             "B_" + std::to_string(n) + "," + std::to_string(k),
                             var.empty() ? "z" : var);
            return 0;
        }
        if (*hess_cmd) {
            checked(n, "n", opt);
            print_polynomial(opt, hessenberg_symbolic(n), "D_" + std::to_string(n),
                             var.empty() ? "z" : var);
            return 0;
        }
        if (*cpn_cmd) return cmd_chern_cpn(opt, n, bundle);
        if (*theta_cmd) return cmd_chern_theta(opt, n, k);
        if (*hyper_cmd) return cmd_chern_hypersurface(opt, m, d);
        if (*log_cmd) return cmd_cobordism_log(opt, max_n);
        if (*dec_cmd) return cmd_cobordism_decompose(opt, path);
        if (*assoc_cmd) return cmd_faces(opt, "assoc", n);
        if (*perm_cmd) return cmd_faces(opt, "perm", n);
        if (*dp_cmd) return cmd_div_family(opt, "delpezzo", 9);
        if (*toric_cmd) return cmd_div_family(opt, "toric", bound);
        if (*hs_cmd) return cmd_div_family(opt, "hypersurface", max_d);
        if (*cat_cmd) return cmd_div_catalog(opt, catalog_path);
        if (*rec_cmd) return cmd_div_record(opt, path);
        if (*verify_cmd) return cmd_verify(opt, max_n, suite);
    } catch (const chernum::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
