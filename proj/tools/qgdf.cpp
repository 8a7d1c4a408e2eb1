#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qgdf/cells.hpp"
#include "qgdf/counting.hpp"
#include "qgdf/errors.hpp"
#include "qgdf/io.hpp"
#include "qgdf/oracle.hpp"
#include "qgdf/poincare.hpp"
#include "qgdf/typea.hpp"

namespace {

using namespace qgdf;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("expected a comma-separated integer list, got: " + s);
        }
    }
    if (out.empty()) throw input_error("empty integer list");
    return out;
}

// Shared input-spec flags: exactly one of --type-a or --flag/--ambient.
struct ConfigInput {
    int type_a = 0;
    std::string flag;
    int ambient = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--type-a", type_a, "complete flag on A_N");
        cmd->add_option("--flag", flag, "partial flag steps d1,d2,...");
        cmd->add_option("--ambient", ambient, "ambient dimension for --flag");
    }

    bool given() const { return type_a > 0 || !flag.empty(); }

    PIConfig config() const {
        if (type_a > 0 && !flag.empty())
            throw input_error("give exactly one of --type-a or --flag");
        if (type_a > 0) return PIConfig::complete_flag(type_a);
        if (!flag.empty()) {
            if (ambient <= 0) throw input_error("--flag requires --ambient");
            return flag_to_pi(FlagSpec{ambient, parse_int_list(flag)});
        }
        throw input_error("an input spec (--type-a or --flag/--ambient) is required");
    }
};

json int_as_json(const Int& v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

json coeffs_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(int_as_json(c));
    return out;
}

json dimvec_json(const DimVector& d) {
    json out = json::array();
    for (int x : d) out.push_back(x);
    return out;
}

std::string dimvec_key(const DimVector& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

json fixed_point_json(const Rep<Rat>& m, const FixedPoint& fp) {
    json out = json::object();
    for (std::size_t s = 0; s < m.summands.size(); ++s) {
        json verts = json::array();
        for (int v : fp.vertex_sets[s]) verts.push_back(v + 1);
        out[m.summands[s].label] = std::move(verts);
    }
    return out;
}

json orbit_side_json(const std::map<Interval, int>& side) {
    json out = json::array();
    for (const auto& [iv, mult] : side) out.push_back({iv.left, iv.right, mult});
    return out;
}

int run_poincare(const ConfigInput& input, const std::string& convention,
                 const std::string& format) {
    PIConfig cfg = input.config();
    ExponentConvention conv;
    if (convention == "euler")
        conv = ExponentConvention::euler;
    else if (convention == "printed")
        conv = ExponentConvention::printed;
    else
        throw input_error("--exponent-convention must be euler or printed");
    IntPoly p = poincare_x(cfg, conv);
    if (format == "text") {
        std::cout << p.to_string() << "\n";
        std::cout << "dim " << p.degree() << ", euler " << p.eval(1).str() << "\n";
        return 0;
    }
    if (format != "json") throw input_error("poincare supports --format json|text");
    json out;
    out["coeffs"] = coeffs_json(p);
    out["dim"] = p.degree();
    out["euler"] = p.eval(1).str();
    std::cout << out.dump() << "\n";
    return 0;
}

Int genocchi_by_method(int n, const std::string& method) {
    if (method == "sets") return genocchi_sets(n);
    if (method == "formula") return genocchi_formula(n);
    if (method == "motzkin") return genocchi_motzkin(n);
    if (method == "poincare")
        return n == 1 ? Int(1) : eval_int(poincare_complete_flag(n - 1), 1);
    if (method == "orbits")
        return n == 1 ? Int(1) : orbit_count(PIConfig::complete_flag(n - 1));
    throw input_error("unknown genocchi method: " + method);
}

int run_genocchi(int n, const std::string& method, const std::string& format) {
    if (n < 1) throw input_error("--n must be positive");
    std::vector<std::string> methods;
    if (method == "all")
        methods = {"sets", "formula", "motzkin", "poincare", "orbits"};
    else
        methods = {method};
    std::map<std::string, Int> values;
    for (const auto& m : methods) values[m] = genocchi_by_method(n, m);
    bool agree = true;
    for (const auto& [m, v] : values) agree = agree && v == values.begin()->second;
    if (format == "csv") {
        std::cout << "method,value\n";
        for (const auto& [m, v] : values) std::cout << m << "," << v.str() << "\n";
        return agree ? 0 : 1;
    }
    if (format != "json") throw input_error("genocchi supports --format json|csv");
    json out;
    out["n"] = n;
    out["agree"] = agree;
    out["values"] = json::object();
    for (const auto& [m, v] : values) out["values"][m] = v.str();
    std::cout << out.dump() << "\n";
    return agree ? 0 : 1;
}

struct CellsInput {
    Rep<Rat> rep;
    DegreeAssignment deg;
    DimVector e;
};

CellsInput cells_input(const ConfigInput& input, const std::string& rep_path,
                       const std::string& e_str, const std::string& degree_convention) {
    CellsInput out;
    if (!rep_path.empty()) {
        if (input.given()) throw input_error("give either --rep or a flag config, not both");
        out.rep = read_rep_file(rep_path);
        if (e_str.empty()) throw input_error("--rep requires --e");
        out.e = parse_int_list(e_str);
        if (degree_convention == "generic" || degree_convention.empty())
            out.deg = generic_degrees(out.rep);
        else
            throw input_error("--rep inputs support only the generic degree convention");
        return out;
    }
    PIConfig cfg = input.config();
    out.rep = build_pi(cfg);
    out.e = cfg.dim_p();
    if (!e_str.empty()) out.e = parse_int_list(e_str);
    if (degree_convention.empty() || degree_convention == "gt")
        out.deg = type_a_gt_degrees(cfg);
    else if (degree_convention == "gt-reversed")
        out.deg = type_a_gt_degrees(cfg, /*reversed=*/true);
    else if (degree_convention == "generic")
        out.deg = generic_degrees(out.rep);
    else
        throw input_error("--degree-convention must be gt, gt-reversed or generic");
    return out;
}

int run_cells(const CellsInput& in, bool list, const std::string& format) {
    auto fps = enumerate_fixed_points(in.rep, in.e);
    IntPoly poly;
    if (format == "csv" && list) std::cout << "fixedPoint,cellDim,stratum,tangentDim,singular\n";
    for (const auto& fp : fps) {
        CellInfo info = classify_fixed_point(in.rep, in.deg, fp);
        poly += IntPoly::monomial((std::size_t)info.cell_dim);
        if (!list) continue;
        if (format == "csv") {
            std::cout << '"' << fixed_point_json(in.rep, fp).dump() << '"' << ","
                      << info.cell_dim << ","
                      << (info.stratum.empty() ? std::string() : dimvec_key(info.stratum)) << ","
                      << info.tangent_dim << "," << (info.singular ? "true" : "false") << "\n";
        } else {
            json line;
            line["fixedPoint"] = fixed_point_json(in.rep, fp);
            line["cellDim"] = info.cell_dim;
            line["stratum"] = info.stratum.empty() ? json() : dimvec_json(info.stratum);
            line["tangentDim"] = info.tangent_dim;
            line["singular"] = info.singular;
            std::cout << line.dump() << "\n";
        }
    }
    if (format == "csv") {
        std::cout << "cellPoly," << '"' << coeffs_json(poly).dump() << '"' << "\n";
        std::cout << "count," << fps.size() << "\n";
    } else {
        json summary;
        summary["cellPoly"] = coeffs_json(poly);
        summary["count"] = fps.size();
        std::cout << summary.dump() << "\n";
    }
    return 0;
}

int run_orbits(const ConfigInput& input, bool list, const std::string& format) {
    PIConfig cfg = input.config();
    if (list) {
        auto labels = orbit_enumerate(cfg);
        for (const auto& label : labels) {
            if (format == "csv") {
                std::cout << '"' << orbit_side_json(label.qp).dump() << '"' << ","
                          << '"' << orbit_side_json(label.ni).dump() << '"' << "\n";
            } else {
                json line;
                line["qp"] = orbit_side_json(label.qp);
                line["ni"] = orbit_side_json(label.ni);
                std::cout << line.dump() << "\n";
            }
        }
        json summary;
        summary["count"] = std::to_string(labels.size());
        std::cout << summary.dump() << "\n";
        return 0;
    }
    json out;
    out["count"] = orbit_count(cfg).str();
    std::cout << out.dump() << "\n";
    return 0;
}

int run_oracle_count(const ConfigInput& input, const std::string& rep_path,
                     const std::string& e_str, std::int64_t q, bool per_stratum,
                     long long budget, int threads) {
    Rep<Rat> rep;
    DimVector e;
    if (!rep_path.empty()) {
        if (input.given()) throw input_error("give either --rep or a flag config, not both");
        rep = read_rep_file(rep_path);
        if (e_str.empty()) throw input_error("--rep requires --e");
        e = parse_int_list(e_str);
    } else {
        PIConfig cfg = input.config();
        rep = build_pi(cfg);
        e = e_str.empty() ? cfg.dim_p() : parse_int_list(e_str);
    }
    OracleOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    OracleResult result = count_subreps_fq(reduce_mod(rep, q), e, q, opts);
    json out;
    out["count"] = result.total.str();
    if (per_stratum) {
        out["strata"] = json::object();
        for (const auto& [f, c] : result.by_stratum) out["strata"][dimvec_key(f)] = c.str();
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_emit_rep(const ConfigInput& input) {
    std::cout << rep_to_json(build_pi(input.config())).dump(2) << "\n";
    return 0;
}

int run_tangent(const std::string& rep_path, const std::string& sub_path) {
    Rep<Rat> m = read_rep_file(rep_path);
    SubrepBasis<Rat> u = read_subrep_file(sub_path, m);
    require_valid_subrep(m, u);
    long long t = tangent_dim(m, u);
    long long g = generic_grass_dim(m.quiver, u.dim_vector(), m.dims);
    json out;
    out["tangentDim"] = t;
    out["genericDim"] = g;
    out["singular"] = t > g;
    if (!m.summands.empty()) {
        bool pi_labels = true;
        for (const auto& s : m.summands)
            pi_labels = pi_labels && !s.label.empty() &&
                        (s.label.front() == 'P' || s.label.front() == 'I');
        if (pi_labels) out["stratum"] = dimvec_json(stratum_of(m, u));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_verify(const ConfigInput& input, std::int64_t q, long long budget, int threads) {
    PIConfig cfg = input.config();
    json checks;
    bool ok = true;
    IntPoly formula = poincare_x(cfg);

    Rep<Rat> m = build_pi(cfg);
    IntPoly cell_poly = cell_polynomial(m, type_a_gt_degrees(cfg), cfg.dim_p());
    bool cells_ok = cell_poly == formula;
    checks["cellsMatchFormula"] = cells_ok;
    ok = ok && cells_ok;

    Int orbits = orbit_count(cfg);
    bool orbits_ok = orbits == formula.eval(1);
    checks["orbitsMatchEuler"] = orbits_ok;
    ok = ok && orbits_ok;

    OracleOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    Int counted = count_subreps_fq(reduce_mod(m, q), cfg.dim_p(), q, opts).total;
    bool oracle_ok = counted == formula.eval(q);
    checks["oracleMatchesFormula"] = oracle_ok;
    ok = ok && oracle_ok;

    json out;
    out["ok"] = ok;
    out["checks"] = checks;
    out["poincare"] = coeffs_json(formula);
    std::cout << out.dump() << "\n";
    return ok ? 0 : 1;
}

void print_error(const char* kind, const std::string& message) {
    json err;
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of quiver Grassmannians of P+I type"};
    app.require_subcommand(1);

    // poincare
    auto* poincare = app.add_subcommand("poincare", "closed-formula Poincare polynomial");
    ConfigInput poincare_input;
    poincare_input.attach(poincare);
    std::string poincare_conv = "euler", poincare_format = "json";
    poincare->add_option("--exponent-convention", poincare_conv, "euler|printed");
    poincare->add_option("--format", poincare_format, "json|text");

    // genocchi
    auto* genocchi = app.add_subcommand("genocchi", "normalized median Genocchi numbers");
    int genocchi_n = 0;
    std::string genocchi_method = "all", genocchi_format = "json";
    genocchi->add_option("--n", genocchi_n, "index n of h_n")->required();
    genocchi->add_option("--method", genocchi_method, "sets|formula|motzkin|poincare|orbits|all");
    genocchi->add_option("--format", genocchi_format, "json|csv");

    // cells
    auto* cells = app.add_subcommand("cells", "torus fixed points and attracting cells");
    ConfigInput cells_cfg;
    cells_cfg.attach(cells);
    std::string cells_rep, cells_e, cells_degrees, cells_format = "json";
    bool cells_list = false;
    cells->add_option("--rep", cells_rep, "representation JSON file");
    cells->add_option("--e", cells_e, "dimension vector e1,e2,...");
    cells->add_option("--degree-convention", cells_degrees, "gt|gt-reversed|generic");
    cells->add_option("--format", cells_format, "json|csv");
    cells->add_flag("--list", cells_list, "emit one line per fixed point");

    // orbits
    auto* orbits = app.add_subcommand("orbits", "G-orbit labels of Gr_{dim P}(P+I)");
    ConfigInput orbits_input;
    orbits_input.attach(orbits);
    std::string orbits_format = "json";
    bool orbits_list = false;
    orbits->add_flag("--list", orbits_list, "stream labels as JSON lines");
    orbits->add_option("--format", orbits_format, "json|csv");

    // oracle count
    auto* oracle = app.add_subcommand("oracle", "finite-field brute force");
    oracle->require_subcommand(1);
    auto* oracle_count = oracle->add_subcommand("count", "count F_q-points of Gr_e(M)");
    ConfigInput oracle_input;
    oracle_input.attach(oracle_count);
    std::string oracle_rep, oracle_e;
    std::int64_t oracle_q = 2;
    bool oracle_per_stratum = false;
    long long oracle_budget = 100000000;
    int oracle_threads = (int)std::max(1u, std::thread::hardware_concurrency());
    oracle_count->add_option("--rep", oracle_rep, "representation JSON file");
    oracle_count->add_option("--e", oracle_e, "dimension vector e1,e2,...");
    oracle_count->add_option("--q", oracle_q, "prime field order")->required();
    oracle_count->add_flag("--per-stratum", oracle_per_stratum, "break counts down by stratum");
    oracle_count->add_option("--budget", oracle_budget, "max candidate subspace tuples");
    oracle_count->add_option("--threads", oracle_threads, "worker threads");

    // emit-rep
    auto* emit = app.add_subcommand("emit-rep", "print the P+I representation as JSON");
    ConfigInput emit_input;
    emit_input.attach(emit);

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check formula, cells, orbits, oracle");
    ConfigInput verify_input;
    verify_input.attach(verify);
    std::int64_t verify_q = 2;
    long long verify_budget = 100000000;
    int verify_threads = (int)std::max(1u, std::thread::hardware_concurrency());
    verify->add_option("--q", verify_q, "prime used for the oracle check");
    verify->add_option("--budget", verify_budget, "oracle budget");
    verify->add_option("--threads", verify_threads, "oracle worker threads");

    // tangent
    auto* tangent = app.add_subcommand("tangent", "tangent dimension of a subrepresentation");
    std::string tangent_rep, tangent_sub;
    tangent->add_option("--rep", tangent_rep, "representation JSON file")->required();
    tangent->add_option("--sub", tangent_sub, "subspace JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    try {
        if (*poincare) return run_poincare(poincare_input, poincare_conv, poincare_format);
        if (*genocchi) return run_genocchi(genocchi_n, genocchi_method, genocchi_format);
        if (*cells)
            return run_cells(cells_input(cells_cfg, cells_rep, cells_e, cells_degrees),
                             cells_list, cells_format);
        if (*orbits) return run_orbits(orbits_input, orbits_list, orbits_format);
        if (*oracle_count)
            return run_oracle_count(oracle_input, oracle_rep, oracle_e, oracle_q,
                                    oracle_per_stratum, oracle_budget, oracle_threads);
        if (*emit) return run_emit_rep(emit_input);
        if (*verify) return run_verify(verify_input, verify_q, verify_budget, verify_threads);
        if (*tangent) return run_tangent(tangent_rep, tangent_sub);
        print_error("usage", "no subcommand given");
        return 2;
    } catch (const resource_error& e) {
        print_error("resource", e.what());
        return 4;
    } catch (const input_error& e) {
        print_error("input", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
}
