#include "cli.hpp"

#include "spolya/cox.hpp"
#include "spolya/error.hpp"
#include "spolya/feynman.hpp"
#include "spolya/json_io.hpp"
#include "spolya/polya.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

namespace spolya::cli {

namespace {

int status_code(CertificateStatus s) {
    switch (s) {
    case CertificateStatus::Certified: return kSuccess;
    case CertificateStatus::RefutedNewton:
    case CertificateStatus::RefutedWitness: return kRefuted;
    case CertificateStatus::Unknown: return kUnknown;
    }
    return kUnknown;
}

// Refutations dominate undecided outcomes.
int combine(int a, int b) {
    auto rank = [](int c) { return c == kRefuted ? 2 : c == kUnknown ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

std::string summary(const std::string& label, const Certificate& c) {
    std::ostringstream s;
    s << label << ": " << to_string(c.status) << " kind=" << c.kind << " exponents=";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) s << (i ? "," : "") << c.exponents[i];
    s << " terms=" << c.product_terms << " offenders=" << c.offenders.size();
    return s.str();
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) out << text;
    else write_text_file(path, text);
}

RatVector parse_rational_list(const std::string& text) {
    RatVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        out.push_back(parse_rational(item));
    }
    if (out.empty()) throw InputError("empty list '" + text + "'");
    return out;
}

ExponentVector parse_int_list(const std::string& text) {
    ExponentVector out;
    for (const auto& q : parse_rational_list(text)) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError("expected integers in '" + text + "'");
        out.push_back(q.get_num().get_si());
    }
    return out;
}

NamedPoly dehomogenized(NamedPoly p, int index) {
    if (index == 0) return p;
    if (index < 1 || static_cast<std::size_t>(index) > p.vars.size())
        throw InputError("--dehomogenize index out of range");
    p.poly = dehomogenize(p.poly, static_cast<std::size_t>(index - 1));
    p.vars.erase(p.vars.begin() + (index - 1));
    return p;
}

struct CertifyArgs {
    std::vector<std::string> inputs;
    std::string mode = "sparse";
    std::string multiplier;
    std::string support;
    unsigned k = 1;
    unsigned long nmax = 64;
    bool strict = false;
    bool emit_product = false;
    std::string out;
    std::string out_dir;
    unsigned jobs = 1;
};

Certificate certify_one(const NamedPoly& p, const CertifyArgs& a) {
    SearchConfig cfg;
    cfg.n_max = a.nmax;
    cfg.mode = a.strict ? PolyaMode::strict_support : PolyaMode::nonneg;
    cfg.emit_product = a.emit_product;
    if (a.mode == "sparse") {
        if (!a.support.empty()) {
            cfg.support_A = point_set_from_json(read_json_file(a.support));
            cfg.k = a.k;
        }
        return sparse_polya_certify(p.poly, cfg);
    }
    if (a.mode == "classical") return classical_polya_certify(p.poly, cfg);
    if (a.multiplier.empty()) throw InputError("--mode custom needs --multiplier");
    NamedPoly g = poly_from_json(read_json_file(a.multiplier));
    if (g.vars.size() != p.vars.size()) throw DimensionMismatch("multiplier has a different number of variables");
    return certify_with_multiplier(p.poly, g.poly, cfg);
}

struct JobResult {
    int code = kSuccess;
    std::string line;
    std::string json;
};

JobResult certify_job(const std::string& input, const CertifyArgs& a, bool batch) {
    JobResult r;
    try {
        Json j = read_json_file(input);
        NamedPoly p = poly_from_json(j);
        Certificate c = certify_one(p, a);
        r.code = status_code(c.status);
        r.line = summary(input, c);
        r.json = to_json(c, p.vars, input_hash(j)).dump(2) + "\n";
        if (batch && !a.out_dir.empty()) {
            std::filesystem::path out = std::filesystem::path(a.out_dir) / std::filesystem::path(input).stem();
            write_text_file(out.string() + ".cert.json", r.json);
        }
    } catch (const SimplexProductRequired& e) {
        r.code = kSimplexProductRequired;
        r.line = input + ": " + e.what();
    } catch (const std::exception& e) {
        r.code = kInputError;
        r.line = input + ": error: " + e.what();
    }
    return r;
}

int run_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.mode != "sparse" && a.mode != "classical" && a.mode != "custom")
        throw InputError("--mode must be sparse, classical or custom");
    const bool batch = a.inputs.size() > 1;
    if (batch && !a.out.empty()) throw InputError("use --out-dir with several inputs");
    if (batch && !a.out_dir.empty()) std::filesystem::create_directories(a.out_dir);
    std::vector<JobResult> results(a.inputs.size());
    if (a.jobs <= 1 || !batch) {
        for (std::size_t i = 0; i < a.inputs.size(); ++i) results[i] = certify_job(a.inputs[i], a, batch);
    } else {
        std::size_t next = 0;
        while (next < a.inputs.size()) {
            std::vector<std::future<JobResult>> running;
            std::size_t start = next;
            for (; next < a.inputs.size() && running.size() < a.jobs; ++next)
                running.push_back(std::async(std::launch::async, certify_job, a.inputs[next], std::cref(a), batch));
            for (std::size_t i = 0; i < running.size(); ++i) results[start + i] = running[i].get();
        }
    }
    int code = kSuccess;
    for (const auto& r : results) {
        err << r.line << "\n";
        code = std::max(code, r.code);
    }
    if (!batch && results[0].code <= kUnknown) {
        if (a.out.empty()) out << results[0].json;
        else write_text_file(a.out, results[0].json);
    }
    return code;
}

struct CoxArgs {
    std::string input;
    std::string variant = "irrelevant";
    unsigned long nmax = 64;
    int dehomogenize = 0;
    std::string v;
    bool allow_non_product = false;
    bool emit_product = false;
    std::string out;
};

int run_cox(const CoxArgs& a, std::ostream& out, std::ostream& err) {
    Json j = read_json_file(a.input);
    NamedPoly p = dehomogenized(poly_from_json(j), a.dehomogenize);
    LatticePolytope newt = newton_polytope(p.poly);
    CoxContext ctx = a.v.empty() ? make_cox_context(newt) : make_cox_context(newt, parse_int_list(a.v));
    CoxOptions opts;
    opts.search.n_max = a.nmax;
    opts.search.emit_product = a.emit_product;
    opts.allow_non_product = a.allow_non_product;
    Certificate c = cox_certify(p.poly, ctx, parse_variant(a.variant), opts);
    Json cert = to_json(c, p.vars, input_hash(j));
    cert["dehomogenize"] = a.dehomogenize;
    emit(cert, a.out, out);
    err << summary(a.input, c) << "\n";
    return status_code(c.status);
}

struct PolytopeArgs {
    std::string input;
    int dehomogenize = 0;
    std::string obj;
    std::string out;
};

std::string obj_dump(const LatticePolytope& p) {
    if (p.ambient_dim > 3) throw InputError("--emit-obj needs ambient dimension at most 3");
    std::ostringstream s;
    for (const auto& v : p.vertices) {
        s << "v";
        for (std::size_t i = 0; i < 3; ++i) s << " " << (i < v.size() ? v[i] : 0);
        s << "\n";
    }
    for (const auto& f : enumerate_faces(p))
        if (f.vertices.size() == 2) s << "l " << f.vertices[0] + 1 << " " << f.vertices[1] + 1 << "\n";
    return s.str();
}

int run_polytope(const PolytopeArgs& a, std::ostream& out, std::ostream&) {
    Json j = read_json_file(a.input);
    LatticePolytope p;
    if (j.contains("points")) {
        if (a.dehomogenize) throw InputError("--dehomogenize applies to polynomial input");
        p = convex_hull(point_set_from_json(j));
    } else {
        p = newton_polytope(dehomogenized(poly_from_json(j), a.dehomogenize).poly);
    }
    Json report = {{"polytope", to_json(p)}};
    if (p.is_full_dimensional()) report["cox"] = to_json(make_cox_context(p));
    emit(report, a.out, out);
    if (!a.obj.empty()) write_text_file(a.obj, obj_dump(p));
    return kSuccess;
}

struct SymanzikArgs {
    std::string input;
    std::string emit;
    bool euclidean = false;
    bool certify = false;
    bool classical = false;
    bool strict = false;
    std::string params;
    unsigned long nmax = 64;
    bool convergence = false;
    std::string nu;
    std::string dim;
    std::string out;
};

int run_symanzik(const SymanzikArgs& a, std::ostream& out, std::ostream& err) {
    GraphInput in = graph_from_json(read_json_file(a.input));
    const auto& g = in.graph;
    std::vector<std::string> vars = default_variable_names(g.edges.size(), "x");
    Json report = Json::object();
    report["loops"] = g.loops();
    int code = kSuccess;

    if (!a.emit.empty()) {
        if (a.emit == "U") {
            report["U"] = to_json(first_symanzik(g), vars);
            report["U"]["text"] = to_string(first_symanzik(g), vars);
        } else if (a.emit == "F") {
            report["F"] = to_json(second_symanzik(g, in.kinematics), vars);
        } else if (a.emit == "support") {
            GenericSupport s = generic_support(g, in.kinematics);
            Json pts = Json::array();
            for (std::size_t i = 0; i < s.points.points.size(); ++i)
                pts.push_back({{"exp", s.points.points[i]},
                               {"in_A1", s.flags[i].in_a1},
                               {"in_A2", s.flags[i].in_a2},
                               {"involves_mass", s.flags[i].involves_mass}});
            report["support"] = pts;
        } else {
            throw InputError("--emit must be U, F or support");
        }
    }
    if (a.euclidean) {
        EuclideanRegion r = euclidean_region_nonempty(g, in.kinematics);
        Json e = {{"nonempty", r.nonempty}, {"trace", r.trace}};
        if (r.nonempty) {
            e["witness"] = to_json(r.witness);
        } else {
            Json parts = Json::array();
            for (std::size_t i = 0; i < r.contradiction.size(); ++i)
                parts.push_back({{"exp", r.contradiction[i]}, {"multiplier", to_string(r.multipliers[i])}});
            e["contradiction"] = parts;
        }
        report["euclidean"] = e;
        err << a.input << ": Euclidean region " << (r.nonempty ? "nonempty" : "empty") << "\n";
        code = combine(code, r.nonempty ? kSuccess : kRefuted);
    }
    if (a.certify || a.convergence) {
        if (a.params.empty()) throw InputError("--certify and --convergence need --params");
        Assignment values = assignment_from_json(read_json_file(a.params));
        SearchConfig cfg;
        cfg.n_max = a.nmax;
        cfg.mode = a.strict ? PolyaMode::strict_support : PolyaMode::nonneg;
        if (a.certify) {
            SparsePoly f = instantiate(second_symanzik(g, in.kinematics), values);
            if (f.is_zero()) throw InputError("second Symanzik polynomial vanishes at these values");
            Certificate c;
            if (a.classical) {
                std::vector<ExponentVector> units(f.dim(), ExponentVector(f.dim(), 0));
                for (std::size_t i = 0; i < units.size(); ++i) units[i][i] = 1;
                c = certify_with_multiplier(f, indicator_polynomial(f.dim(), units), cfg);
            } else {
                c = sparse_polya_certify(f, cfg);
            }
            report["certificate"] = to_json(c, vars, input_hash(to_json(f, vars)));
            report["F_instance"] = to_json(f, vars);
            err << summary(a.input, c) << "\n";
            code = combine(code, status_code(c.status));
        }
        if (a.convergence) {
            if (a.nu.empty() || a.dim.empty()) throw InputError("--convergence needs --nu and --dim");
            ConvergenceReport r = convergence_check(g, in.kinematics, values, parse_rational_list(a.nu),
                                                    parse_rational(a.dim), cfg);
            Json c = {{"u_exponent", to_string(r.u_exponent)},
                      {"f_exponent", to_string(r.f_exponent)},
                      {"condition_i", to_string(r.condition_i.status)},
                      {"condition_i_N", r.condition_i.N()},
                      {"condition_ii", r.condition_ii ? Json(*r.condition_ii) : Json(nullptr)},
                      {"verdict", r.note}};
            report["convergence"] = c;
            err << a.input << ": " << r.note << "\n";
            int cc = r.convergent() ? kSuccess
                     : status_code(r.condition_i.status) == kRefuted ? kRefuted
                                                                       : kUnknown;
            code = combine(code, cc);
        }
    }
    emit(report, a.out, out);
    return code;
}

struct VerifyArgs {
    std::string cert;
    std::string input;
};

int run_verify(const VerifyArgs& a, std::ostream&, std::ostream& err) {
    Json cj = read_json_file(a.cert);
    Json ij = read_json_file(a.input);
    Certificate c = certificate_from_json(cj);
    if (cj.value("input_hash", std::string()) != input_hash(ij)) {
        err << a.cert << ": input hash mismatch\n";
        return kRefuted;
    }
    if (c.status != CertificateStatus::Certified) {
        err << a.cert << ": status " << to_string(c.status) << " is not a certificate\n";
        return kRefuted;
    }
    NamedPoly p = poly_from_json(ij);
    bool ok = false;
    if (c.kind.rfind("cox_", 0) == 0) {
        p = dehomogenized(p, cj.value("dehomogenize", 0));
        CoxContext ctx = make_cox_context(newton_polytope(p.poly), c.v);
        ok = verify_cox_certificate(p.poly, ctx, c);
    } else {
        ok = verify_certificate(p.poly, c);
    }
    err << a.cert << ": " << (ok ? "valid" : "INVALID") << "\n";
    return ok ? kSuccess : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Polya-type copositivity certificates", "spolya"};
    app.require_subcommand(1);

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Search a Polya certificate for a polynomial");
    certify->add_option("inputs", ca.inputs, "Polynomial JSON files")->required();
    certify->add_option("--mode", ca.mode, "sparse, classical or custom")->capture_default_str();
    certify->add_option("--multiplier", ca.multiplier, "Multiplier polynomial JSON (custom mode)");
    certify->add_option("--support", ca.support, "Point-set JSON for A (sparse mode)");
    certify->add_option("--k", ca.k, "Dilation k with supp(f) in k*A")->capture_default_str();
    certify->add_option("--nmax", ca.nmax, "Largest exponent to try")->capture_default_str();
    certify->add_flag("--strict-support", ca.strict, "Require every point of (k+N)A to be present");
    certify->add_flag("--emit-product", ca.emit_product, "Embed the final product polynomial");
    certify->add_option("--out", ca.out, "Certificate output file (single input)");
    certify->add_option("--out-dir", ca.out_dir, "Directory for batch certificates");
    certify->add_option("--jobs", ca.jobs, "Parallel jobs in batch mode")->capture_default_str();

    CoxArgs xa;
    auto* cox = app.add_subcommand("cox", "Cox-coordinate certificate");
    cox->add_option("input", xa.input, "Polynomial JSON file")->required();
    cox->add_option("--variant", xa.variant, "primitive or irrelevant")->capture_default_str();
    cox->add_option("--nmax", xa.nmax, "Largest exponent to try")->capture_default_str();
    cox->add_option("--dehomogenize", xa.dehomogenize, "Set variable i (1-based) to 1 first");
    cox->add_option("--v", xa.v, "Expert: comma-separated positive kernel vector");
    cox->add_flag("--allow-non-product", xa.allow_non_product, "Expert: search even without a simplex product");
    cox->add_flag("--emit-product", xa.emit_product, "Embed the final product polynomial");
    cox->add_option("--out", xa.out, "Certificate output file");

    PolytopeArgs pa;
    auto* polytope = app.add_subcommand("polytope", "Newton polytope, normal fan and simplex-product data");
    polytope->add_option("input", pa.input, "Polynomial or point-set JSON file")->required();
    polytope->add_option("--dehomogenize", pa.dehomogenize, "Set variable i (1-based) to 1 first");
    polytope->add_option("--emit-obj", pa.obj, "Write a vertex/edge OBJ file");
    polytope->add_option("--out", pa.out, "Report output file");

    SymanzikArgs sa;
    auto* symanzik = app.add_subcommand("symanzik", "Symanzik polynomials and Feynman-graph checks");
    symanzik->add_option("input", sa.input, "Graph JSON file")->required();
    symanzik->add_option("--emit", sa.emit, "U, F or support");
    symanzik->add_flag("--check-euclidean", sa.euclidean, "Decide whether the Euclidean region is nonempty");
    symanzik->add_flag("--certify", sa.certify, "Certify F at the values in --params");
    symanzik->add_flag("--classical", sa.classical, "Use x1 + ... + xn as multiplier with --certify");
    symanzik->add_flag("--strict-support", sa.strict, "Require every point of (1+N)A to be present");
    symanzik->add_option("--params", sa.params, "JSON object of parameter values");
    symanzik->add_option("--nmax", sa.nmax, "Largest exponent to try")->capture_default_str();
    symanzik->add_flag("--convergence", sa.convergence, "Check the convergence criterion");
    symanzik->add_option("--nu", sa.nu, "Comma-separated edge exponents");
    symanzik->add_option("--dim", sa.dim, "Space-time dimension D");
    symanzik->add_option("--out", sa.out, "Report output file");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Recheck a certificate from scratch");
    verify->add_option("--cert", va.cert, "Certificate JSON")->required();
    verify->add_option("--input", va.input, "Polynomial JSON the certificate was issued for")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*certify) return run_certify(ca, out, err);
        if (*cox) return run_cox(xa, out, err);
        if (*polytope) return run_polytope(pa, out, err);
        if (*symanzik) return run_symanzik(sa, out, err);
        return run_verify(va, out, err);
    } catch (const SimplexProductRequired& e) {
        err << "error: " << e.what() << "\n";
        return kSimplexProductRequired;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace spolya::cli
