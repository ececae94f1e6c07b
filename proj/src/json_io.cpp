#include "spolya/json_io.hpp"

#include "spolya/error.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spolya {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rational as_rational(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError(std::string(what) + " must be an integer or a rational string");
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

ExponentVector as_exponent(const Json& j, std::size_t dim, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    ExponentVector e;
    for (const auto& x : j) e.push_back(as_int(x, what));
    if (dim != static_cast<std::size_t>(-1) && e.size() != dim)
        throw DimensionMismatch(std::string(what) + " has length " + std::to_string(e.size()) + ", expected " +
                                std::to_string(dim));
    return e;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json sorted(const Json& j) {
    if (j.is_object()) {
        std::map<std::string, Json> m;
        for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = sorted(it.value());
        Json out = Json::object();
        for (auto& [k, v] : m) out[k] = std::move(v);
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& x : j) out.push_back(sorted(x));
        return out;
    }
    return j;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // The message already carries "line L, column C".
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        throw InputError(origin + ": " + (pos == std::string::npos ? msg : msg.substr(pos)));
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string input_hash(const Json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(sorted(j).dump())));
    return buf;
}

Json to_json(const SparsePoly& f, const std::vector<std::string>& vars) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto e = f.exponent(i);
        terms.push_back({{"exp", std::vector<Exponent>(e.begin(), e.end())}, {"coef", rational_json(f.coef(i))}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

NamedPoly poly_from_json(const Json& j) {
    NamedPoly out;
    const Json& vars = field(j, "vars");
    if (!vars.is_array() || vars.empty()) throw InputError("'vars' must be a nonempty array of names");
    for (const auto& v : vars) out.vars.push_back(as_string(v, "variable name"));
    std::set<std::string> unique(out.vars.begin(), out.vars.end());
    if (unique.size() != out.vars.size()) throw InputError("duplicate variable name");
    if (j.contains("expr")) {
        out.poly = parse_polynomial(as_string(j.at("expr"), "'expr'"), out.vars);
        return out;
    }
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    std::vector<std::pair<ExponentVector, Rational>> t;
    for (const auto& term : terms)
        t.emplace_back(as_exponent(field(term, "exp"), out.vars.size(), "'exp'"), as_rational(field(term, "coef"), "'coef'"));
    out.poly = SparsePoly::from_terms(out.vars.size(), t);
    return out;
}

Json to_json(const PointSet& a) { return {{"points", a.points}}; }

PointSet point_set_from_json(const Json& j) {
    const Json& pts = field(j, "points");
    if (!pts.is_array() || pts.empty()) throw InputError("'points' must be a nonempty array");
    std::vector<Point> out;
    std::size_t dim = static_cast<std::size_t>(-1);
    for (const auto& p : pts) {
        out.push_back(as_exponent(p, dim, "point"));
        dim = out.back().size();
    }
    return make_point_set(dim, out);
}

Json to_json(const LatticePolytope& p) {
    Json facets = Json::array();
    for (const auto& f : p.facets) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
    Json eqs = Json::array();
    for (const auto& f : p.equations) eqs.push_back({{"normal", f.normal}, {"offset", f.offset}});
    return {{"dim", p.dim}, {"ambient_dim", p.ambient_dim}, {"vertices", p.vertices}, {"facets", facets},
            {"equations", eqs}};
}

Json to_json(const CoxContext& ctx) {
    Json j = {{"polytope", to_json(ctx.polytope)},
              {"primitive_collections", Json::array()},
              {"irrelevant_generators", ctx.irrelevant}};
    for (const auto& c : ctx.primitive) {
        Json one = Json::array();
        for (std::size_t i : c) one.push_back(i + 1);
        j["primitive_collections"].push_back(one);
    }
    if (ctx.decomposition) {
        const auto& d = *ctx.decomposition;
        Json factors = Json::array();
        for (const auto& f : d.factors) {
            Json rays = Json::array();
            for (std::size_t i : f.rays) rays.push_back(i + 1);
            factors.push_back({{"rays", rays}, {"vertices", f.vertices}});
        }
        j["simplex_product"] = {{"factors", factors}, {"base_vertex", d.base_vertex}, {"L", d.L}, {"w", d.w}, {"v", d.v}};
    } else {
        j["simplex_product"] = nullptr;
        j["violated"] = ctx.violated;
    }
    j["v"] = ctx.v.empty() ? Json(nullptr) : Json(ctx.v);
    return j;
}

Json to_json(const Certificate& c, const std::vector<std::string>& vars, const std::string& hash) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input_hash"] = hash;
    j["kind"] = c.kind;
    j["status"] = to_string(c.status);
    j["mode"] = to_string(c.mode);
    if (c.kind.rfind("cox_", 0) == 0) {
        j["variant"] = c.kind.substr(4);
        j["v"] = c.v;
    }
    std::vector<std::string> mvars = vars;
    if (!c.multipliers.empty() && c.multipliers[0].dim() != vars.size())
        mvars = default_variable_names(c.multipliers[0].dim(), "x");
    if (c.multipliers.size() == 1) j["multiplier"] = to_json(c.multipliers[0], mvars);
    Json ms = Json::array();
    for (const auto& g : c.multipliers) ms.push_back(to_json(g, mvars));
    j["multipliers"] = ms;
    j["N"] = c.N();
    j["exponents"] = c.exponents;
    j["product_terms"] = c.product_terms;
    Json off = Json::array();
    for (const auto& o : c.offenders) off.push_back({{"exp", o.exponent}, {"coef", rational_json(o.coefficient)}});
    j["offenders"] = off;
    if (c.witness) {
        Json pt = Json::array();
        for (const auto& x : c.witness->point) pt.push_back(rational_json(x));
        Json active = Json::array();
        for (std::size_t i : c.witness->face_active) active.push_back(i + 1);
        j["witness"] = {{"face_active", active}, {"point", pt}, {"value", rational_json(c.witness->value)}};
    } else {
        j["witness"] = nullptr;
    }
    j["support_A"] = c.support_A ? Json(c.support_A->points) : Json(nullptr);
    j["k"] = c.k;
    j["newton_guard"] = c.newton_guard;
    if (c.product) j["product"] = to_json(*c.product, mvars);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    if (as_int(field(j, "schema"), "'schema'") != kSchemaVersion) throw InputError("unsupported certificate schema");
    Certificate c;
    c.kind = as_string(field(j, "kind"), "'kind'");
    c.status = parse_status(as_string(field(j, "status"), "'status'"));
    c.mode = parse_mode(as_string(field(j, "mode"), "'mode'"));
    for (const auto& m : field(j, "multipliers")) c.multipliers.push_back(poly_from_json(m).poly);
    for (const auto& e : field(j, "exponents")) c.exponents.push_back(static_cast<unsigned long>(as_int(e, "exponent")));
    c.product_terms = static_cast<std::size_t>(as_int(field(j, "product_terms"), "'product_terms'"));
    for (const auto& o : field(j, "offenders"))
        c.offenders.push_back({as_exponent(field(o, "exp"), static_cast<std::size_t>(-1), "'exp'"),
                               as_rational(field(o, "coef"), "'coef'")});
    const Json& w = field(j, "witness");
    if (!w.is_null()) {
        Witness wit;
        for (const auto& a : field(w, "face_active")) wit.face_active.push_back(static_cast<std::size_t>(as_int(a, "face index") - 1));
        for (const auto& x : field(w, "point")) wit.point.push_back(as_rational(x, "witness point"));
        wit.value = as_rational(field(w, "value"), "witness value");
        c.witness = wit;
    }
    const Json& a = field(j, "support_A");
    if (!a.is_null()) c.support_A = point_set_from_json(Json{{"points", a}});
    c.k = static_cast<unsigned>(as_int(field(j, "k"), "'k'"));
    c.newton_guard = field(j, "newton_guard").get<bool>();
    if (j.contains("v")) c.v = as_exponent(j.at("v"), static_cast<std::size_t>(-1), "'v'");
    if (j.contains("product")) c.product = poly_from_json(j.at("product")).poly;
    return c;
}

GraphInput graph_from_json(const Json& j) {
    GraphInput out;
    out.graph.vertex_count = static_cast<std::size_t>(as_int(field(j, "vertices"), "'vertices'"));
    for (const auto& e : field(j, "internal_edges")) {
        if (!e.is_array() || e.size() != 3) throw InputError("internal edge must be [u, v, mass]");
        out.graph.edges.push_back({static_cast<std::size_t>(as_int(e[0], "edge endpoint")),
                                   static_cast<std::size_t>(as_int(e[1], "edge endpoint")),
                                   MassTag::parse(as_string(e[2], "mass"))});
    }
    if (j.contains("external_legs")) {
        for (const auto& l : j.at("external_legs")) {
            std::string p = as_string(field(l, "momentum"), "'momentum'");
            if (p.size() < 2 || p[0] != 'p' || p.find_first_not_of("0123456789", 1) != std::string::npos)
                throw InputError("momentum label must look like p1, p2, ...: '" + p + "'");
            out.graph.legs.push_back({static_cast<std::size_t>(as_int(field(l, "vertex"), "leg vertex")),
                                      static_cast<std::size_t>(std::stoul(p.substr(1)))});
        }
    }
    if (j.contains("kinematics")) {
        const Json& k = j.at("kinematics");
        if (k.contains("momentum_conservation")) out.kinematics.momentum_conservation = k.at("momentum_conservation").get<bool>();
        if (k.contains("k")) {
            for (auto it = k.at("k").begin(); it != k.at("k").end(); ++it) {
                std::string key = it.key();
                auto comma = key.find(',');
                if (comma == std::string::npos) throw InputError("kinematic key must be 'i,j': '" + key + "'");
                std::size_t i = 0, jj = 0;
                try {
                    i = std::stoul(key.substr(0, comma));
                    jj = std::stoul(key.substr(comma + 1));
                } catch (const std::exception&) {
                    throw InputError("kinematic key must be 'i,j': '" + key + "'");
                }
                out.kinematics.set(i, jj, parse_linear_form(as_string(it.value(), "kinematic invariant")));
            }
        }
    }
    out.graph.validate();
    return out;
}

Json to_json(const ParamPoly& f, const std::vector<std::string>& vars) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
    return {{"vars", vars}, {"terms", terms}, {"text", to_string(f, vars)}};
}

Assignment assignment_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("parameter values must be a JSON object");
    Assignment a;
    for (auto it = j.begin(); it != j.end(); ++it) a[it.key()] = as_rational(it.value(), "parameter value");
    return a;
}

Json to_json(const Assignment& a) {
    Json j = Json::object();
    for (const auto& [k, v] : a) j[k] = to_string(v);
    return j;
}

}  // namespace spolya
