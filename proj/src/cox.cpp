#include "spolya/cox.hpp"

#include "spolya/error.hpp"

#include <map>
#include <stdexcept>

namespace spolya {

std::string to_string(CoxVariant v) { return v == CoxVariant::primitive ? "primitive" : "irrelevant"; }

CoxVariant parse_variant(const std::string& s) {
    if (s == "primitive") return CoxVariant::primitive;
    if (s == "irrelevant") return CoxVariant::irrelevant;
    throw InputError("unknown Cox variant '" + s + "'");
}

namespace {

CoxContext base_context(const LatticePolytope& p) {
    if (!p.is_full_dimensional()) throw std::invalid_argument("Cox coordinates need a full-dimensional polytope");
    CoxContext ctx;
    ctx.polytope = p;
    ctx.primitive = primitive_collections(p);
    ctx.irrelevant = irrelevant_generators(p);
    return ctx;
}

bool in_kernel(const LatticePolytope& p, const ExponentVector& v) {
    if (v.size() != p.facets.size()) return false;
    for (Exponent x : v)
        if (x <= 0) return false;
    for (std::size_t j = 0; j < p.ambient_dim; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += Integer(static_cast<long>(v[i])) * static_cast<long>(p.facets[i].normal[j]);
        if (s != 0) return false;
    }
    return true;
}

bool nonnegative(const SparsePoly& p) {
    for (const auto& c : p.coefficients())
        if (sgn(c) < 0) return false;
    return true;
}

SparsePoly product_of(const SparsePoly& h, const std::vector<SparsePoly>& gs, const std::vector<unsigned long>& ns) {
    SparsePoly out = h;
    for (std::size_t j = 0; j < gs.size(); ++j)
        if (ns[j] > 0) out = mul(out, pow(gs[j], ns[j]));
    return out;
}

}  // namespace

CoxContext make_cox_context(const LatticePolytope& p) {
    CoxContext ctx = base_context(p);
    SimplexProductResult r = detect_simplex_product(p);
    if (r.decomposition) {
        ctx.decomposition = r.decomposition;
        ctx.v = r.decomposition->v;
    } else {
        ctx.violated = r.violated;
    }
    return ctx;
}

CoxContext make_cox_context(const LatticePolytope& p, const ExponentVector& v) {
    CoxContext ctx = make_cox_context(p);
    if (!in_kernel(p, v)) throw std::invalid_argument("v must be a positive integer vector with F v = 0");
    ctx.v = v;
    return ctx;
}

SparsePoly cox_homogenize(const SparsePoly& f, const CoxContext& ctx) {
    if (f.dim() != ctx.polytope.ambient_dim) throw DimensionMismatch("polynomial dimension differs from the polytope");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!ctx.polytope.contains(f.exponent_vector(i)))
            throw std::invalid_argument("support of f is not contained in the polytope");
    return substitute_monomial_map(f, ctx.polytope.normal_rows(), ctx.b());
}

SparsePoly cox_substitute(const SparsePoly& f, const CoxContext& ctx) {
    if (ctx.v.size() != ctx.rays()) throw std::invalid_argument("context has no kernel vector v");
    SparsePoly fc = cox_homogenize(f, ctx);
    IntMatrix diag(ctx.rays(), std::vector<std::int64_t>(ctx.rays(), 0));
    for (std::size_t i = 0; i < ctx.rays(); ++i) diag[i][i] = ctx.v[i];
    return substitute_monomial_map(fc, diag, ExponentVector(ctx.rays(), 0));
}

bool cox_truncation_check(const SparsePoly& f, const CoxContext& ctx, const std::vector<std::size_t>& active,
                          const std::vector<RatVector>& points) {
    const LatticePolytope& p = ctx.polytope;
    bool is_face = false;
    for (const auto& face : enumerate_faces(p)) is_face = is_face || face.active == active;
    if (!is_face) throw std::invalid_argument("active set does not describe a face");

    SparsePoly fc = cox_homogenize(f, ctx);
    SparsePoly trunc = truncate_if(f, [&](std::span<const Exponent> e) {
        return face_contains(p, active, Point(e.begin(), e.end()));
    });
    ExponentVector b = ctx.b();
    for (const auto& x : points) {
        if (x.size() != ctx.rays()) throw DimensionMismatch("sample point has the wrong length");
        RatVector xi = x;
        for (std::size_t i : active) xi[i] = 0;
        Rational lhs = evaluate_nonnegative(fc, xi);

        RatVector phi(p.ambient_dim, Rational(1));
        Rational xb = 1;
        for (std::size_t i = 0; i < ctx.rays(); ++i) {
            for (std::size_t j = 0; j < p.ambient_dim; ++j) {
                std::int64_t e = p.facets[i].normal[j];
                for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) {
                    if (e > 0) phi[j] *= x[i];
                    else phi[j] /= x[i];
                }
            }
            for (std::int64_t k = 0; k < (b[i] < 0 ? -b[i] : b[i]); ++k) {
                if (b[i] > 0) xb *= x[i];
                else xb /= x[i];
            }
        }
        Rational rhs = trunc.is_zero() ? Rational(0) : xb * evaluate(trunc, phi);
        if (lhs != rhs) return false;
    }
    return true;
}

SparsePoly primitive_multiplier(const CoxContext& ctx, std::size_t collection) {
    std::vector<ExponentVector> pts;
    for (std::size_t i : ctx.primitive.at(collection)) {
        ExponentVector e(ctx.rays(), 0);
        e[i] = 1;
        pts.push_back(e);
    }
    return indicator_polynomial(ctx.rays(), pts);
}

SparsePoly irrelevant_multiplier(const CoxContext& ctx) { return indicator_polynomial(ctx.rays(), ctx.irrelevant); }

Certificate cox_certify(const SparsePoly& f, const CoxContext& ctx, CoxVariant variant, const CoxOptions& opts) {
    if (!ctx.decomposition && !opts.allow_non_product) throw SimplexProductRequired(ctx.violated);
    if (f.is_zero()) throw std::invalid_argument("cannot certify the zero polynomial");

    Certificate cert;
    cert.kind = "cox_" + to_string(variant);
    cert.v = ctx.v;

    LatticePolytope newt = newton_polytope(f);
    if (newt.vertices != ctx.polytope.vertices) {
        cert.status = CertificateStatus::RefutedNewton;
        for (const auto& v : ctx.polytope.vertices)
            if (!f.find(v)) cert.offenders.push_back({v, Rational(0)});
        return cert;
    }

    SparsePoly h = cox_substitute(f, ctx);
    SearchConfig search = opts.search;
    search.mode = PolyaMode::nonneg;

    auto finish = [&](Certificate c) {
        c.kind = cert.kind;
        c.v = ctx.v;
        c.newton_guard = true;
        return c;
    };

    if (variant == CoxVariant::irrelevant) return finish(certify_with_multiplier(h, irrelevant_multiplier(ctx), search));

    std::vector<SparsePoly> gs;
    SparsePoly all = SparsePoly::constant(ctx.rays(), Rational(1));
    for (std::size_t j = 0; j < ctx.primitive.size(); ++j) {
        gs.push_back(primitive_multiplier(ctx, j));
        all = mul(all, gs.back());
    }
    Certificate diag = finish(certify_with_multiplier(h, all, search));
    diag.multipliers = gs;
    diag.exponents.assign(gs.size(), diag.N());
    if (diag.status != CertificateStatus::Certified) return diag;

    // Lower one exponent at a time while the product stays nonnegative.
    std::vector<unsigned long> ns = diag.exponents;
    for (std::size_t j = 0; j < ns.size(); ++j) {
        for (unsigned long m = 0; m < ns[j]; ++m) {
            std::vector<unsigned long> trial = ns;
            trial[j] = m;
            if (nonnegative(product_of(h, gs, trial))) {
                ns[j] = m;
                break;
            }
        }
    }
    SparsePoly prod = product_of(h, gs, ns);
    diag.exponents = ns;
    diag.product_terms = prod.size();
    if (opts.search.emit_product) diag.product = prod;
    return diag;
}

bool verify_cox_certificate(const SparsePoly& f, const CoxContext& ctx, const Certificate& cert) {
    if (cert.status != CertificateStatus::Certified) throw std::invalid_argument("certificate is not Certified");
    if (cert.kind != "cox_primitive" && cert.kind != "cox_irrelevant")
        throw std::invalid_argument("not a Cox certificate");
    if (cert.multipliers.size() != cert.exponents.size()) return false;
    if (f.is_zero() || newton_polytope(f).vertices != ctx.polytope.vertices) return false;
    if (!in_kernel(ctx.polytope, cert.v)) return false;

    std::vector<SparsePoly> expected;
    if (cert.kind == "cox_irrelevant") {
        expected.push_back(irrelevant_multiplier(ctx));
    } else {
        for (std::size_t j = 0; j < ctx.primitive.size(); ++j) expected.push_back(primitive_multiplier(ctx, j));
    }
    if (expected.size() != cert.multipliers.size()) return false;
    for (std::size_t j = 0; j < expected.size(); ++j)
        if (!(expected[j] == cert.multipliers[j])) return false;

    CoxContext local = ctx;
    local.v = cert.v;
    SparsePoly prod = product_of(cox_substitute(f, local), cert.multipliers, cert.exponents);
    return prod.size() == cert.product_terms && nonnegative(prod);
}

std::optional<Integer> homogeneity_degree(const SparsePoly& p, const std::vector<Integer>& weight) {
    if (weight.size() != p.dim()) throw DimensionMismatch("weight length differs from the polynomial");
    std::optional<Integer> deg;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Integer d = 0;
        auto e = p.exponent(i);
        for (std::size_t j = 0; j < p.dim(); ++j) d += weight[j] * static_cast<long>(e[j]);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::vector<std::pair<std::vector<Integer>, Integer>> multihomogeneity_degrees(const SparsePoly& f_cox,
                                                                               const CoxContext& ctx) {
    if (f_cox.is_zero()) throw std::invalid_argument("degrees of the zero polynomial");
    if (f_cox.dim() != ctx.rays()) throw DimensionMismatch("polynomial is not in Cox variables");
    ExponentVector b = ctx.b();
    std::vector<std::pair<std::vector<Integer>, Integer>> out;
    for (const auto& k : fan_kernel_basis(ctx.polytope)) {
        auto d = homogeneity_degree(f_cox, k);
        Integer kb = 0;
        for (std::size_t i = 0; i < b.size(); ++i) kb += k[i] * static_cast<long>(b[i]);
        if (!d || *d != kb) throw Error("Cox homogenization has non-constant degree along a kernel vector");
        out.emplace_back(k, *d);
    }
    return out;
}

bool irrelevant_membership_check(const SparsePoly& f_cox, const CoxContext& ctx) {
    if (f_cox.dim() != ctx.rays()) throw DimensionMismatch("polynomial is not in Cox variables");
    for (std::size_t i = 0; i < f_cox.size(); ++i) {
        auto e = f_cox.exponent(i);
        bool divisible = false;
        for (const auto& g : ctx.irrelevant) {
            bool ok = true;
            for (std::size_t j = 0; j < g.size() && ok; ++j) ok = e[j] >= g[j];
            if (ok) {
                divisible = true;
                break;
            }
        }
        if (!divisible) return false;
    }
    return true;
}

}  // namespace spolya
