#include "spolya/polya.hpp"

#include "spolya/error.hpp"

#include <random>
#include <stdexcept>

namespace spolya {

std::string to_string(PolyaMode m) { return m == PolyaMode::nonneg ? "nonneg" : "strict_support"; }

std::string to_string(CertificateStatus s) {
    switch (s) {
    case CertificateStatus::Certified: return "Certified";
    case CertificateStatus::RefutedNewton: return "RefutedNewton";
    case CertificateStatus::RefutedWitness: return "RefutedWitness";
    case CertificateStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

PolyaMode parse_mode(const std::string& s) {
    if (s == "nonneg") return PolyaMode::nonneg;
    if (s == "strict_support") return PolyaMode::strict_support;
    throw InputError("unknown mode '" + s + "'");
}

CertificateStatus parse_status(const std::string& s) {
    for (auto st : {CertificateStatus::Certified, CertificateStatus::RefutedNewton, CertificateStatus::RefutedWitness,
                    CertificateStatus::Unknown})
        if (to_string(st) == s) return st;
    throw InputError("unknown certificate status '" + s + "'");
}

namespace {

std::vector<Offender> missing_offenders(const std::vector<ExponentVector>& pts) {
    std::vector<Offender> out;
    for (const auto& p : pts) out.push_back({p, Rational(0)});
    return out;
}

// Power search g^N f for N = 0..n_max. In strict mode the required support is
// start + N * summand and every point of it must carry a positive coefficient.
Certificate run_search(const SparsePoly& f, const SparsePoly& g, const SearchConfig& cfg,
                       const std::vector<ExponentVector>& start, const std::vector<ExponentVector>& summand) {
    Certificate cert;
    cert.mode = cfg.mode;
    cert.multipliers = {g};
    const bool strict = cfg.mode == PolyaMode::strict_support;

    PowerSequence seq(f, g);
    std::optional<MinkowskiSequence> req;
    if (strict) req.emplace(start, summand);

    for (unsigned long n = 0;; ++n) {
        if (n > 0) {
            seq.advance();
            if (req) req->advance();
        }
        if (cfg.observer) cfg.observer(n, seq);
        bool pass = seq.all_nonnegative();
        std::vector<ExponentVector> missing;
        if (pass && strict) {
            missing = req->missing_from(seq);
            pass = missing.empty();
        }
        if (pass) {
            cert.status = CertificateStatus::Certified;
            cert.exponents = {n};
            cert.product_terms = seq.size();
            if (cfg.emit_product) cert.product = seq.current();
            return cert;
        }
        if (n >= cfg.n_max) {
            cert.status = CertificateStatus::Unknown;
            cert.exponents = {n};
            cert.product_terms = seq.size();
            cert.offenders = seq.negative_terms();
            if (strict) {
                if (missing.empty()) missing = req->missing_from(seq);
                auto extra = missing_offenders(missing);
                cert.offenders.insert(cert.offenders.end(), extra.begin(), extra.end());
            }
            if (cfg.emit_product) cert.product = seq.current();
            return cert;
        }
    }
}

PointSet resolve_support(const SparsePoly& f, const SearchConfig& cfg) {
    PointSet a = cfg.support_A ? *cfg.support_A : support_points(f);
    if (a.dim != f.dim()) throw DimensionMismatch("support set dimension differs from the polynomial");
    if (a.points.empty()) throw std::invalid_argument("support set is empty");
    if (cfg.k == 0) throw std::invalid_argument("k must be positive");
    PointSet ka = minkowski_power(a, cfg.k);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!ka.contains(f.exponent_vector(i)))
            throw std::invalid_argument("support of f is not contained in k * A");
    return a;
}

}  // namespace

Certificate sparse_polya_certify(const SparsePoly& f, const SearchConfig& cfg) {
    if (f.is_zero()) throw std::invalid_argument("cannot certify the zero polynomial");
    PointSet a = resolve_support(f, cfg);
    PointSet ka = minkowski_power(a, cfg.k);
    SparsePoly g = indicator_polynomial(f.dim(), a.points);

    Certificate cert;
    cert.kind = "sparse";
    cert.mode = cfg.mode;
    cert.support_A = a;
    cert.k = cfg.k;
    cert.multipliers = {g};

    LatticePolytope newt = newton_polytope(f);
    LatticePolytope target = convex_hull(ka);
    if (newt.vertices != target.vertices) {
        cert.status = CertificateStatus::RefutedNewton;
        cert.exponents = {0};
        for (const auto& v : target.vertices)
            if (!f.find(v)) cert.offenders.push_back({v, Rational(0)});
        return cert;
    }
    for (std::size_t v = 0; v < newt.vertices.size(); ++v) {
        Rational c = f.coefficient(newt.vertices[v]);
        if (sgn(c) <= 0) {
            cert.status = CertificateStatus::RefutedWitness;
            cert.exponents = {0};
            cert.offenders.push_back({newt.vertices[v], c});
            cert.witness = Witness{newt.facets_through(v), RatVector(f.dim(), Rational(1)), c};
            return cert;
        }
    }

    Certificate run = run_search(f, g, cfg, ka.points, a.points);
    run.kind = cert.kind;
    run.support_A = std::move(cert.support_A);
    run.k = cfg.k;
    return run;
}

Certificate classical_polya_certify(const SparsePoly& f, SearchConfig cfg) {
    if (f.is_zero()) throw std::invalid_argument("cannot certify the zero polynomial");
    if (!f.is_homogeneous() || !f.has_nonnegative_exponents())
        throw std::invalid_argument("classical certificate needs a homogeneous polynomial");
    const std::size_t n = f.dim();
    std::vector<Point> units;
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = 1;
        units.push_back(e);
    }
    Exponent deg = *f.total_degree();
    if (deg <= 0) throw std::invalid_argument("classical certificate needs positive degree");
    cfg.support_A = make_point_set(n, units);
    cfg.k = static_cast<unsigned>(deg);
    Certificate cert = sparse_polya_certify(f, cfg);
    cert.kind = "classical";
    return cert;
}

Certificate certify_with_multiplier(const SparsePoly& f, const SparsePoly& g, const SearchConfig& cfg) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("polynomial and multiplier must be nonzero");
    if (f.dim() != g.dim()) throw DimensionMismatch("multiplier dimension differs from the polynomial");
    for (const auto& c : g.coefficients())
        if (sgn(c) < 0) throw std::invalid_argument("multiplier has a negative coefficient");
    Certificate cert = run_search(f, g, cfg, f.support(), g.support());
    cert.kind = "custom";
    cert.newton_guard = false;
    return cert;
}

std::vector<RatVector> sample_points(std::size_t dim, unsigned count, std::uint64_t seed) {
    std::vector<RatVector> pts;
    if (count == 0) return pts;
    pts.emplace_back(dim, Rational(1));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> k(1, 100);
    while (pts.size() < count) {
        RatVector p;
        for (std::size_t i = 0; i < dim; ++i) {
            Rational q(k(rng), 10);
            q.canonicalize();
            p.push_back(q);
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<FaceSample> face_positivity_diagnostics(const SparsePoly& f, unsigned samples_per_face,
                                                    std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("diagnostics of the zero polynomial");
    LatticePolytope newt = newton_polytope(f);
    auto points = sample_points(f.dim(), samples_per_face, seed);
    std::vector<FaceSample> out;
    for (const auto& face : enumerate_faces(newt)) {
        SparsePoly trunc = truncate_if(f, [&](std::span<const Exponent> e) {
            return face_contains(newt, face.active, Point(e.begin(), e.end()));
        });
        for (const auto& p : points) out.push_back({face, p, evaluate(trunc, p)});
    }
    return out;
}

bool verify_certificate(const SparsePoly& f, const Certificate& cert) {
    if (cert.status != CertificateStatus::Certified) throw std::invalid_argument("certificate is not Certified");
    if (cert.multipliers.size() != cert.exponents.size() || cert.multipliers.empty())
        throw std::invalid_argument("certificate multipliers and exponents do not match");
    if (f.is_zero()) return false;

    for (const auto& g : cert.multipliers) {
        if (g.dim() != f.dim()) return false;
        for (const auto& c : g.coefficients())
            if (sgn(c) < 0) return false;
    }

    if (cert.kind == "sparse" || cert.kind == "classical") {
        if (!cert.support_A || cert.multipliers.size() != 1) return false;
        if (!(cert.multipliers[0] == indicator_polynomial(f.dim(), cert.support_A->points))) return false;
    }
    if (cert.newton_guard) {
        if (!cert.support_A) return false;
        PointSet ka = minkowski_power(*cert.support_A, cert.k);
        if (!hull_equals(newton_polytope(f), ka)) return false;
    }

    SparsePoly product = f;
    for (std::size_t i = 0; i < cert.multipliers.size(); ++i)
        product = mul(product, pow(cert.multipliers[i], cert.exponents[i]));
    if (product.size() != cert.product_terms) return false;
    for (const auto& c : product.coefficients())
        if (sgn(c) < 0) return false;

    if (cert.mode == PolyaMode::strict_support) {
        PointSet required;
        if (cert.support_A) {
            required = minkowski_power(*cert.support_A, cert.k + static_cast<unsigned>(cert.exponents[0]));
        } else {
            required = support_points(f);
            for (std::size_t i = 0; i < cert.multipliers.size(); ++i)
                for (unsigned long j = 0; j < cert.exponents[i]; ++j)
                    required = minkowski_sum(required, support_points(cert.multipliers[i]));
        }
        for (const auto& pt : required.points)
            if (!product.find(pt)) return false;
    }
    return true;
}

}  // namespace spolya
