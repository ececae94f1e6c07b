#include "fixtures.hpp"
#include "oracles.hpp"

#include "spolya/error.hpp"
#include "spolya/polya.hpp"

#include <doctest.h>

#include <random>

using namespace spolya;
using fixtures::vars;

namespace {

SparsePoly P(const std::string& s, std::size_t n = 4) { return parse_polynomial(s, vars(n)); }

// Sampled nonnegativity of f on the positive orthant; a certificate must never be contradicted.
void check_positive_samples(const SparsePoly& f, unsigned count) {
    for (const auto& p : sample_points(f.dim(), count, 7)) CHECK(sgn(evaluate(f, p)) > 0);
}

}  // namespace

TEST_CASE("sparse certificate of the prism cubic") {
    SparsePoly f = fixtures::prism_cubic();
    SearchConfig cfg;
    cfg.mode = PolyaMode::strict_support;
    Certificate c = sparse_polya_certify(f, cfg);
    CHECK(c.status == CertificateStatus::Certified);
    CHECK(c.N() == 14);
    CHECK(c.product_terms == 4096);
    CHECK(verify_certificate(f, c));
    check_positive_samples(f, 50);

    SearchConfig loose;
    Certificate d = sparse_polya_certify(f, loose);
    CHECK(d.status == CertificateStatus::Certified);
    CHECK(d.N() <= 14);
}

TEST_CASE("observer sees every step") {
    SparsePoly f = fixtures::prism_cubic();
    std::vector<unsigned long> seen;
    SearchConfig cfg;
    cfg.n_max = 5;
    cfg.observer = [&](unsigned long n, const PowerSequence& s) {
        seen.push_back(n);
        CHECK(s.step() == n);
    };
    Certificate c = sparse_polya_certify(f, cfg);
    CHECK(c.status == CertificateStatus::Unknown);
    CHECK(seen == std::vector<unsigned long>{0, 1, 2, 3, 4, 5});
    REQUIRE(!c.offenders.empty());
    for (const auto& o : c.offenders) CHECK(sgn(o.coefficient) < 0);
}

TEST_CASE("classical certificate needs the full simplex") {
    Certificate c = classical_polya_certify(fixtures::prism_cubic());
    CHECK(c.status == CertificateStatus::RefutedNewton);
    REQUIRE(!c.offenders.empty());
    bool cube = false;
    for (const auto& o : c.offenders) cube = cube || (o.exponent == ExponentVector{3, 0, 0, 0} && o.coefficient == 0);
    CHECK(cube);

    SparsePoly h = fixtures::prism_cubic_h();
    Certificate d = classical_polya_certify(h);
    CHECK(d.status == CertificateStatus::Certified);
    CHECK(d.N() == 12);
    CHECK(verify_certificate(h, d));

    // Independent oracle: (t1+...+t4)^11 h still has a negative term.
    SparsePoly s = P("t1 + t2 + t3 + t4");
    SparsePoly p11 = mul(pow(s, 11), h);
    bool negative = false;
    for (const auto& q : p11.coefficients()) negative = negative || sgn(q) < 0;
    CHECK(negative);

    CHECK_THROWS_AS(classical_polya_certify(fixtures::prism_dehom()), std::invalid_argument);
}

TEST_CASE("vertex coefficient precheck") {
    SparsePoly f = P("t1^2 - t1*t2 - t2^2", 2);
    Certificate c = sparse_polya_certify(f);
    CHECK(c.status == CertificateStatus::RefutedWitness);
    REQUIRE(c.witness);
    CHECK(sgn(c.witness->value) < 0);
    CHECK(c.offenders.front().exponent == ExponentVector{0, 2});
}

TEST_CASE("hexagon: own support certifies, Minkowski summands do not") {
    SparsePoly f = fixtures::hexagon_poly();
    CHECK(mul(fixtures::hexagon_f1(), fixtures::hexagon_f2()) == f);

    SearchConfig cfg;
    cfg.mode = PolyaMode::strict_support;
    Certificate c = sparse_polya_certify(f, cfg);
    CHECK(c.status == CertificateStatus::Certified);
    CHECK(c.N() <= 3);
    CHECK(verify_certificate(f, c));

    SearchConfig few;
    few.n_max = 4;
    for (unsigned long n = 1; n <= 4; ++n) {
        SparsePoly p1 = mul(pow(fixtures::hexagon_g1(), n), f);
        ExponentVector e1{1, static_cast<Exponent>(2 * n + 4), 1};
        CHECK(p1.coefficient(e1) == -2);
        SparsePoly p2 = mul(pow(fixtures::hexagon_g2(), n), f);
        ExponentVector e2{static_cast<Exponent>(2 * n + 3), 0, static_cast<Exponent>(2 * n + 3)};
        CHECK(p2.coefficient(e2) == -2);
    }
    Certificate g1 = certify_with_multiplier(f, fixtures::hexagon_g1(), few);
    CHECK(g1.status == CertificateStatus::Unknown);
    bool found = false;
    for (const auto& o : g1.offenders) found = found || (o.exponent == ExponentVector{1, 12, 1} && o.coefficient == -2);
    CHECK(found);
    Certificate g2 = certify_with_multiplier(f, fixtures::hexagon_g2(), few);
    CHECK(g2.status == CertificateStatus::Unknown);
    found = false;
    for (const auto& o : g2.offenders) found = found || (o.exponent == ExponentVector{11, 0, 11} && o.coefficient == -2);
    CHECK(found);
}

TEST_CASE("multiplier validation") {
    SparsePoly f = P("t1 + t2", 2);
    CHECK_THROWS_AS(certify_with_multiplier(f, P("t1 - t2", 2)), std::invalid_argument);
    CHECK_THROWS_AS(certify_with_multiplier(f, P("t1 + t2 + t3", 3)), DimensionMismatch);
    CHECK_THROWS_AS(sparse_polya_certify(SparsePoly(2)), std::invalid_argument);
    SearchConfig cfg;
    cfg.support_A = make_point_set(2, {{1, 0}});
    CHECK_THROWS_AS(sparse_polya_certify(f, cfg), std::invalid_argument);
}

TEST_CASE("custom multiplier with strict support") {
    SparsePoly f = P("t1^2 - t1*t2 + t2^2", 2);
    SearchConfig cfg;
    cfg.mode = PolyaMode::strict_support;
    Certificate c = certify_with_multiplier(f, P("t1 + t2", 2), cfg);
    CHECK(c.status == CertificateStatus::Certified);
    // t1^3 + t2^3 is nonnegative but misses t1^2*t2 and t1*t2^2.
    CHECK(c.N() == 3);
    CHECK(verify_certificate(f, c));
    Certificate loose = certify_with_multiplier(f, P("t1 + t2", 2));
    CHECK(loose.N() == 1);
    CHECK(verify_certificate(f, loose));
}

TEST_CASE("verification rejects tampering") {
    SparsePoly f = fixtures::prism_cubic();
    SearchConfig cfg;
    cfg.mode = PolyaMode::strict_support;
    Certificate c = sparse_polya_certify(f, cfg);
    REQUIRE(c.status == CertificateStatus::Certified);

    Certificate lower = c;
    lower.exponents = {c.N() - 1};
    CHECK_FALSE(verify_certificate(f, lower));

    Certificate cut = c;
    const SparsePoly& g = c.multipliers[0];
    std::vector<std::pair<ExponentVector, Rational>> terms;
    for (std::size_t i = 1; i < g.size(); ++i) terms.emplace_back(g.exponent_vector(i), g.coef(i));
    cut.multipliers = {SparsePoly::from_terms(g.dim(), terms)};
    CHECK_FALSE(verify_certificate(f, cut));

    Certificate count = c;
    count.product_terms += 1;
    CHECK_FALSE(verify_certificate(f, count));

    CHECK_FALSE(verify_certificate(f + P("-t4^3 * 1/100"), c));

    Certificate unknown = c;
    unknown.status = CertificateStatus::Unknown;
    CHECK_THROWS_AS(verify_certificate(f, unknown), std::invalid_argument);
}

TEST_CASE("certified random polynomials are positive at sampled points") {
    std::mt19937_64 rng(11);
    int certified = 0;
    for (int trial = 0; trial < 40; ++trial) {
        SparsePoly f = fixtures::random_poly(rng, 2, 5, 3);
        if (f.is_zero()) continue;
        SearchConfig cfg;
        cfg.n_max = 8;
        cfg.mode = PolyaMode::strict_support;
        Certificate c = sparse_polya_certify(f, cfg);
        if (c.status != CertificateStatus::Certified) continue;
        ++certified;
        CHECK(verify_certificate(f, c));
        check_positive_samples(f, 20);
    }
    CHECK(certified > 0);
}

TEST_CASE("face diagnostics") {
    auto d = face_positivity_diagnostics(P("t1 - t2", 2), 3);
    // The vertex t2 alone is negative at every point.
    bool vertex_neg = false;
    for (const auto& s : d) vertex_neg = vertex_neg || (s.face.vertices.size() == 1 && sgn(s.value) < 0);
    CHECK(vertex_neg);

    auto sq = face_positivity_diagnostics(pow(P("t1 - t2", 2), 2), 2);
    bool zero_at_ones = false;
    for (const auto& s : sq)
        if (s.point == RatVector{Rational(1), Rational(1)} && s.face.active.empty())
            zero_at_ones = s.value == 0;
    CHECK(zero_at_ones);

    auto pts = sample_points(3, 5, 42);
    REQUIRE(pts.size() == 5);
    CHECK(pts[0] == RatVector(3, Rational(1)));
    CHECK(pts == sample_points(3, 5, 42));
    for (const auto& p : pts)
        for (const auto& q : p) CHECK((q > 0 && q <= 10));
}
