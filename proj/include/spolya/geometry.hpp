#pragma once

#include "spolya/linalg.hpp"
#include "spolya/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spolya {

using Point = ExponentVector;

// Deduplicated, lexicographically sorted lattice points of a fixed dimension.
struct PointSet {
    std::size_t dim = 0;
    std::vector<Point> points;

    bool contains(const Point& p) const;
};

PointSet make_point_set(std::size_t dim, std::vector<Point> points);
PointSet support_points(const SparsePoly& f);
PointSet minkowski_sum(const PointSet& a, const PointSet& b);
// k * A for k >= 1, built as (k-1) * A + A.
PointSet minkowski_power(const PointSet& a, unsigned k);

// normal . x + offset >= 0 (facets) or == 0 (equations).
struct Halfspace {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    std::int64_t value(const Point& x) const;
    Rational value(const RatVector& x) const;
    bool operator==(const Halfspace&) const = default;
};

struct LatticePolytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<Point> vertices;               // lexicographic
    std::vector<Halfspace> facets;             // primitive inner normals
    std::vector<Halfspace> equations;          // affine hull
    std::vector<std::vector<bool>> incidence;  // vertex x facet

    std::size_t facet_count() const { return facets.size(); }
    bool is_full_dimensional() const { return dim == ambient_dim; }
    bool contains(const Point& x) const;
    // Rows are the facet normals, so the matrix is F^T.
    IntMatrix normal_rows() const;
    ExponentVector offsets() const;
    std::vector<std::size_t> facets_through(std::size_t vertex) const;
};

LatticePolytope convex_hull(const PointSet& a);
LatticePolytope newton_polytope(const SparsePoly& f);
// Permutes the facets into the given normal order. Throws if the normals differ.
LatticePolytope reorder_facets(const LatticePolytope& p, const std::vector<std::vector<std::int64_t>>& normals);
bool hull_equals(const LatticePolytope& p, const PointSet& a);

struct Face {
    std::vector<std::size_t> active;    // facets containing the face
    std::vector<std::size_t> vertices;  // vertex indices of the face
};

// The face minimizing w over P.
Face face_of(const LatticePolytope& p, const RatVector& w);
bool face_contains(const LatticePolytope& p, const std::vector<std::size_t>& active, const Point& a);
// All nonempty faces; vertices first, the polytope itself last.
std::vector<Face> enumerate_faces(const LatticePolytope& p);

bool rays_form_cone(const LatticePolytope& p, const std::vector<std::size_t>& rays);
std::vector<std::vector<std::size_t>> primitive_collections(const LatticePolytope& p);
// Per vertex, the 0/1 exponent of the product of variables of facets missing it.
std::vector<ExponentVector> irrelevant_generators(const LatticePolytope& p);

// Unimodular chart of the affine lattice spanned by a point set.
struct AffineChart {
    Point origin;
    std::vector<std::vector<Integer>> basis;  // d lattice vectors of length n

    std::size_t dim() const { return basis.size(); }
    Point to_chart(const Point& x) const;
    Point from_chart(const Point& y) const;
};

AffineChart affine_chart(const PointSet& a);

struct SimplexFactor {
    std::vector<std::size_t> rays;  // primitive collection C_j
    std::vector<Point> vertices;    // the factor simplex through the base vertex
};

struct SimplexProductDecomposition {
    std::vector<SimplexFactor> factors;
    Point base_vertex;
    IntMatrix L;
    ExponentVector w;
    ExponentVector v;
};

struct SimplexProductResult {
    std::optional<SimplexProductDecomposition> decomposition;
    std::string violated;  // empty on success
};

SimplexProductResult detect_simplex_product(const LatticePolytope& p);
// Positive kernel vector of F from a decomposition. Throws if inconsistent with p.
ExponentVector kernel_positive_vector(const LatticePolytope& p, const SimplexProductDecomposition& d);
// Integer basis of ker(F) for the facet normals of p.
std::vector<std::vector<Integer>> fan_kernel_basis(const LatticePolytope& p);

struct RationalPolytope {
    std::size_t ambient_dim = 0;
    std::vector<RatVector> vertices;
    std::vector<std::vector<std::int64_t>> facet_normals;
    RatVector facet_offsets;
    std::vector<std::vector<std::int64_t>> equation_normals;
    RatVector equation_offsets;
};

RationalPolytope to_rational(const LatticePolytope& q);
RationalPolytope scale_polytope(const LatticePolytope& q, const Rational& lambda);
RationalPolytope translate(const RationalPolytope& q, const RatVector& shift);
// Every point of P strictly inside every facet of Q and on Q's affine hull.
bool relint_contains(const std::vector<RatVector>& p, const RationalPolytope& q);

}  // namespace spolya
