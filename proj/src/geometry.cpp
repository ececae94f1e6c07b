#include "spolya/geometry.hpp"

#include "spolya/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spolya {

namespace {

using i128 = __int128;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i128 bareiss_det(std::vector<std::vector<i128>> a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    i128 sign = 1, prev = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i][i] == 0) {
            std::size_t r = i + 1;
            while (r < k && a[r][i] == 0) ++r;
            if (r == k) return 0;
            std::swap(a[r], a[i]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r) {
            for (std::size_t c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    return sign * a[k - 1][k - 1];
}

Integer integer_det(const std::vector<std::vector<std::int64_t>>& rows) {
    RatMatrix m = to_rational(rows);
    Rational d = determinant(m);
    return d.get_num();
}

// Generalized cross product: a vector orthogonal to the d-1 rows in Z^d.
std::vector<std::int64_t> orthogonal_vector(const std::vector<std::vector<std::int64_t>>& rows, std::size_t d) {
    std::int64_t bound = 0;
    for (const auto& r : rows)
        for (auto x : r) bound = std::max(bound, x < 0 ? -x : x);
    const bool small = bound < (1 << 12) && d <= 7;
    std::vector<std::int64_t> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (small) {
            std::vector<std::vector<i128>> minor;
            for (const auto& r : rows) {
                std::vector<i128> m;
                for (std::size_t c = 0; c < d; ++c)
                    if (c != j) m.push_back(r[c]);
                minor.push_back(std::move(m));
            }
            i128 v = bareiss_det(std::move(minor));
            out[j] = static_cast<std::int64_t>(j % 2 ? -v : v);
        } else {
            std::vector<std::vector<std::int64_t>> minor;
            for (const auto& r : rows) {
                std::vector<std::int64_t> m;
                for (std::size_t c = 0; c < d; ++c)
                    if (c != j) m.push_back(r[c]);
                minor.push_back(std::move(m));
            }
            Integer v = minor.empty() ? Integer(1) : integer_det(minor);
            if (!v.fits_slong_p()) throw Error("facet normal exceeds 64-bit range");
            out[j] = (j % 2 ? -1 : 1) * v.get_si();
        }
    }
    std::int64_t g = 0;
    for (auto x : out) g = gcd64(g, x);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

std::int64_t dot64(const std::vector<std::int64_t>& a, const Point& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void require_full_dimensional(const LatticePolytope& p, const char* what) {
    if (!p.is_full_dimensional())
        throw Error(std::string(what) + " requires a full-dimensional polytope (dim " + std::to_string(p.dim) +
                    " in ambient " + std::to_string(p.ambient_dim) + ")");
}

std::string index_set_string(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace

bool PointSet::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p); }

PointSet make_point_set(std::size_t dim, std::vector<Point> points) {
    for (const auto& p : points)
        if (p.size() != dim) throw DimensionMismatch("point length does not match dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {dim, std::move(points)};
}

PointSet support_points(const SparsePoly& f) { return make_point_set(f.dim(), f.support()); }

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.dim != b.dim) throw DimensionMismatch("Minkowski sum of point sets of different dimension");
    std::set<Point> out;
    for (const auto& x : a.points)
        for (const auto& y : b.points) {
            Point s(x);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
            out.insert(std::move(s));
        }
    return {a.dim, std::vector<Point>(out.begin(), out.end())};
}

PointSet minkowski_power(const PointSet& a, unsigned k) {
    if (k == 0) throw std::invalid_argument("Minkowski power needs k >= 1");
    if (a.points.empty()) throw std::invalid_argument("Minkowski power of an empty set");
    PointSet out = a;
    for (unsigned i = 1; i < k; ++i) out = minkowski_sum(out, a);
    return out;
}

std::int64_t Halfspace::value(const Point& x) const { return dot64(normal, x) + offset; }

Rational Halfspace::value(const RatVector& x) const {
    Rational s = offset;
    for (std::size_t i = 0; i < normal.size(); ++i) s += x[i] * static_cast<long>(normal[i]);
    return s;
}

bool LatticePolytope::contains(const Point& x) const {
    for (const auto& e : equations)
        if (e.value(x) != 0) return false;
    for (const auto& f : facets)
        if (f.value(x) < 0) return false;
    return true;
}

IntMatrix LatticePolytope::normal_rows() const {
    IntMatrix m;
    for (const auto& f : facets) m.push_back(f.normal);
    return m;
}

ExponentVector LatticePolytope::offsets() const {
    ExponentVector b;
    for (const auto& f : facets) b.push_back(f.offset);
    return b;
}

std::vector<std::size_t> LatticePolytope::facets_through(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (incidence[vertex][i]) out.push_back(i);
    return out;
}

LatticePolytope convex_hull(const PointSet& a) {
    if (a.points.empty()) throw std::invalid_argument("convex hull of an empty point set");
    const std::size_t n = a.dim;
    const auto& pts = a.points;
    const Point& p0 = pts[0];

    LatticePolytope poly;
    poly.ambient_dim = n;

    RatMatrix diff;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        RatVector row;
        for (std::size_t i = 0; i < n; ++i) row.emplace_back(static_cast<long>(pts[k][i] - p0[i]));
        diff.push_back(std::move(row));
    }
    RatMatrix reduced = diff;
    std::vector<std::size_t> coords = rref(reduced);
    const std::size_t d = coords.size();
    poly.dim = d;

    for (const auto& e : integer_kernel_basis(diff.empty() ? RatMatrix{RatVector(n)} : diff, n)) {
        Halfspace h;
        for (const auto& x : e) h.normal.push_back(x.get_si());
        h.offset = -dot64(h.normal, p0);
        poly.equations.push_back(std::move(h));
    }

    if (d == 0) {
        poly.vertices = {p0};
        poly.incidence = {{}};
        return poly;
    }

    std::vector<std::vector<std::int64_t>> proj;
    for (const auto& p : pts) {
        std::vector<std::int64_t> y;
        for (auto c : coords) y.push_back(p[c]);
        proj.push_back(std::move(y));
    }

    std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> found;  // projected normal, offset
    for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t k = 1; k < idx.size(); ++k) {
            std::vector<std::int64_t> r(d);
            for (std::size_t i = 0; i < d; ++i) r[i] = proj[idx[k]][i] - proj[idx[0]][i];
            rows.push_back(std::move(r));
        }
        std::vector<std::int64_t> c = orthogonal_vector(rows, d);
        if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; })) return;
        std::vector<std::int64_t> neg(c);
        for (auto& x : neg) x = -x;
        std::int64_t level = std::inner_product(c.begin(), c.end(), proj[idx[0]].begin(), std::int64_t{0});
        if (seen.count({c, level}) || seen.count({neg, -level})) return;
        bool above = true, below = true;
        for (const auto& y : proj) {
            std::int64_t v = std::inner_product(c.begin(), c.end(), y.begin(), std::int64_t{0});
            if (v < level) above = false;
            if (v > level) below = false;
        }
        if (!above && !below) return;
        if (below) {
            c = neg;
            level = -level;
        }
        seen.insert({c, level});
        found.emplace_back(c, -level);
    });

    for (const auto& [c, off] : found) {
        Halfspace h;
        h.normal.assign(n, 0);
        for (std::size_t i = 0; i < d; ++i) h.normal[coords[i]] = c[i];
        h.offset = off;
        poly.facets.push_back(std::move(h));
    }
    std::sort(poly.facets.begin(), poly.facets.end(),
              [](const Halfspace& x, const Halfspace& y) { return x.normal < y.normal; });

    for (const auto& p : pts) {
        RatMatrix tight;
        std::vector<bool> row;
        for (const auto& f : poly.facets) {
            bool t = f.value(p) == 0;
            row.push_back(t);
            if (t) {
                RatVector r;
                for (auto c : coords) r.emplace_back(static_cast<long>(f.normal[c]));
                tight.push_back(std::move(r));
            }
        }
        if (!tight.empty() && rank(tight) == d) {
            poly.vertices.push_back(p);
            poly.incidence.push_back(std::move(row));
        }
    }
    return poly;
}

LatticePolytope newton_polytope(const SparsePoly& f) {
    if (f.is_zero()) throw Error("Newton polytope of the zero polynomial");
    return convex_hull(support_points(f));
}

LatticePolytope reorder_facets(const LatticePolytope& p, const std::vector<std::vector<std::int64_t>>& normals) {
    if (normals.size() != p.facets.size()) throw std::invalid_argument("facet order has the wrong length");
    std::vector<std::size_t> perm;
    for (const auto& nrm : normals) {
        auto it = std::find_if(p.facets.begin(), p.facets.end(), [&](const Halfspace& h) { return h.normal == nrm; });
        if (it == p.facets.end()) throw std::invalid_argument("facet order names a normal that is not a facet");
        perm.push_back(static_cast<std::size_t>(it - p.facets.begin()));
    }
    LatticePolytope q = p;
    for (std::size_t i = 0; i < perm.size(); ++i) q.facets[i] = p.facets[perm[i]];
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        for (std::size_t i = 0; i < perm.size(); ++i) q.incidence[v][i] = p.incidence[v][perm[i]];
    return q;
}

bool hull_equals(const LatticePolytope& p, const PointSet& a) {
    if (p.ambient_dim != a.dim) throw DimensionMismatch("hull comparison in different dimensions");
    if (a.points.empty()) return false;
    return convex_hull(a).vertices == p.vertices;
}

Face face_of(const LatticePolytope& p, const RatVector& w) {
    if (p.vertices.empty()) throw std::invalid_argument("face of an empty polytope");
    std::vector<Rational> vals;
    for (const auto& v : p.vertices) {
        Rational s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * static_cast<long>(v[i]);
        vals.push_back(s);
    }
    Rational best = *std::min_element(vals.begin(), vals.end());
    Face face;
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        bool all = true;
        for (std::size_t v = 0; v < p.vertices.size() && all; ++v)
            if (vals[v] == best && !p.incidence[v][i]) all = false;
        if (all) face.active.push_back(i);
    }
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (vals[v] == best) face.vertices.push_back(v);
    return face;
}

bool face_contains(const LatticePolytope& p, const std::vector<std::size_t>& active, const Point& a) {
    if (!p.contains(a)) return false;
    for (auto i : active)
        if (p.facets[i].value(a) != 0) return false;
    return true;
}

std::vector<Face> enumerate_faces(const LatticePolytope& p) {
    if (p.vertices.empty()) throw std::invalid_argument("faces of an empty polytope");
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        auto s = p.facets_through(v);
        if (sets.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        std::vector<std::vector<std::size_t>> known(sets.begin(), sets.end());
        for (const auto& a : frontier)
            for (const auto& b : known) {
                std::vector<std::size_t> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (sets.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    std::vector<Face> faces;
    for (const auto& s : sets) {
        Face f{s, {}};
        for (std::size_t v = 0; v < p.vertices.size(); ++v) {
            bool on = std::all_of(s.begin(), s.end(), [&](std::size_t i) { return p.incidence[v][i]; });
            if (on) f.vertices.push_back(v);
        }
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
        if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return faces;
}

bool rays_form_cone(const LatticePolytope& p, const std::vector<std::size_t>& rays) {
    for (auto i : rays)
        if (i >= p.facets.size()) throw std::out_of_range("ray index out of range");
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (std::all_of(rays.begin(), rays.end(), [&](std::size_t i) { return p.incidence[v][i]; })) return true;
    return false;
}

std::vector<std::vector<std::size_t>> primitive_collections(const LatticePolytope& p) {
    require_full_dimensional(p, "primitive collections");
    const std::size_t r = p.facets.size();
    if (r > 24) throw Error("too many facets for primitive collection enumeration");
    std::vector<std::uint32_t> cones;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (p.incidence[v][i]) m |= 1u << i;
        cones.push_back(m);
    }
    auto is_cone = [&](std::uint32_t s) {
        return std::any_of(cones.begin(), cones.end(), [&](std::uint32_t c) { return (c & s) == s; });
    };
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t s = 1; s < (1u << r); ++s) {
        if (is_cone(s)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < r && minimal; ++i)
            if ((s >> i & 1u) && !is_cone(s & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < r; ++i)
            if (s >> i & 1u) c.push_back(i);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExponentVector> irrelevant_generators(const LatticePolytope& p) {
    require_full_dimensional(p, "irrelevant generators");
    std::vector<ExponentVector> out;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        ExponentVector g(p.facets.size());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = p.incidence[v][i] ? 0 : 1;
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    }
    return out;
}

Point AffineChart::to_chart(const Point& x) const {
    const std::size_t n = origin.size(), d = basis.size();
    RatMatrix aug(n, RatVector(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
        aug[i][d] = static_cast<long>(x[i] - origin[i]);
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == d) throw std::invalid_argument("point is not on the affine hull");
    Point y(d);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        const Rational& q = aug[r][d];
        if (q.get_den() != 1) throw std::invalid_argument("point is not in the affine lattice");
        y[piv[r]] = q.get_num().get_si();
    }
    return y;
}

Point AffineChart::from_chart(const Point& y) const {
    Point x = origin;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += basis[j][i].get_si() * y[j];
    return x;
}

AffineChart affine_chart(const PointSet& a) {
    if (a.points.empty()) throw std::invalid_argument("affine chart of an empty point set");
    const std::size_t n = a.dim;
    AffineChart chart;
    chart.origin = a.points[0];
    // Column-reduce the difference vectors' orthogonal complement E by unimodular column
    // operations: E U = [H 0]; the trailing columns of U span the lattice ker(E) on Z^n.
    RatMatrix diff;
    for (std::size_t k = 1; k < a.points.size(); ++k) {
        RatVector row;
        for (std::size_t i = 0; i < n; ++i) row.emplace_back(static_cast<long>(a.points[k][i] - chart.origin[i]));
        diff.push_back(std::move(row));
    }
    auto E = integer_kernel_basis(diff.empty() ? RatMatrix{RatVector(n)} : diff, n);
    std::vector<std::vector<Integer>> U(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    auto col_op = [&](std::size_t p, std::size_t q, const Integer& a11, const Integer& a12, const Integer& a21,
                      const Integer& a22) {
        // (col_p, col_q) <- (a11 col_p + a21 col_q, a12 col_p + a22 col_q)
        for (auto& row : E) {
            Integer x = row[p], y = row[q];
            row[p] = a11 * x + a21 * y;
            row[q] = a12 * x + a22 * y;
        }
        for (auto& row : U) {
            Integer x = row[p], y = row[q];
            row[p] = a11 * x + a21 * y;
            row[q] = a12 * x + a22 * y;
        }
    };
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < E.size() && pivot < n; ++r) {
        for (std::size_t c = pivot + 1; c < n; ++c) {
            if (E[r][c] == 0) continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), E[r][pivot].get_mpz_t(), E[r][c].get_mpz_t());
            Integer x = E[r][pivot] / g, y = E[r][c] / g;
            col_op(pivot, c, s, -y, t, x);
        }
        if (E[r][pivot] != 0) ++pivot;
    }
    for (std::size_t c = pivot; c < n; ++c) {
        std::vector<Integer> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = U[i][c];
        chart.basis.push_back(std::move(b));
    }
    return chart;
}

std::vector<std::vector<Integer>> fan_kernel_basis(const LatticePolytope& p) {
    RatMatrix F(p.ambient_dim, RatVector(p.facets.size()));
    for (std::size_t i = 0; i < p.facets.size(); ++i)
        for (std::size_t j = 0; j < p.ambient_dim; ++j) F[j][i] = static_cast<long>(p.facets[i].normal[j]);
    return integer_kernel_basis(F, p.facets.size());
}

SimplexProductResult detect_simplex_product(const LatticePolytope& p) {
    require_full_dimensional(p, "simplex product detection");
    const std::size_t n = p.ambient_dim, r = p.facets.size();
    auto reject = [](std::string why) { return SimplexProductResult{std::nullopt, std::move(why)}; };
    if (n == 0) return reject("polytope is a point");

    auto pcs = primitive_collections(p);
    std::vector<int> owner(r, -1);
    for (std::size_t j = 0; j < pcs.size(); ++j)
        for (auto i : pcs[j]) {
            if (owner[i] >= 0)
                return reject("primitive collections " + index_set_string(pcs[owner[i]]) + " and " +
                              index_set_string(pcs[j]) + " are not disjoint");
            owner[i] = static_cast<int>(j);
        }
    for (std::size_t i = 0; i < r; ++i)
        if (owner[i] < 0) return reject("ray " + std::to_string(i + 1) + " lies in no primitive collection");

    std::size_t total = 0;
    RatMatrix all_rays;
    for (const auto& c : pcs) {
        RatMatrix rays;
        for (auto i : c) {
            RatVector row;
            for (auto x : p.facets[i].normal) row.emplace_back(static_cast<long>(x));
            rays.push_back(row);
            all_rays.push_back(std::move(row));
        }
        std::size_t rk = rank(rays);
        if (rk != c.size() - 1)
            return reject("collection " + index_set_string(c) + " has rays spanning dimension " + std::to_string(rk) +
                          ", expected " + std::to_string(c.size() - 1));
        total += rk;
    }
    if (total != n || rank(all_rays) != n) return reject("ray subspaces of the collections are not in direct sum");

    std::size_t expected = 1;
    for (const auto& c : pcs) expected *= c.size();
    if (p.vertices.size() != expected)
        return reject("vertex count " + std::to_string(p.vertices.size()) + " differs from " + std::to_string(expected));

    SimplexProductDecomposition dec;
    dec.base_vertex = p.vertices[0];
    dec.v.assign(r, 0);
    RatMatrix M_cols;  // columns of M as rows
    std::vector<std::size_t> block_of_col;
    for (std::size_t j = 0; j < pcs.size(); ++j) {
        std::vector<std::size_t> others;
        for (std::size_t l = 0; l < pcs.size(); ++l)
            if (l != j)
                for (auto i : pcs[l])
                    if (p.incidence[0][i]) others.push_back(i);
        SimplexFactor factor;
        factor.rays = pcs[j];
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (std::all_of(others.begin(), others.end(), [&](std::size_t i) { return p.incidence[v][i]; }))
                factor.vertices.push_back(p.vertices[v]);
        if (factor.vertices.size() != pcs[j].size())
            return reject("factor for collection " + index_set_string(pcs[j]) + " is not a simplex");

        RatMatrix Fj(n, RatVector(pcs[j].size()));
        for (std::size_t k = 0; k < pcs[j].size(); ++k)
            for (std::size_t i = 0; i < n; ++i) Fj[i][k] = static_cast<long>(p.facets[pcs[j][k]].normal[i]);
        auto ker = integer_kernel_basis(Fj, pcs[j].size());
        if (ker.size() != 1) return reject("collection " + index_set_string(pcs[j]) + " has no unique ray relation");
        int sign = sgn(ker[0][0]);
        for (std::size_t k = 0; k < pcs[j].size(); ++k) {
            if (sgn(ker[0][k]) != sign || sign == 0)
                return reject("collection " + index_set_string(pcs[j]) + " has no positive ray relation");
            Integer x = sign * ker[0][k];
            dec.v[pcs[j][k]] = x.get_si();
        }

        std::vector<Point> edges;
        for (const auto& q : factor.vertices) {
            if (q == dec.base_vertex) continue;
            Point e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = q[i] - dec.base_vertex[i];
            edges.push_back(std::move(e));
        }
        auto lead = [](const Point& e) {
            return static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](Exponent x) { return x != 0; }) - e.begin());
        };
        std::stable_sort(edges.begin(), edges.end(), [&](const Point& a, const Point& b) {
            if (lead(a) != lead(b)) return lead(a) < lead(b);
            return a < b;
        });
        for (const auto& e : edges) {
            RatVector col;
            for (auto x : e) col.emplace_back(static_cast<long>(x));
            M_cols.push_back(std::move(col));
            block_of_col.push_back(j);
        }
        dec.factors.push_back(std::move(factor));
    }

    RatMatrix M = transpose(M_cols);
    RatMatrix Minv;
    try {
        Minv = inverse(M);
    } catch (const std::domain_error&) {
        return reject("factor edges are linearly dependent");
    }
    std::vector<Integer> scale(pcs.size(), 1);
    for (std::size_t row = 0; row < n; ++row) {
        auto& s = scale[block_of_col[row]];
        for (const auto& x : Minv[row]) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), x.get_den_mpz_t());
    }
    dec.L.assign(n, std::vector<std::int64_t>(n));
    dec.w.assign(n, 0);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t c = 0; c < n; ++c) {
            Rational x = Minv[row][c] * scale[block_of_col[row]];
            dec.L[row][c] = x.get_num().get_si();
        }
        for (std::size_t c = 0; c < n; ++c) dec.w[row] -= dec.L[row][c] * dec.base_vertex[c];
    }
    return {std::move(dec), {}};
}

ExponentVector kernel_positive_vector(const LatticePolytope& p, const SimplexProductDecomposition& d) {
    const std::size_t r = p.facets.size();
    ExponentVector v(r, 0);
    for (const auto& factor : d.factors) {
        // v_i proportional to 1 / (F_i . a_i + b_i), a_i the factor vertex off facet i.
        std::vector<Rational> vals;
        for (auto i : factor.rays) {
            const Point* opposite = nullptr;
            for (const auto& a : factor.vertices)
                if (p.facets[i].value(a) != 0) {
                    if (opposite) throw std::invalid_argument("factor has two vertices off a facet");
                    opposite = &a;
                }
            if (!opposite) throw std::invalid_argument("factor has no vertex off a facet");
            vals.push_back(Rational(1, p.facets[i].value(*opposite)));
        }
        auto prim = primitive_integer_vector(vals);
        for (std::size_t k = 0; k < factor.rays.size(); ++k) v[factor.rays[k]] = prim[k].get_si();
    }
    for (std::size_t i = 0; i < r; ++i)
        if (v[i] <= 0) throw std::invalid_argument("decomposition does not cover every ray");
    for (std::size_t j = 0; j < p.ambient_dim; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < r; ++i) s += p.facets[i].normal[j] * v[i];
        if (s != 0) throw std::invalid_argument("decomposition is inconsistent with the polytope");
    }
    return v;
}

RationalPolytope to_rational(const LatticePolytope& q) { return scale_polytope(q, 1); }

RationalPolytope scale_polytope(const LatticePolytope& q, const Rational& lambda) {
    if (sgn(lambda) <= 0) throw std::invalid_argument("scale factor must be positive");
    RationalPolytope out;
    out.ambient_dim = q.ambient_dim;
    for (const auto& v : q.vertices) {
        RatVector x;
        for (auto c : v) x.push_back(lambda * static_cast<long>(c));
        out.vertices.push_back(std::move(x));
    }
    for (const auto& f : q.facets) {
        out.facet_normals.push_back(f.normal);
        out.facet_offsets.push_back(lambda * static_cast<long>(f.offset));
    }
    for (const auto& e : q.equations) {
        out.equation_normals.push_back(e.normal);
        out.equation_offsets.push_back(lambda * static_cast<long>(e.offset));
    }
    return out;
}

RationalPolytope translate(const RationalPolytope& q, const RatVector& shift) {
    if (shift.size() != q.ambient_dim) throw DimensionMismatch("translation vector has the wrong length");
    RationalPolytope out = q;
    for (auto& v : out.vertices)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
    auto shift_offset = [&](const std::vector<std::int64_t>& nrm, Rational& off) {
        for (std::size_t i = 0; i < nrm.size(); ++i) off -= shift[i] * static_cast<long>(nrm[i]);
    };
    for (std::size_t k = 0; k < out.facet_normals.size(); ++k) shift_offset(out.facet_normals[k], out.facet_offsets[k]);
    for (std::size_t k = 0; k < out.equation_normals.size(); ++k)
        shift_offset(out.equation_normals[k], out.equation_offsets[k]);
    return out;
}

bool relint_contains(const std::vector<RatVector>& p, const RationalPolytope& q) {
    if (p.empty() || q.vertices.empty()) throw std::invalid_argument("relative interior test on an empty polytope");
    auto value = [](const std::vector<std::int64_t>& nrm, const Rational& off, const RatVector& x) {
        Rational s = off;
        for (std::size_t i = 0; i < nrm.size(); ++i) s += x[i] * static_cast<long>(nrm[i]);
        return s;
    };
    for (const auto& x : p) {
        if (x.size() != q.ambient_dim) throw DimensionMismatch("point dimension differs from polytope");
        for (std::size_t k = 0; k < q.equation_normals.size(); ++k)
            if (sgn(value(q.equation_normals[k], q.equation_offsets[k], x)) != 0) return false;
        for (std::size_t k = 0; k < q.facet_normals.size(); ++k)
            if (sgn(value(q.facet_normals[k], q.facet_offsets[k], x)) <= 0) return false;
    }
    return true;
}

}  // namespace spolya
