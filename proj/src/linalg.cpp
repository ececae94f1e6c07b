#include "spolya/linalg.hpp"

#include "spolya/error.hpp"

#include <stdexcept>

namespace spolya {

RatMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
    RatMatrix out;
    for (const auto& row : m) {
        RatVector r;
        for (auto x : row) r.emplace_back(static_cast<long>(x));
        out.push_back(std::move(r));
    }
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return {};
    RatMatrix t(m[0].size(), RatVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b[0].size();
    RatMatrix c(a.size(), RatVector(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw DimensionMismatch("matrix shapes do not match");
        for (std::size_t k = 0; k < inner; ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

RatVector multiply(const RatMatrix& a, const RatVector& x) {
    RatVector y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m, std::size_t cols) {
    RatMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Integer>> integer_kernel_basis(const RatMatrix& m, std::size_t cols) {
    std::vector<std::vector<Integer>> out;
    for (const auto& v : kernel_basis(m, cols)) out.push_back(primitive_integer_vector(v));
    return out;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw DimensionMismatch("determinant of a non-square matrix");
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational factor = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix aug(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionMismatch("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    RatMatrix inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace spolya
