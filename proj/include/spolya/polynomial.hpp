#pragma once

#include "spolya/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spolya {

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;
using ExponentSet = std::set<ExponentVector>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Graded reverse lexicographic comparison. Returns >0 when a is the larger monomial.
int grevlex_compare(const Exponent* a, const Exponent* b, std::size_t n);

struct GrevlexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return grevlex_compare(a.data(), b.data(), a.size()) > 0;
    }
};

// Laurent polynomial with exact rational coefficients.
// Terms are kept in descending grevlex order with no zero coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(std::size_t dim) : dim_(dim) {}

    static SparsePoly constant(std::size_t dim, const Rational& c);
    static SparsePoly monomial(ExponentVector exp, const Rational& c = 1);
    static SparsePoly variable(std::size_t dim, std::size_t i);
    // Duplicate exponents are summed and zero results dropped.
    static SparsePoly from_terms(std::size_t dim,
                                 std::vector<std::pair<ExponentVector, Rational>> terms);
    // Data must already be canonical: sorted descending, distinct, nonzero.
    static SparsePoly from_canonical(std::size_t dim, std::vector<Exponent> exps,
                                     std::vector<Rational> coefs);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return coefs_.size(); }
    bool is_zero() const { return coefs_.empty(); }

    std::span<const Exponent> exponent(std::size_t i) const {
        return {exps_.data() + i * dim_, dim_};
    }
    ExponentVector exponent_vector(std::size_t i) const {
        auto e = exponent(i);
        return {e.begin(), e.end()};
    }
    const Rational& coef(std::size_t i) const { return coefs_[i]; }
    // Zero when the exponent is absent.
    Rational coefficient(std::span<const Exponent> exp) const;
    std::optional<std::size_t> find(std::span<const Exponent> exp) const;

    std::vector<ExponentVector> support() const;
    ExponentSet support_set() const;
    const std::vector<Exponent>& raw_exponents() const { return exps_; }
    const std::vector<Rational>& coefficients() const { return coefs_; }

    // Largest total degree; the zero polynomial has none.
    std::optional<Exponent> total_degree() const;
    bool is_homogeneous() const;
    bool has_nonnegative_exponents() const;

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator-(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator*(const Rational& c, const SparsePoly& f);
    friend bool operator==(const SparsePoly& f, const SparsePoly& g);

private:
    std::size_t dim_ = 0;
    std::vector<Exponent> exps_;
    std::vector<Rational> coefs_;
};

SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly pow(const SparsePoly& f, unsigned long n);

// Sum of the monomials t^a over the given exponents, all coefficients 1.
SparsePoly indicator_polynomial(std::size_t dim, const std::vector<ExponentVector>& points);

SparsePoly truncate(const SparsePoly& f, const ExponentSet& keep);
SparsePoly truncate_if(const SparsePoly& f,
                       const std::function<bool(std::span<const Exponent>)>& keep);

// Terms of f minimizing w.a over supp(f).
SparsePoly initial_form(const SparsePoly& f, const std::vector<Rational>& w);

// Each term c t^a becomes c x^{M a + shift}. M is r x n.
SparsePoly substitute_monomial_map(const SparsePoly& f, const IntMatrix& M,
                                   const ExponentVector& shift);

// Sets t_i = 1 (0-based i), dropping coordinate i.
SparsePoly dehomogenize(const SparsePoly& f, std::size_t i);

// All coordinates must be strictly positive.
Rational evaluate(const SparsePoly& f, const std::vector<Rational>& point);
// Zero coordinates are allowed where every exponent in that coordinate is >= 0.
Rational evaluate_nonnegative(const SparsePoly& f, const std::vector<Rational>& point);

struct Offender {
    ExponentVector exponent;
    Rational coefficient;
};

struct CoefficientReport {
    bool all_nonnegative = true;
    bool all_positive_on_support = true;
    // Negative terms, then required points carrying no term (coefficient 0).
    std::vector<Offender> offenders;
};

CoefficientReport coefficient_report(const SparsePoly& f,
                                     const std::optional<ExponentSet>& required_support = {});

std::string monomial_string(std::span<const Exponent> exp, const std::vector<std::string>& vars);
std::string to_string(const SparsePoly& f, const std::vector<std::string>& vars = {});
std::vector<std::string> default_variable_names(std::size_t dim, const std::string& prefix = "t");

// Reads expressions such as "t4^3 - 1.9*t2*t4^2 + 3/2*t1" over the given variable names.
// Negative exponents are written t1^-2.
SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

}  // namespace spolya
