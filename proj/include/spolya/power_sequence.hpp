#pragma once

#include "spolya/detail/term_table.hpp"
#include "spolya/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace spolya {

// Yields g^0 f, g^1 f, g^2 f, ... one multiplication by g per step.
// Coefficients are held as integers scaled by a positive common denominator,
// so sign queries never touch rationals.
class PowerSequence {
public:
    PowerSequence(const SparsePoly& f, const SparsePoly& g);

    unsigned long step() const { return step_; }
    void advance();

    std::size_t size() const { return cur_.size; }
    std::size_t dim() const { return cur_.dim; }
    std::span<const Exponent> exponent(std::size_t i) const { return {cur_.exp(i), cur_.dim}; }
    int sign(std::size_t i) const { return sgn(cur_.coefs[i]); }
    Rational coefficient(std::size_t i) const;

    bool all_nonnegative() const;
    std::vector<Offender> negative_terms() const;
    // Exact current polynomial g^step f.
    SparsePoly current() const;

private:
    detail::TermTable<Integer> cur_;
    detail::TermTable<Integer> next_;
    detail::TermTable<Integer> g_;
    Integer scale_;    // current coefficients = true coefficients * scale_
    Integer g_scale_;
    unsigned long step_ = 0;
};

// Sorted point set (k+N) A advanced one Minkowski summand at a time.
class MinkowskiSequence {
public:
    MinkowskiSequence(const std::vector<ExponentVector>& start, const std::vector<ExponentVector>& summand);

    void advance();
    std::size_t size() const { return cur_.size; }
    std::span<const Exponent> point(std::size_t i) const { return {cur_.exp(i), cur_.dim}; }
    // Points of the current set missing from the canonical term list of seq.
    std::vector<ExponentVector> missing_from(const PowerSequence& seq) const;
    std::vector<ExponentVector> points() const;

private:
    detail::TermTable<Integer> cur_;
    detail::TermTable<Integer> next_;
    detail::TermTable<Integer> a_;
};

std::vector<SparsePoly> power_multiply(const SparsePoly& f, const SparsePoly& g, unsigned long n);

}  // namespace spolya
