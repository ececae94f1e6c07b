#include "spolya/power_sequence.hpp"

#include "spolya/error.hpp"

namespace spolya {

namespace {

// Fills t with the integer coefficients c * lcm(denominators) and returns the lcm.
Integer load_scaled(const SparsePoly& p, detail::TermTable<Integer>& t) {
    Integer l = lcm_of_denominators(p.coefficients());
    t.reset(p.dim());
    t.exps.assign(p.raw_exponents().begin(), p.raw_exponents().end());
    t.coefs.resize(p.size());
    t.size = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) t.coefs[i] = p.coef(i).get_num() * (l / p.coef(i).get_den());
    return l;
}

void load_points(std::size_t dim, const std::vector<ExponentVector>& pts, detail::TermTable<Integer>& t) {
    SparsePoly p = indicator_polynomial(dim, pts);
    load_scaled(p, t);
}

}  // namespace

PowerSequence::PowerSequence(const SparsePoly& f, const SparsePoly& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("multiplier dimension does not match polynomial");
    scale_ = load_scaled(f, cur_);
    g_scale_ = load_scaled(g, g_);
}

void PowerSequence::advance() {
    detail::multiply_into(cur_.view(), g_.view(), next_);
    next_.dim = cur_.dim;
    std::swap(cur_, next_);
    scale_ *= g_scale_;
    ++step_;
}

Rational PowerSequence::coefficient(std::size_t i) const {
    Rational q(cur_.coefs[i], scale_);
    q.canonicalize();
    return q;
}

bool PowerSequence::all_nonnegative() const {
    for (std::size_t i = 0; i < cur_.size; ++i)
        if (sgn(cur_.coefs[i]) < 0) return false;
    return true;
}

std::vector<Offender> PowerSequence::negative_terms() const {
    std::vector<Offender> out;
    for (std::size_t i = 0; i < cur_.size; ++i) {
        if (sgn(cur_.coefs[i]) >= 0) continue;
        auto e = exponent(i);
        out.push_back({ExponentVector(e.begin(), e.end()), coefficient(i)});
    }
    return out;
}

SparsePoly PowerSequence::current() const {
    std::vector<Exponent> e(cur_.exps.begin(), cur_.exps.begin() + cur_.size * cur_.dim);
    std::vector<Rational> c;
    c.reserve(cur_.size);
    for (std::size_t i = 0; i < cur_.size; ++i) c.push_back(coefficient(i));
    return SparsePoly::from_canonical(cur_.dim, std::move(e), std::move(c));
}

MinkowskiSequence::MinkowskiSequence(const std::vector<ExponentVector>& start,
                                     const std::vector<ExponentVector>& summand) {
    if (start.empty() || summand.empty()) throw Error("Minkowski sequence needs nonempty point sets");
    std::size_t dim = start.front().size();
    load_points(dim, start, cur_);
    load_points(dim, summand, a_);
}

void MinkowskiSequence::advance() {
    detail::multiply_into(cur_.view(), a_.view(), next_);
    next_.dim = cur_.dim;
    for (std::size_t i = 0; i < next_.size; ++i) next_.coefs[i] = 1;
    std::swap(cur_, next_);
}

std::vector<ExponentVector> MinkowskiSequence::missing_from(const PowerSequence& seq) const {
    std::vector<ExponentVector> missing;
    const std::size_t n = cur_.dim;
    std::size_t j = 0;
    for (std::size_t i = 0; i < cur_.size; ++i) {
        const Exponent* p = cur_.exp(i);
        while (j < seq.size() && grevlex_compare(seq.exponent(j).data(), p, n) > 0) ++j;
        if (j < seq.size() && grevlex_compare(seq.exponent(j).data(), p, n) == 0) continue;
        missing.emplace_back(p, p + n);
    }
    return missing;
}

std::vector<ExponentVector> MinkowskiSequence::points() const {
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < cur_.size; ++i) out.emplace_back(cur_.exp(i), cur_.exp(i) + cur_.dim);
    return out;
}

std::vector<SparsePoly> power_multiply(const SparsePoly& f, const SparsePoly& g, unsigned long n) {
    PowerSequence seq(f, g);
    std::vector<SparsePoly> out{seq.current()};
    for (unsigned long k = 0; k < n; ++k) {
        seq.advance();
        out.push_back(seq.current());
    }
    return out;
}

}  // namespace spolya
