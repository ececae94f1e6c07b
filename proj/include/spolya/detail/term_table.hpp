#pragma once

#include "spolya/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace spolya::detail {

template <class C>
struct TermView {
    std::size_t dim = 0;
    std::size_t size = 0;
    const Exponent* exps = nullptr;
    const C* coefs = nullptr;

    const Exponent* exp(std::size_t i) const { return exps + i * dim; }
};

// Growable term buffer. Slots past `size` keep their allocations so repeated
// products reuse GMP limb storage.
template <class C>
struct TermTable {
    std::size_t dim = 0;
    std::size_t size = 0;
    std::vector<Exponent> exps;
    std::vector<C> coefs;

    TermView<C> view() const { return {dim, size, exps.data(), coefs.data()}; }
    const Exponent* exp(std::size_t i) const { return exps.data() + i * dim; }

    void reset(std::size_t d) {
        dim = d;
        size = 0;
    }

    // Appends a slot and returns its index; exponent and coefficient are uninitialised.
    std::size_t append() {
        if ((size + 1) * dim > exps.size()) exps.resize(std::max<std::size_t>(16, 2 * (size + 1)) * dim);
        if (size == coefs.size()) coefs.emplace_back();
        return size++;
    }
};

inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void set_product(Integer& out, const Integer& a, const Integer& b) {
    mpz_mul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void set_product(Rational& out, const Rational& a, const Rational& b) { out = a * b; }

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// out = a * b via a heap merge of one stream per term of the shorter factor.
template <class C>
void multiply_into(TermView<C> a, TermView<C> b, TermTable<C>& out) {
    const TermView<C>& big = a.size >= b.size ? a : b;
    const TermView<C>& small = a.size >= b.size ? b : a;
    const std::size_t n = big.dim;
    out.reset(n);
    if (big.size == 0 || small.size == 0) return;

    const std::size_t k = small.size;
    std::vector<std::size_t> pos(k, 0);
    std::vector<Exponent> head(k * n);
    std::vector<std::uint32_t> heap;
    heap.reserve(k);

    auto load = [&](std::size_t j) {
        const Exponent* x = big.exp(pos[j]);
        const Exponent* y = small.exp(j);
        Exponent* h = head.data() + j * n;
        for (std::size_t i = 0; i < n; ++i) h[i] = x[i] + y[i];
    };
    auto less = [&](std::uint32_t s, std::uint32_t t) {
        int c = grevlex_compare(head.data() + s * n, head.data() + t * n, n);
        return c < 0 || (c == 0 && s > t);
    };

    for (std::size_t j = 0; j < k; ++j) {
        load(j);
        heap.push_back(static_cast<std::uint32_t>(j));
    }
    std::make_heap(heap.begin(), heap.end(), less);

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), less);
        const std::uint32_t j = heap.back();
        const Exponent* e = head.data() + j * n;
        bool same = out.size > 0 && std::equal(e, e + n, out.exp(out.size - 1));
        if (same) {
            add_product(out.coefs[out.size - 1], big.coefs[pos[j]], small.coefs[j]);
        } else {
            if (out.size > 0 && is_zero(out.coefs[out.size - 1])) --out.size;
            std::size_t slot = out.append();
            std::copy(e, e + n, out.exps.data() + slot * n);
            set_product(out.coefs[slot], big.coefs[pos[j]], small.coefs[j]);
        }
        if (++pos[j] < big.size) {
            load(j);
            std::push_heap(heap.begin(), heap.end(), less);
        } else {
            heap.pop_back();
        }
    }
    if (out.size > 0 && is_zero(out.coefs[out.size - 1])) --out.size;
}

}  // namespace spolya::detail
