#include "spolya/rational.hpp"

#include "spolya/error.hpp"

#include <cctype>

namespace spolya {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto fail = [&]() -> Rational { throw InputError("invalid rational literal '" + std::string(text) + "'"); };
    if (s.empty()) return fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        Integer d(std::string(den), 10);
        if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        q = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            return fail();
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        q = Rational(num, den);
    } else {
        if (!all_digits(s)) return fail();
        q = Rational(Integer(std::string(s), 10));
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer l = lcm_of_denominators(v);
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(z);
    }
    if (g != 0)
        for (auto& z : out) z /= g;
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace spolya
