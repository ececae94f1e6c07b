#include "spolya/polynomial.hpp"

#include "spolya/detail/term_table.hpp"
#include "spolya/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace spolya {

int grevlex_compare(const Exponent* a, const Exponent* b, std::size_t n) {
    Exponent da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

namespace {

detail::TermView<Rational> view_of(const SparsePoly& f) {
    return {f.dim(), f.size(), f.raw_exponents().data(), f.coefficients().data()};
}

SparsePoly from_table(const detail::TermTable<Rational>& t) {
    std::vector<Exponent> e(t.exps.begin(), t.exps.begin() + t.size * t.dim);
    std::vector<Rational> c(t.coefs.begin(), t.coefs.begin() + t.size);
    return SparsePoly::from_canonical(t.dim, std::move(e), std::move(c));
}

void require_same_dim(const SparsePoly& f, const SparsePoly& g) {
    if (f.dim() != g.dim())
        throw DimensionMismatch("polynomial dimensions differ: " + std::to_string(f.dim()) + " vs " +
                                std::to_string(g.dim()));
}

Rational rational_power(const Rational& base, Exponent e) {
    Rational r;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    if (e < 0) r = 1 / r;
    return r;
}

SparsePoly add_scaled(const SparsePoly& f, const SparsePoly& g, int sign) {
    require_same_dim(f, g);
    const std::size_t n = f.dim();
    std::vector<Exponent> e;
    std::vector<Rational> c;
    std::size_t i = 0, j = 0;
    auto push = [&](std::span<const Exponent> x, Rational v) {
        if (sgn(v) == 0) return;
        e.insert(e.end(), x.begin(), x.end());
        c.push_back(std::move(v));
    };
    while (i < f.size() || j < g.size()) {
        int cmp;
        if (i == f.size()) cmp = -1;
        else if (j == g.size()) cmp = 1;
        else cmp = grevlex_compare(f.exponent(i).data(), g.exponent(j).data(), n);
        if (cmp > 0) {
            push(f.exponent(i), f.coef(i));
            ++i;
        } else if (cmp < 0) {
            push(g.exponent(j), sign > 0 ? Rational(g.coef(j)) : Rational(-g.coef(j)));
            ++j;
        } else {
            push(f.exponent(i), sign > 0 ? Rational(f.coef(i) + g.coef(j)) : Rational(f.coef(i) - g.coef(j)));
            ++i;
            ++j;
        }
    }
    return SparsePoly::from_canonical(n, std::move(e), std::move(c));
}

}  // namespace

SparsePoly SparsePoly::constant(std::size_t dim, const Rational& c) {
    SparsePoly p(dim);
    if (sgn(c) != 0) {
        p.exps_.assign(dim, 0);
        p.coefs_.push_back(c);
    }
    return p;
}

SparsePoly SparsePoly::monomial(ExponentVector exp, const Rational& c) {
    SparsePoly p(exp.size());
    if (sgn(c) != 0) {
        p.exps_ = std::move(exp);
        p.coefs_.push_back(c);
    }
    return p;
}

SparsePoly SparsePoly::variable(std::size_t dim, std::size_t i) {
    ExponentVector e(dim, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

SparsePoly SparsePoly::from_terms(std::size_t dim, std::vector<std::pair<ExponentVector, Rational>> terms) {
    for (const auto& [e, c] : terms)
        if (e.size() != dim) throw DimensionMismatch("exponent length does not match dimension");
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return GrevlexGreater{}(a.first, b.first); });
    SparsePoly p(dim);
    for (std::size_t i = 0; i < terms.size();) {
        Rational sum = terms[i].second;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
        if (sgn(sum) != 0) {
            p.exps_.insert(p.exps_.end(), terms[i].first.begin(), terms[i].first.end());
            p.coefs_.push_back(sum);
        }
        i = j;
    }
    return p;
}

SparsePoly SparsePoly::from_canonical(std::size_t dim, std::vector<Exponent> exps, std::vector<Rational> coefs) {
    SparsePoly p(dim);
    p.exps_ = std::move(exps);
    p.coefs_ = std::move(coefs);
    return p;
}

std::optional<std::size_t> SparsePoly::find(std::span<const Exponent> exp) const {
    if (exp.size() != dim_) throw DimensionMismatch("exponent length does not match dimension");
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = grevlex_compare(exponent(mid).data(), exp.data(), dim_);
        if (c == 0) return mid;
        if (c > 0) lo = mid + 1;
        else hi = mid;
    }
    return std::nullopt;
}

Rational SparsePoly::coefficient(std::span<const Exponent> exp) const {
    auto i = find(exp);
    return i ? coefs_[*i] : Rational(0);
}

std::vector<ExponentVector> SparsePoly::support() const {
    std::vector<ExponentVector> s;
    s.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) s.push_back(exponent_vector(i));
    return s;
}

ExponentSet SparsePoly::support_set() const {
    ExponentSet s;
    for (std::size_t i = 0; i < size(); ++i) s.insert(exponent_vector(i));
    return s;
}

std::optional<Exponent> SparsePoly::total_degree() const {
    if (is_zero()) return std::nullopt;
    // Descending grevlex puts the highest degree first.
    auto e = exponent(0);
    return std::accumulate(e.begin(), e.end(), Exponent{0});
}

bool SparsePoly::is_homogeneous() const {
    if (is_zero()) return true;
    auto e = exponent(size() - 1);
    return std::accumulate(e.begin(), e.end(), Exponent{0}) == *total_degree();
}

bool SparsePoly::has_nonnegative_exponents() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent x) { return x >= 0; });
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p = *this;
    for (auto& c : p.coefs_) c = -c;
    return p;
}

SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return add_scaled(f, g, 1); }
SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return add_scaled(f, g, -1); }
SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) { return mul(f, g); }

SparsePoly operator*(const Rational& c, const SparsePoly& f) {
    if (sgn(c) == 0) return SparsePoly(f.dim());
    SparsePoly p = f;
    for (auto& x : p.coefs_) x *= c;
    return p;
}

bool operator==(const SparsePoly& f, const SparsePoly& g) {
    return f.dim_ == g.dim_ && f.exps_ == g.exps_ && f.coefs_ == g.coefs_;
}

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
    require_same_dim(f, g);
    detail::TermTable<Rational> out;
    detail::multiply_into(view_of(f), view_of(g), out);
    out.dim = f.dim();
    return from_table(out);
}

SparsePoly pow(const SparsePoly& f, unsigned long n) {
    SparsePoly result = SparsePoly::constant(f.dim(), 1);
    SparsePoly base = f;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

SparsePoly indicator_polynomial(std::size_t dim, const std::vector<ExponentVector>& points) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    ExponentSet seen;
    for (const auto& p : points)
        if (seen.insert(p).second) terms.emplace_back(p, Rational(1));
    return SparsePoly::from_terms(dim, std::move(terms));
}

SparsePoly truncate_if(const SparsePoly& f, const std::function<bool(std::span<const Exponent>)>& keep) {
    std::vector<Exponent> e;
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!keep(f.exponent(i))) continue;
        auto x = f.exponent(i);
        e.insert(e.end(), x.begin(), x.end());
        c.push_back(f.coef(i));
    }
    return SparsePoly::from_canonical(f.dim(), std::move(e), std::move(c));
}

SparsePoly truncate(const SparsePoly& f, const ExponentSet& keep) {
    return truncate_if(f, [&](std::span<const Exponent> e) { return keep.count(ExponentVector(e.begin(), e.end())) > 0; });
}

SparsePoly initial_form(const SparsePoly& f, const std::vector<Rational>& w) {
    if (f.is_zero()) throw Error("initial form of the zero polynomial");
    if (w.size() != f.dim()) throw DimensionMismatch("weight length does not match dimension");
    std::vector<Rational> values(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto e = f.exponent(i);
        for (std::size_t j = 0; j < e.size(); ++j) values[i] += w[j] * e[j];
    }
    Rational best = *std::min_element(values.begin(), values.end());
    std::size_t idx = 0;
    return truncate_if(f, [&](std::span<const Exponent>) { return values[idx++] == best; });
}

SparsePoly substitute_monomial_map(const SparsePoly& f, const IntMatrix& M, const ExponentVector& shift) {
    const std::size_t r = M.size();
    if (shift.size() != r) throw DimensionMismatch("shift length does not match matrix rows");
    for (const auto& row : M)
        if (row.size() != f.dim()) throw DimensionMismatch("matrix columns do not match polynomial dimension");
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        auto a = f.exponent(t);
        ExponentVector img(shift);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < a.size(); ++j) img[i] += M[i][j] * a[j];
        terms.emplace_back(std::move(img), f.coef(t));
    }
    return SparsePoly::from_terms(r, std::move(terms));
}

SparsePoly dehomogenize(const SparsePoly& f, std::size_t i) {
    if (i >= f.dim()) throw std::out_of_range("dehomogenize: variable index out of range");
    std::vector<std::pair<ExponentVector, Rational>> terms;
    for (std::size_t t = 0; t < f.size(); ++t) {
        ExponentVector e = f.exponent_vector(t);
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
        terms.emplace_back(std::move(e), f.coef(t));
    }
    return SparsePoly::from_terms(f.dim() - 1, std::move(terms));
}

Rational evaluate_nonnegative(const SparsePoly& f, const std::vector<Rational>& point) {
    if (point.size() != f.dim()) throw DimensionMismatch("point length does not match dimension");
    Rational sum = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        auto e = f.exponent(t);
        Rational term = f.coef(t);
        for (std::size_t j = 0; j < e.size() && sgn(term) != 0; ++j) {
            if (e[j] == 0) continue;
            if (sgn(point[j]) == 0) {
                if (e[j] < 0) throw std::domain_error("negative exponent at a zero coordinate");
                term = 0;
            } else {
                term *= rational_power(point[j], e[j]);
            }
        }
        sum += term;
    }
    return sum;
}

Rational evaluate(const SparsePoly& f, const std::vector<Rational>& point) {
    for (const auto& x : point)
        if (sgn(x) <= 0) throw std::domain_error("evaluation point must be strictly positive");
    return evaluate_nonnegative(f, point);
}

CoefficientReport coefficient_report(const SparsePoly& f, const std::optional<ExponentSet>& required_support) {
    CoefficientReport rep;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f.coef(i)) < 0) {
            rep.all_nonnegative = false;
            rep.offenders.push_back({f.exponent_vector(i), f.coef(i)});
        }
    }
    rep.all_positive_on_support = rep.all_nonnegative;
    if (required_support) {
        std::vector<ExponentVector> missing;
        for (const auto& a : *required_support)
            if (!f.find(a)) missing.push_back(a);
        std::sort(missing.begin(), missing.end(), GrevlexGreater{});
        if (!missing.empty()) rep.all_positive_on_support = false;
        for (auto& a : missing) rep.offenders.push_back({std::move(a), Rational(0)});
    }
    return rep;
}

std::vector<std::string> default_variable_names(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < dim; ++i) v.push_back(prefix + std::to_string(i + 1));
    return v;
}

std::string monomial_string(std::span<const Exponent> exp, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t j = 0; j < exp.size(); ++j) {
        if (exp[j] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[j];
        if (exp[j] != 1) s += '^' + std::to_string(exp[j]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const SparsePoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    auto vars = names.empty() ? default_variable_names(f.dim()) : names;
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational c = f.coef(i);
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (i == 0) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mono = monomial_string(f.exponent(i), vars);
        if (mono == "1") s += to_string(c);
        else if (c == 1) s += mono;
        else s += to_string(c) + "*" + mono;
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    SparsePoly parse() {
        SparsePoly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    SparsePoly expr() {
        SparsePoly acc(vars_.size());
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('-')) sign = -1;
            else if (!accept('+') && !first) break;
            SparsePoly t = term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly p = factor();
        while (accept('*')) p = mul(p, factor());
        return p;
    }

    long exponent_literal() {
        skip();
        bool neg = accept('-');
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected exponent");
        long e = std::stol(std::string(s_.substr(start, i_ - start)));
        return neg ? -e : e;
    }

    SparsePoly factor() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        SparsePoly base(vars_.size());
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            base = expr();
            if (!accept(')')) fail("expected ')'");
            if (accept('^')) {
                long e = exponent_literal();
                if (e < 0) fail("negative power of a parenthesised expression");
                base = pow(base, static_cast<unsigned long>(e));
            }
            return base;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            }
            return SparsePoly::constant(vars_.size(), parse_rational(s_.substr(start, i_ - start)));
        }
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a term");
        std::string name(s_.substr(start, i_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) fail("unknown variable '" + name + "'");
        ExponentVector e(vars_.size(), 0);
        e[static_cast<std::size_t>(it - vars_.begin())] = accept('^') ? exponent_literal() : 1;
        return SparsePoly::monomial(std::move(e));
    }
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).parse();
}

}  // namespace spolya
