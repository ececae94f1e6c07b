#include "spolya/feynman.hpp"

#include "spolya/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spolya {

LinearForm LinearForm::parameter(const std::string& name, const Rational& c) {
    LinearForm f;
    if (sgn(c) != 0) f.coefs_[name] = c;
    return f;
}

Rational LinearForm::coefficient(const std::string& name) const {
    auto it = coefs_.find(name);
    return it == coefs_.end() ? Rational(0) : it->second;
}

Rational LinearForm::evaluate(const Assignment& values) const {
    Rational r = constant_;
    for (const auto& [name, c] : coefs_) {
        auto it = values.find(name);
        if (it == values.end()) throw InputError("no value for parameter '" + name + "'");
        r += c * it->second;
    }
    return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [name, c] : o.coefs_) {
        Rational& slot = coefs_[name];
        slot += c;
        if (sgn(slot) == 0) coefs_.erase(name);
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += Rational(-1) * o; }

LinearForm& LinearForm::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        constant_ = 0;
        coefs_.clear();
        return *this;
    }
    constant_ *= c;
    for (auto& [name, v] : coefs_) v *= c;
    return *this;
}

namespace {

class FormParser {
public:
    explicit FormParser(std::string_view s) : s_(s) {}

    LinearForm parse() {
        LinearForm f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("linear form '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    LinearForm expr() {
        LinearForm f = term();
        for (;;) {
            if (eat('+')) f += term();
            else if (eat('-')) f -= term();
            else return f;
        }
    }
    LinearForm term() {
        LinearForm f = unary();
        for (;;) {
            if (eat('*')) {
                LinearForm g = unary();
                if (g.coefficients().empty()) f *= g.constant();
                else if (f.coefficients().empty()) f = f.constant() * g;
                else fail("product of two parameters");
            } else if (eat('/')) {
                LinearForm g = unary();
                if (!g.coefficients().empty() || sgn(g.constant()) == 0) fail("division by a non-constant or zero");
                f *= 1 / g.constant();
            } else {
                return f;
            }
        }
    }
    LinearForm unary() {
        if (eat('-')) return Rational(-1) * unary();
        if (eat('+')) return unary();
        return primary();
    }
    LinearForm primary() {
        skip();
        if (eat('(')) {
            LinearForm f = expr();
            if (!eat(')')) fail("missing ')'");
            return f;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return LinearForm(parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return LinearForm::parameter(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Acyclic edge subsets of the given size, in lexicographic order of edge indices.
template <class Visit>
void acyclic_subsets(const FeynmanGraph& g, std::size_t size, Visit visit) {
    EdgeSet chosen;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (chosen.size() == size) {
            UnionFind uf(g.vertex_count);
            for (std::size_t e : chosen)
                if (!uf.unite(g.edges[e].u - 1, g.edges[e].v - 1)) return;
            visit(chosen, uf);
            return;
        }
        for (std::size_t e = next; e + (size - chosen.size()) <= g.edges.size(); ++e) {
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

ExponentVector complement(const FeynmanGraph& g, const EdgeSet& s) {
    ExponentVector e(g.edges.size(), 1);
    for (std::size_t i : s) e[i] = 0;
    return e;
}

}  // namespace

LinearForm parse_linear_form(std::string_view text) { return FormParser(text).parse(); }

std::string to_string(const LinearForm& f) {
    std::ostringstream out;
    bool first = true;
    auto put = [&](const Rational& c, const std::string& name) {
        Rational a = abs(c);
        if (first) out << (sgn(c) < 0 ? "-" : "");
        else out << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (name.empty()) out << to_string(a);
        else if (a == 1) out << name;
        else out << to_string(a) << "*" << name;
    };
    for (const auto& [name, c] : f.coefficients()) put(c, name);
    if (sgn(f.constant()) != 0 || first) {
        if (first && sgn(f.constant()) == 0) return "0";
        put(f.constant(), "");
    }
    return out.str();
}

MassTag MassTag::parse(std::string_view text) {
    MassTag m;
    LinearForm f = parse_linear_form(text);
    if (f.coefficients().empty()) {
        m.value = f.constant();
        m.kind = sgn(m.value) == 0 ? Kind::zero : Kind::fixed;
        return m;
    }
    if (f.coefficients().size() == 1 && sgn(f.constant()) == 0 && f.coefficients().begin()->second == 1) {
        m.kind = Kind::symbol;
        m.symbol = f.coefficients().begin()->first;
        return m;
    }
    throw InputError("mass must be a symbol, 0, or a rational: '" + std::string(text) + "'");
}

LinearForm MassTag::form() const {
    switch (kind) {
    case Kind::symbol: return LinearForm::parameter(symbol);
    case Kind::fixed: return LinearForm(value);
    case Kind::zero: break;
    }
    return LinearForm();
}

std::string MassTag::label() const {
    switch (kind) {
    case Kind::symbol: return symbol;
    case Kind::fixed: return to_string(value);
    case Kind::zero: break;
    }
    return "0";
}

void FeynmanGraph::validate() const {
    if (vertex_count == 0) throw InputError("graph has no vertices");
    for (const auto& e : edges)
        if (e.u < 1 || e.v < 1 || e.u > vertex_count || e.v > vertex_count)
            throw InputError("edge endpoint out of range");
    for (const auto& l : legs) {
        if (l.vertex < 1 || l.vertex > vertex_count) throw InputError("external leg vertex out of range");
        if (l.momentum < 1) throw InputError("momentum indices start at 1");
    }
    UnionFind uf(vertex_count);
    for (const auto& e : edges) uf.unite(e.u - 1, e.v - 1);
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (uf.find(v) != 0) throw std::invalid_argument("graph is disconnected");
}

void KinematicSpec::set(std::size_t i, std::size_t j, LinearForm f) { k[{std::min(i, j), std::max(i, j)}] = std::move(f); }

const LinearForm& KinematicSpec::get(std::size_t i, std::size_t j) const {
    auto it = k.find({std::min(i, j), std::max(i, j)});
    if (it == k.end())
        throw InputError("unresolved kinematic invariant k" + std::to_string(i) + "," + std::to_string(j));
    return it->second;
}

void KinematicSpec::validate(const std::vector<std::size_t>& momenta) const {
    if (!momentum_conservation) return;
    for (std::size_t i : momenta) {
        LinearForm row;
        for (std::size_t j : momenta) row += get(i, j);
        if (!row.is_zero())
            throw InputError("momentum conservation fails for p" + std::to_string(i) + ": row sums to " + to_string(row));
    }
}

std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g) {
    g.validate();
    std::vector<EdgeSet> out;
    acyclic_subsets(g, g.vertex_count - 1, [&](const EdgeSet& s, UnionFind&) { out.push_back(s); });
    return out;
}

std::vector<TwoForest> spanning_2forests(const FeynmanGraph& g) {
    g.validate();
    std::vector<TwoForest> out;
    if (g.vertex_count < 2) return out;
    acyclic_subsets(g, g.vertex_count - 2, [&](const EdgeSet& s, UnionFind& uf) {
        TwoForest t;
        t.edges = s;
        for (std::size_t v = 0; v < g.vertex_count; ++v) (uf.find(v) == 0 ? t.first : t.second).push_back(v + 1);
        out.push_back(std::move(t));
    });
    return out;
}

void ParamPoly::add(const ExponentVector& e, const LinearForm& c) {
    if (e.size() != dim_) throw DimensionMismatch("exponent length differs from the polynomial");
    LinearForm& slot = terms_[e];
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
}

LinearForm ParamPoly::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LinearForm() : it->second;
}

std::vector<std::pair<ExponentVector, LinearForm>> ParamPoly::terms() const {
    std::vector<std::pair<ExponentVector, LinearForm>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return grevlex_compare(a.first.data(), b.first.data(), dim_) > 0;
    });
    return out;
}

std::vector<std::string> ParamPoly::parameters() const {
    std::set<std::string> names;
    for (const auto& [e, f] : terms_)
        for (const auto& [name, c] : f.coefficients()) names.insert(name);
    return {names.begin(), names.end()};
}

std::string to_string(const ParamPoly& p, const std::vector<std::string>& vars) {
    if (p.size() == 0) return "0";
    std::string out;
    for (const auto& [e, f] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono = monomial_string(e, vars);
        out += "(" + to_string(f) + ")";
        if (mono != "1") out += "*" + mono;
    }
    return out;
}

SparsePoly first_symanzik(const FeynmanGraph& g) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    for (const auto& t : spanning_trees(g)) terms.emplace_back(complement(g, t), Rational(1));
    return SparsePoly::from_terms(g.edges.size(), terms);
}

ParamPoly forest_part(const FeynmanGraph& g, const KinematicSpec& kin) {
    std::vector<std::size_t> momenta;
    for (const auto& l : g.legs) momenta.push_back(l.momentum);
    kin.validate(momenta);
    ParamPoly out(g.edges.size());
    for (const auto& f : spanning_2forests(g)) {
        LinearForm c;
        for (const auto& a : g.legs) {
            if (!std::binary_search(f.first.begin(), f.first.end(), a.vertex)) continue;
            for (const auto& b : g.legs)
                if (std::binary_search(f.second.begin(), f.second.end(), b.vertex)) c += kin.get(a.momentum, b.momentum);
        }
        out.add(complement(g, f.edges), c);
    }
    return out;
}

ParamPoly mass_part(const FeynmanGraph& g) {
    ParamPoly out(g.edges.size());
    for (const auto& t : spanning_trees(g)) {
        ExponentVector base = complement(g, t);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            LinearForm m = g.edges[e].mass.form();
            if (m.is_zero()) continue;
            ExponentVector x = base;
            ++x[e];
            out.add(x, m);
        }
    }
    return out;
}

ParamPoly second_symanzik(const FeynmanGraph& g, const KinematicSpec& kin) {
    ParamPoly out = forest_part(g, kin);
    for (const auto& [e, f] : mass_part(g).terms()) out.add(e, f);
    return out;
}

GenericSupport generic_support(const FeynmanGraph& g, const KinematicSpec& kin) {
    ParamPoly f = second_symanzik(g, kin);
    ParamPoly m = mass_part(g);
    std::set<ExponentVector> a1, a2;
    for (const auto& t : spanning_trees(g)) {
        ExponentVector base = complement(g, t);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            ExponentVector x = base;
            ++x[e];
            (base[e] == 0 ? a1 : a2).insert(x);
        }
    }
    GenericSupport out;
    std::vector<Point> pts;
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    out.points = make_point_set(g.edges.size(), pts);
    for (const auto& p : out.points.points) {
        SupportFlag flag;
        flag.in_a1 = a1.count(p) > 0;
        flag.in_a2 = a2.count(p) > 0;
        flag.involves_mass = !m.coefficient(p).is_zero();
        out.flags.push_back(flag);
    }
    return out;
}

SparsePoly instantiate(const ParamPoly& f, const Assignment& values) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    for (const auto& [e, c] : f.terms()) {
        Rational v = c.evaluate(values);
        if (sgn(v) != 0) terms.emplace_back(e, v);
    }
    return SparsePoly::from_terms(f.dim(), terms);
}

namespace {

struct Row {
    RatVector a;  // coefficients over the variables
    Rational c;
    std::vector<Rational> lambda;  // combination of the input forms

    bool no_variables() const {
        return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
    }
};

void normalize(Row& r) {
    Rational scale;
    for (const auto& x : r.a)
        if (sgn(x) != 0) {
            scale = abs(x);
            break;
        }
    if (sgn(scale) == 0) scale = sgn(r.c) != 0 ? Rational(abs(r.c)) : Rational(1);
    for (auto& x : r.a) x /= scale;
    r.c /= scale;
    for (auto& x : r.lambda) x /= scale;
}

Rational pick_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    auto floor_of = [](const Rational& q) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return f;
    };
    if (!lo && !hi) return 0;
    if (lo && !hi) return Rational(std::max(Integer(0), Integer(floor_of(*lo) + 1)));
    if (!lo && hi) {
        Integer c = -floor_of(-*hi);  // ceil
        return Rational(std::min(Integer(0), Integer(c - 1)));
    }
    if (sgn(*lo) < 0 && sgn(*hi) > 0) return 0;
    Integer cand = sgn(*lo) >= 0 ? Integer(floor_of(*lo) + 1) : Integer(-floor_of(-*hi) - 1);
    if (Rational(cand) > *lo && Rational(cand) < *hi) return Rational(cand);
    Rational mid = (*lo + *hi) / 2;
    mid.canonicalize();
    return mid;
}

}  // namespace

FeasibilityResult strict_feasibility(const std::vector<LinearForm>& forms) {
    std::set<std::string> name_set;
    for (const auto& f : forms)
        for (const auto& [name, c] : f.coefficients()) name_set.insert(name);
    std::vector<std::string> names(name_set.begin(), name_set.end());
    const std::size_t n = names.size();

    std::vector<Row> rows;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        Row r;
        r.a.assign(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) r.a[j] = forms[i].coefficient(names[j]);
        r.c = forms[i].constant();
        r.lambda.assign(forms.size(), Rational(0));
        r.lambda[i] = 1;
        rows.push_back(std::move(r));
    }

    FeasibilityResult result;
    auto infeasible = [&](const Row& r) {
        result.feasible = false;
        result.multipliers = r.lambda;
        result.combined_constant = r.c;
        return result;
    };

    // levels[k] holds the system before variable k is eliminated; it only involves variables 0..k.
    std::vector<std::vector<Row>> levels(n);
    for (std::size_t step = n; step-- > 0;) {
        for (auto& r : rows) normalize(r);
        levels[step] = rows;
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            int s = sgn(r.a[step]);
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational wp = -q.a[step], wq = p.a[step];
                Row r;
                r.a.resize(n);
                for (std::size_t j = 0; j < n; ++j) r.a[j] = wp * p.a[j] + wq * q.a[j];
                r.c = wp * p.c + wq * q.c;
                r.lambda.resize(forms.size());
                for (std::size_t j = 0; j < forms.size(); ++j) r.lambda[j] = wp * p.lambda[j] + wq * q.lambda[j];
                next.push_back(std::move(r));
            }
        std::set<std::pair<RatVector, Rational>> seen;
        rows.clear();
        for (auto& r : next) {
            normalize(r);
            if (r.no_variables() && sgn(r.c) > 0) continue;
            if (!seen.insert({r.a, r.c}).second) continue;
            rows.push_back(std::move(r));
        }
    }
    for (const auto& r : rows)
        if (r.no_variables() && sgn(r.c) <= 0) return infeasible(r);

    RatVector values(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto& r : levels[k]) {
            if (sgn(r.a[k]) == 0) continue;
            Rational rest = r.c;
            for (std::size_t j = 0; j < k; ++j) rest += r.a[j] * values[j];
            Rational bound = -rest / r.a[k];
            if (sgn(r.a[k]) > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        values[k] = pick_between(lo, hi);
    }
    result.feasible = true;
    for (std::size_t j = 0; j < n; ++j) result.witness[names[j]] = values[j];
    return result;
}

EuclideanRegion euclidean_region_nonempty(const FeynmanGraph& g, const KinematicSpec& kin) {
    ParamPoly f = second_symanzik(g, kin);
    auto terms = f.terms();
    std::vector<LinearForm> forms;
    for (const auto& [e, c] : terms) forms.push_back(c);
    FeasibilityResult fr = strict_feasibility(forms);

    EuclideanRegion out;
    out.nonempty = fr.feasible;
    std::vector<std::string> vars = default_variable_names(g.edges.size(), "x");
    std::ostringstream trace;
    if (fr.feasible) {
        out.witness = fr.witness;
        trace << "every coefficient is positive at";
        for (const auto& [name, v] : fr.witness) trace << " " << name << "=" << to_string(v);
    } else {
        trace << "nonnegative combination";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (sgn(fr.multipliers[i]) == 0) continue;
            out.contradiction.push_back(terms[i].first);
            out.multipliers.push_back(fr.multipliers[i]);
            trace << " + " << to_string(fr.multipliers[i]) << "*[" << monomial_string(terms[i].first, vars) << ": "
                  << to_string(terms[i].second) << "]";
        }
        trace << " = " << to_string(fr.combined_constant) << " <= 0";
    }
    out.trace = trace.str();
    return out;
}

ConvergenceReport convergence_check(const FeynmanGraph& g, const KinematicSpec& kin, const Assignment& values,
                                    const RatVector& nu, const Rational& D, const SearchConfig& cfg) {
    if (nu.size() != g.edges.size()) throw DimensionMismatch("nu needs one entry per internal edge");
    const Rational loops(static_cast<long>(g.loops()));
    Rational total = 0;
    for (const auto& x : nu) total += x;
    ConvergenceReport rep;
    rep.u_exponent = total - (loops + 1) * D / 2;
    rep.f_exponent = total - loops * D / 2;
    if (sgn(rep.f_exponent) <= 0) throw std::invalid_argument("the exponent |nu| - l D / 2 must be positive");

    SparsePoly f = instantiate(second_symanzik(g, kin), values);
    if (f.is_zero()) throw std::invalid_argument("second Symanzik polynomial vanishes at these values");
    SearchConfig strict = cfg;
    strict.mode = PolyaMode::strict_support;
    strict.support_A.reset();
    strict.k = 1;
    rep.condition_i = sparse_polya_certify(f, strict);

    if (sgn(rep.u_exponent) < 0) {
        rep.note = "U exponent is negative; condition (ii) not evaluated";
    } else {
        std::vector<RatVector> pts;
        for (const auto& u : newton_polytope(first_symanzik(g)).vertices) {
            RatVector p = nu;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += rep.u_exponent * static_cast<long>(u[i]);
            pts.push_back(p);
        }
        rep.condition_ii = relint_contains(pts, scale_polytope(newton_polytope(f), rep.f_exponent));
    }
    if (rep.note.empty()) rep.note = rep.convergent() ? "convergence guaranteed" : "not decided";
    else rep.note += "; not decided";
    return rep;
}

}  // namespace spolya
