#pragma once

#include "spolya/geometry.hpp"
#include "spolya/polya.hpp"
#include "spolya/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spolya {

using Assignment = std::map<std::string, Rational>;

// constant + sum of coefficient * parameter; zero coefficients are never stored.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}
    static LinearForm parameter(const std::string& name, const Rational& c = 1);

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational>& coefficients() const { return coefs_; }
    Rational coefficient(const std::string& name) const;
    bool is_zero() const { return sgn(constant_) == 0 && coefs_.empty(); }
    bool involves(const std::string& name) const { return coefs_.count(name) > 0; }
    // Throws InputError when a parameter is unassigned.
    Rational evaluate(const Assignment& values) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& c);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Rational constant_;
    std::map<std::string, Rational> coefs_;
};

// Accepts sums of rational multiples of parameters, e.g. "-(s + t)/2", "m1 - 3/4*s", "1.5".
LinearForm parse_linear_form(std::string_view text);
std::string to_string(const LinearForm& f);

struct MassTag {
    enum class Kind { symbol, zero, fixed };
    Kind kind = Kind::zero;
    std::string symbol;
    Rational value;

    static MassTag parse(std::string_view text);
    LinearForm form() const;
    std::string label() const;
};

struct InternalEdge {
    std::size_t u = 0;  // 1-based vertices
    std::size_t v = 0;
    MassTag mass;
};

struct ExternalLeg {
    std::size_t vertex = 0;  // 1-based
    std::size_t momentum = 0;  // i of p_i
};

struct FeynmanGraph {
    std::size_t vertex_count = 0;
    std::vector<InternalEdge> edges;
    std::vector<ExternalLeg> legs;

    std::size_t loops() const { return edges.size() + 1 - vertex_count; }
    // Throws InputError for bad indices and std::invalid_argument when disconnected.
    void validate() const;
};

struct KinematicSpec {
    bool momentum_conservation = false;
    std::map<std::pair<std::size_t, std::size_t>, LinearForm> k;  // keys with i <= j

    void set(std::size_t i, std::size_t j, LinearForm f);
    // Throws InputError when k_ij is absent.
    const LinearForm& get(std::size_t i, std::size_t j) const;
    // Row sums over the given momenta must vanish identically when momentum conservation is set.
    void validate(const std::vector<std::size_t>& momenta) const;
};

using EdgeSet = std::vector<std::size_t>;  // sorted 0-based edge indices

struct TwoForest {
    EdgeSet edges;
    std::vector<std::size_t> first;   // vertices of the piece holding the smallest vertex
    std::vector<std::size_t> second;
};

std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g);
std::vector<TwoForest> spanning_2forests(const FeynmanGraph& g);

// Coefficients are linear forms in the kinematic and mass parameters.
class ParamPoly {
public:
    explicit ParamPoly(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    void add(const ExponentVector& e, const LinearForm& c);
    LinearForm coefficient(const ExponentVector& e) const;
    // Terms in grevlex descending order.
    std::vector<std::pair<ExponentVector, LinearForm>> terms() const;
    std::size_t size() const { return terms_.size(); }
    std::vector<std::string> parameters() const;

private:
    std::size_t dim_;
    std::map<ExponentVector, LinearForm> terms_;
};

std::string to_string(const ParamPoly& p, const std::vector<std::string>& vars);

SparsePoly first_symanzik(const FeynmanGraph& g);
ParamPoly second_symanzik(const FeynmanGraph& g, const KinematicSpec& kin);
// The two summands of the second Symanzik polynomial.
ParamPoly forest_part(const FeynmanGraph& g, const KinematicSpec& kin);
ParamPoly mass_part(const FeynmanGraph& g);

struct SupportFlag {
    bool in_a1 = false;
    bool in_a2 = false;
    bool involves_mass = false;
};

struct GenericSupport {
    PointSet points;
    std::vector<SupportFlag> flags;  // parallel to points
};

GenericSupport generic_support(const FeynmanGraph& g, const KinematicSpec& kin);

// Terms whose form evaluates to zero are dropped.
SparsePoly instantiate(const ParamPoly& f, const Assignment& values);

// Strict system { form > 0 } solved by Fourier-Motzkin elimination.
struct FeasibilityResult {
    bool feasible = false;
    Assignment witness;
    // Infeasible: nonnegative multipliers, one per input form, whose combination is a constant <= 0.
    std::vector<Rational> multipliers;
    Rational combined_constant;
};

FeasibilityResult strict_feasibility(const std::vector<LinearForm>& forms);

struct EuclideanRegion {
    bool nonempty = false;
    Assignment witness;
    std::vector<ExponentVector> contradiction;  // monomials whose coefficients cannot all be positive
    std::vector<Rational> multipliers;         // parallel to contradiction
    std::string trace;
};

EuclideanRegion euclidean_region_nonempty(const FeynmanGraph& g, const KinematicSpec& kin);

struct ConvergenceReport {
    Rational u_exponent;  // |nu| - (l+1) D / 2
    Rational f_exponent;  // |nu| - l D / 2
    Certificate condition_i;
    std::optional<bool> condition_ii;  // empty when not evaluated
    std::string note;
    bool convergent() const {
        return condition_i.status == CertificateStatus::Certified && condition_ii.value_or(false);
    }
};

ConvergenceReport convergence_check(const FeynmanGraph& g, const KinematicSpec& kin, const Assignment& values,
                                    const RatVector& nu, const Rational& D, const SearchConfig& cfg = {});

}  // namespace spolya
