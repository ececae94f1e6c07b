#pragma once

#include "spolya/geometry.hpp"
#include "spolya/polya.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spolya {

enum class CoxVariant { primitive, irrelevant };

std::string to_string(CoxVariant v);
CoxVariant parse_variant(const std::string& s);

struct CoxContext {
    LatticePolytope polytope;  // full-dimensional; facet i is Cox variable x_{i+1}
    std::vector<std::vector<std::size_t>> primitive;
    std::vector<ExponentVector> irrelevant;
    std::optional<SimplexProductDecomposition> decomposition;
    std::string violated;  // why the polytope is not a simplex product
    ExponentVector v;      // positive vector in ker(F); empty when unavailable

    std::size_t rays() const { return polytope.facets.size(); }
    ExponentVector b() const { return polytope.offsets(); }
};

CoxContext make_cox_context(const LatticePolytope& p);
// Expert entry: any positive integer v with F v = 0, product of simplices or not.
CoxContext make_cox_context(const LatticePolytope& p, const ExponentVector& v);

SparsePoly cox_homogenize(const SparsePoly& f, const CoxContext& ctx);
// h = f_cox(x^v).
SparsePoly cox_substitute(const SparsePoly& f, const CoxContext& ctx);

// f_cox(x_I) == x^b f^{G_I}(phi(x)) at each point; I must be the active set of a face.
bool cox_truncation_check(const SparsePoly& f, const CoxContext& ctx, const std::vector<std::size_t>& active,
                          const std::vector<RatVector>& points);

struct CoxOptions {
    SearchConfig search;           // n_max, emit_product, observer; mode is ignored
    bool allow_non_product = false;
};

Certificate cox_certify(const SparsePoly& f, const CoxContext& ctx, CoxVariant variant, const CoxOptions& opts = {});
bool verify_cox_certificate(const SparsePoly& f, const CoxContext& ctx, const Certificate& cert);

SparsePoly primitive_multiplier(const CoxContext& ctx, std::size_t collection);
SparsePoly irrelevant_multiplier(const CoxContext& ctx);

// weight . e over the terms when constant.
std::optional<Integer> homogeneity_degree(const SparsePoly& p, const std::vector<Integer>& weight);
// Throws Error when some kernel vector gives a non-constant degree.
std::vector<std::pair<std::vector<Integer>, Integer>> multihomogeneity_degrees(const SparsePoly& f_cox,
                                                                               const CoxContext& ctx);
bool irrelevant_membership_check(const SparsePoly& f_cox, const CoxContext& ctx);

}  // namespace spolya
