#pragma once

#include "spolya/geometry.hpp"
#include "spolya/polynomial.hpp"
#include "spolya/power_sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spolya {

enum class PolyaMode { nonneg, strict_support };
enum class CertificateStatus { Certified, RefutedNewton, RefutedWitness, Unknown };

std::string to_string(PolyaMode m);
std::string to_string(CertificateStatus s);
PolyaMode parse_mode(const std::string& s);
CertificateStatus parse_status(const std::string& s);

// Called after every step N with the current product.
using StepObserver = std::function<void(unsigned long, const PowerSequence&)>;

struct SearchConfig {
    unsigned long n_max = 64;
    PolyaMode mode = PolyaMode::nonneg;
    bool emit_product = false;
    unsigned k = 1;
    std::optional<PointSet> support_A;
    StepObserver observer;
};

struct Witness {
    std::vector<std::size_t> face_active;
    RatVector point;
    Rational value;
};

struct Certificate {
    CertificateStatus status = CertificateStatus::Unknown;
    PolyaMode mode = PolyaMode::nonneg;
    std::string kind;  // sparse, classical, custom, cox_primitive, cox_irrelevant
    std::vector<SparsePoly> multipliers;
    std::vector<unsigned long> exponents;
    std::size_t product_terms = 0;
    std::vector<Offender> offenders;
    std::optional<Witness> witness;
    std::optional<SparsePoly> product;
    // Support data for the strict-support check and the Newton guard.
    std::optional<PointSet> support_A;
    unsigned k = 1;
    bool newton_guard = true;
    // Cox certificates: the diagonal substitution x -> x^v.
    ExponentVector v;

    unsigned long N() const { return exponents.empty() ? 0 : exponents.front(); }
};

Certificate sparse_polya_certify(const SparsePoly& f, const SearchConfig& cfg = {});
// A = {e_1, ..., e_n} and k = deg f; f must be homogeneous.
Certificate classical_polya_certify(const SparsePoly& f, SearchConfig cfg = {});
// Power search with a user multiplier; the Newton guard is skipped.
Certificate certify_with_multiplier(const SparsePoly& f, const SparsePoly& g, const SearchConfig& cfg = {});

struct FaceSample {
    Face face;
    RatVector point;
    Rational value;
};

// Evaluates the truncation to every nonempty face of Newt(f) at deterministic positive points.
// A value <= 0 refutes strict supp(f)-copositivity; positive values prove nothing.
std::vector<FaceSample> face_positivity_diagnostics(const SparsePoly& f, unsigned samples_per_face,
                                                    std::uint64_t seed = 1);
// Points shared by the diagnostics: the all-ones point, then rationals k/10 with 1 <= k <= 100.
std::vector<RatVector> sample_points(std::size_t dim, unsigned count, std::uint64_t seed);

bool verify_certificate(const SparsePoly& f, const Certificate& cert);

}  // namespace spolya
