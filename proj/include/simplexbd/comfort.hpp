#pragma once

#include "simplexbd/geometry.hpp"
#include "simplexbd/pl1d.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sbd {

using PointMap = std::function<BaryPoint(const BaryPoint&)>;

enum class Provenance {
    Identity,
    LambdaLift,
    Diagonal,
    LayerExtension,
    BoundaryExtension,
    Counterexample,
    ThetaInduction,
    Custom,
};

const char* to_string(Provenance p);

/// Evaluable self-map of Δ_n. Everything except Custom claims COMFORT membership.
struct SimplexHomeo {
    std::size_t dim = 0;
    PointMap forward;
    PointMap inverse;  // empty when no closed form is known
    Provenance provenance = Provenance::Custom;
    std::string id;

    BaryPoint operator()(const BaryPoint& x) const;
    bool has_inverse() const { return static_cast<bool>(inverse); }
    BaryPoint inv(const BaryPoint& y) const;
    bool claims_comfort() const { return provenance != Provenance::Custom; }
};

SimplexHomeo identity_homeo(std::size_t n);

/// Caches f by exact input. Safe to call from several threads; the cache is
/// dropped wholesale once it holds max_entries points.
PointMap memoize(PointMap f, std::size_t max_entries = std::size_t{1} << 20);

/// Λ_n(f) for an increasing homeomorphism f of [0,1/(n+1)] fixing both ends.
SimplexHomeo lambda_lift(const PLMap& f, std::size_t n);

/// Extends φ: Layer_{n,α} -> Layer_{n,β} to Δ_n.
/// Allowed levels: 0 < α,β <= 1/(n+1), or α = β = 0.
SimplexHomeo extend_from_layer(PointMap phi, const Rational& alpha, const Rational& beta, std::size_t n);

/// Extends a COMFORT map φ of BOU_n carrying BOU∩♣α onto BOU∩♣β to Δ_n,
/// reparametrizing each segment [Center, b] by τ[b]. Requires 0 <= α,β < 1/(n+1).
/// Sampled boundary cross points are checked at construction time.
SimplexHomeo extend_from_boundary(PointMap phi, const Rational& alpha, const Rational& beta, std::size_t n);

/// The layer-preserving COMFORT map of Δ_2 that is not a Λ_2 lift.
SimplexHomeo counterexample_map();
/// Its boundary profile x -> x/2, 5x/2 - 1/2, x on [0,1/4], [1/4,1/3], [1/3,1/2].
PLMap counterexample_profile();

struct Violation {
    std::string kind;
    std::string witness;
    std::string expected;
    std::string actual;
};

struct ComfortReport {
    std::string map_id;
    std::size_t n = 0;
    std::size_t samples_checked = 0;
    std::vector<Violation> permutation_violations;
    std::vector<Violation> order_violations;
    std::vector<Violation> bijectivity_spot_failures;

    bool pass() const {
        return permutation_violations.empty() && order_violations.empty() && bijectivity_spot_failures.empty();
    }
};

/// Adjacent transpositions, the full reversal, and 8 seeded random permutations.
std::vector<std::vector<std::size_t>> test_permutations(std::size_t n, std::uint64_t seed);

ComfortReport check_comfort(const SimplexHomeo& F, const std::vector<BaryPoint>& grid,
                            std::uint64_t seed = 20240917);

/// Sorted-order condition: x_i < x_j implies y_i <= y_j, and x_i = x_j implies y_i = y_j.
bool keeps_order(const BaryPoint& x, const BaryPoint& y);

}  // namespace sbd
