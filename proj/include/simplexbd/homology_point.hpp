#pragma once

#include "simplexbd/chain.hpp"

#include <string>

namespace sbd {

struct ModuleDescription {
    enum class Kind { FreeRank1, Cyclic, Zero };
    Kind kind = Kind::Zero;
    Integer order = 0;  // only for Cyclic, always >= 2

    /// Z/qZ with Cyclic(0) -> Z and Cyclic(±1) -> 0.
    static ModuleDescription cyclic(const Integer& q);
    static ModuleDescription free_rank1() { return {Kind::FreeRank1, 0}; }
    static ModuleDescription zero() { return {Kind::Zero, 0}; }

    std::string str() const;
    friend bool operator==(const ModuleDescription&, const ModuleDescription&) = default;
};

/// ∂_n on the rank-1 point complex: multiplication by `factor` (0 means the zero map).
struct ScalarMap {
    Integer factor = 0;
    bool is_zero() const { return sgn(factor) == 0; }
    std::string str() const;
};

Integer sigma(const CoefficientTuple& m);
ScalarMap point_boundary_map(std::size_t n, const CoefficientTuple& m);

/// ker(∂_n) / im(∂_{n+1}) of a complex Z <- Z <- ... given by scalar maps.
ModuleDescription homology_from_scalars(const ScalarMap& d_n, const ScalarMap& d_n_plus_1);

/// Closed form; throws if it disagrees with homology_from_scalars.
ModuleDescription point_homology(std::size_t n, const CoefficientTuple& m);

/// "n, boundary, H_n", e.g. "1, 0, Z/13".
std::string homology_row(std::size_t n, const CoefficientTuple& m);

}  // namespace sbd
