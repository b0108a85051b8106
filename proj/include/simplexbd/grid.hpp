#pragma once

#include "simplexbd/geometry.hpp"

#include <cstdint>
#include <vector>

namespace sbd {

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr long kDefaultDenominator = 60;
inline constexpr std::size_t kRandomGridPoints = 64;
inline constexpr long kRandomMaxDenominator = 10000;

/// Small deterministic generator; std distributions differ between standard
/// libraries, and reports must be reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

struct SampleGrid {
    std::size_t n = 0;
    long denominator = 0;
    std::uint64_t seed = 0;
    std::vector<BaryPoint> points;
};

/// All Sponge points of Δ_n with common denominator D, followed by
/// seeded random rational points with denominators up to 10^4.
/// Duplicates are dropped, so Δ_0 yields exactly one point.
SampleGrid canonical_grid(std::size_t n, long denominator = kDefaultDenominator,
                          std::uint64_t seed = kDefaultSeed);

/// Every point of Δ_n with common denominator D (ties and boundary included).
std::vector<BaryPoint> lattice_points(std::size_t n, long denominator);

/// Canonical grid plus ties, boundary points, vertices and the center.
SampleGrid adversarial_grid(std::size_t n, long denominator = kDefaultDenominator,
                            std::uint64_t seed = kDefaultSeed, long tie_denominator = 12);

/// Points of the α-cross: α inserted at each slot of the given Δ_{n-1} points.
std::vector<BaryPoint> cross_samples(std::size_t n, const Rational& alpha, const std::vector<BaryPoint>& base);

/// Every point of Δ_n with at least two zero coordinates and denominator D.
std::vector<BaryPoint> multi_zero_boundary(std::size_t n, long denominator);

BaryPoint random_point(std::size_t n, SplitMix64& rng, long max_denominator = kRandomMaxDenominator);

}  // namespace sbd
