#pragma once

#include "simplexbd/geometry.hpp"
#include "simplexbd/grid.hpp"
#include "simplexbd/pl1d.hpp"

#include "oracle.hpp"

#include <set>
#include <string>
#include <vector>

namespace testsupport {

inline sbd::BaryPoint P(const char* s) { return sbd::parse_point(s); }
inline sbd::Rational R(const char* s) { return sbd::parse_rational(s); }

// A few hundred points of Δ_n: a small lattice (ties, boundary) plus random points.
inline std::vector<sbd::BaryPoint> mixed_points(std::size_t n, std::size_t random_count = 200, long lattice = 12,
                                                std::uint64_t seed = 7) {
    std::vector<sbd::BaryPoint> out = sbd::lattice_points(n, lattice);
    sbd::SplitMix64 rng(seed + n);
    for (std::size_t k = 0; k < random_count; ++k) out.push_back(sbd::random_point(n, rng, 500));
    out.push_back(sbd::center(n));
    return out;
}

// Random increasing homeomorphism of [0, hi] fixing both ends, with up to 4 interior breakpoints.
inline sbd::PLMap random_homeo(const sbd::Rational& hi, sbd::SplitMix64& rng) {
    auto interior = [&](std::size_t k) {
        std::set<sbd::Rational> s;
        while (s.size() < k) {
            sbd::Rational r(rng.range(1, 96), 97);
            r.canonicalize();
            s.insert(r * hi);
        }
        return std::vector<sbd::Rational>(s.begin(), s.end());
    };
    const std::size_t k = static_cast<std::size_t>(rng.range(1, 4));
    auto in = interior(k);
    auto out = interior(k);
    std::vector<sbd::Breakpoint> pts{{0, 0}, {hi, hi}};
    for (std::size_t t = 0; t < k; ++t) pts.emplace_back(in[t], out[t]);
    return sbd::polygon(pts, 0, hi);
}

inline oracle::Poly to_oracle(const sbd::PLMap& f) {
    oracle::Poly p;
    for (const auto& [a, b] : f.breakpoints()) p.emplace_back(oracle::Q(a.get_str()), oracle::Q(b.get_str()));
    return p;
}

inline oracle::Vec to_oracle(const sbd::BaryPoint& x) {
    oracle::Vec v;
    for (const auto& c : x.coords()) v.push_back(oracle::Q(c.get_str()));
    return v;
}

}  // namespace testsupport
