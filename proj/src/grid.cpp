#include "simplexbd/grid.hpp"

#include "simplexbd/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sbd {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

namespace {

// Compositions of `total` into `parts` nonnegative integers, lexicographic.
void compositions(std::size_t parts, long total, bool distinct,
                  const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> cur(parts, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t slot, long left) {
        if (slot + 1 == parts) {
            cur[slot] = left;
            if (distinct) {
                for (std::size_t k = 0; k < slot; ++k)
                    if (cur[k] == left) return;
            }
            emit(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            if (distinct) {
                bool dup = false;
                for (std::size_t k = 0; k < slot && !dup; ++k) dup = cur[k] == v;
                if (dup) continue;
            }
            cur[slot] = v;
            rec(slot + 1, left - v);
        }
    };
    rec(0, total);
}

BaryPoint from_counts(const std::vector<long>& counts, long den) {
    std::vector<Rational> c;
    c.reserve(counts.size());
    for (long v : counts) c.push_back(make_rational(v, den));
    return BaryPoint(std::move(c));
}

void append_unique(std::vector<BaryPoint>& out, std::set<std::string>& seen, BaryPoint p) {
    if (seen.insert(to_string(p)).second) out.push_back(std::move(p));
}

}  // namespace

BaryPoint random_point(std::size_t n, SplitMix64& rng, long max_denominator) {
    const long lo = static_cast<long>(n) + 1;
    const long q = rng.range(lo, std::max(lo, max_denominator));
    // n sorted cut points in [0, q] split q into n+1 parts.
    std::vector<long> cuts(n);
    for (auto& c : cuts) c = rng.range(0, q);
    std::sort(cuts.begin(), cuts.end());
    std::vector<long> parts(n + 1);
    long prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
        parts[k] = cuts[k] - prev;
        prev = cuts[k];
    }
    parts[n] = q - prev;
    return from_counts(parts, q);
}

SampleGrid canonical_grid(std::size_t n, long denominator, std::uint64_t seed) {
    if (denominator < 1) throw Error(ErrorKind::BadLevels, "grid denominator must be positive");
    SampleGrid g{n, denominator, seed, {}};
    std::set<std::string> seen;
    compositions(n + 1, denominator, true,
                 [&](const std::vector<long>& c) { append_unique(g.points, seen, from_counts(c, denominator)); });
    SplitMix64 rng(seed ^ (0x51ED270B2A3C4D5EULL * (n + 1)));
    for (std::size_t k = 0; k < kRandomGridPoints; ++k) append_unique(g.points, seen, random_point(n, rng));
    return g;
}

std::vector<BaryPoint> lattice_points(std::size_t n, long denominator) {
    std::vector<BaryPoint> out;
    compositions(n + 1, denominator, false,
                 [&](const std::vector<long>& c) { out.push_back(from_counts(c, denominator)); });
    return out;
}

SampleGrid adversarial_grid(std::size_t n, long denominator, std::uint64_t seed, long tie_denominator) {
    SampleGrid g = canonical_grid(n, denominator, seed);
    std::set<std::string> seen;
    for (const auto& p : g.points) seen.insert(to_string(p));
    append_unique(g.points, seen, center(n));
    for (auto& p : lattice_points(n, tie_denominator)) append_unique(g.points, seen, std::move(p));
    return g;
}

std::vector<BaryPoint> cross_samples(std::size_t n, const Rational& alpha, const std::vector<BaryPoint>& base) {
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "Δ_0 has no proper cross samples");
    std::vector<BaryPoint> out;
    std::set<std::string> seen;
    const Rational rest = 1 - alpha;
    for (const auto& u : base) {
        if (u.dim() + 1 != n) throw Error(ErrorKind::DimensionMismatch, "cross base must live in Δ_{n-1}");
        for (std::size_t j = 0; j <= n; ++j) {
            std::vector<Rational> c;
            c.reserve(n + 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) c.push_back(alpha);
                c.push_back(rest * u[k]);
            }
            if (j == n) c.push_back(alpha);
            append_unique(out, seen, BaryPoint(std::move(c)));
        }
    }
    return out;
}

std::vector<BaryPoint> multi_zero_boundary(std::size_t n, long denominator) {
    std::vector<BaryPoint> out;
    for (auto& p : lattice_points(n, denominator)) {
        auto zeros = std::count_if(p.coords().begin(), p.coords().end(), [](const Rational& r) { return sgn(r) == 0; });
        if (zeros >= 2) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace sbd
