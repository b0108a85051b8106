#include "simplexbd/comfort.hpp"

#include "simplexbd/error.hpp"
#include "simplexbd/grid.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace sbd {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Identity: return "Identity";
        case Provenance::LambdaLift: return "LambdaLift";
        case Provenance::Diagonal: return "Diagonal";
        case Provenance::LayerExtension: return "LayerExtension";
        case Provenance::BoundaryExtension: return "BoundaryExtension";
        case Provenance::Counterexample: return "Counterexample";
        case Provenance::ThetaInduction: return "ThetaInduction";
        case Provenance::Custom: return "Custom";
    }
    return "Custom";
}

BaryPoint SimplexHomeo::operator()(const BaryPoint& x) const {
    if (x.dim() != dim) throw Error(ErrorKind::DimensionMismatch, id + " acts on Δ_" + std::to_string(dim));
    return forward(x);
}

BaryPoint SimplexHomeo::inv(const BaryPoint& y) const {
    if (!inverse) throw Error(ErrorKind::OutOfDomain, id + " has no stored inverse");
    if (y.dim() != dim) throw Error(ErrorKind::DimensionMismatch, id + " acts on Δ_" + std::to_string(dim));
    return inverse(y);
}

SimplexHomeo identity_homeo(std::size_t n) {
    auto id = [](const BaryPoint& x) { return x; };
    return {n, id, id, Provenance::Identity, "id:n=" + std::to_string(n)};
}

namespace {

struct PointHash {
    std::size_t operator()(const std::vector<Rational>& v) const {
        std::size_t h = v.size();
        for (const auto& r : v) {
            h = h * 1000003u ^ mpz_get_ui(r.get_num_mpz_t()) ^ (std::size_t{mpz_sgn(r.get_num_mpz_t()) < 0} << 63);
            h = h * 1000003u ^ mpz_get_ui(r.get_den_mpz_t());
        }
        return h;
    }
};

}  // namespace

PointMap memoize(PointMap f, std::size_t max_entries) {
    struct State {
        std::mutex mu;
        std::unordered_map<std::vector<Rational>, BaryPoint, PointHash> seen;
    };
    auto state = std::make_shared<State>();
    return [f = std::move(f), state, max_entries](const BaryPoint& x) {
        {
            std::lock_guard<std::mutex> lock(state->mu);
            auto it = state->seen.find(x.coords());
            if (it != state->seen.end()) return it->second;
        }
        BaryPoint y = f(x);
        std::lock_guard<std::mutex> lock(state->mu);
        if (state->seen.size() >= max_entries) state->seen.clear();
        state->seen.emplace(x.coords(), y);
        return y;
    };
}

namespace {

Rational top_of(std::size_t n) { return Rational(1, static_cast<unsigned long>(n + 1)); }

// Number of sorted entries at or below 1/(n+1); these are the "small" ones.
std::size_t small_count(const BaryPoint& x, const std::vector<std::size_t>& order, const Rational& top) {
    std::size_t r = 0;
    while (r < order.size() && x[order[r]] <= top) ++r;
    return r;
}

BaryPoint lift_forward(const PLMap& f, const BaryPoint& x) {
    const std::size_t n = x.dim();
    const Rational top = top_of(n);
    const auto order = sort_permutation(x);
    const std::size_t r = small_count(x, order, top);
    std::vector<Rational> y(x.size());
    Rational D = 0;
    for (std::size_t k = 0; k < r; ++k) {
        const auto i = order[k];
        y[i] = f(x[i]);
        D += x[i] - y[i];
    }
    if (r < x.size()) {
        Rational spread = 0;
        for (std::size_t k = r; k < x.size(); ++k) spread += x[order[k]] - top;
        const Rational delta = D / spread;
        for (std::size_t k = r; k < x.size(); ++k) {
            const auto i = order[k];
            y[i] = x[i] + delta * (x[i] - top);
        }
    }
    return BaryPoint(std::move(y));
}

BaryPoint lift_inverse(const PLMap& finv, const BaryPoint& y) {
    const std::size_t n = y.dim();
    const Rational top = top_of(n);
    const auto order = sort_permutation(y);
    const std::size_t r = small_count(y, order, top);
    std::vector<Rational> x(y.size());
    Rational D = 0;
    for (std::size_t k = 0; k < r; ++k) {
        const auto i = order[k];
        x[i] = finv(y[i]);
        D += x[i] - y[i];
    }
    if (r < y.size()) {
        Rational spread = 0;
        for (std::size_t k = r; k < y.size(); ++k) spread += y[order[k]] - top;
        const Rational delta = D / (spread - D);
        for (std::size_t k = r; k < y.size(); ++k) {
            const auto i = order[k];
            x[i] = (y[i] + delta * top) / (1 + delta);
        }
    }
    return BaryPoint(std::move(x));
}

}  // namespace

SimplexHomeo lambda_lift(const PLMap& f, std::size_t n) {
    const Rational top = top_of(n);
    if (f.lo() != 0 || f.hi() != top)
        throw Error(ErrorKind::BadDomain, "Λ_" + std::to_string(n) + " needs a map of [0," + to_string(top) + "]");
    if (f.image_lo() != 0 || f.image_hi() != top)
        throw Error(ErrorKind::EndpointNotFixed, "Λ_n needs f(0)=0 and f(1/(n+1))=1/(n+1)");
    PLMap finv = pl_inverse(f);
    SimplexHomeo h;
    h.dim = n;
    h.forward = [f](const BaryPoint& x) { return lift_forward(f, x); };
    h.inverse = [finv](const BaryPoint& y) { return lift_inverse(finv, y); };
    h.provenance = Provenance::LambdaLift;
    h.id = "lambda:n=" + std::to_string(n);
    return h;
}

SimplexHomeo extend_from_layer(PointMap phi, const Rational& alpha, const Rational& beta, std::size_t n) {
    const Rational top = top_of(n);
    const bool zero_case = sgn(alpha) == 0 && sgn(beta) == 0;
    const bool positive_case = sgn(alpha) > 0 && sgn(beta) > 0 && alpha <= top && beta <= top;
    if (!zero_case && !positive_case)
        throw Error(ErrorKind::BadLevels, "layer extension needs 0 < α,β <= 1/(n+1) or α = β = 0");

    SimplexHomeo h;
    h.dim = n;
    h.provenance = Provenance::LayerExtension;
    h.id = "layer_ext:n=" + std::to_string(n) + ",alpha=" + to_string(alpha) + ",beta=" + to_string(beta);
    if ((alpha == top) != (beta == top))
        throw Error(ErrorKind::BadLevels, "only the center layer maps onto the center layer");
    if (alpha == top) {
        // Layer_{n,1/(n+1)} is the center alone.
        h.forward = [](const BaryPoint& x) { return x; };
        h.inverse = h.forward;
        return h;
    }
    const PLMap sigma = zero_case ? identity_map(0, top) : polygon({{0, 0}, {alpha, beta}, {top, top}}, 0, top);
    const Rational scale(static_cast<unsigned long>(n + 1));
    h.forward = [phi = std::move(phi), sigma, alpha, scale, n](const BaryPoint& x) {
        const Rational a = min_value(x);
        if (a * scale == 1) return center(n);
        const BaryPoint p = project_boundary(phi(project_layer(x, alpha)));
        return segment_eval(center(n), p, sigma(a) * scale);
    };
    return h;
}

SimplexHomeo extend_from_boundary(PointMap phi, const Rational& alpha, const Rational& beta, std::size_t n) {
    const Rational top = top_of(n);
    if (sgn(alpha) < 0 || sgn(beta) < 0 || alpha >= top || beta >= top)
        throw Error(ErrorKind::BadLevels, "boundary extension needs 0 <= α,β < 1/(n+1)");

    // Spot-check the cross hypothesis on BOU_n ∩ ♣α before trusting φ.
    if (n >= 2) {
        for (const auto& u : lattice_points(n - 2, 4)) {
            for (std::size_t z = 0; z <= n; ++z) {
                for (std::size_t a = 0; a <= n; ++a) {
                    if (a == z) continue;
                    std::vector<Rational> c(n + 1);
                    std::size_t k = 0;
                    for (std::size_t s = 0; s <= n; ++s) {
                        if (s == z) c[s] = 0;
                        else if (s == a) c[s] = alpha;
                        else c[s] = (1 - alpha) * u[k++];
                    }
                    BaryPoint b(std::move(c));
                    BaryPoint img = phi(b);
                    for (std::size_t s = 0; s <= n; ++s) {
                        if ((b[s] == alpha) != (img[s] == beta))
                            throw Error(ErrorKind::CrossPropertyViolation,
                                        to_string(b) + " maps to " + to_string(img) + " outside the β-cross");
                    }
                }
            }
        }
    }

    SimplexHomeo h;
    h.dim = n;
    h.provenance = Provenance::BoundaryExtension;
    h.id = "boundary_ext:n=" + std::to_string(n) + ",alpha=" + to_string(alpha) + ",beta=" + to_string(beta);
    const Rational scale(static_cast<unsigned long>(n + 1));
    h.forward = [phi = std::move(phi), alpha, beta, scale, n](const BaryPoint& x) {
        const Rational t = min_value(x) * scale;
        if (sgn(t) == 0) return phi(x);
        if (t == 1) return center(n);
        const BaryPoint b = project_boundary(x);
        const BaryPoint c = phi(b);
        const PLMap tau = tau_polygon(b, c, alpha, beta);
        return segment_eval(center(n), c, tau(t));
    };
    return h;
}

PLMap counterexample_profile() {
    return polygon({{0, 0}, {Rational(1, 4), Rational(1, 8)}, {Rational(1, 3), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}},
                   0, Rational(1, 2));
}

SimplexHomeo counterexample_map() {
    const PLMap g = counterexample_profile();
    // On BOU_2: keep the zero, send the smaller of the other two to g(.),
    // which the permutation and order conditions force.
    PointMap on_boundary = [g](const BaryPoint& y) {
        std::size_t z = 0;
        while (sgn(y[z]) != 0) ++z;
        std::size_t a = z == 0 ? 1 : 0;
        std::size_t b = 3 - z - a;
        if (y[a] == y[b]) return y;
        if (y[b] < y[a]) std::swap(a, b);
        std::vector<Rational> c(3);
        c[z] = 0;
        c[a] = g(y[a]);
        c[b] = 1 - c[a];
        return BaryPoint(std::move(c));
    };
    SimplexHomeo h = extend_from_layer(on_boundary, 0, 0, 2);
    h.provenance = Provenance::Counterexample;
    h.id = "counterexample:n=2";
    return h;
}

std::vector<std::vector<std::size_t>> test_permutations(std::size_t n, std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> base(n + 1);
    std::iota(base.begin(), base.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = base;
        std::swap(p[i], p[i + 1]);
        perms.push_back(std::move(p));
    }
    if (n >= 1) {
        auto rev = base;
        std::reverse(rev.begin(), rev.end());
        perms.push_back(std::move(rev));
        SplitMix64 rng(seed + n);
        for (int k = 0; k < 8; ++k) {
            auto p = base;
            for (std::size_t i = n; i > 0; --i) std::swap(p[i], p[static_cast<std::size_t>(rng.range(0, static_cast<long>(i)))]);
            perms.push_back(std::move(p));
        }
    }
    return perms;
}

bool keeps_order(const BaryPoint& x, const BaryPoint& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[i] == x[j] && y[i] != y[j]) return false;
            if (x[i] < x[j] && y[i] > y[j]) return false;
        }
    }
    return true;
}

ComfortReport check_comfort(const SimplexHomeo& F, const std::vector<BaryPoint>& grid, std::uint64_t seed) {
    ComfortReport rep;
    rep.map_id = F.id;
    rep.n = F.dim;
    const auto perms = test_permutations(F.dim, seed);
    std::unordered_map<std::string, std::string> seen_images;

    for (const auto& x : grid) {
        if (x.dim() != F.dim) continue;
        ++rep.samples_checked;
        BaryPoint y = x;
        try {
            y = F(x);
        } catch (const Error& e) {
            rep.bijectivity_spot_failures.push_back({"evaluation_error", to_string(x), "a point of the simplex", e.what()});
            continue;
        }

        for (const auto& p : perms) {
            const BaryPoint lhs = F(permute(x, p));
            const BaryPoint rhs = permute(y, p);
            if (!(lhs == rhs)) rep.permutation_violations.push_back({"permutation", to_string(permute(x, p)), to_string(rhs), to_string(lhs)});
        }
        if (!keeps_order(x, y)) rep.order_violations.push_back({"order", to_string(x), "order pattern of the input", to_string(y)});

        if (F.has_inverse()) {
            const BaryPoint back = F.inv(y);
            if (!(back == x)) rep.bijectivity_spot_failures.push_back({"inverse", to_string(x), to_string(x), to_string(back)});
        } else {
            auto [it, fresh] = seen_images.emplace(to_string(y), to_string(x));
            if (!fresh && it->second != to_string(x))
                rep.bijectivity_spot_failures.push_back({"injectivity", to_string(x), it->second, to_string(y)});
        }
    }
    return rep;
}

}  // namespace sbd
