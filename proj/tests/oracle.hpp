// Independent reference arithmetic for tests. Uses Boost's cpp_rational
// instead of GMP and direct formulas instead of the library's code paths.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Vec = std::vector<Q>;
using Poly = std::vector<std::pair<Q, Q>>;

inline Q q(long a, long b = 1) { return Q(a) / Q(b); }

inline std::string str(const Q& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline std::string str(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v[i]);
    return out + "]";
}

// Linear interpolation through sorted breakpoints.
inline Q pl(const Poly& pts, const Q& t) {
    for (std::size_t k = 1; k < pts.size(); ++k) {
        if (t <= pts[k].first) {
            const auto& [x0, y0] = pts[k - 1];
            const auto& [x1, y1] = pts[k];
            return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
        }
    }
    return pts.back().second;
}

inline Poly eta() { return {{0, 0}, {q(1, 4), q(1, 6)}, {q(3, 4), q(5, 6)}, {1, 1}}; }
inline Poly kappa() { return {{0, 0}, {q(1, 4), q(1, 5)}, {q(3, 4), q(4, 5)}, {1, 1}}; }
inline Poly phi(long n) { return {{0, 0}, {q(1, 2 * (n + 1)), q(1, 2 * (n + 2))}, {q(1, n + 1), q(1, n + 1)}}; }

// Λ_n(f) without sorting: small coordinates go through f, the mass
// difference is spread over the big ones proportionally to x_i - 1/(n+1).
inline Vec lambda(const Poly& f, const Vec& x) {
    const Q top = Q(1) / Q(static_cast<long>(x.size()));
    Q D = 0, S = 0;
    for (const auto& v : x) {
        if (v <= top) D += v - pl(f, v);
        else S += v - top;
    }
    Vec y;
    for (const auto& v : x) y.push_back(v <= top ? pl(f, v) : v + D / S * (v - top));
    return y;
}

inline Q minimum(const Vec& x) {
    Q m = x[0];
    for (const auto& v : x)
        if (v < m) m = v;
    return m;
}

inline Vec pi_alpha(const Vec& x, const Q& alpha) {
    const Q k = Q(static_cast<long>(x.size()));
    const Q m = minimum(x);
    Vec y;
    for (const auto& v : x) y.push_back(alpha + (1 - k * alpha) * (v - m) / (1 - k * m));
    return y;
}

inline Vec insert(const Vec& x, std::size_t j, const Q& v) {
    Vec y;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == j) y.push_back(v);
        y.push_back((1 - v) * x[k]);
    }
    if (j == x.size()) y.push_back(v);
    return y;
}

inline Vec combine(const Vec& a, const Vec& b, const Q& t) {
    Vec y;
    for (std::size_t k = 0; k < a.size(); ++k) y.push_back(t * a[k] + (1 - t) * b[k]);
    return y;
}

inline Vec center(std::size_t n) { return Vec(n + 1, Q(1) / Q(static_cast<long>(n + 1))); }

}  // namespace oracle
