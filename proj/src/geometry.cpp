#include "simplexbd/geometry.hpp"

#include "simplexbd/error.hpp"

#include <algorithm>
#include <numeric>

namespace sbd {

BaryPoint::BaryPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorKind::InvalidPoint, "a point needs at least one coordinate");
    Rational sum = 0;
    for (const auto& c : coords_) {
        if (sgn(c) < 0 || c > 1) throw Error(ErrorKind::InvalidPoint, "coordinate " + to_string(c) + " outside [0,1]");
        sum += c;
    }
    if (sum != 1) throw Error(ErrorKind::InvalidPoint, "coordinates sum to " + to_string(sum));
}

BaryPoint::BaryPoint(std::initializer_list<Rational> coords) : BaryPoint(std::vector<Rational>(coords)) {}

std::string to_string(const BaryPoint& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += to_string(x[i]);
    }
    out += ']';
    return out;
}

BaryPoint parse_point(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coords.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return BaryPoint(std::move(coords));
}

BaryPoint center(std::size_t n) {
    return BaryPoint(std::vector<Rational>(n + 1, Rational(1, static_cast<unsigned long>(n + 1))));
}

BaryPoint vertex(std::size_t n, std::size_t j) {
    if (j > n) throw Error(ErrorKind::IndexRange, "vertex index out of range");
    std::vector<Rational> c(n + 1, Rational(0));
    c[j] = 1;
    return BaryPoint(std::move(c));
}

Rational min_value(const BaryPoint& x) { return *std::min_element(x.coords().begin(), x.coords().end()); }

BaryPoint project_layer(const BaryPoint& x, const Rational& alpha) {
    const std::size_t n = x.dim();
    const Rational top(1, static_cast<unsigned long>(n + 1));
    if (sgn(alpha) < 0 || alpha > top) throw Error(ErrorKind::BadLevels, "layer level outside [0,1/(n+1)]");
    if (alpha == top) return center(n);

    const Rational xmin = min_value(x);
    const Rational scale = 1 - Rational(static_cast<unsigned long>(n + 1)) * xmin;
    if (sgn(scale) == 0) throw Error(ErrorKind::CenterProjection, "projection undefined at the center");

    const Rational spread = 1 - Rational(static_cast<unsigned long>(n + 1)) * alpha;
    std::vector<Rational> y(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational b = (x[i] - xmin) / scale;
        y[i] = alpha + spread * b;
    }
    return BaryPoint(std::move(y));
}

BaryPoint project_boundary(const BaryPoint& x) { return project_layer(x, Rational(0)); }

BaryPoint segment_eval(const BaryPoint& a, const BaryPoint& b, const Rational& t) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "segment endpoints differ in dimension");
    if (sgn(t) < 0 || t > 1) throw Error(ErrorKind::OutOfDomain, "segment parameter outside [0,1]");
    const Rational s = 1 - t;
    std::vector<Rational> y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = t * a[i] + s * b[i];
    return BaryPoint(std::move(y));
}

bool classify(const BaryPoint& x, const RegionSpec& region) {
    using K = RegionSpec::Kind;
    const auto& c = x.coords();
    switch (region.kind) {
        case K::Cross:
            return std::find(c.begin(), c.end(), region.level) != c.end();
        case K::Layer:
            return min_value(x) == region.level;
        case K::Boundary:
            return sgn(min_value(x)) == 0;
        case K::Section:
            if (region.index > x.dim()) throw Error(ErrorKind::IndexRange, "section index out of range");
            return min_value(x) == c[region.index];
        case K::Sponge: {
            std::vector<Rational> s(c);
            std::sort(s.begin(), s.end());
            return std::adjacent_find(s.begin(), s.end()) == s.end();
        }
    }
    return false;
}

std::vector<std::size_t> sort_permutation(const BaryPoint& x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    return idx;
}

BaryPoint permute(const BaryPoint& x, const std::vector<std::size_t>& theta) {
    if (theta.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "permutation size mismatch");
    std::vector<Rational> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[theta[k]];
    return BaryPoint(std::move(y));
}

}  // namespace sbd
