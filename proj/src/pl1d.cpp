#include "simplexbd/pl1d.hpp"

#include "simplexbd/error.hpp"

#include <algorithm>
#include <sstream>

namespace sbd {

namespace {

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
    return a.second + (b.second - a.second) * (t - a.first) / (b.first - a.first);
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    return (b.second - a.second) * (c.first - b.first) == (c.second - b.second) * (b.first - a.first);
}

}  // namespace

PLMap polygon(std::vector<Breakpoint> points, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw Error(ErrorKind::BadDomain, "empty interval");
    std::stable_sort(points.begin(), points.end(),
                     [](const Breakpoint& a, const Breakpoint& b) { return a.first < b.first; });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 2 || points.front().first != lo || points.back().first != hi)
        throw Error(ErrorKind::BadEndpoints, "breakpoints must include both domain endpoints");

    PLMap f;
    for (auto& p : points) {
        if (!f.pts_.empty()) {
            const auto& last = f.pts_.back();
            if (!(last.first < p.first) || !(last.second < p.second))
                throw Error(ErrorKind::NonMonotone, "breakpoint (" + to_string(p.first) + ", " +
                                                        to_string(p.second) + ") breaks strict increase");
        }
        while (f.pts_.size() >= 2 && collinear(f.pts_[f.pts_.size() - 2], f.pts_.back(), p)) f.pts_.pop_back();
        f.pts_.push_back(std::move(p));
    }
    return f;
}

PLMap identity_map(const Rational& lo, const Rational& hi) { return polygon({{lo, lo}, {hi, hi}}, lo, hi); }

Rational PLMap::operator()(const Rational& t) const {
    if (t < lo() || t > hi()) throw Error(ErrorKind::OutOfDomain, to_string(t) + " outside the domain");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), t,
                               [](const Breakpoint& p, const Rational& v) { return p.first < v; });
    if (it->first == t) return it->second;
    return interpolate(*(it - 1), *it, t);
}

Rational pl_eval(const PLMap& f, const Rational& t) { return f(t); }

PLMap pl_inverse(const PLMap& f) {
    std::vector<Breakpoint> swapped;
    swapped.reserve(f.breakpoints().size());
    for (const auto& [x, y] : f.breakpoints()) swapped.emplace_back(y, x);
    return polygon(std::move(swapped), f.image_lo(), f.image_hi());
}

PLMap pl_compose(const PLMap& g, const PLMap& f) {
    if (f.image_lo() != g.lo() || f.image_hi() != g.hi())
        throw Error(ErrorKind::DomainMismatch, "image of the inner map is not the outer domain");
    const PLMap finv = pl_inverse(f);
    std::vector<Rational> ts;
    for (const auto& p : f.breakpoints()) ts.push_back(p.first);
    for (const auto& p : g.breakpoints()) ts.push_back(finv(p.first));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Breakpoint> pts;
    pts.reserve(ts.size());
    for (auto& t : ts) pts.emplace_back(t, g(f(t)));
    return polygon(std::move(pts), f.lo(), f.hi());
}

PLMap pl_restrict(const PLMap& f, const Rational& lo, const Rational& hi) {
    if (lo < f.lo() || hi > f.hi()) throw Error(ErrorKind::OutOfDomain, "restriction leaves the domain");
    std::vector<Breakpoint> pts{{lo, f(lo)}, {hi, f(hi)}};
    for (const auto& p : f.breakpoints())
        if (lo < p.first && p.first < hi) pts.push_back(p);
    return polygon(std::move(pts), lo, hi);
}

PLMap eta() {
    return polygon({{0, 0}, {Rational(1, 4), Rational(1, 6)}, {Rational(3, 4), Rational(5, 6)}, {1, 1}}, 0, 1);
}

PLMap kappa() {
    return polygon({{0, 0}, {Rational(1, 4), Rational(1, 5)}, {Rational(3, 4), Rational(4, 5)}, {1, 1}}, 0, 1);
}

PLMap phi_n0(std::size_t n) {
    const auto k = static_cast<unsigned long>(n + 1);
    const Rational top(1, k);
    return polygon({{0, 0}, {Rational(1, 2 * k), Rational(1, 2 * (k + 1))}, {top, top}}, 0, top);
}

PLMap tau_polygon(const BaryPoint& b, const BaryPoint& c, const Rational& alpha, const Rational& beta) {
    if (b.dim() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "τ needs points of equal dimension");
    const Rational top(1, static_cast<unsigned long>(b.dim() + 1));
    std::vector<Breakpoint> pts{{0, 0}, {1, 1}};
    bool any = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if ((b[j] == alpha) != (c[j] == beta))
            throw Error(ErrorKind::CrossMismatch, "slot " + std::to_string(j) + " of " + to_string(b) +
                                                      " does not correspond to " + to_string(c));
        if (b[j] > alpha) continue;
        any = true;
        pts.emplace_back((alpha - b[j]) / (top - b[j]), (beta - c[j]) / (top - c[j]));
    }
    if (!any) throw Error(ErrorKind::OutOfDomain, "no coordinate at or below the cross level");
    return polygon(std::move(pts), 0, 1);
}

std::string to_fixture(const PLMap& f) {
    std::string out;
    for (const auto& [x, y] : f.breakpoints()) out += to_string(x) + " " + to_string(y) + "\n";
    return out;
}

PLMap parse_fixture(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Breakpoint> pts;
    std::string a, b;
    while (in >> a) {
        if (!(in >> b)) throw Error(ErrorKind::Parse, "odd number of fields in PLMap fixture");
        pts.emplace_back(parse_rational(a), parse_rational(b));
    }
    if (pts.size() < 2) throw Error(ErrorKind::Parse, "PLMap fixture needs two breakpoints");
    auto lo = pts.front().first, hi = pts.back().first;
    return polygon(std::move(pts), lo, hi);
}

}  // namespace sbd
