#pragma once

#include "simplexbd/geometry.hpp"
#include "simplexbd/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sbd {

using Breakpoint = std::pair<Rational, Rational>;

/// Increasing piecewise-linear homeomorphism [lo,hi] -> [f(lo),f(hi)].
/// Breakpoints are kept normalized: strictly increasing in both
/// coordinates, no collinear interior points. Equality is breakpoint equality.
class PLMap {
public:
    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    const Rational& lo() const { return pts_.front().first; }
    const Rational& hi() const { return pts_.back().first; }
    const Rational& image_lo() const { return pts_.front().second; }
    const Rational& image_hi() const { return pts_.back().second; }

    Rational operator()(const Rational& t) const;

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }

private:
    friend PLMap polygon(std::vector<Breakpoint> points, const Rational& lo, const Rational& hi);
    std::vector<Breakpoint> pts_;
};

PLMap polygon(std::vector<Breakpoint> points, const Rational& lo, const Rational& hi);
PLMap identity_map(const Rational& lo, const Rational& hi);

Rational pl_eval(const PLMap& f, const Rational& t);
PLMap pl_inverse(const PLMap& f);
/// g∘f; f's image interval must equal g's domain.
PLMap pl_compose(const PLMap& g, const PLMap& f);
PLMap pl_restrict(const PLMap& f, const Rational& lo, const Rational& hi);

PLMap eta();
PLMap kappa();
PLMap phi_n0(std::size_t n);

/// Reparametrization of the segment [Center, b] used by the boundary extension.
PLMap tau_polygon(const BaryPoint& b, const BaryPoint& c, const Rational& alpha, const Rational& beta);

// One breakpoint per line: "p/q r/s".
std::string to_fixture(const PLMap& f);
PLMap parse_fixture(std::string_view text);

}  // namespace sbd
