#pragma once

#include "simplexbd/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sbd {

/// A point of the standard simplex: n+1 nonnegative rationals summing to 1.
/// Construction validates the invariant, so every BaryPoint in flight is valid.
class BaryPoint {
public:
    explicit BaryPoint(std::vector<Rational> coords);
    BaryPoint(std::initializer_list<Rational> coords);

    std::size_t dim() const { return coords_.size() - 1; }
    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const BaryPoint& a, const BaryPoint& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Rational> coords_;
};

// "[1/6,1/6,2/3]"
std::string to_string(const BaryPoint& x);
BaryPoint parse_point(std::string_view s);

BaryPoint center(std::size_t n);
BaryPoint vertex(std::size_t n, std::size_t j);
Rational min_value(const BaryPoint& x);

/// π_α. For α = 1/(n+1) this is the constant map to the center.
BaryPoint project_layer(const BaryPoint& x, const Rational& alpha);
/// π = π_0.
BaryPoint project_boundary(const BaryPoint& x);

BaryPoint segment_eval(const BaryPoint& a, const BaryPoint& b, const Rational& t);

struct RegionSpec {
    enum class Kind { Cross, Layer, Boundary, Section, Sponge };
    Kind kind;
    Rational level;
    std::size_t index = 0;

    static RegionSpec cross(Rational a) { return {Kind::Cross, std::move(a), 0}; }
    static RegionSpec layer(Rational a) { return {Kind::Layer, std::move(a), 0}; }
    static RegionSpec boundary() { return {Kind::Boundary, Rational(0), 0}; }
    static RegionSpec section(std::size_t j) { return {Kind::Section, Rational(0), j}; }
    static RegionSpec sponge() { return {Kind::Sponge, Rational(0), 0}; }
};

bool classify(const BaryPoint& x, const RegionSpec& region);

/// Stable ascending sort order: ϑ with x[ϑ(0)] <= x[ϑ(1)] <= ..., ties by index.
std::vector<std::size_t> sort_permutation(const BaryPoint& x);

/// (x∘ϑ)_k = x_{ϑ(k)}.
BaryPoint permute(const BaryPoint& x, const std::vector<std::size_t>& theta);

}  // namespace sbd
