#include "simplexbd/homology_point.hpp"

#include <stdexcept>

namespace sbd {

ModuleDescription ModuleDescription::cyclic(const Integer& q) {
    Integer a = abs(q);
    if (a == 0) return free_rank1();
    if (a == 1) return zero();
    return {Kind::Cyclic, a};
}

std::string ModuleDescription::str() const {
    switch (kind) {
        case Kind::FreeRank1: return "Z";
        case Kind::Cyclic: return "Z/" + order.get_str();
        case Kind::Zero: return "0";
    }
    return "?";
}

std::string ScalarMap::str() const { return is_zero() ? "0" : "x" + factor.get_str(); }

Integer sigma(const CoefficientTuple& m) {
    Integer s = 0;
    for (const auto& v : m.m) s += v;
    return s;
}

ScalarMap point_boundary_map(std::size_t n, const CoefficientTuple& m) {
    if (n == 0 || n % 2 == 1) return {0};
    return {sigma(m)};
}

ModuleDescription homology_from_scalars(const ScalarMap& d_n, const ScalarMap& d_n_plus_1) {
    // Kernel of ×a on Z is Z when a = 0 and 0 otherwise; the image of ×b is bZ.
    if (!d_n.is_zero()) return ModuleDescription::zero();
    return ModuleDescription::cyclic(d_n_plus_1.factor);
}

ModuleDescription point_homology(std::size_t n, const CoefficientTuple& m) {
    const Integer s = sigma(m);
    ModuleDescription closed;
    if (s == 0) closed = ModuleDescription::free_rank1();
    else if (n == 0) closed = ModuleDescription::free_rank1();
    else if (n % 2 == 1) closed = ModuleDescription::cyclic(s);
    else closed = ModuleDescription::zero();

    const ModuleDescription direct = homology_from_scalars(point_boundary_map(n, m), point_boundary_map(n + 1, m));
    if (!(closed == direct))
        throw std::logic_error("H_" + std::to_string(n) + ": closed form " + closed.str() + " vs kernel/image " + direct.str());
    return closed;
}

std::string homology_row(std::size_t n, const CoefficientTuple& m) {
    return std::to_string(n) + ", " + point_boundary_map(n, m).str() + ", " + point_homology(n, m).str();
}

}  // namespace sbd
