#pragma once

#include "simplexbd/chain.hpp"
#include "simplexbd/comfort.hpp"
#include "simplexbd/grid.hpp"

#include <json.hpp>

namespace sbd {

using json = nlohmann::ordered_json;

inline constexpr const char* kSamplingDisclaimer =
    "exact agreement on every sampled grid point; maps are not compared symbolically";

json to_json(const ComfortReport& r);
json to_json(const Witness& w);
json grid_json(const SampleGrid& g);

json equation_report(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k,
                     const SampleGrid& grid, const EquationResult& r);

json boundary_report(std::size_t n_plus_1, const CoefficientTuple& m, const SampleGrid& grid,
                     const BoundarySquaredResult& r);

}  // namespace sbd
