#include "simplexbd/report.hpp"

namespace sbd {

namespace {

json violations_json(const std::vector<Violation>& vs, json& out) {
    for (const auto& v : vs)
        out.push_back({{"kind", v.kind}, {"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}});
    return out;
}

json m_json(const CoefficientTuple& m) {
    json arr = json::array();
    for (const auto& v : m.m) arr.push_back(v.get_str());
    return arr;
}

}  // namespace

json to_json(const ComfortReport& r) {
    json vs = json::array();
    violations_json(r.permutation_violations, vs);
    violations_json(r.order_violations, vs);
    violations_json(r.bijectivity_spot_failures, vs);
    return {{"map_id", r.map_id}, {"n", r.n}, {"samples", r.samples_checked}, {"violations", vs}};
}

json to_json(const Witness& w) {
    return {{"point", to_string(w.point)}, {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}, {"label", w.label}};
}

json grid_json(const SampleGrid& g) {
    return {{"denominator", g.denominator}, {"size", g.points.size()}, {"seed", g.seed}};
}

json equation_report(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k,
                     const SampleGrid& grid, const EquationResult& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w));
    return {{"check", "equation"},
            {"parameters", {{"n", n}, {"L", L}, {"m", nullptr}, {"j", j}, {"p", p}, {"i", i}, {"k", k}}},
            {"grid", grid_json(grid)},
            {"verdict", r.pass ? "pass" : "fail"},
            {"pairs_checked", r.points_checked},
            {"certificate", kSamplingDisclaimer},
            {"witnesses", ws}};
}

json boundary_report(std::size_t n_plus_1, const CoefficientTuple& m, const SampleGrid& grid,
                     const BoundarySquaredResult& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w));
    json problems = json::array();
    for (const auto& p : r.problems) problems.push_back(p);
    return {{"check", "boundary_squared"},
            {"parameters", {{"n", n_plus_1}, {"L", m.L()}, {"m", m_json(m)}, {"j", nullptr}, {"p", nullptr},
                            {"i", nullptr}, {"k", nullptr}}},
            {"grid", grid_json(grid)},
            {"verdict", r.pass ? "pass" : "fail"},
            {"pairs_checked", r.pairs_checked},
            {"summands", r.summands},
            {"consumed", r.consumed},
            {"grid_points", r.grid_points},
            {"certificate", kSamplingDisclaimer},
            {"problems", problems},
            {"witnesses", ws}};
}

}  // namespace sbd
