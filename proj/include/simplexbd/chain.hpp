#pragma once

#include "simplexbd/geometry.hpp"
#include "simplexbd/rational.hpp"
#include "simplexbd/theta.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sbd {

struct RingSpec {
    enum class Kind { Integers, IntegersMod };
    Kind kind = Kind::Integers;
    Integer modulus = 0;

    static RingSpec integers() { return {}; }
    static RingSpec integers_mod(long m);

    Integer reduce(const Integer& a) const;
    std::string name() const;
    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
};

/// (m_0, ..., m_L).
struct CoefficientTuple {
    std::vector<Integer> m;

    std::size_t L() const { return m.size() - 1; }
    static CoefficientTuple parse(const std::string& csv);
    std::string str() const;
};

/// One building block of a precomposition list.
struct Primitive {
    enum class Kind { FaceInsert, Theta, ThetaInverse, FaceDelete };
    Kind kind = Kind::Theta;
    std::size_t L = 0;
    std::size_t n = 0;  // codomain dimension of the face map, or the dimension Θ acts on
    std::size_t i = 0;
    std::size_t j = 0;  // face slot, unused for Θ

    static Primitive face_insert(std::size_t L, std::size_t n, std::size_t i, std::size_t j) {
        return {Kind::FaceInsert, L, n, i, j};
    }
    static Primitive face_delete(std::size_t L, std::size_t n, std::size_t i, std::size_t j) {
        return {Kind::FaceDelete, L, n, i, j};
    }
    static Primitive theta(std::size_t L, std::size_t n, std::size_t i) { return {Kind::Theta, L, n, i, 0}; }
    static Primitive theta_inverse(std::size_t L, std::size_t n, std::size_t i) {
        return {Kind::ThetaInverse, L, n, i, 0};
    }

    std::size_t domain_dim() const;
    std::size_t codomain_dim() const;
    BaryPoint apply(const BaryPoint& x) const;
    std::string str() const;
    auto operator<=>(const Primitive&) const = default;
};

/// T ∘ P_1 ∘ ... ∘ P_k with T either id(Δ_N) or the constant map to a point.
/// Evaluation applies P_k first.
struct SingularTerm {
    enum class Target { Point, Simplex };
    Target target = Target::Simplex;
    std::size_t target_dim = 0;
    std::vector<Primitive> prims;
    std::size_t domain_dim = 0;

    static SingularTerm identity(std::size_t N);
    static SingularTerm point(std::size_t n);

    /// Appends P (applied before the current list); P's codomain must be the current domain.
    SingularTerm then(const Primitive& p) const;
    /// Value in Δ_N; point-space terms evaluate to (1) in Δ_0.
    BaryPoint evaluate(const BaryPoint& x) const;
    std::string str() const;
    auto operator<=>(const SingularTerm&) const = default;
};

struct Chain {
    RingSpec ring;
    long dim = 0;  // -1 for the empty chain below degree 0
    std::map<SingularTerm, Integer> terms;

    void normalize();
    bool is_zero() const { return terms.empty(); }
    static Chain single(const SingularTerm& t, RingSpec ring = RingSpec::integers(), Integer coeff = 1);
};

Chain chain_add(const Chain& a, const Chain& b);
Chain chain_scale(const Chain& c, const Integer& r);

/// ∂_n with Θ_{L,n-1,i} precompositions; ∂_0 := 0.
Chain boundary(const Chain& c, const CoefficientTuple& m);

struct Witness {
    BaryPoint point;
    BaryPoint lhs;
    BaryPoint rhs;
    std::string label;
};

/// Exact agreement of two terms: identical lists, or equal values at every grid point.
bool terms_agree(const SingularTerm& a, const SingularTerm& b, const std::vector<BaryPoint>& grid,
                 std::optional<Witness>* witness = nullptr);

struct EquationResult {
    bool pass = true;
    std::size_t points_checked = 0;
    std::vector<Witness> witnesses;
};

/// Both sides of EQUATION_{n,j<=p,i,k} as terms Δ_{n-1} -> Δ_{n+1}.
SingularTerm equation_lhs(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k);
SingularTerm equation_rhs(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k);

EquationResult check_equation(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i,
                              std::size_t k, const std::vector<BaryPoint>& grid);

/// One summand of ∂_n ∘ ∂_{n+1}(T) before any cancellation.
struct Summand {
    std::size_t j = 0, i = 0, p = 0, k = 0;
    Integer coeff;
    std::optional<SingularTerm> term;  // empty when the domain Δ_{n-1} is empty (n = 0)
};

std::vector<Summand> boundary_squared_expansion(const SingularTerm& T, const Integer& coeff, const CoefficientTuple& m,
                                                const RingSpec& ring);

struct BoundarySquaredResult {
    bool pass = true;
    std::size_t summands = 0;
    std::size_t consumed = 0;
    std::size_t pairs_checked = 0;
    std::size_t grid_points = 0;
    std::vector<Witness> witnesses;
    std::vector<std::string> problems;
};

/// Pairs every summand (j,p,i,k) with j <= p against (p+1,j,k,i) and certifies
/// opposite coefficients and equal maps on the grid of Δ_{n-1}.
BoundarySquaredResult check_boundary_squared(const Chain& c, const CoefficientTuple& m,
                                             const std::vector<BaryPoint>& grid);

}  // namespace sbd
