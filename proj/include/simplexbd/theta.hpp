#pragma once

#include "simplexbd/comfort.hpp"
#include "simplexbd/geometry.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace sbd {

/// ⟨id⟩_{L,n,i,j}: Δ_{n-1} -> Δ_n, inserting v = i/((L+1)(n+1)) at slot j.
struct FaceMap {
    std::size_t L = 0;
    std::size_t n = 1;
    std::size_t i = 0;
    std::size_t j = 0;

    Rational v() const;
    void validate() const;
    auto operator<=>(const FaceMap&) const = default;
};

BaryPoint face_insert(const FaceMap& key, const BaryPoint& x);
/// Left inverse of face_insert; slot j must hold exactly v.
BaryPoint face_delete(const FaceMap& key, const BaryPoint& y);

struct ThetaKey {
    std::size_t L = 0;
    std::size_t n = 0;
    std::size_t i = 0;
    auto operator<=>(const ThetaKey&) const = default;
};

std::string theta_id(const ThetaKey& key);

inline constexpr std::size_t kDefaultThetaCap = 6;

/// Builds Θ_{L,n,i} for L <= 1 on demand and caches every map it builds.
/// Θ_{n,1} for n >= 2 pulls Θ_{n-1,0}, Θ_{n-1,1} and Θ_{n,0} from the cache.
class ThetaFamily {
public:
    explicit ThetaFamily(std::size_t max_n = kDefaultThetaCap) : max_n_(max_n) {}

    const SimplexHomeo& get(const ThetaKey& key);
    std::size_t max_n() const { return max_n_; }

    /// Θ_{n,1} on the face y_j = 0 of Δ_n (n >= 1).
    BaryPoint on_face(std::size_t n, std::size_t j, const BaryPoint& y);

private:
    std::shared_ptr<const SimplexHomeo> build(const ThetaKey& key);

    std::size_t max_n_;
    std::recursive_mutex mu_;
    std::map<ThetaKey, std::shared_ptr<const SimplexHomeo>> cache_;
};

ThetaFamily& default_theta_family();

const SimplexHomeo& theta(const ThetaKey& key);
BaryPoint theta1_on_face(std::size_t n, std::size_t j, const BaryPoint& y);
const SimplexHomeo& theta1_full(std::size_t n);

/// The cross levels of Θ_{n,1}: 1/(2(n+1)) and 1/(2(n+1)+1).
Rational theta1_alpha(std::size_t n);
Rational theta1_beta(std::size_t n);
/// The image level of the same cross under Θ_{n,0}: 1/(2(n+2)).
Rational theta0_beta(std::size_t n);

}  // namespace sbd
