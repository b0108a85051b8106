#include "simplexbd/theta.hpp"

#include "simplexbd/error.hpp"
#include "simplexbd/pl1d.hpp"

namespace sbd {

Rational FaceMap::v() const {
    Rational v(static_cast<unsigned long>(i), static_cast<unsigned long>((L + 1) * (n + 1)));
    v.canonicalize();
    return v;
}

void FaceMap::validate() const {
    if (n == 0) throw Error(ErrorKind::IndexRange, "face maps need n >= 1");
    if (i > L) throw Error(ErrorKind::IndexRange, "face index i exceeds L");
    if (j > n) throw Error(ErrorKind::IndexRange, "face slot j exceeds n");
}

BaryPoint face_insert(const FaceMap& key, const BaryPoint& x) {
    key.validate();
    if (x.dim() + 1 != key.n) throw Error(ErrorKind::DimensionMismatch, "face_insert expects a point of Δ_{n-1}");
    const Rational v = key.v();
    const Rational keep = 1 - v;
    std::vector<Rational> y;
    y.reserve(key.n + 1);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == key.j) y.push_back(v);
        y.push_back(keep * x[k]);
    }
    if (key.j == x.size()) y.push_back(v);
    return BaryPoint(std::move(y));
}

BaryPoint face_delete(const FaceMap& key, const BaryPoint& y) {
    key.validate();
    if (y.dim() != key.n) throw Error(ErrorKind::DimensionMismatch, "face_delete expects a point of Δ_n");
    const Rational v = key.v();
    if (y[key.j] != v)
        throw Error(ErrorKind::WrongSlotValue, "slot " + std::to_string(key.j) + " of " + to_string(y) +
                                                   " is not " + to_string(v));
    const Rational scale = 1 / (1 - v);
    std::vector<Rational> x;
    x.reserve(key.n);
    for (std::size_t k = 0; k < y.size(); ++k)
        if (k != key.j) x.push_back(scale * y[k]);
    return BaryPoint(std::move(x));
}

std::string theta_id(const ThetaKey& key) {
    return "theta:L=" + std::to_string(key.L) + ",n=" + std::to_string(key.n) + ",i=" + std::to_string(key.i);
}

Rational theta1_alpha(std::size_t n) { return Rational(1, static_cast<unsigned long>(2 * (n + 1))); }
Rational theta1_beta(std::size_t n) { return Rational(1, static_cast<unsigned long>(2 * (n + 1) + 1)); }
Rational theta0_beta(std::size_t n) { return Rational(1, static_cast<unsigned long>(2 * (n + 2))); }

const SimplexHomeo& ThetaFamily::get(const ThetaKey& key) {
    if (key.L > 1) throw Error(ErrorKind::UnsupportedL, "Θ is only constructed for L in {0,1}");
    if (key.i > key.L) throw Error(ErrorKind::IndexRange, "Θ index i exceeds L");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto built = build(key);
    return *cache_.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const SimplexHomeo> ThetaFamily::build(const ThetaKey& key) {
    const auto n = key.n;
    if (key.L == 0 || n == 0) {
        SimplexHomeo h = identity_homeo(n);
        h.id = theta_id(key);
        return std::make_shared<const SimplexHomeo>(std::move(h));
    }
    if (key.i == 0) {
        SimplexHomeo h = lambda_lift(phi_n0(n), n);
        h.forward = memoize(std::move(h.forward));
        h.inverse = memoize(std::move(h.inverse));
        h.id = theta_id(key);
        return std::make_shared<const SimplexHomeo>(std::move(h));
    }
    if (n == 1) {
        const PLMap k = kappa();
        const PLMap kinv = pl_inverse(k);
        SimplexHomeo h;
        h.dim = 1;
        h.forward = [k](const BaryPoint& x) { return BaryPoint{k(x[0]), k(x[1])}; };
        h.inverse = [kinv](const BaryPoint& y) { return BaryPoint{kinv(y[0]), kinv(y[1])}; };
        h.provenance = Provenance::Diagonal;
        h.id = theta_id(key);
        return std::make_shared<const SimplexHomeo>(std::move(h));
    }
    if (n > max_n_)
        throw Error(ErrorKind::DimensionCap, "Θ_{" + std::to_string(n) + ",1} exceeds the configured cap n <= " +
                                                 std::to_string(max_n_));

    // Make sure every lower map exists before this one is used.
    get({1, n - 1, 0});
    get({1, n - 1, 1});
    get({1, n, 0});
    PointMap on_boundary = [this, n](const BaryPoint& y) {
        std::size_t j = 0;
        while (sgn(y[j]) != 0) ++j;
        return on_face(n, j, y);
    };
    SimplexHomeo h = extend_from_boundary(on_boundary, theta1_alpha(n), theta1_beta(n), n);
    h.forward = memoize(std::move(h.forward));
    h.provenance = Provenance::ThetaInduction;
    h.id = theta_id(key);
    return std::make_shared<const SimplexHomeo>(std::move(h));
}

BaryPoint ThetaFamily::on_face(std::size_t n, std::size_t j, const BaryPoint& y) {
    if (n == 0 || y.dim() != n) throw Error(ErrorKind::DimensionMismatch, "Θ_{n,1} faces need a point of Δ_n, n >= 1");
    if (j > n) throw Error(ErrorKind::IndexRange, "face index exceeds n");
    if (sgn(y[j]) != 0) throw Error(ErrorKind::NotOnFace, to_string(y) + " has nonzero slot " + std::to_string(j));

    // Move slot j to the front, keep the rest in order.
    std::vector<std::size_t> to_front;
    to_front.push_back(j);
    for (std::size_t k = 0; k <= n; ++k)
        if (k != j) to_front.push_back(k);
    const BaryPoint y0 = permute(y, to_front);

    const SimplexHomeo& lower0 = get({1, n - 1, 0});
    const SimplexHomeo& lower1 = get({1, n - 1, 1});
    const SimplexHomeo& same0 = get({1, n, 0});

    BaryPoint w = face_delete({1, n, 0, 0}, y0);
    BaryPoint u = lower0.inv(w);
    BaryPoint u1 = lower1(u);
    BaryPoint z = face_insert({1, n, 1, 0}, u1);
    BaryPoint z1 = same0(z);
    BaryPoint z2 = face_insert({1, n + 1, 0, 0}, z1);
    BaryPoint out0 = face_delete({1, n + 1, 1, 1}, z2);

    // Undo the move.
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[to_front[k]] = out0[k];
    return BaryPoint(std::move(out));
}

ThetaFamily& default_theta_family() {
    static ThetaFamily family;
    return family;
}

const SimplexHomeo& theta(const ThetaKey& key) { return default_theta_family().get(key); }

BaryPoint theta1_on_face(std::size_t n, std::size_t j, const BaryPoint& y) {
    return default_theta_family().on_face(n, j, y);
}

const SimplexHomeo& theta1_full(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::IndexRange, "the inductive Θ_{n,1} starts at n = 2");
    return theta({1, n, 1});
}

}  // namespace sbd
