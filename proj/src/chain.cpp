#include "simplexbd/chain.hpp"

#include "simplexbd/error.hpp"

#include <sstream>

namespace sbd {

RingSpec RingSpec::integers_mod(long m) {
    if (m < 2) throw Error(ErrorKind::RingMismatch, "modulus must be at least 2");
    return {Kind::IntegersMod, Integer(m)};
}

Integer RingSpec::reduce(const Integer& a) const {
    if (kind == Kind::Integers) return a;
    Integer r = a % modulus;
    if (sgn(r) < 0) r += modulus;
    return r;
}

std::string RingSpec::name() const { return kind == Kind::Integers ? "Z" : "Z/" + modulus.get_str(); }

CoefficientTuple CoefficientTuple::parse(const std::string& csv) {
    CoefficientTuple t;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto r = parse_rational(item);
        if (r.get_den() != 1) throw Error(ErrorKind::Parse, "coefficients must be integers: '" + item + "'");
        t.m.push_back(r.get_num());
    }
    if (t.m.empty()) throw Error(ErrorKind::Parse, "empty coefficient tuple");
    return t;
}

std::string CoefficientTuple::str() const {
    std::string out = "(";
    for (std::size_t q = 0; q < m.size(); ++q) {
        if (q) out += ',';
        out += m[q].get_str();
    }
    return out + ")";
}

std::size_t Primitive::domain_dim() const {
    switch (kind) {
        case Kind::FaceInsert: return n - 1;
        case Kind::FaceDelete: return n;
        default: return n;
    }
}

std::size_t Primitive::codomain_dim() const {
    switch (kind) {
        case Kind::FaceInsert: return n;
        case Kind::FaceDelete: return n - 1;
        default: return n;
    }
}

BaryPoint Primitive::apply(const BaryPoint& x) const {
    switch (kind) {
        case Kind::FaceInsert: return sbd::face_insert(FaceMap{L, n, i, j}, x);
        case Kind::FaceDelete: return sbd::face_delete(FaceMap{L, n, i, j}, x);
        case Kind::Theta: return sbd::theta(ThetaKey{L, n, i})(x);
        case Kind::ThetaInverse: return sbd::theta(ThetaKey{L, n, i}).inv(x);
    }
    return x;
}

std::string Primitive::str() const {
    const std::string idx = std::to_string(n) + "," + std::to_string(i);
    switch (kind) {
        case Kind::FaceInsert: return "<id>_{" + idx + "," + std::to_string(j) + "}";
        case Kind::FaceDelete: return "<id>^-1_{" + idx + "," + std::to_string(j) + "}";
        case Kind::Theta: return "Theta_{" + idx + "}";
        case Kind::ThetaInverse: return "Theta^-1_{" + idx + "}";
    }
    return "?";
}

SingularTerm SingularTerm::identity(std::size_t N) { return {Target::Simplex, N, {}, N}; }

SingularTerm SingularTerm::point(std::size_t n) { return {Target::Point, 0, {}, n}; }

SingularTerm SingularTerm::then(const Primitive& p) const {
    if (p.kind == Primitive::Kind::FaceInsert || p.kind == Primitive::Kind::FaceDelete) {
        if (p.n == 0 || p.j > p.n || p.i > p.L) throw Error(ErrorKind::IndexRange, "bad face map " + p.str());
    }
    if (p.codomain_dim() != domain_dim)
        throw Error(ErrorKind::DimensionMismatch, p.str() + " does not land in Δ_" + std::to_string(domain_dim));
    SingularTerm t = *this;
    t.domain_dim = p.domain_dim();
    // Every map into a point is the same map.
    if (target == Target::Simplex) t.prims.push_back(p);
    return t;
}

BaryPoint SingularTerm::evaluate(const BaryPoint& x) const {
    if (x.dim() != domain_dim) throw Error(ErrorKind::DimensionMismatch, "term evaluated off its domain");
    if (target == Target::Point) return BaryPoint{Rational(1)};
    BaryPoint y = x;
    for (auto it = prims.rbegin(); it != prims.rend(); ++it) y = it->apply(y);
    return y;
}

std::string SingularTerm::str() const {
    std::string out = target == Target::Point ? "p" : "id(Delta_" + std::to_string(target_dim) + ")";
    for (const auto& p : prims) out += " o " + p.str();
    if (target == Target::Point) out += " [dim " + std::to_string(domain_dim) + "]";
    return out;
}

void Chain::normalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        it->second = ring.reduce(it->second);
        if (sgn(it->second) == 0) it = terms.erase(it);
        else ++it;
    }
}

Chain Chain::single(const SingularTerm& t, RingSpec ring, Integer coeff) {
    Chain c{ring, static_cast<long>(t.domain_dim), {}};
    c.terms[t] = coeff;
    c.normalize();
    return c;
}

Chain chain_add(const Chain& a, const Chain& b) {
    if (!(a.ring == b.ring)) throw Error(ErrorKind::RingMismatch, "chains over different rings");
    if (a.dim != b.dim && !a.is_zero() && !b.is_zero())
        throw Error(ErrorKind::DimensionMismatch, "chains of different degree");
    Chain out = a;
    if (a.is_zero()) out.dim = b.dim;
    for (const auto& [t, c] : b.terms) out.terms[t] += c;
    out.normalize();
    return out;
}

Chain chain_scale(const Chain& c, const Integer& r) {
    Chain out = c;
    for (auto& [t, coeff] : out.terms) coeff *= r;
    out.normalize();
    return out;
}

namespace {

void check_tuple(const CoefficientTuple& m) {
    if (m.m.empty()) throw Error(ErrorKind::IndexRange, "empty coefficient tuple");
    if (m.L() > 1) throw Error(ErrorKind::UnsupportedL, "Θ is only available for L in {0,1}");
}

Integer sign(std::size_t e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

Chain boundary(const Chain& c, const CoefficientTuple& m) {
    check_tuple(m);
    const std::size_t L = m.L();
    Chain out{c.ring, c.dim - 1, {}};
    if (c.dim <= 0) {
        out.dim = -1;
        return out;
    }
    const auto n = static_cast<std::size_t>(c.dim);
    for (const auto& [T, coeff] : c.terms) {
        for (std::size_t j = 0; j <= n; ++j) {
            for (std::size_t i = 0; i <= L; ++i) {
                SingularTerm face = T.then(Primitive::face_insert(L, n, i, j)).then(Primitive::theta(L, n - 1, i));
                out.terms[face] += sign(j) * m.m[i] * coeff;
            }
        }
    }
    out.normalize();
    return out;
}

bool terms_agree(const SingularTerm& a, const SingularTerm& b, const std::vector<BaryPoint>& grid,
                 std::optional<Witness>* witness) {
    if (a == b) return true;
    if (a.domain_dim != b.domain_dim || a.target != b.target || a.target_dim != b.target_dim) return false;
    for (const auto& x : grid) {
        if (x.dim() != a.domain_dim) continue;
        BaryPoint ya = a.evaluate(x);
        BaryPoint yb = b.evaluate(x);
        if (!(ya == yb)) {
            if (witness) *witness = Witness{x, ya, yb, a.str() + " vs " + b.str()};
            return false;
        }
    }
    return true;
}

SingularTerm equation_lhs(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k) {
    return SingularTerm::identity(n + 1)
        .then(Primitive::face_insert(L, n + 1, i, j))
        .then(Primitive::theta(L, n, i))
        .then(Primitive::face_insert(L, n, k, p))
        .then(Primitive::theta(L, n - 1, k));
}

SingularTerm equation_rhs(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i, std::size_t k) {
    return SingularTerm::identity(n + 1)
        .then(Primitive::face_insert(L, n + 1, k, p + 1))
        .then(Primitive::theta(L, n, k))
        .then(Primitive::face_insert(L, n, i, j))
        .then(Primitive::theta(L, n - 1, i));
}

EquationResult check_equation(std::size_t L, std::size_t n, std::size_t j, std::size_t p, std::size_t i,
                              std::size_t k, const std::vector<BaryPoint>& grid) {
    if (L > 1) throw Error(ErrorKind::UnsupportedL, "Θ is only available for L in {0,1}");
    if (n == 0 || j > p || p > n || i > L || k > L)
        throw Error(ErrorKind::IndexRange, "EQUATION needs n >= 1, 0 <= j <= p <= n and i,k <= L");
    const SingularTerm lhs = equation_lhs(L, n, j, p, i, k);
    const SingularTerm rhs = equation_rhs(L, n, j, p, i, k);
    EquationResult res;
    for (const auto& x : grid) {
        if (x.dim() + 1 != n) continue;
        ++res.points_checked;
        BaryPoint a = lhs.evaluate(x);
        BaryPoint b = rhs.evaluate(x);
        if (!(a == b)) {
            res.pass = false;
            res.witnesses.push_back({x, a, b, "EQUATION"});
        }
    }
    return res;
}

std::vector<Summand> boundary_squared_expansion(const SingularTerm& T, const Integer& coeff, const CoefficientTuple& m,
                                                const RingSpec& ring) {
    check_tuple(m);
    const std::size_t L = m.L();
    if (T.domain_dim == 0) return {};
    const std::size_t n = T.domain_dim - 1;  // T is an (n+1)-simplex
    std::vector<Summand> out;
    out.reserve((n + 1) * (n + 2) * (L + 1) * (L + 1));
    for (std::size_t j = 0; j <= n + 1; ++j) {
        for (std::size_t i = 0; i <= L; ++i) {
            for (std::size_t p = 0; p <= n; ++p) {
                for (std::size_t k = 0; k <= L; ++k) {
                    Summand s{j, i, p, k, ring.reduce(sign(j + p) * m.m[i] * m.m[k] * coeff), std::nullopt};
                    // ∂_0 := 0, so for n = 0 the composites start at the empty Δ_{-1}.
                    if (n >= 1) {
                        s.term = T.then(Primitive::face_insert(L, n + 1, i, j))
                                     .then(Primitive::theta(L, n, i))
                                     .then(Primitive::face_insert(L, n, k, p))
                                     .then(Primitive::theta(L, n - 1, k));
                    }
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

BoundarySquaredResult check_boundary_squared(const Chain& c, const CoefficientTuple& m,
                                             const std::vector<BaryPoint>& grid) {
    check_tuple(m);
    const std::size_t L = m.L();
    BoundarySquaredResult res;
    if (c.dim < 1) {
        res.problems.push_back("∂∘∂ needs a chain of degree >= 1");
        res.pass = false;
        return res;
    }
    const auto n = static_cast<std::size_t>(c.dim - 1);
    for (const auto& x : grid)
        if (n >= 1 && x.dim() + 1 == n) ++res.grid_points;

    for (const auto& [T, coeff] : c.terms) {
        auto summands = boundary_squared_expansion(T, coeff, m, c.ring);
        res.summands += summands.size();
        auto index = [&](std::size_t j, std::size_t i, std::size_t p, std::size_t k) {
            return ((j * (L + 1) + i) * (n + 1) + p) * (L + 1) + k;
        };
        std::vector<int> used(summands.size(), 0);
        for (const auto& s : summands) {
            if (s.j > s.p) continue;
            const std::size_t me = index(s.j, s.i, s.p, s.k);
            const std::size_t partner = index(s.p + 1, s.k, s.j, s.i);  // B(j,p) = (p+1,j), i and k swapped
            ++used[me];
            ++used[partner];
            ++res.pairs_checked;
            const Summand& t = summands[partner];
            if (sgn(c.ring.reduce(s.coeff + t.coeff)) != 0) {
                res.pass = false;
                res.problems.push_back("coefficients do not cancel at (j,p,i,k)=(" + std::to_string(s.j) + "," +
                                       std::to_string(s.p) + "," + std::to_string(s.i) + "," + std::to_string(s.k) + ")");
            }
            if (s.term && t.term) {
                std::optional<Witness> w;
                if (!terms_agree(*s.term, *t.term, grid, &w)) {
                    res.pass = false;
                    if (w) res.witnesses.push_back(*w);
                }
            }
        }
        for (std::size_t q = 0; q < used.size(); ++q) {
            if (used[q] == 1) {
                ++res.consumed;
            } else {
                res.pass = false;
                res.problems.push_back("summand " + std::to_string(q) + " consumed " + std::to_string(used[q]) + " times");
            }
        }
    }
    return res;
}

}  // namespace sbd
