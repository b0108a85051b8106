#include "simplexbd/rational.hpp"

#include "simplexbd/error.hpp"

#include <cctype>

namespace sbd {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidPoint: return "InvalidPoint";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexRange: return "IndexRange";
        case ErrorKind::CenterProjection: return "CenterProjection";
        case ErrorKind::NonMonotone: return "NonMonotone";
        case ErrorKind::BadEndpoints: return "BadEndpoints";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::CrossMismatch: return "CrossMismatch";
        case ErrorKind::BadDomain: return "BadDomain";
        case ErrorKind::EndpointNotFixed: return "EndpointNotFixed";
        case ErrorKind::BadLevels: return "BadLevels";
        case ErrorKind::CrossPropertyViolation: return "CrossPropertyViolation";
        case ErrorKind::WrongSlotValue: return "WrongSlotValue";
        case ErrorKind::NotOnFace: return "NotOnFace";
        case ErrorKind::UnsupportedL: return "UnsupportedL";
        case ErrorKind::DimensionCap: return "DimensionCap";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");

    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(ErrorKind::Parse, "not a rational: '" + std::string(s) + "'");

    std::string ns(num);
    if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
    Integer n(ns, 10), d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(s) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational rdiv(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return a / b;
}

}  // namespace sbd
