// Scalars of the min-plus semiring: exact rationals extended by +infinity.
#pragma once

#include <compare>
#include <ostream>

#include "rational.hpp"

namespace tropgossip {

/// An element of [-inf excluded, +inf]: either an exact rational or the
/// distinguished infinity.  Infinity is absorbing for tropical
/// multiplication (x + inf = inf) and neutral for tropical addition
/// (min(x, inf) = x).
class TropScalar {
public:
    TropScalar() : inf_(false), v_(0) {}
    TropScalar(const Rat& v) : inf_(false), v_(v) {}
    TropScalar(Rat&& v) : inf_(false), v_(std::move(v)) {}
    TropScalar(long v) : inf_(false), v_(v) {}
    TropScalar(int v) : inf_(false), v_(v) {}

    static TropScalar infinity() {
        TropScalar t;
        t.inf_ = true;
        return t;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// Finite value; only meaningful when is_finite().
    const Rat& value() const { return v_; }

    bool operator==(const TropScalar& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || v_ == o.v_;
    }
    bool operator!=(const TropScalar& o) const { return !(*this == o); }
    bool operator<(const TropScalar& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const TropScalar& o) const { return !(o < *this); }
    bool operator>(const TropScalar& o) const { return o < *this; }
    bool operator>=(const TropScalar& o) const { return !(*this < o); }

private:
    bool inf_;
    Rat v_;
};

/// Tropical addition: min.
inline TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
    return a <= b ? a : b;
}

/// Tropical multiplication: +, with infinity absorbing.
inline TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
    if (a.is_inf() || b.is_inf()) return TropScalar::infinity();
    return TropScalar(a.value() + b.value());
}

inline std::string to_string(const TropScalar& t) {
    return t.is_inf() ? "inf" : rat_to_string(t.value());
}

inline TropScalar parse_trop(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return TropScalar::infinity();
    return TropScalar(parse_rat(s));
}

inline std::ostream& operator<<(std::ostream& os, const TropScalar& t) {
    return os << to_string(t);
}

}  // namespace tropgossip
