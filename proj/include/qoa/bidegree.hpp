#pragma once

#include "qoa/rational.hpp"

#include <ostream>
#include <tuple>

namespace qoa {

/// The pair (fermion number |v|, conformal weight ||v||). Additive under
/// products; a mode u(n) of an operator of weight w has weight -n-1+w.
struct BiDegree {
    long fermion = 0;
    Rational weight = 0;

    BiDegree() = default;
    BiDegree(long f, Rational w) : fermion(f), weight(std::move(w)) {}

    BiDegree& operator+=(const BiDegree& o) {
        fermion += o.fermion;
        weight += o.weight;
        return *this;
    }
    friend BiDegree operator+(BiDegree a, const BiDegree& b) { return a += b; }

    friend bool operator==(const BiDegree& a, const BiDegree& b) {
        return a.fermion == b.fermion && a.weight == b.weight;
    }
    friend bool operator!=(const BiDegree& a, const BiDegree& b) { return !(a == b); }
    friend bool operator<(const BiDegree& a, const BiDegree& b) {
        if (a.fermion != b.fermion) return a.fermion < b.fermion;
        return a.weight < b.weight;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiDegree& d) {
        return os << "(" << d.fermion << ", " << d.weight.get_str() << ")";
    }
};

/// Weight of the mode u(n) of an operator of weight w.
inline Rational mode_weight(const Rational& w, long n) { return w - n - 1; }

} // namespace qoa
