#pragma once

#include "qoa/rational.hpp"

#include <ostream>
#include <vector>

namespace qoa {

/// Coefficient ring of the symbolic engine: polynomials in a formal central
/// charge parameter k, with exact rational coefficients. Degree 0 is the
/// common case; the parameter only enters through Virasoro-type OPE tables
/// built with a symbolic central charge.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) { if (n != 0) c_ = {rat(n)}; }
    Scalar(const Rational& r) { if (r != 0) c_ = {r}; }

    /// The formal parameter k itself.
    static Scalar parameter() {
        Scalar s;
        s.c_ = {Rational(0), Rational(1)};
        return s;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Constant-term access; throws if the value genuinely depends on k.
    const Rational& as_rational() const {
        static const Rational zero(0);
        if (c_.empty()) return zero;
        if (c_.size() > 1) throw std::domain_error("scalar depends on the central charge parameter");
        return c_[0];
    }

    Rational eval(const Rational& k) const {
        Rational v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * k + c_[i];
        return v;
    }

    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Scalar& operator+=(const Scalar& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Scalar operator-() const {
        Scalar s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar p;
        if (a.is_zero() || b.is_zero()) return p;
        p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
        p.trim();
        return p;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Division by a nonzero rational only.
    Scalar& operator/=(const Rational& r) {
        if (r == 0) throw std::domain_error("division by zero");
        for (auto& x : c_) x /= r;
        return *this;
    }
    friend Scalar operator/(Scalar a, const Rational& r) { return a /= r; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        if (s.is_zero()) return os << "0";
        bool first = true;
        for (size_t i = 0; i < s.c_.size(); ++i) {
            if (s.c_[i] == 0) continue;
            if (!first) os << (s.c_[i] > 0 ? "+" : "");
            if (i == 0) os << s.c_[i].get_str();
            else {
                if (s.c_[i] == -1) os << "-";
                else if (s.c_[i] != 1) os << s.c_[i].get_str() << "*";
                os << "k";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os;
    }

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_; // c_[i] * k^i, trailing zeros trimmed
};

} // namespace qoa
