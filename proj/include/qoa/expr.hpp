#pragma once

#include "qoa/bidegree.hpp"
#include "qoa/scalar.hpp"

#include <compare>
#include <map>
#include <vector>

namespace qoa {

/// One factor d^deriv g of a normal-ordered monomial.
struct Factor {
    int gen = 0;
    int deriv = 0;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Canonical place of a factor inside a monomial: generator blocks in
/// declared order, derivative orders descending within a block.
inline bool factor_before(const Factor& a, const Factor& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.deriv > b.deriv;
}

/// A right-nested Wick monomial :f1 (:f2 (... fk):):. The empty monomial is
/// the identity operator.
using Monomial = std::vector<Factor>;

inline bool monomial_canonical(const Monomial& m) {
    for (size_t i = 1; i < m.size(); ++i)
        if (factor_before(m[i], m[i - 1])) return false;
    return true;
}

/// Finite sum of canonical normal-ordered monomials with Q[k] coefficients.
/// The canonical form is unique: the map never stores zero coefficients and
/// every key is a sorted monomial.
class OperatorExpr {
  public:
    using Terms = std::map<Monomial, Scalar>;

    OperatorExpr() = default;
    static OperatorExpr zero() { return {}; }
    static OperatorExpr identity(Scalar coeff = Scalar(1)) {
        OperatorExpr e;
        e.add_term({}, std::move(coeff));
        return e;
    }
    static OperatorExpr single(Monomial m, Scalar coeff = Scalar(1)) {
        OperatorExpr e;
        e.add_term(std::move(m), std::move(coeff));
        return e;
    }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    Scalar coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Scalar() : it->second;
    }

    void add_term(Monomial m, Scalar c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    OperatorExpr& operator+=(const OperatorExpr& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    OperatorExpr& operator-=(const OperatorExpr& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    OperatorExpr& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, c] : t_) c *= s;
        return *this;
    }
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
    friend OperatorExpr operator*(OperatorExpr a, const Scalar& s) { return a *= s; }
    friend OperatorExpr operator*(const Scalar& s, OperatorExpr a) { return a *= s; }
    OperatorExpr operator-() const {
        OperatorExpr e = *this;
        for (auto& [m, c] : e.t_) c = -c;
        return e;
    }

    friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return a.t_ == b.t_; }
    friend bool operator!=(const OperatorExpr& a, const OperatorExpr& b) { return !(a == b); }
    friend bool operator<(const OperatorExpr& a, const OperatorExpr& b);

  private:
    Terms t_;
};

inline bool operator<(const OperatorExpr& a, const OperatorExpr& b) {
    auto cmp = [](const Scalar& x, const Scalar& y) {
        for (int i = 0; i <= std::max(x.degree(), y.degree()); ++i) {
            if (x.coeff(i) != y.coeff(i)) return x.coeff(i) < y.coeff(i) ? -1 : 1;
        }
        return 0;
    };
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.end() && ib != b.end();
}

} // namespace qoa
