#include "qoa/algebra.hpp"

#include <sstream>

namespace qoa {

BiDegree expr_degree(const AlgebraSpec& a, const OperatorExpr& e) {
    if (e.is_zero()) return {};
    bool first = true;
    BiDegree d;
    for (const auto& [m, c] : e.terms()) {
        BiDegree md = a.monomial_degree(m);
        if (first) {
            d = md;
            first = false;
        } else if (md != d) {
            throw std::invalid_argument("expression is not homogeneous");
        }
    }
    return d;
}

bool is_homogeneous(const AlgebraSpec& a, const OperatorExpr& e) {
    if (e.is_zero()) return true;
    auto it = e.begin();
    BiDegree d = a.monomial_degree(it->first);
    for (++it; it != e.end(); ++it)
        if (a.monomial_degree(it->first) != d) return false;
    return true;
}

std::string show(const AlgebraSpec& a, const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    if (m.size() > 1) os << ":( ";
    bool first = true;
    for (const auto& f : m) {
        if (!first) os << " ";
        first = false;
        if (f.deriv == 1) os << "d ";
        else if (f.deriv > 1) os << "d^" << f.deriv << " ";
        os << a.gens[f.gen].name;
    }
    if (m.size() > 1) os << " ):";
    return os.str();
}

std::string show(const AlgebraSpec& a, const OperatorExpr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::ostringstream cs;
        cs << c;
        std::string coeff = cs.str();
        bool neg = coeff.size() > 1 && coeff[0] == '-' && c.is_constant();
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string mag = neg ? coeff.substr(1) : coeff;
        bool wrap = !c.is_constant();
        if (m.empty()) {
            os << (wrap ? "(" + mag + ")" : mag);
        } else if (!wrap && mag == "1") {
            os << show(a, m);
        } else {
            os << (wrap ? "(" + mag + ")" : mag) << " * " << show(a, m);
        }
        first = false;
    }
    return os.str();
}

} // namespace qoa
