#pragma once

#include "qoa/algebra.hpp"

#include <map>

namespace qoa {

/// Canonical form of a raw product of derivative-generators, assembled as a
/// right-nested Wick monomial. Reordering into canonical position tracks the
/// Koszul sign of every swap; for free-field generators the contraction
/// corrections vanish and the result is the plain signed permutation.
OperatorExpr normal_order(const AlgebraSpec& a, const std::vector<Factor>& factors,
                          const Scalar& coeff = Scalar(1));

/// Wick product :u v:.
OperatorExpr wick(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v);

/// Circle product u o_n v for any integer n. For n < 0 this is the smeared
/// Wick product (1/(-n-1)!) :d^{-n-1}u v:; for n >= 0 the polar coefficient,
/// computed by structural recursion on the monomials with the generator OPE
/// table as base case. Inputs must be homogeneous.
OperatorExpr circle_product(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v,
                            long n);

/// All nonzero polar parts { n >= 0 : u o_n v }.
std::map<long, OperatorExpr> ope(const AlgebraSpec& a, const OperatorExpr& u,
                                 const OperatorExpr& v);

/// k-th formal derivative, Leibniz over monomial factors.
OperatorExpr derivative(const AlgebraSpec& a, const OperatorExpr& u, long k = 1);

/// Upper bound on the pole order of the OPE of two monomials (so
/// u o_n v = 0 for n >= this bound).
long pole_bound(const AlgebraSpec& a, const Monomial& u, const Monomial& v);
long pole_bound(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v);

} // namespace qoa
