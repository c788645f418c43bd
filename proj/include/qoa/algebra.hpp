#pragma once

#include "qoa/expr.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qoa {

/// A named generating quantum operator with its bidegree. Statistics follow
/// the parity of the fermion number.
struct GeneratorSymbol {
    std::string name;
    long fermion = 0;
    Rational weight = 0;

    bool fermionic() const { return fermion % 2 != 0; }
    BiDegree degree() const { return {fermion, weight}; }
};

enum class Family { BcGhost, Virasoro, Heisenberg, Current, Custom };

/// A contiguous block of generators produced by one constructor; drives
/// canonical basis enumeration and module attachment.
struct FamilyBlock {
    Family kind = Family::Custom;
    int first = 0;
    int count = 0;
    // family parameters: bc weight lambda, or Heisenberg signature (k, l)
    Rational lambda = 0;
    int eta_pos = 0, eta_neg = 0;
};

/// A commutative quantum operator algebra presented by generators and the
/// polar parts of their pairwise OPEs, with an optional conformal structure.
struct AlgebraSpec {
    std::vector<GeneratorSymbol> gens;
    // table[g][h][n] = g o_n h for n = 0 .. table[g][h].size()-1; entries
    // beyond the stored list vanish (locality).
    std::vector<std::vector<std::vector<OperatorExpr>>> table;
    std::optional<OperatorExpr> virasoro;
    Scalar central_charge;
    std::vector<FamilyBlock> families;

    int num_gens() const { return static_cast<int>(gens.size()); }

    int gen_index(const std::string& name) const {
        for (int i = 0; i < num_gens(); ++i)
            if (gens[i].name == name) return i;
        throw std::invalid_argument("unknown generator: " + name);
    }

    const OperatorExpr& polar(int g, int h, long n) const {
        static const OperatorExpr zero;
        const auto& list = table[g][h];
        if (n < 0 || n >= static_cast<long>(list.size())) return zero;
        return list[n];
    }

    /// Pole order bound of the OPE of two generators.
    long pole(int g, int h) const { return static_cast<long>(table[g][h].size()); }

    BiDegree factor_degree(const Factor& f) const {
        return {gens[f.gen].fermion, gens[f.gen].weight + f.deriv};
    }
    BiDegree monomial_degree(const Monomial& m) const {
        BiDegree d;
        for (const auto& f : m) d += factor_degree(f);
        return d;
    }
    long monomial_fermion(const Monomial& m) const {
        long p = 0;
        for (const auto& f : m) p += gens[f.gen].fermion;
        return p;
    }

    void check_gen(int g) const {
        if (g < 0 || g >= num_gens()) throw std::invalid_argument("generator index out of range");
    }
};

/// Bidegree of a homogeneous expression; throws on mixed bidegrees.
/// Pure scalars (multiples of the identity) report (0, 0).
BiDegree expr_degree(const AlgebraSpec& a, const OperatorExpr& e);

/// True when all terms carry the same bidegree.
bool is_homogeneous(const AlgebraSpec& a, const OperatorExpr& e);

std::string show(const AlgebraSpec& a, const OperatorExpr& e);
std::string show(const AlgebraSpec& a, const Monomial& m);

} // namespace qoa
