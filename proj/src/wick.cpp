#include "qoa/wick.hpp"

#include <map>
#include <tuple>

namespace qoa {

namespace {

// Minimal weight of a nonzero element of the algebra at the given fermion
// number; used to cut off polar sums (u o_n v vanishes once its weight drops
// below this). A valid lower bound suffices.
class WeightFloor {
  public:
    explicit WeightFloor(const AlgebraSpec& a) : a_(a) {}

    Rational floor_at(long p) {
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
        // distribute the fermion number over the fermionic families; bosonic
        // blocks contribute weight >= 0 at fermion 0
        std::vector<const FamilyBlock*> ferm;
        for (const auto& fb : a_.families) {
            bool has_fermionic = false;
            for (int g = fb.first; g < fb.first + fb.count; ++g)
                if (a_.gens[g].fermionic()) has_fermionic = true;
            if (has_fermionic) ferm.push_back(&fb);
        }
        Rational best;
        if (ferm.empty()) {
            // no fermionic generators: fermion p != 0 is unreachable
            best = p == 0 ? Rational(0) : Rational(1000000000);
        } else if (ferm.size() == 1) {
            best = family_floor(*ferm[0], p);
        } else {
            throw std::invalid_argument(
                "tensor algebras with more than one fermionic family are not supported");
        }
        memo_.emplace(p, best);
        return best;
    }

  private:
    Rational family_floor(const FamilyBlock& fb, long p) const {
        if (fb.kind == Family::BcGhost) {
            // i factors d^t b (weights lambda + t, t distinct >= 0) and
            // j = p + i factors d^t c (weights 1 - lambda + t); convex in i
            const Rational lam = fb.lambda;
            Rational best;
            bool have = false;
            for (long i = std::max(0L, -p);; ++i) {
                long j = p + i;
                Rational w = lam * i + Rational(i * (i - 1), 2) + (1 - lam) * j +
                             Rational(j * (j - 1), 2);
                w.canonicalize();
                if (!have || w < best) {
                    best = w;
                    have = true;
                } else if (w > best) {
                    break; // convex: once increasing, always increasing
                }
            }
            return best;
        }
        if (fb.kind == Family::Custom) return custom_floor(fb, p);
        return 0; // bosonic families: weights >= 0, minimum at the identity
    }

    Rational custom_floor(const FamilyBlock& fb, long p) const {
        // fermionic generators with distinct derivative orders; bosonic
        // generators of positive weight never lower the minimum
        std::vector<std::pair<long, Rational>> fgens; // (fermion, weight)
        for (int g = fb.first; g < fb.first + fb.count; ++g) {
            const auto& gen = a_.gens[g];
            if (gen.fermionic()) fgens.emplace_back(gen.fermion, gen.weight);
            else if (gen.weight <= 0)
                throw std::invalid_argument(
                    "custom algebra: bosonic generators must have positive weight");
        }
        if (p == 0) {
            Rational zero = 0;
            for (const auto& [f, w] : fgens) zero = std::min(zero, Rational(0));
            return 0;
        }
        if (fgens.empty()) return 0; // unreachable at p != 0 for valid input
        // greedy: repeatedly add the cheapest available fermionic factor of
        // the right sign; derivative orders must stay distinct per generator
        long need = p;
        Rational total = 0;
        std::map<size_t, long> used; // generator -> next derivative order
        while (need != 0) {
            Rational bestw;
            size_t besti = fgens.size();
            for (size_t i = 0; i < fgens.size(); ++i) {
                const auto& [f, w] = fgens[i];
                if ((need > 0) != (f > 0)) continue;
                Rational cand = w + used[i];
                if (besti == fgens.size() || cand < bestw) {
                    bestw = cand;
                    besti = i;
                }
            }
            if (besti == fgens.size())
                throw std::invalid_argument("custom algebra: fermion number unreachable");
            total += bestw;
            used[besti] += 1;
            need += need > 0 ? -std::abs(fgens[besti].first) : std::abs(fgens[besti].first);
        }
        return total;
    }

    const AlgebraSpec& a_;
    std::map<long, Rational> memo_;
};

long floor_long(const Rational& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return z.get_si();
}

int koszul(long fa, long fb) { return ((fa & 1) && (fb & 1)) ? -1 : 1; }

struct Engine {
    const AlgebraSpec& A;
    WeightFloor floor;
    std::map<std::tuple<Factor, Factor, long>, OperatorExpr> ff_memo;

    explicit Engine(const AlgebraSpec& a) : A(a), floor(a) {}

    long gen_ferm(int g) const { return A.gens[g].fermion; }

    // first n with u o_n v guaranteed zero (weight drops below the floor)
    long bound_mono(const Monomial& u, const Monomial& v) {
        BiDegree du = A.monomial_degree(u), dv = A.monomial_degree(v);
        Rational slack = du.weight + dv.weight - floor.floor_at(du.fermion + dv.fermion);
        return std::max(0L, floor_long(slack));
    }
    long bound(const OperatorExpr& u, const OperatorExpr& v) {
        long b = 0;
        for (const auto& [mu, cu] : u.terms())
            for (const auto& [mv, cv] : v.terms()) b = std::max(b, bound_mono(mu, mv));
        return b;
    }

    static OperatorExpr factor_expr(const Factor& f) { return OperatorExpr::single({f}); }

    OperatorExpr deriv1(const OperatorExpr& u) {
        OperatorExpr out;
        for (const auto& [m, c] : u.terms()) {
            if (m.empty()) continue;
            for (size_t i = 0; i < m.size(); ++i) {
                Monomial n = m;
                n[i].deriv += 1;
                out += normal_order_list(n, c);
            }
        }
        return out;
    }
    OperatorExpr deriv(const OperatorExpr& u, long k) {
        OperatorExpr out = u;
        for (long i = 0; i < k; ++i) out = deriv1(out);
        return out;
    }

    OperatorExpr normal_order_list(const Monomial& factors, const Scalar& coeff) {
        OperatorExpr x = OperatorExpr::identity(coeff);
        for (size_t i = factors.size(); i-- > 0;) x = wick_factor(factors[i], x);
        return x;
    }

    // :f V: with a single factor on the left
    OperatorExpr wick_factor(const Factor& f, const OperatorExpr& v) {
        OperatorExpr out;
        for (const auto& [n, c] : v.terms()) {
            if (n.empty()) {
                out.add_term({f}, c);
                continue;
            }
            const Factor h = n.front();
            Monomial tail(n.begin() + 1, n.end());
            if (factor_before(f, h)) {
                Monomial m;
                m.reserve(n.size() + 1);
                m.push_back(f);
                m.insert(m.end(), n.begin(), n.end());
                out.add_term(std::move(m), c);
            } else if (f == h) {
                if (!A.gens[f.gen].fermionic()) {
                    Monomial m;
                    m.reserve(n.size() + 1);
                    m.push_back(f);
                    m.insert(m.end(), n.begin(), n.end());
                    out.add_term(std::move(m), c);
                } else {
                    // odd self-swap: :f f T: = 1/2 sum_j (-1)^j/(j+1)! :d^{j+1}(f o_j f) T:
                    OperatorExpr acc = self_contract(f, f);
                    acc *= Scalar(Rational(1, 2));
                    out += wick(acc, OperatorExpr::single(std::move(tail), c));
                }
            } else {
                // move f past h, contraction corrections from the OPE
                const int sgn = koszul(gen_ferm(f.gen), gen_ferm(h.gen));
                OperatorExpr inner = wick_factor(f, OperatorExpr::single(tail, c));
                out += Scalar(sgn) * wick_factor(h, inner);
                OperatorExpr corr = self_contract(f, h);
                if (!corr.is_zero())
                    out += wick(corr, OperatorExpr::single(std::move(tail), c));
            }
        }
        return out;
    }

    // sum_j (-1)^j/(j+1)! d^{j+1}(f o_j g): the commutator [f_{(-1)}, g_{(-1)}]
    OperatorExpr self_contract(const Factor& f, const Factor& g) {
        OperatorExpr acc;
        const long nb = bound_mono({f}, {g});
        for (long j = 0; j < nb; ++j) {
            OperatorExpr p = circle_ff(f, g, j);
            if (p.is_zero()) continue;
            Scalar s(Rational((j % 2 == 0) ? 1 : -1, 1));
            s /= Rational(factorial(j + 1));
            acc += s * deriv(p, j + 1);
        }
        return acc;
    }

    OperatorExpr wick(const OperatorExpr& u, const OperatorExpr& v) {
        OperatorExpr out;
        for (const auto& [m, c] : u.terms()) out += Scalar(c) * wick_mono(m, v);
        return out;
    }

    // :M V: by peeling the head factor (quasi-associativity)
    OperatorExpr wick_mono(const Monomial& m, const OperatorExpr& v) {
        if (v.is_zero()) return {};
        if (m.empty()) return v;
        const Factor f = m.front();
        Monomial tail(m.begin() + 1, m.end());
        if (tail.empty()) return wick_factor(f, v);

        OperatorExpr out = wick_factor(f, wick_mono(tail, v));
        const OperatorExpr tail_e = OperatorExpr::single(tail);
        const OperatorExpr f_e = factor_expr(f);
        const int sgn = koszul(gen_ferm(f.gen), A.monomial_fermion(tail));
        const long b1 = bound(tail_e, v), b2 = bound(f_e, v);
        for (long j = 0; j < std::max(b1, b2); ++j) {
            Scalar inv(Rational(1));
            inv /= Rational(factorial(j + 1));
            if (j < b1) {
                OperatorExpr p = circle(tail_e, v, j);
                if (!p.is_zero()) out += inv * wick(deriv(f_e, j + 1), p);
            }
            if (j < b2) {
                OperatorExpr p = circle(f_e, v, j);
                if (!p.is_zero()) out += (Scalar(sgn) * inv) * wick(deriv(tail_e, j + 1), p);
            }
        }
        return out;
    }

    // factor-factor product, derivatives shifted onto the OPE table
    OperatorExpr circle_ff(const Factor& f, const Factor& g, long n) {
        auto key = std::make_tuple(f, g, n);
        auto it = ff_memo.find(key);
        if (it != ff_memo.end()) return it->second;
        OperatorExpr out;
        if (f.deriv > 0) {
            // (d a) o_n x = -n a o_{n-1} x
            if (n != 0)
                out = Scalar(Rational(-n)) * circle_ff({f.gen, f.deriv - 1}, g, n - 1);
        } else if (g.deriv > 0) {
            // a o_n (d b) = d(a o_n b) + n a o_{n-1} b
            out = deriv(circle_ff(f, {g.gen, g.deriv - 1}, n), 1);
            if (n != 0)
                out += Scalar(Rational(n)) * circle_ff(f, {g.gen, g.deriv - 1}, n - 1);
        } else if (n >= 0) {
            out = A.polar(f.gen, g.gen, n);
        } else {
            Scalar s(Rational(1));
            s /= Rational(factorial(-n - 1));
            out = s * wick(deriv(factor_expr(f), -n - 1), factor_expr(g));
        }
        ff_memo.emplace(std::move(key), out);
        return out;
    }

    OperatorExpr circle(const OperatorExpr& u, const OperatorExpr& v, long n) {
        OperatorExpr out;
        for (const auto& [mu, cu] : u.terms())
            for (const auto& [mv, cv] : v.terms())
                out += (cu * cv) * circle_mono(mu, mv, n);
        return out;
    }

    OperatorExpr circle_mono(const Monomial& u, const Monomial& v, long n) {
        if (n < 0) {
            Scalar s(Rational(1));
            s /= Rational(factorial(-n - 1));
            return s * wick(deriv(OperatorExpr::single(u), -n - 1), OperatorExpr::single(v));
        }
        if (u.empty()) return {};                 // identity is central
        if (n >= bound_mono(u, v)) return {};

        const Factor f = u.front();
        if (u.size() == 1) {
            if (f.deriv > 0) {
                if (n == 0) return {};
                return Scalar(Rational(-n)) *
                       circle_mono({{f.gen, f.deriv - 1}}, v, n - 1);
            }
            if (v.empty()) return {};
            const Factor h = v.front();
            Monomial vtail(v.begin() + 1, v.end());
            if (vtail.empty()) return circle_ff(f, h, n);
            // a o_n (:h T:) = :(a o_n h) T: + (-1)^{|a||h|} :h (a o_n T): +
            //                 sum_{i<n} C(n,i) (a o_i h) o_{n-1-i} T
            const OperatorExpr vtail_e = OperatorExpr::single(vtail);
            OperatorExpr out = wick(circle_ff(f, h, n), vtail_e);
            const int sgn = koszul(gen_ferm(f.gen), gen_ferm(h.gen));
            OperatorExpr rest = circle(factor_expr(f), vtail_e, n);
            if (!rest.is_zero()) out += Scalar(sgn) * wick_factor(h, rest);
            for (long i = 0; i < n; ++i) {
                OperatorExpr p = circle_ff(f, h, i);
                if (p.is_zero()) continue;
                OperatorExpr q = circle(p, vtail_e, n - 1 - i);
                if (!q.is_zero()) out += Scalar(binomial(n, i)) * q;
            }
            return out;
        }

        // (:f S:) o_n V: Lemma-style recursion on the left monomial
        Monomial s(u.begin() + 1, u.end());
        const OperatorExpr s_e = OperatorExpr::single(s);
        const OperatorExpr f_e = factor_expr(f);
        const OperatorExpr v_e = OperatorExpr::single(v);
        const int sgn = koszul(gen_ferm(f.gen), A.monomial_fermion(s));

        OperatorExpr out;
        const long bs = bound_mono(s, v), bf = bound_mono({f}, v);
        for (long m = 0; n + m < bs; ++m) {
            OperatorExpr p = circle_mono(s, v, n + m);
            if (p.is_zero()) continue;
            Scalar inv(Rational(1));
            inv /= Rational(factorial(m));
            out += inv * wick(deriv(f_e, m), p);
        }
        for (long m = 0; n + m < bf; ++m) {
            OperatorExpr p = circle_mono({f}, v, n + m);
            if (p.is_zero()) continue;
            Scalar inv(Rational(sgn));
            inv /= Rational(factorial(m));
            out += inv * wick(deriv(s_e, m), p);
        }
        for (long j = 0; j < n; ++j) {
            OperatorExpr p = circle_mono({f}, v, n - 1 - j);
            if (p.is_zero()) continue;
            OperatorExpr q = circle(s_e, p, j);
            if (!q.is_zero()) out += Scalar(sgn) * q;
        }
        return out;
    }
};

} // namespace

OperatorExpr normal_order(const AlgebraSpec& a, const std::vector<Factor>& factors,
                          const Scalar& coeff) {
    for (const auto& f : factors) a.check_gen(f.gen);
    Engine e(a);
    return e.normal_order_list(factors, coeff);
}

OperatorExpr wick(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v) {
    Engine e(a);
    return e.wick(u, v);
}

OperatorExpr circle_product(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v,
                            long n) {
    if (!is_homogeneous(a, u) || !is_homogeneous(a, v))
        throw std::invalid_argument("circle product requires homogeneous inputs");
    Engine e(a);
    return e.circle(u, v, n);
}

std::map<long, OperatorExpr> ope(const AlgebraSpec& a, const OperatorExpr& u,
                                 const OperatorExpr& v) {
    if (!is_homogeneous(a, u) || !is_homogeneous(a, v))
        throw std::invalid_argument("ope requires homogeneous inputs");
    Engine e(a);
    std::map<long, OperatorExpr> out;
    const long nb = e.bound(u, v);
    for (long n = 0; n < nb; ++n) {
        OperatorExpr p = e.circle(u, v, n);
        if (!p.is_zero()) out.emplace(n, std::move(p));
    }
    return out;
}

OperatorExpr derivative(const AlgebraSpec& a, const OperatorExpr& u, long k) {
    Engine e(a);
    return e.deriv(u, k);
}

long pole_bound(const AlgebraSpec& a, const Monomial& u, const Monomial& v) {
    Engine e(a);
    return e.bound_mono(u, v);
}

long pole_bound(const AlgebraSpec& a, const OperatorExpr& u, const OperatorExpr& v) {
    Engine e(a);
    return e.bound(u, v);
}

} // namespace qoa
