#include "qoa/sparse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qoa {

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(rows_, Rational(0));
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i]) y[i] += v * x[j];
    return y;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    // y = A x through the columns in x's support: y_i = sum_j a_ij x_j
    SparseVec y;
    for (long i = 0; i < rows_; ++i) {
        Rational acc = 0;
        const auto& row = r_[i];
        if (row.size() < x.size()) {
            for (const auto& [j, v] : row) {
                auto it = x.find(j);
                if (it != x.end()) acc += v * it->second;
            }
        } else {
            for (const auto& [j, v] : x) {
                auto it = row.find(j);
                if (it != row.end()) acc += it->second * v;
            }
        }
        if (acc != 0) y.emplace(i, std::move(acc));
    }
    return y;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("sparse product: dimension mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
        SparseVec acc;
        for (const auto& [k, v] : a.r_[i]) vec_add(acc, b.r_[k], v);
        c.r_[i] = std::move(acc);
    }
    return c;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    SparseMatrix c(a.rows_, a.cols_ + b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
        c.r_[i] = a.r_[i];
        for (const auto& [j, v] : b.r_[i]) c.r_[i].emplace(a.cols_ + j, v);
    }
    return c;
}

namespace {

// Rows scaled to primitive integer vectors; keeps elimination in mpz.
using IRow = std::vector<std::pair<long, Integer>>;

IRow to_irow(const SparseVec& v) {
    Integer lcm = 1;
    for (const auto& [j, q] : v) {
        Integer d = q.get_den();
        lcm = lcm / gcd(lcm, d) * d;
    }
    IRow r;
    r.reserve(v.size());
    Integer content = 0;
    for (const auto& [j, q] : v) {
        Integer n = q.get_num() * (lcm / q.get_den());
        content = gcd(content, n);
        r.emplace_back(j, std::move(n));
    }
    if (content > 1)
        for (auto& [j, n] : r) n /= content;
    return r;
}

void normalize(IRow& r) {
    Integer content = 0;
    for (const auto& [j, n] : r) {
        content = gcd(content, n);
        if (content == 1) break;
    }
    if (content > 1)
        for (auto& [j, n] : r) n /= content;
}

// r := pv * r - rv * p, merged on sorted column indices.
IRow combine(const IRow& r, const IRow& p, const Integer& pv, const Integer& rv) {
    IRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, k = 0;
    while (i < r.size() || k < p.size()) {
        if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
            out.emplace_back(r[i].first, pv * r[i].second);
            ++i;
        } else if (i == r.size() || p[k].first < r[i].first) {
            out.emplace_back(p[k].first, -rv * p[k].second);
            ++k;
        } else {
            Integer v = pv * r[i].second - rv * p[k].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++k;
        }
    }
    normalize(out);
    return out;
}

const Integer* find_col(const IRow& r, long col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, long c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

} // namespace

long exact_rank(const SparseMatrix& m) {
    std::vector<IRow> rows;
    rows.reserve(m.rows());
    for (long i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) rows.push_back(to_irow(m.row(i)));

    // column -> active rows containing it
    std::unordered_map<long, std::set<long>> cols;
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) cols[j].insert(static_cast<long>(i));

    long rank = 0;
    while (!cols.empty()) {
        // pivot column with fewest active rows; within it the shortest row
        long pc = -1;
        size_t pc_count = 0;
        for (const auto& [j, rs] : cols) {
            if (pc < 0 || rs.size() < pc_count || (rs.size() == pc_count && j < pc)) {
                pc = j;
                pc_count = rs.size();
            }
        }
        long pr = -1;
        size_t pr_len = 0;
        for (long i : cols[pc]) {
            if (pr < 0 || rows[i].size() < pr_len) {
                pr = i;
                pr_len = rows[i].size();
            }
        }
        ++rank;

        IRow pivot = std::move(rows[pr]);
        const Integer pv = *find_col(pivot, pc);
        for (const auto& [j, v] : pivot) cols[j].erase(pr);
        rows[pr].clear();

        std::vector<long> victims(cols[pc].begin(), cols[pc].end());
        for (long i : victims) {
            const Integer rv = *find_col(rows[i], pc);
            for (const auto& [j, v] : rows[i]) cols[j].erase(i);
            rows[i] = combine(rows[i], pivot, pv, rv);
            for (const auto& [j, v] : rows[i]) cols[j].insert(i);
        }
        for (auto it = cols.begin(); it != cols.end();) {
            if (it->second.empty()) it = cols.erase(it);
            else ++it;
        }
    }
    return rank;
}

Inertia exact_signature(const SparseMatrix& g) {
    const long n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("signature: matrix not square");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (long i = 0; i < n; ++i)
        for (const auto& [j, v] : g.row(i)) a[i][j] = v;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) throw std::invalid_argument("signature: matrix not symmetric");

    std::vector<long> live(n);
    for (long i = 0; i < n; ++i) live[i] = i;
    Inertia s;

    while (!live.empty()) {
        long k = -1;
        for (size_t t = 0; t < live.size(); ++t)
            if (a[live[t]][live[t]] != 0) {
                k = static_cast<long>(t);
                break;
            }
        if (k >= 0) {
            long p = live[k];
            const Rational d = a[p][p];
            (d > 0 ? s.pos : s.neg)++;
            live.erase(live.begin() + k);
            for (long i : live) {
                if (a[i][p] == 0) continue;
                const Rational f = a[i][p] / d;
                for (long j : live) a[i][j] -= f * a[p][j];
                a[i][p] = 0;
            }
            for (long j : live) a[p][j] = 0;
            continue;
        }
        // no nonzero diagonal: look for a hyperbolic pair
        long ki = -1, kj = -1;
        for (size_t t = 0; t < live.size() && ki < 0; ++t)
            for (size_t u = t + 1; u < live.size(); ++u)
                if (a[live[t]][live[u]] != 0) {
                    ki = static_cast<long>(t);
                    kj = static_cast<long>(u);
                    break;
                }
        if (ki < 0) {
            s.null += static_cast<long>(live.size());
            break;
        }
        long p = live[ki], q = live[kj];
        const Rational c = a[p][q];
        s.pos++;
        s.neg++;
        live.erase(live.begin() + kj);
        live.erase(live.begin() + ki);
        // Schur complement against the block [[0,c],[c,0]]
        for (long i : live)
            for (long j : live) a[i][j] -= (a[i][p] * a[q][j] + a[i][q] * a[p][j]) / c;
        for (long i : live) a[i][p] = a[i][q] = a[p][i] = a[q][i] = 0;
    }
    return s;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    // reduced row echelon form over Q, deterministic pivoting by column order
    std::vector<SparseVec> rows;
    for (long i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) rows.push_back(m.row(i));

    std::map<long, SparseVec> pivots; // pivot column -> normalized row
    for (auto& r : rows) {
        SparseVec v = std::move(r);
        // reduce against every pivot column present anywhere in v
        for (bool reduced = true; reduced && !v.empty();) {
            reduced = false;
            for (const auto& [j, x] : v) {
                auto it = pivots.find(j);
                if (it != pivots.end()) {
                    vec_add(v, it->second, -x);
                    reduced = true;
                    break;
                }
            }
        }
        if (v.empty()) continue;
        const Rational lead = v.begin()->second;
        for (auto& [j, x] : v) x /= lead;
        // back-substitute into existing rows to reach reduced form
        long col = v.begin()->first;
        for (auto& [pc, pr] : pivots) {
            auto it = pr.find(col);
            if (it != pr.end()) vec_add(pr, v, -it->second);
        }
        pivots.emplace(col, std::move(v));
    }

    std::vector<SparseVec> basis;
    std::set<long> pivot_cols;
    for (const auto& [c, r] : pivots) pivot_cols.insert(c);
    for (long f = 0; f < m.cols(); ++f) {
        if (pivot_cols.count(f)) continue;
        SparseVec x;
        x.emplace(f, Rational(1));
        for (const auto& [c, r] : pivots) {
            auto it = r.find(f);
            if (it != r.end()) x.emplace(c, -it->second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool Span::insert(const SparseVec& v) {
    SparseVec coords;
    SparseVec res = reduce(v, track_ ? &coords : nullptr);
    const long idx = n_inserted_++;
    if (res.empty()) return false;
    const Rational lead = res.begin()->second;
    for (auto& [j, x] : res) x /= lead;
    Row row;
    row.v = std::move(res);
    if (track_) {
        // v = residual + sum coords*inserted  =>  residual = v - sum coords*inserted
        for (auto& [i, c] : coords) c = -c;
        coords[idx] += 1;
        for (auto& [i, c] : coords) c /= lead;
        for (auto it = coords.begin(); it != coords.end();)
            it = it->second == 0 ? coords.erase(it) : std::next(it);
        row.coords = std::move(coords);
    }
    rows_.emplace(row.v.begin()->first, std::move(row));
    return true;
}

SparseVec Span::reduce(const SparseVec& v, SparseVec* coords) const {
    if (coords) coords->clear();
    SparseVec res = v;
    while (!res.empty()) {
        auto it = rows_.find(res.begin()->first);
        if (it == rows_.end()) {
            // leading index not a pivot: reduction can still continue deeper
            // only through later pivots; walk entries in order
            bool hit = false;
            for (const auto& [j, x] : res) {
                auto jt = rows_.find(j);
                if (jt != rows_.end()) {
                    const Rational c = x;
                    vec_add(res, jt->second.v, -c);
                    if (coords && track_)
                        for (const auto& [i, cc] : jt->second.coords) {
                            (*coords)[i] += c * cc;
                            if ((*coords)[i] == 0) coords->erase(i);
                        }
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
        } else {
            const Rational c = res.begin()->second;
            vec_add(res, it->second.v, -c);
            if (coords && track_)
                for (const auto& [i, cc] : it->second.coords) {
                    (*coords)[i] += c * cc;
                    if ((*coords)[i] == 0) coords->erase(i);
                }
        }
    }
    return res;
}

bool Span::contains(const SparseVec& v) const { return reduce(v).empty(); }

} // namespace qoa
