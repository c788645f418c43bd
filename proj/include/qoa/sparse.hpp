#pragma once

#include "qoa/rational.hpp"

#include <map>
#include <vector>

namespace qoa {

using SparseVec = std::map<long, Rational>; // index -> nonzero entry

inline void vec_add(SparseVec& a, const SparseVec& b, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [j, v] : b) {
        auto it = a.find(j);
        if (it == a.end()) {
            Rational w = v * scale;
            if (w != 0) a.emplace(j, std::move(w));
        } else {
            it->second += v * scale;
            if (it->second == 0) a.erase(it);
        }
    }
}

/// Sparse matrix over the rationals. No zero entries are stored.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), r_(rows) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational at(long i, long j) const {
        auto it = r_[i].find(j);
        return it == r_[i].end() ? Rational(0) : it->second;
    }
    void set(long i, long j, const Rational& v) {
        if (v == 0) r_[i].erase(j);
        else r_[i][j] = v;
    }
    void add(long i, long j, const Rational& v) {
        if (v == 0) return;
        auto [it, fresh] = r_[i].emplace(j, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) r_[i].erase(it);
        }
    }

    const SparseVec& row(long i) const { return r_[i]; }
    void set_row(long i, SparseVec v) { r_[i] = std::move(v); }

    long nonzeros() const {
        long n = 0;
        for (const auto& row : r_) n += static_cast<long>(row.size());
        return n;
    }
    bool is_zero() const { return nonzeros() == 0; }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : r_[i]) t.r_[j].emplace(i, v);
        return t;
    }

    /// Column j as a sparse vector.
    SparseVec col(long j) const {
        SparseVec c;
        for (long i = 0; i < rows_; ++i) {
            auto it = r_[i].find(j);
            if (it != r_[i].end()) c.emplace(i, it->second);
        }
        return c;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    SparseVec apply(const SparseVec& x) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }

    /// [a | b] side by side.
    static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<SparseVec> r_;
};

struct Inertia {
    long pos = 0, neg = 0, null = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Rank over Q by pivoted exact elimination (integer-normalized rows,
/// Markowitz-style pivot choice).
long exact_rank(const SparseMatrix& m);

/// Sylvester inertia of a symmetric matrix by exact congruence reduction.
/// Throws std::invalid_argument on non-symmetric input.
Inertia exact_signature(const SparseMatrix& g);

/// Basis of { x : m x = 0 }, deterministic echelon construction. Free
/// coordinates get unit entries, pivot coordinates are back-substituted.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// Incremental row-space container used for boundary spans, quotient
/// representatives and membership tests. Vectors inserted in a fixed order
/// give deterministic reduced rows; optional coordinate tracking expresses
/// reductions over the inserted vectors.
class Span {
  public:
    explicit Span(bool track_coords = false) : track_(track_coords) {}

    /// Returns true if v enlarged the span. Inserted vectors are numbered
    /// consecutively from 0 whether or not they grow the span.
    bool insert(const SparseVec& v);
    long rank() const { return static_cast<long>(rows_.size()); }
    long inserted() const { return n_inserted_; }

    bool contains(const SparseVec& v) const;

    /// Residual of v after reduction; when tracking and coords != nullptr,
    /// fills v = residual + sum coords[i] * inserted_vector[i].
    SparseVec reduce(const SparseVec& v, SparseVec* coords = nullptr) const;

  private:
    struct Row {
        SparseVec v;      // leading coefficient 1
        SparseVec coords; // expression over inserted vectors
    };
    bool track_;
    long n_inserted_ = 0;
    std::map<long, Row> rows_; // leading index -> reduced row
};

} // namespace qoa
