// Dense exact linear algebra over a FieldCtx.
// Plain Gauss, first nonzero pivot; everything is exact so no pivoting
// strategy is needed beyond that.
#pragma once

#include "naka/scalars.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace naka {

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Scalar>;

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldCtxPtr ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
          entries_(rows * cols, Scalar::zero(ctx_)) {}

    static Matrix identity(const FieldCtxPtr& ctx, std::size_t n) {
        Matrix m(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ctx);
        return m;
    }
    static Matrix from_rows(const FieldCtxPtr& ctx, const std::vector<Vec>& rows) {
        std::size_t c = rows.empty() ? 0 : rows[0].size();
        Matrix m(ctx, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_cols(const FieldCtxPtr& ctx, const std::vector<Vec>& cols) {
        std::size_t r = cols.empty() ? 0 : cols[0].size();
        Matrix m(ctx, r, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != r) throw ShapeMismatch("ragged columns");
            for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec v(cols_, Scalar::zero(ctx_));
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    Vec col(std::size_t j) const {
        Vec v(rows_, Scalar::zero(ctx_));
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(ctx_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("add");
        Matrix m = a;
        for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("sub");
        Matrix m = a;
        for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
        return m;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix m = a;
        for (auto& e : m.entries_) e *= s;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("mul");
        Matrix m(a.ctx_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
                }
            }
        return m;
    }
    friend Vec operator*(const Matrix& a, const Vec& v) {
        if (a.cols_ != v.size()) throw ShapeMismatch("matvec");
        Vec out(a.rows_, Scalar::zero(a.ctx_));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a.at(i, k).is_zero() && !v[k].is_zero()) out[i] += a.at(i, k) * v[k];
        return out;
    }

  private:
    FieldCtxPtr ctx_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(Matrix m) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

// columns are a basis in reduced column-echelon form
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    // from an arbitrary spanning set of columns
    static Subspace span(const Matrix& spanning) {
        RrefResult rr = rref(spanning.transpose());
        Subspace s;
        s.ambient_ = spanning.rows();
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < rr.rank; ++i) rows.push_back(rr.reduced.row(i));
        s.basis_ = Matrix::from_rows(spanning.ctx(), rows).transpose();
        if (rr.rank == 0) s.basis_ = Matrix(spanning.ctx(), spanning.rows(), 0);
        return s;
    }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t j) const { return basis_.col(j); }

  private:
    std::size_t ambient_;
    Matrix basis_;
};

inline Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> cols;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Scalar::zero(m.ctx()));
        v[f] = Scalar::one(m.ctx());
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.reduced.at(i, f);
        cols.push_back(std::move(v));
    }
    Matrix b = cols.empty() ? Matrix(m.ctx(), m.cols(), 0) : Matrix::from_cols(m.ctx(), cols);
    return Subspace::span(b);
}

struct CokernelResult {
    Matrix projection;        // (rows(M) - rank) x rows(M), projection * M = 0
    Matrix section;           // rows(M) x dim, projection * section = identity
    std::size_t dim;
    std::vector<std::size_t> complement_rows;  // non-pivot rows of the column echelon form
};

// complement basis = standard basis vectors at non-pivot rows of the
// reduced column-echelon form E; projection = rows of (I - E R) at those
// rows, R selecting the pivot rows.
inline CokernelResult cokernel(const Matrix& m) {
    const auto& ctx = m.ctx();
    RrefResult rr = rref(m.transpose());
    std::size_t n = m.rows(), r = rr.rank;
    // E: n x r, E[pivot_i, j] = delta_ij
    Matrix E(ctx, n, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) E.at(j, i) = rr.reduced.at(i, j);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
    CokernelResult out;
    out.dim = n - r;
    out.projection = Matrix(ctx, out.dim, n);
    out.section = Matrix(ctx, n, out.dim);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_pivot[i]) continue;
        out.complement_rows.push_back(i);
        out.projection.at(t, i) = Scalar::one(ctx);
        for (std::size_t k = 0; k < r; ++k)
            out.projection.at(t, rr.pivot_cols[k]) = -E.at(i, k);
        out.section.at(i, t) = Scalar::one(ctx);
        ++t;
    }
    return out;
}

// particular solution with free variables zero, or nullopt when b is not in im(A)
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw ShapeMismatch("solve");
    Matrix aug(a.ctx(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    Vec x(a.cols(), Scalar::zero(a.ctx()));
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivot_cols[i] == a.cols()) return std::nullopt;  // inconsistent row
        x[rr.pivot_cols[i]] = rr.reduced.at(i, a.cols());
    }
    return x;
}

inline std::optional<Matrix> solve_all(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_all");
    Matrix aug(a.ctx(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    RrefResult rr = rref(std::move(aug));
    Matrix x(a.ctx(), a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivot_cols[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivot_cols[i], j) = rr.reduced.at(i, a.cols() + j);
    }
    return x;
}

inline std::optional<Matrix> try_matrix_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve_all(a, Matrix::identity(a.ctx(), a.rows()));
    if (!x) return std::nullopt;
    if ((a * *x) != Matrix::identity(a.ctx(), a.rows())) return std::nullopt;
    return x;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    if (*a.ctx() != *b.ctx()) throw FieldError("kron: field mismatch");
    Matrix m(a.ctx(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero())
                        m.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return m;
}

// Incremental row-echelon eliminator over sparse rows. Used where the full
// relation matrix would be large but rows are short; only nonzero
// coefficients participate in elimination.
class IncrementalKernel {
  public:
    IncrementalKernel(FieldCtxPtr ctx, std::size_t unknowns)
        : ctx_(std::move(ctx)), n_(unknowns) {}

    using SparseRow = std::map<std::size_t, Scalar>;

    void add_row(SparseRow row) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
        while (!row.empty()) {
            std::size_t lead = row.begin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                Scalar inv = row.begin()->second.inverse();
                for (auto& [c, v] : row) v *= inv;
                rows_.emplace(lead, std::move(row));
                return;
            }
            Scalar f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto [slot, fresh] = row.try_emplace(c, Scalar::zero(ctx_));
                slot->second -= f * v;
                if (slot->second.is_zero()) row.erase(slot);
            }
        }
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t unknowns() const { return n_; }

    // full back substitution so each stored row is zero at the other pivots;
    // rows are processed in descending pivot order, so every pivot column in
    // the support of a later row already names a fully reduced row
    void reduce() {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseRow& row = it->second;
            std::vector<std::pair<std::size_t, Scalar>> elim;
            for (const auto& [c, v] : row)
                if (c != it->first && rows_.count(c)) elim.emplace_back(c, v);
            for (const auto& [q, f] : elim) {
                row.erase(q);
                for (const auto& [c, v] : rows_.at(q)) {
                    if (c == q) continue;
                    auto [slot, fresh] = row.try_emplace(c, Scalar::zero(ctx_));
                    slot->second -= f * v;
                    if (slot->second.is_zero()) row.erase(slot);
                }
            }
        }
    }

    // cokernel of the matrix whose columns were added as rows here; same
    // conventions as the dense cokernel()
    CokernelResult cokernel() {
        reduce();
        CokernelResult out;
        out.dim = n_ - rows_.size();
        out.projection = Matrix(ctx_, out.dim, n_);
        out.section = Matrix(ctx_, n_, out.dim);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows_.count(i)) continue;
            out.complement_rows.push_back(i);
            out.projection.at(t, i) = Scalar::one(ctx_);
            for (const auto& [p, row] : rows_) {
                auto jt = row.find(i);
                if (jt != row.end()) out.projection.at(t, p) = -jt->second;
            }
            out.section.at(i, t) = Scalar::one(ctx_);
            ++t;
        }
        return out;
    }

    // kernel of the matrix whose rows were added
    Subspace kernel() const {
        std::vector<Vec> cols;
        for (std::size_t f = 0; f < n_; ++f) {
            if (rows_.count(f)) continue;
            Vec v(n_, Scalar::zero(ctx_));
            v[f] = Scalar::one(ctx_);
            // back substitute in decreasing pivot order
            for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
                Scalar s = Scalar::zero(ctx_);
                for (const auto& [c, coef] : it->second)
                    if (c != it->first && !v[c].is_zero()) s += coef * v[c];
                v[it->first] = -s;
            }
            cols.push_back(std::move(v));
        }
        Matrix b = cols.empty() ? Matrix(ctx_, n_, 0) : Matrix::from_cols(ctx_, cols);
        return Subspace::span(b);
    }

  private:
    FieldCtxPtr ctx_;
    std::size_t n_;
    std::map<std::size_t, SparseRow> rows_;
};

}  // namespace naka
