#pragma once
// Dense matrices over a finite field with exact Gaussian elimination
// (first-nonzero pivoting; no numerical concerns in an exact field).

#include <optional>
#include <utility>

#include "lrss/galois.hpp"

namespace lrss {

class Matrix {
  public:
    Matrix() : Matrix(Field(), 0, 0) {}

    Matrix(Field f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(const Field& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<Fe>>& rows) {
        int r = int(rows.size());
        int c = r ? int(rows[0].size()) : 0;
        Matrix m(f, r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fe& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    Fe at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    std::vector<Fe> row(int i) const {
        return std::vector<Fe>(a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_);
    }

    Matrix select_rows(const std::vector<int>& idx) const {
        Matrix m(f_, int(idx.size()), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols_; ++j) m.at(int(i), j) = at(idx[i], j);
        return m;
    }

    Matrix select_cols(const std::vector<int>& idx) const {
        Matrix m(f_, rows_, int(idx.size()));
        for (int i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, int(j)) = at(i, idx[j]);
        return m;
    }

    Matrix transpose() const {
        Matrix m(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix mul(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix m(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                Fe v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols_; ++j)
                    m.at(i, j) = f_.add(m.at(i, j), f_.mul(v, o.at(k, j)));
            }
        return m;
    }

    std::vector<Fe> mul_vec(const std::vector<Fe>& v) const {
        if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<Fe> r(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            Fe acc = 0;
            for (int j = 0; j < cols_; ++j) acc = f_.add(acc, f_.mul(at(i, j), v[j]));
            r[i] = acc;
        }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// reduced row echelon form; pivot columns appended via out-param if given
    Matrix rref(std::vector<int>* pivot_cols = nullptr) const {
        Matrix m = *this;
        int pr = 0;
        for (int c = 0; c < cols_ && pr < rows_; ++c) {
            int piv = -1;
            for (int i = pr; i < rows_; ++i)
                if (m.at(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != pr)
                for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(pr, j));
            Fe s = f_.inv(m.at(pr, c));
            for (int j = 0; j < cols_; ++j) m.at(pr, j) = f_.mul(m.at(pr, j), s);
            for (int i = 0; i < rows_; ++i) {
                if (i == pr) continue;
                Fe v = m.at(i, c);
                if (!v) continue;
                for (int j = 0; j < cols_; ++j)
                    m.at(i, j) = f_.sub(m.at(i, j), f_.mul(v, m.at(pr, j)));
            }
            if (pivot_cols) pivot_cols->push_back(c);
            ++pr;
        }
        return m;
    }

    int rank() const {
        std::vector<int> piv;
        rref(&piv);
        return int(piv.size());
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        Matrix aug(f_, rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = 1;
        }
        std::vector<int> piv;
        Matrix r = aug.rref(&piv);
        if (int(piv.size()) != rows_ || (rows_ > 0 && piv[rows_ - 1] >= cols_)) return std::nullopt;
        Matrix inv(f_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
        return inv;
    }

  private:
    Field f_;
    int rows_, cols_;
    std::vector<Fe> a_;
};

struct LinearSolution {
    enum class Status { unique, underdetermined, inconsistent };
    Status status = Status::inconsistent;
    std::vector<Fe> x;  // populated only for unique

    bool unique() const { return status == Status::unique; }
};

/// Solve A x = b exactly.  Distinguishes a unique solution, an underdetermined
/// system (solutions exist but are not unique) and an inconsistent one.
inline LinearSolution solve(const Matrix& a, const std::vector<Fe>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("rhs length != row count");
    const Field& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    LinearSolution out;
    if (!piv.empty() && piv.back() == a.cols()) {
        out.status = LinearSolution::Status::inconsistent;
        return out;
    }
    if (int(piv.size()) < a.cols()) {
        out.status = LinearSolution::Status::underdetermined;
        return out;
    }
    out.status = LinearSolution::Status::unique;
    out.x.assign(a.cols(), 0);
    for (int i = 0; i < int(piv.size()); ++i) out.x[piv[i]] = r.at(i, a.cols());
    return out;
}

/// Any particular solution of A x = b (free variables set to zero), or
/// nothing when the system is inconsistent.
inline std::optional<std::vector<Fe>> solve_any(const Matrix& a, const std::vector<Fe>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("rhs length != row count");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<Fe> x(a.cols(), 0);
    for (int i = 0; i < int(piv.size()); ++i) x[piv[i]] = r.at(i, a.cols());
    return x;
}

/// rows i, columns j = alphas[i]^(j)
inline Matrix vandermonde(const Field& f, const std::vector<Fe>& alphas, int cols) {
    Matrix m(f, int(alphas.size()), cols);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Fe v = 1;
        for (int j = 0; j < cols; ++j) {
            m.at(int(i), j) = v;
            v = f.mul(v, alphas[i]);
        }
    }
    return m;
}

/// rows i, columns j = alphas[i]^(q^j)
inline Matrix moore(const Field& f, const std::vector<Fe>& alphas, int cols) {
    Matrix m(f, int(alphas.size()), cols);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        Fe v = alphas[i];
        for (int j = 0; j < cols; ++j) {
            m.at(int(i), j) = v;
            v = f.frobenius(v, 1);
        }
    }
    return m;
}

/// Recover the unique q-linearized polynomial with |points| coefficients from
/// evaluations at GF(q)-linearly independent points.
inline LinearizedPoly linearized_interpolate(const Field& f, const std::vector<Fe>& alphas,
                                             const std::vector<Fe>& values) {
    if (alphas.empty() || alphas.size() != values.size())
        throw std::invalid_argument("interpolation needs matching nonempty point/value lists");
    Matrix b = moore(f, alphas, int(alphas.size()));
    LinearSolution s = solve(b, values);
    if (!s.unique()) throw std::domain_error("singular Moore matrix");
    return LinearizedPoly{s.x};
}

}  // namespace lrss
