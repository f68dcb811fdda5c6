#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "borelred/errors.hpp"

namespace borelred {

/// Largest accepted matrix dimension. The closed-form idempotent expansions
/// grow combinatorially, so desk-scale work stays small; the bound is
/// adjustable for callers that need more room.
int max_dimension();
void set_max_dimension(int n);

/// Dense n x n matrix over an exact scalar type. Instantiated with Rational,
/// LaurentPoly and MultiRational entries; all operations are exact.
template <class T>
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(int n) : n_(n), e_(check_dim(n) * static_cast<std::size_t>(n), T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    Matrix operator+(const Matrix& o) const {
        same_dim(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        same_dim(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] -= o.e_[k];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& v : out.e_) v = -v;
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        same_dim(o);
        Matrix out(n_);
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < n_; ++j) {
                    out(i, j) += a * o(k, j);
                }
            }
        }
        return out;
    }

    Matrix scaled(const T& c) const {
        Matrix out = *this;
        for (auto& v : out.e_) v = c * v;
        return out;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    bool is_zero() const {
        for (const auto& v : e_) {
            if (!(v == T(0))) return false;
        }
        return true;
    }

    bool is_upper_triangular() const {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < i; ++j) {
                if (!((*this)(i, j) == T(0))) return false;
            }
        }
        return true;
    }

    bool is_lower_triangular() const {
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                if (!((*this)(i, j) == T(0))) return false;
            }
        }
        return true;
    }

    bool is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

    std::vector<T> diagonal_entries() const {
        std::vector<T> d;
        d.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) d.push_back((*this)(i, i));
        return d;
    }

    T trace() const {
        T acc(0);
        for (int i = 0; i < n_; ++i) acc += (*this)(i, i);
        return acc;
    }

private:
    static int check_dim(int n) {
        if (n < 1 || n > max_dimension()) {
            throw DimensionError("matrix dimension " + std::to_string(n) +
                                 " outside [1, " + std::to_string(max_dimension()) + "]");
        }
        return n;
    }

    void same_dim(const Matrix& o) const {
        if (n_ != o.n_) throw DimensionError("mismatched matrix dimensions");
    }

    int n_ = 0;
    std::vector<T> e_;
};

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != m.dim()) throw DimensionError("matrix * vector size mismatch");
    std::vector<T> out(v.size(), T(0));
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    }
    return out;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& m) {
    if (static_cast<int>(v.size()) != m.dim()) throw DimensionError("covector * matrix size mismatch");
    std::vector<T> out(v.size(), T(0));
    for (int j = 0; j < m.dim(); ++j) {
        for (int i = 0; i < m.dim(); ++i) out[j] += v[i] * m(i, j);
    }
    return out;
}

/// Column vector times row covector.
template <class T>
Matrix<T> outer(const std::vector<T>& col, const std::vector<T>& row) {
    if (col.size() != row.size()) throw DimensionError("outer product size mismatch");
    Matrix<T> out(static_cast<int>(col.size()));
    for (int i = 0; i < out.dim(); ++i) {
        for (int j = 0; j < out.dim(); ++j) out(i, j) = col[i] * row[j];
    }
    return out;
}

/// row * m * col, the 1x1 trace of the sandwiched product.
template <class T>
T bilinear(const std::vector<T>& row, const Matrix<T>& m, const std::vector<T>& col) {
    const std::vector<T> mc = m * col;
    T acc(0);
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * mc[i];
    return acc;
}

template <class T>
T dot(const std::vector<T>& row, const std::vector<T>& col) {
    if (row.size() != col.size()) throw DimensionError("dot product size mismatch");
    T acc(0);
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * col[i];
    return acc;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
    for (const auto& e : v) {
        if (!(e == T(0))) return false;
    }
    return true;
}

/// Exact inverse of an upper-triangular matrix by back-substitution.
/// Throws SingularMatrixError on a zero diagonal entry.
template <class T>
Matrix<T> upper_triangular_inverse(const Matrix<T>& u) {
    const int n = u.dim();
    if (!u.is_upper_triangular()) throw ShapeError("inverse requires an upper-triangular matrix");
    for (int i = 0; i < n; ++i) {
        if (u(i, i) == T(0)) throw SingularMatrixError("zero diagonal entry in triangular inverse");
    }
    Matrix<T> inv(n);
    for (int j = n - 1; j >= 0; --j) {
        inv(j, j) = T(1) / u(j, j);
        for (int i = j - 1; i >= 0; --i) {
            T acc(0);
            for (int k = i + 1; k <= j; ++k) acc += u(i, k) * inv(k, j);
            inv(i, j) = -(T(1) / u(i, i)) * acc;
        }
    }
    return inv;
}

/// Element of the Borel: upper-triangular square matrix (entries below the
/// diagonal are all zero); validated at construction.
template <class T>
class BorelMatrix {
public:
    BorelMatrix() = default;
    explicit BorelMatrix(Matrix<T> m) : m_(std::move(m)) {
        if (!m_.is_upper_triangular()) {
            throw ShapeError("matrix is not upper triangular");
        }
    }

    const Matrix<T>& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    const T& operator()(int i, int j) const { return m_(i, j); }

    /// All diagonal entries nonzero.
    bool is_invertible() const {
        for (int i = 0; i < dim(); ++i) {
            if (m_(i, i) == T(0)) return false;
        }
        return true;
    }

    bool operator==(const BorelMatrix& o) const { return m_ == o.m_; }

private:
    Matrix<T> m_;
};

/// Concrete model of the dual of the Borel subalgebra: lower-triangular
/// matrices including the diagonal; the strictly upper part is always zero.
template <class T>
class DualBorelMatrix {
public:
    DualBorelMatrix() = default;
    explicit DualBorelMatrix(Matrix<T> m) : m_(std::move(m)) {
        if (!m_.is_lower_triangular()) {
            throw ShapeError("matrix is not lower triangular");
        }
    }

    const Matrix<T>& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    const T& operator()(int i, int j) const { return m_(i, j); }

    bool is_zero() const { return m_.is_zero(); }
    bool is_diagonal() const { return m_.is_diagonal(); }

    bool operator==(const DualBorelMatrix& o) const { return m_ == o.m_; }

private:
    Matrix<T> m_;
};

/// Projection that kills every strictly upper-triangular entry.
template <class T>
DualBorelMatrix<T> project_to_dual(const Matrix<T>& m) {
    Matrix<T> out(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j <= i; ++j) out(i, j) = m(i, j);
    }
    return DualBorelMatrix<T>(std::move(out));
}

/// True iff the diagonal entries (the eigenvalues of an upper-triangular
/// matrix) are pairwise distinct.
template <class T>
bool is_regular_semisimple(const BorelMatrix<T>& r) {
    for (int i = 0; i < r.dim(); ++i) {
        for (int j = i + 1; j < r.dim(); ++j) {
            if (r(i, i) == r(j, j)) return false;
        }
    }
    return true;
}

/// Point of the cotangent space: upper-triangular r, dual-model s, vector i,
/// covector j, all of one shared dimension.
template <class T>
struct Quadruple {
    BorelMatrix<T> r;
    DualBorelMatrix<T> s;
    std::vector<T> i;
    std::vector<T> j;

    Quadruple() = default;
    Quadruple(BorelMatrix<T> r_, DualBorelMatrix<T> s_, std::vector<T> i_, std::vector<T> j_)
        : r(std::move(r_)), s(std::move(s_)), i(std::move(i_)), j(std::move(j_)) {
        const int n = r.dim();
        if (s.dim() != n || static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n) {
            throw DimensionError("quadruple carriers have mismatched dimensions");
        }
    }

    int dim() const { return r.dim(); }

    bool operator==(const Quadruple& o) const {
        return r == o.r && s == o.s && i == o.i && j == o.j;
    }
};

/// Group action b.(r,s,i,j) = (b r b^-1, project(b s b^-1), b i, j b^-1).
/// The triangular inverse is computed exactly by back-substitution.
template <class T>
Quadruple<T> borel_act(const BorelMatrix<T>& b, const Quadruple<T>& q) {
    if (b.dim() != q.dim()) throw DimensionError("group element dimension mismatch");
    if (!b.is_invertible()) throw SingularMatrixError("group element is not invertible");
    const Matrix<T> binv = upper_triangular_inverse(b.matrix());
    return Quadruple<T>(
        BorelMatrix<T>(b.matrix() * q.r.matrix() * binv),
        project_to_dual(b.matrix() * q.s.matrix() * binv),
        b.matrix() * q.i,
        q.j * binv);
}

/// Exact rank of a rectangular matrix given as rows, by Gaussian elimination
/// over the fraction field.
template <class T>
int matrix_rank(std::vector<std::vector<T>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t row = 0; row < rows.size() && lead < cols; ++lead) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][lead] == T(0)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        const T inv = T(1) / rows[row][lead];
        for (std::size_t rr = row + 1; rr < rows.size(); ++rr) {
            if (rows[rr][lead] == T(0)) continue;
            const T f = rows[rr][lead] * inv;
            for (std::size_t cc = lead; cc < cols; ++cc) {
                rows[rr][cc] -= f * rows[row][cc];
            }
        }
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace borelred
