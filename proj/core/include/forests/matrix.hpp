#ifndef FORESTS_MATRIX_HPP
#define FORESTS_MATRIX_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forests/rational.hpp"

namespace forests {

struct SingularMatrixError : std::domain_error {
    SingularMatrixError() : std::domain_error("matrix is singular") {}
};

// Dense row-major matrix over an exact scalar type (Int or Rat).
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix m(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
            }
        return m;
    }

    Matrix operator+(const Matrix& rhs) const { return zipped(rhs, true); }
    Matrix operator-(const Matrix& rhs) const { return zipped(rhs, false); }

    Matrix operator*(const T& scalar) const {
        Matrix m(*this);
        for (auto& x : m.data_) x *= scalar;
        return m;
    }

    // Submatrix with the given rows and columns deleted; remaining entries
    // keep their original relative order. Indices may repeat.
    Matrix erased(std::vector<int> del_rows, std::vector<int> del_cols) const {
        auto keep = [](int total, std::vector<int>& del, const char* what) {
            for (int i : del)
                if (i < 0 || i >= total)
                    throw std::out_of_range(std::string("index out of range deleting ") + what);
            std::sort(del.begin(), del.end());
            del.erase(std::unique(del.begin(), del.end()), del.end());
            std::vector<int> kept;
            size_t p = 0;
            for (int i = 0; i < total; ++i) {
                if (p < del.size() && del[p] == i) {
                    ++p;
                    continue;
                }
                kept.push_back(i);
            }
            return kept;
        };
        std::vector<int> rkeep = keep(rows_, del_rows, "rows");
        std::vector<int> ckeep = keep(cols_, del_cols, "cols");
        Matrix m(static_cast<int>(rkeep.size()), static_cast<int>(ckeep.size()));
        for (size_t i = 0; i < rkeep.size(); ++i)
            for (size_t j = 0; j < ckeep.size(); ++j) m(i, j) = (*this)(rkeep[i], ckeep[j]);
        return m;
    }

  private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }

    Matrix zipped(const Matrix& rhs, bool add) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("matrix shape mismatch in sum");
        Matrix m(*this);
        for (size_t i = 0; i < data_.size(); ++i) {
            if (add)
                m.data_[i] += rhs.data_[i];
            else
                m.data_[i] -= rhs.data_[i];
        }
        return m;
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Bareiss fraction-free elimination. All divisions are exact, which keeps
// intermediate entries at the size of minors rather than their products.
// det of the 0x0 matrix is 1.
inline Int det_bareiss(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return n == 0 ? Int(1) : Int(sign * m(n - 1, n - 1));
}

// Exact determinant of a rational matrix: clear denominators row by row,
// run Bareiss over the integers, divide the scale factors back out.
inline Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    IntMatrix cleared(n, n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int row_lcm = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rat scaled = m(i, j) * Rat(row_lcm);
            cleared(i, j) = scaled.get_num();
        }
        scale *= row_lcm;
    }
    return make_rat(det_bareiss(std::move(cleared)), scale);
}

inline Rat det(const IntMatrix& m) { return Rat(det_bareiss(m)); }

// Gauss-Jordan inverse over exact rationals. Throws SingularMatrixError.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    RatMatrix a(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrixError();
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        Rat p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline std::vector<Rat> matvec(const RatMatrix& m, const std::vector<Rat>& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix shape mismatch in matvec");
    std::vector<Rat> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

// v^T M w
inline Rat quadratic_form(const std::vector<Rat>& v, const RatMatrix& m, const std::vector<Rat>& w) {
    if (m.rows() != static_cast<int>(v.size()) || m.cols() != static_cast<int>(w.size()))
        throw std::invalid_argument("matrix shape mismatch in quadratic form");
    Rat out;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out += v[i] * m(i, j) * w[j];
    return out;
}

// mu 1^T style rank-one product.
inline RatMatrix outer(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    RatMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

}  // namespace forests

#endif
