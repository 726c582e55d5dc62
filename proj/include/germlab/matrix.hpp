#ifndef GERMLAB_MATRIX_HPP
#define GERMLAB_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <germlab/rational.hpp>

namespace germlab
{

template <class T>
class matrix
{
public:
    matrix() = default;

    matrix(std::size_t rows, std::size_t cols) : data_(rows * cols, T(0)), rows_(rows), cols_(cols)
    {
    }

    matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto &r : init) {
            if (r.size() != cols_) {
                throw std::invalid_argument("matrix: ragged initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static matrix identity(std::size_t n)
    {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    // Matrix unit E_ij.
    static matrix unit(std::size_t n, std::size_t i, std::size_t j)
    {
        matrix m(n, n);
        m(i, j) = T(1);
        return m;
    }

    std::size_t rows() const
    {
        return rows_;
    }

    std::size_t cols() const
    {
        return cols_;
    }

    T &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }

    const T &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void append_row(const std::vector<T> &r)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = r.size();
        }
        if (r.size() != cols_) {
            throw std::invalid_argument("matrix: row length mismatch");
        }
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    // Entries flattened row-major; used to treat p x p matrices as vectors in M_p.
    const std::vector<T> &flat() const
    {
        return data_;
    }

    matrix transpose() const
    {
        matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend matrix operator*(const matrix &a, const matrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix: product dimension mismatch");
        }
        matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (detail::is_zero(a(i, k))) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        }
        return r;
    }

    friend matrix operator+(matrix a, const matrix &b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] += b.data_[i];
        }
        return a;
    }

    friend matrix operator-(matrix a, const matrix &b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] -= b.data_[i];
        }
        return a;
    }

    friend matrix operator*(const T &s, matrix a)
    {
        for (auto &x : a.data_) {
            x *= s;
        }
        return a;
    }

    friend bool operator==(const matrix &a, const matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T &x) { return detail::is_zero(x); });
    }

    T trace() const
    {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

private:
    void check_same(const matrix &b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_) {
            throw std::invalid_argument("matrix: shape mismatch");
        }
    }

    std::vector<T> data_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
};

using rational_matrix = matrix<rational>;
using rvec = std::vector<rational>;

struct rref_result {
    rational_matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Exact Gauss-Jordan elimination.
inline rref_result rref(rational_matrix m)
{
    rref_result res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && ::sgn(m(piv, c)) == 0) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(piv, j), m(r, j));
            }
        }
        const rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || ::sgn(m(i, c)) == 0) {
                continue;
            }
            const rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (::sgn(m(r, j)) != 0) {
                    m(i, j) -= f * m(r, j);
                }
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const rational_matrix &m)
{
    return rref(m).rank;
}

// Basis of the null space {v : m v = 0}, one vector per free column.
inline std::vector<rvec> kernel_vectors(const rational_matrix &m)
{
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<rvec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        rvec v(m.cols(), rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            v[red.pivots[i]] = -red.reduced(i, free);
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Exact inverse; throws on singular input.
inline rational_matrix inverse(const rational_matrix &a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    const auto n = a.rows();
    rational_matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, n + i) = 1;
    }
    auto red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) {
        throw std::domain_error("inverse: matrix is singular");
    }
    rational_matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = red.reduced(i, n + j);
        }
    }
    return inv;
}

inline rational determinant(rational_matrix m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    rational det(1);
    const auto n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && ::sgn(m(piv, c)) == 0) {
            ++piv;
        }
        if (piv == n) {
            return rational(0);
        }
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (::sgn(m(i, c)) == 0) {
                continue;
            }
            const rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) {
                m(i, j) -= f * m(c, j);
            }
        }
    }
    return det;
}

} // namespace germlab

#endif
