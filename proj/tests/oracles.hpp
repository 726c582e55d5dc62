// Independent reference computations for the test suites. Nothing here uses
// the library's rational linear algebra or jet code.
#ifndef GERMLAB_TEST_ORACLES_HPP
#define GERMLAB_TEST_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle
{

using bigint = boost::multiprecision::cpp_int;
using int_matrix = std::vector<std::vector<bigint>>;

// Fraction-free (Bareiss) elimination; exact rank of an integer matrix.
inline std::size_t bareiss_rank(int_matrix a)
{
    const std::size_t rows = a.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    bigint prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

// Exponent tuples of total degree d in p variables, lexicographic.
inline std::vector<std::vector<int>> exponents(int p, int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e(p, 0);
    auto rec = [&](auto &self, int var, int left) -> void {
        if (var == p - 1) {
            e[var] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[var] = a;
            self(self, var + 1, left - a);
        }
    };
    rec(rec, 0, d);
    return out;
}

// Homogeneous degree-d fields (eta_1..eta_p) as unknowns; returns a map from
// (component i, exponent) to column index.
inline std::map<std::pair<int, std::vector<int>>, std::size_t> field_columns(int p, int d)
{
    std::map<std::pair<int, std::vector<int>>, std::size_t> cols;
    for (int i = 0; i < p; ++i) {
        for (const auto &e : exponents(p, d)) {
            cols.emplace(std::make_pair(i, e), cols.size());
        }
    }
    return cols;
}

// Row equations "coefficient of y^m in sum of c * d eta_i / d y_j = 0".
struct linear_system {
    std::map<std::vector<int>, std::vector<bigint>> rows_by_key;
    std::size_t ncols = 0;

    void add(const std::vector<int> &key, std::size_t col, const bigint &v)
    {
        auto &r = rows_by_key.try_emplace(key, std::vector<bigint>(ncols, 0)).first->second;
        r[col] += v;
    }

    int_matrix matrix() const
    {
        int_matrix m;
        for (const auto &[k, r] : rows_by_key) {
            m.push_back(r);
        }
        return m;
    }
};

// dim of divergence-free homogeneous degree-d fields on the plane: the
// degree-d slice of the fields whose Jacobian is trace-free everywhere.
inline std::size_t divergence_free_dim(int d)
{
    const auto cols = field_columns(2, d);
    linear_system sys;
    sys.ncols = cols.size();
    for (const auto &[key, col] : cols) {
        const auto &[i, e] = key;
        if (e[i] == 0) {
            continue;
        }
        auto m = e;
        m[i] -= 1;
        sys.add(m, col, e[i]);
    }
    return cols.size() - bareiss_rank(sys.matrix());
}

// dim of homogeneous degree-d fields on R^p with antisymmetric Jacobian
// everywhere (d eta_i/d y_j + d eta_j/d y_i = 0).
inline std::size_t killing_dim(int p, int d)
{
    const auto cols = field_columns(p, d);
    linear_system sys;
    sys.ncols = cols.size();
    for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
            for (const auto &[key, col] : cols) {
                const auto &[c, e] = key;
                // term d eta_c / d y_v for (c, v) in {(i, j), (j, i)}
                for (int pass = 0; pass < (i == j ? 1 : 2); ++pass) {
                    const int comp = pass == 0 ? i : j;
                    const int var = pass == 0 ? j : i;
                    if (c != comp || e[var] == 0) {
                        continue;
                    }
                    auto m = e;
                    m[var] -= 1;
                    m.push_back(i);
                    m.push_back(j);
                    sys.add(m, col, bigint(e[var]) * (i == j ? 2 : 1));
                }
            }
        }
    }
    return cols.size() - bareiss_rank(sys.matrix());
}

// Extended A[GL(2)] codimension of the curve (x^a, x^b) at order k by direct
// enumeration: vectors live in (x^0..x^k) x (x^0..x^k). The spanning set is
// xi f' for xi = x^j and every target monomial y1^s y2^t e_i composed with f.
inline std::size_t monomial_curve_codim(int a, int b, int k)
{
    const std::size_t dim = 2 * static_cast<std::size_t>(k + 1);
    int_matrix rows;
    auto vec = [&](int comp, int deg, const bigint &c) {
        std::vector<bigint> v(dim, 0);
        if (deg <= k) {
            v[static_cast<std::size_t>(comp * (k + 1) + deg)] = c;
        }
        return v;
    };
    for (int j = 0; j <= k; ++j) {
        auto v = vec(0, j + a - 1, a);
        const auto w = vec(1, j + b - 1, b);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] += w[i];
        }
        rows.push_back(v);
    }
    for (int s = 0; s * a <= k; ++s) {
        for (int t = 0; s * a + t * b <= k; ++t) {
            rows.push_back(vec(0, s * a + t * b, 1));
            rows.push_back(vec(1, s * a + t * b, 1));
        }
    }
    return dim - bareiss_rank(rows);
}

// Equi-affine curvature at t = 0 from the derivatives f', f'', f''' and the
// derivatives D', D'' of D = det(f', f''):
//   kappa = (det(f'', f''') - 3 s' s''^2 + s'^2 s''') / s'^5,  s' = D^(1/3).
inline double equiaffine_at_zero(const double f1[2], const double f2[2], const double f3[2], double dD, double ddD)
{
    const double D = f1[0] * f2[1] - f1[1] * f2[0];
    const double s1 = std::cbrt(D);
    const double s2 = dD / (3.0 * std::cbrt(D * D));
    const double s3 = ddD / (3.0 * std::cbrt(D * D)) - 2.0 * dD * dD / (9.0 * std::cbrt(D * D * D * D * D));
    const double d23 = f2[0] * f3[1] - f2[1] * f3[0];
    return (d23 - 3.0 * s1 * s2 * s2 + s1 * s1 * s3) / std::pow(s1, 5);
}

// Ellipse (a sin t, b (1 - cos t)) at t = 0: D = ab is constant.
inline double ellipse_equiaffine_at_zero(double a, double b)
{
    const double f1[2] = {a, 0.0}, f2[2] = {0.0, b}, f3[2] = {-a, 0.0};
    return equiaffine_at_zero(f1, f2, f3, 0.0, 0.0);
}

} // namespace oracle

#endif
