#ifndef GERMLAB_NUMERIC_SERIES_HPP
#define GERMLAB_NUMERIC_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <germlab/jet.hpp>

namespace germlab
{

// Truncated univariate power series in double precision: coefficients of
// t^0..t^order. Every operation returns the order up to which its result is
// determined by the inputs.
class series
{
public:
    series() = default;

    explicit series(unsigned order) : c_(order + 1, 0.0)
    {
    }

    explicit series(std::vector<double> c) : c_(std::move(c))
    {
        if (c_.empty()) {
            throw std::invalid_argument("series: needs at least one coefficient");
        }
    }

    static series monomial(unsigned order, unsigned d, double c = 1.0)
    {
        series s(order);
        if (d <= order) {
            s.c_[d] = c;
        }
        return s;
    }

    static series from_jet(const numeric_jet &j)
    {
        if (j.nvars() != 1) {
            throw std::invalid_argument("series: jet must be univariate");
        }
        series s(j.order());
        for (const auto &[m, c] : j.terms()) {
            s.c_[m[0]] = c;
        }
        return s;
    }

    numeric_jet to_jet() const
    {
        numeric_jet j(1, order());
        for (unsigned i = 0; i <= order(); ++i) {
            j.add_term(germlab::monomial(1, {i}), c_[i]);
        }
        return j;
    }

    unsigned order() const
    {
        return static_cast<unsigned>(c_.size() - 1);
    }

    double operator[](std::size_t i) const
    {
        return i < c_.size() ? c_[i] : 0.0;
    }

    double &operator[](std::size_t i)
    {
        return c_.at(i);
    }

    const std::vector<double> &coeffs() const
    {
        return c_;
    }

    series truncated(unsigned k) const
    {
        series s(k);
        for (unsigned i = 0; i <= k; ++i) {
            s.c_[i] = (*this)[i];
        }
        return s;
    }

    // Coefficients beyond the current order are treated as zero (exact polynomial).
    series padded(unsigned k) const
    {
        return truncated(k);
    }

    friend series operator+(const series &a, const series &b)
    {
        series r(std::min(a.order(), b.order()));
        for (unsigned i = 0; i <= r.order(); ++i) {
            r.c_[i] = a[i] + b[i];
        }
        return r;
    }

    friend series operator-(const series &a, const series &b)
    {
        return a + (-1.0) * b;
    }

    friend series operator*(double s, series a)
    {
        for (auto &x : a.c_) {
            x *= s;
        }
        return a;
    }

    friend series operator*(const series &a, const series &b)
    {
        series r(std::min(a.order(), b.order()));
        for (unsigned i = 0; i <= r.order(); ++i) {
            if (a[i] == 0.0) {
                continue;
            }
            for (unsigned j = 0; i + j <= r.order(); ++j) {
                r.c_[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    series derivative() const
    {
        if (order() == 0) {
            return series(0);
        }
        series r(order() - 1);
        for (unsigned i = 1; i <= order(); ++i) {
            r.c_[i - 1] = c_[i] * i;
        }
        return r;
    }

    series integral() const
    {
        series r(order() + 1);
        for (unsigned i = 0; i <= order(); ++i) {
            r.c_[i + 1] = c_[i] / (i + 1);
        }
        return r;
    }

    // Divides by t^d; the low coefficients must vanish to tolerance.
    series shift_down(unsigned d, double tol = 1e-12) const
    {
        if (d > order()) {
            throw std::domain_error("series: shift exceeds order");
        }
        for (unsigned i = 0; i < d; ++i) {
            if (std::abs(c_[i]) > tol) {
                throw std::domain_error("series: cannot divide by t^" + std::to_string(d));
            }
        }
        series r(order() - d);
        for (unsigned i = d; i <= order(); ++i) {
            r.c_[i - d] = c_[i];
        }
        return r;
    }

    series shift_up(unsigned d) const
    {
        series r(order() + d);
        for (unsigned i = 0; i <= order(); ++i) {
            r.c_[i + d] = c_[i];
        }
        return r;
    }

    double eval(double t) const
    {
        double v = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            v = v * t + *it;
        }
        return v;
    }

private:
    std::vector<double> c_;
};

// outer o inner with inner(0) = 0, at order min(outer, inner).
inline series compose(const series &outer, const series &inner)
{
    if (std::abs(inner[0]) > 1e-14) {
        throw std::domain_error("series compose: inner series must vanish at 0");
    }
    const unsigned k = std::min(outer.order(), inner.order());
    series r(k), pw = series::monomial(k, 0);
    const auto in = inner.truncated(k);
    for (unsigned d = 0; d <= k; ++d) {
        const double c = outer[d];
        if (c != 0.0) {
            for (unsigned i = 0; i <= k; ++i) {
                r[i] += c * pw[i];
            }
        }
        pw = pw * in;
    }
    return r;
}

// a^r for a(0) > 0 via a(0)^r (1 + t)^r and the binomial series.
inline series pow(const series &a, double r)
{
    const double a0 = a[0];
    if (!(a0 > 0.0)) {
        throw std::domain_error("series pow: leading coefficient must be positive");
    }
    const unsigned k = a.order();
    series t = (1.0 / a0) * a;
    t[0] = 0.0;
    series out = series::monomial(k, 0), tp = series::monomial(k, 0);
    double binom = 1.0;
    for (unsigned j = 1; j <= k; ++j) {
        binom *= (r - (j - 1)) / j;
        tp = tp * t;
        out = out + binom * tp;
    }
    return std::pow(a0, r) * out;
}

inline series reciprocal(const series &a)
{
    if (a[0] == 0.0) {
        throw std::domain_error("series reciprocal: zero leading coefficient");
    }
    series r(a.order());
    r[0] = 1.0 / a[0];
    for (unsigned n = 1; n <= a.order(); ++n) {
        double s = 0.0;
        for (unsigned i = 1; i <= n; ++i) {
            s += a[i] * r[n - i];
        }
        r[n] = -s / a[0];
    }
    return r;
}

inline series sqrt(const series &a)
{
    return pow(a, 0.5);
}

// Real cube root with the sign of a(0).
inline series cbrt(const series &a)
{
    return a[0] < 0 ? -1.0 * pow(-1.0 * a, 1.0 / 3.0) : pow(a, 1.0 / 3.0);
}

// Compositional inverse of a with a(0) = 0, a'(0) != 0, by fixed-point
// iteration phi <- (t - N(phi)) / a1 where a = a1 t + N.
inline series revert(const series &a)
{
    if (std::abs(a[0]) > 1e-14 || a.order() < 1 || a[1] == 0.0) {
        throw std::domain_error("series revert: need a(0) = 0 and a'(0) != 0");
    }
    const unsigned k = a.order();
    const double a1 = a[1];
    series nonlin = a;
    nonlin[1] = 0.0;
    const auto t = series::monomial(k, 1);
    series phi = (1.0 / a1) * t;
    for (unsigned it = 0; it < k; ++it) {
        phi = (1.0 / a1) * (t - compose(nonlin, phi));
    }
    return phi;
}

inline double max_abs(const series &a, unsigned upto)
{
    double m = 0.0;
    for (unsigned i = 0; i <= std::min(upto, a.order()); ++i) {
        m = std::max(m, std::abs(a[i]));
    }
    return m;
}

// First index <= upto where |a_i| > tol, or -1.
inline int first_exceeding(const series &a, unsigned upto, double tol)
{
    for (unsigned i = 0; i <= std::min(upto, a.order()); ++i) {
        if (std::abs(a[i]) > tol) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

// Small dense linear algebra for the surface layer.
using dmatrix = std::vector<std::vector<double>>;

inline dmatrix dmat_identity(std::size_t n)
{
    dmatrix m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline dmatrix dmat_mul(const dmatrix &a, const dmatrix &b)
{
    dmatrix r(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

inline dmatrix dmat_transpose(const dmatrix &a)
{
    dmatrix r(a[0].size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[0].size(); ++j) {
            r[j][i] = a[i][j];
        }
    }
    return r;
}

// Gauss-Jordan with partial pivoting.
inline dmatrix dmat_inverse(dmatrix a)
{
    const auto n = a.size();
    auto inv = dmat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
                piv = r;
            }
        }
        if (std::abs(a[piv][c]) < 1e-300) {
            throw std::domain_error("dmat_inverse: singular matrix");
        }
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const double d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0.0) {
                continue;
            }
            const double f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// M . F for a numeric map F.
inline numeric_map apply_matrix(const dmatrix &M, const numeric_map &F)
{
    std::vector<numeric_jet> comps;
    for (std::size_t i = 0; i < M.size(); ++i) {
        numeric_jet c(F.source_dim(), F.order());
        for (std::size_t j = 0; j < M[i].size(); ++j) {
            if (M[i][j] != 0.0) {
                c += M[i][j] * F[static_cast<unsigned>(j)];
            }
        }
        comps.push_back(std::move(c));
    }
    return numeric_map(std::move(comps), F.allows_constants());
}

// Linear part of a numeric map: entry (i, j) is the coefficient of x_j in F_i.
inline dmatrix linear_part(const numeric_map &F)
{
    dmatrix L(F.target_dim(), std::vector<double>(F.source_dim(), 0.0));
    for (unsigned i = 0; i < F.target_dim(); ++i) {
        for (unsigned j = 0; j < F.source_dim(); ++j) {
            L[i][j] = F[i].coeff(monomial::variable(F.source_dim(), j));
        }
    }
    return L;
}

// Inverse of a map germ R^n -> R^n with invertible linear part, same order.
inline numeric_map invert_map(const numeric_map &F)
{
    const unsigned n = F.source_dim(), k = F.order();
    if (F.target_dim() != n) {
        throw std::invalid_argument("invert_map: map must be square");
    }
    const auto Linv = dmat_inverse(linear_part(F));
    std::vector<numeric_jet> nl;
    for (unsigned i = 0; i < n; ++i) {
        numeric_jet c = F[i];
        for (unsigned j = 0; j < n; ++j) {
            const auto m = monomial::variable(n, j);
            c.add_term(m, -c.coeff(m));
        }
        nl.push_back(std::move(c));
    }
    const numeric_map nonlin(std::move(nl));
    const auto id = identity_map<double>(n, k);
    auto phi = apply_matrix(Linv, id);
    for (unsigned it = 0; it < k; ++it) {
        const auto np = compose(nonlin, phi);
        std::vector<numeric_jet> diffc;
        for (unsigned i = 0; i < n; ++i) {
            diffc.push_back(id[i] - np[i]);
        }
        phi = apply_matrix(Linv, numeric_map(std::move(diffc)));
    }
    return phi;
}

inline numeric_map to_numeric(const germ_jet &f)
{
    return f.map_coeffs([](const rational &c) { return c.get_d(); });
}

// Largest coefficient magnitude over all components.
inline double max_abs(const numeric_map &F)
{
    double m = 0.0;
    for (const auto &c : F.components()) {
        for (const auto &[mono, x] : c.terms()) {
            m = std::max(m, std::abs(x));
        }
    }
    return m;
}

} // namespace germlab

#endif
