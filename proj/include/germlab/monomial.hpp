#ifndef GERMLAB_MONOMIAL_HPP
#define GERMLAB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace germlab
{

inline constexpr unsigned max_vars = 8;

// Exponent vector of a monomial in n <= max_vars variables. Variables are
// 0-based internally; the text format and the CLI are 1-based.
class monomial
{
public:
    using exponent_type = std::uint16_t;

    monomial() = default;

    explicit monomial(unsigned n) : n_(static_cast<std::uint8_t>(n))
    {
        if (n > max_vars) {
            throw std::invalid_argument("at most " + std::to_string(max_vars) + " variables are supported");
        }
    }

    monomial(unsigned n, std::initializer_list<unsigned> exps) : monomial(n)
    {
        if (exps.size() != n) {
            throw std::invalid_argument("exponent count does not match variable count");
        }
        unsigned i = 0;
        for (auto e : exps) {
            e_[i++] = static_cast<exponent_type>(e);
        }
    }

    static monomial variable(unsigned n, unsigned i)
    {
        monomial m(n);
        m.e_.at(i) = 1;
        return m;
    }

    unsigned nvars() const
    {
        return n_;
    }

    unsigned operator[](unsigned i) const
    {
        return e_[i];
    }

    void set(unsigned i, unsigned e)
    {
        e_[i] = static_cast<exponent_type>(e);
    }

    unsigned degree() const
    {
        unsigned d = 0;
        for (unsigned i = 0; i < n_; ++i) {
            d += e_[i];
        }
        return d;
    }

    bool is_one() const
    {
        return degree() == 0;
    }

    monomial operator*(const monomial &o) const
    {
        monomial r(n_);
        for (unsigned i = 0; i < n_; ++i) {
            r.e_[i] = static_cast<exponent_type>(e_[i] + o.e_[i]);
        }
        return r;
    }

    // True when o divides *this.
    bool divisible_by(const monomial &o) const
    {
        for (unsigned i = 0; i < n_; ++i) {
            if (e_[i] < o.e_[i]) {
                return false;
            }
        }
        return true;
    }

    monomial operator/(const monomial &o) const
    {
        monomial r(n_);
        for (unsigned i = 0; i < n_; ++i) {
            r.e_[i] = static_cast<exponent_type>(e_[i] - o.e_[i]);
        }
        return r;
    }

    friend bool operator==(const monomial &a, const monomial &b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    // Text form in the polynomial grammar, e.g. "x1^2*x3". The empty monomial is "1".
    std::string to_string(char var = 'x') const
    {
        std::string s;
        for (unsigned i = 0; i < n_; ++i) {
            if (e_[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += '*';
            }
            s += var;
            s += std::to_string(i + 1);
            if (e_[i] > 1) {
                s += '^';
                s += std::to_string(e_[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    std::array<exponent_type, max_vars> e_{};
    std::uint8_t n_ = 0;
};

// Graded-lex order: lower total degree first; within a degree the larger
// exponent of variable 1 comes first, then variable 2, and so on.
struct graded_lex_less {
    bool operator()(const monomial &a, const monomial &b) const
    {
        const auto da = a.degree(), db = b.degree();
        if (da != db) {
            return da < db;
        }
        for (unsigned i = 0; i < a.nvars(); ++i) {
            if (a[i] != b[i]) {
                return a[i] > b[i];
            }
        }
        return false;
    }
};

namespace detail
{

inline void enumerate_degree(unsigned n, unsigned d, unsigned var, monomial &cur, std::vector<monomial> &out)
{
    if (var + 1 == n) {
        cur.set(var, d);
        out.push_back(cur);
        return;
    }
    for (unsigned e = d + 1; e-- > 0;) {
        cur.set(var, e);
        enumerate_degree(n, d - e, var + 1, cur, out);
    }
    cur.set(var, 0);
}

} // namespace detail

// All monomials of degree d in n variables, graded-lex order.
inline std::vector<monomial> monomials_of_degree(unsigned n, unsigned d)
{
    std::vector<monomial> out;
    if (n == 0) {
        if (d == 0) {
            out.emplace_back(0);
        }
        return out;
    }
    monomial cur(n);
    detail::enumerate_degree(n, d, 0, cur, out);
    return out;
}

// Monomials of degree min_degree..k in n variables, graded-lex order.
inline std::vector<monomial> monomial_basis(unsigned n, unsigned k, unsigned min_degree)
{
    if (min_degree > k) {
        throw std::invalid_argument("monomial_basis: min_degree exceeds order");
    }
    std::vector<monomial> out;
    for (unsigned d = min_degree; d <= k; ++d) {
        auto md = monomials_of_degree(n, d);
        out.insert(out.end(), md.begin(), md.end());
    }
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t r)
{
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::size_t v = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        v = v * (n - r + i) / i;
    }
    return v;
}

// Closed form for the size of monomial_basis(n, k, min_degree).
inline std::size_t monomial_count(unsigned n, unsigned k, unsigned min_degree)
{
    std::size_t c = 0;
    for (unsigned d = min_degree; d <= k; ++d) {
        c += binomial(d + n - 1, n - 1);
    }
    return c;
}

} // namespace germlab

#endif
