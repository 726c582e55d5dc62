#ifndef GERMLAB_JET_HPP
#define GERMLAB_JET_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <germlab/monomial.hpp>
#include <germlab/rational.hpp>

namespace germlab
{

// Truncated multivariate polynomial: an element of E_n / M_n^{order+1}.
// Coefficients are stored sparsely; no stored coefficient is zero and no
// stored monomial exceeds the order.
template <class C>
class jet
{
public:
    using coeff_type = C;
    using term_map = std::map<monomial, C, graded_lex_less>;

    jet() = default;

    jet(unsigned n, unsigned order) : n_(n), order_(order)
    {
        if (n > max_vars) {
            throw std::invalid_argument("jet: too many variables");
        }
    }

    static jet constant(unsigned n, unsigned order, const C &c)
    {
        jet r(n, order);
        r.add_term(monomial(n), c);
        return r;
    }

    // x_{i+1} (0-based index i).
    static jet variable(unsigned n, unsigned order, unsigned i)
    {
        jet r(n, order);
        r.add_term(monomial::variable(n, i), C(1));
        return r;
    }

    static jet term(unsigned n, unsigned order, const monomial &m, const C &c)
    {
        jet r(n, order);
        r.add_term(m, c);
        return r;
    }

    unsigned nvars() const
    {
        return n_;
    }

    unsigned order() const
    {
        return order_;
    }

    const term_map &terms() const
    {
        return terms_;
    }

    bool is_zero() const
    {
        return terms_.empty();
    }

    std::size_t size() const
    {
        return terms_.size();
    }

    C coeff(const monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const
    {
        return coeff(monomial(n_));
    }

    // Adds c*m; terms above the order are discarded.
    void add_term(const monomial &m, const C &c)
    {
        if (m.nvars() != n_) {
            throw std::invalid_argument("jet: monomial variable count mismatch");
        }
        if (m.degree() > order_ || detail::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    // Lowest degree present, or order+1 for the zero jet.
    unsigned min_degree() const
    {
        return terms_.empty() ? order_ + 1 : terms_.begin()->first.degree();
    }

    unsigned max_degree() const
    {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    jet truncated(unsigned k) const
    {
        jet r(n_, k);
        for (const auto &[m, c] : terms_) {
            if (m.degree() <= k) {
                r.terms_.emplace_hint(r.terms_.end(), m, c);
            }
        }
        return r;
    }

    // Same polynomial viewed at a larger order. Only valid for exact polynomials.
    jet with_order(unsigned k) const
    {
        if (k < order_) {
            return truncated(k);
        }
        jet r = *this;
        r.order_ = k;
        return r;
    }

    jet homogeneous_part(unsigned d) const
    {
        jet r(n_, order_);
        for (const auto &[m, c] : terms_) {
            if (m.degree() == d) {
                r.terms_.emplace_hint(r.terms_.end(), m, c);
            }
        }
        return r;
    }

    jet operator-() const
    {
        jet r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }

    jet &operator+=(const jet &o)
    {
        check_compatible(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    jet &operator-=(const jet &o)
    {
        check_compatible(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    jet &operator*=(const C &s)
    {
        if (detail::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto &t : terms_) {
            t.second *= s;
        }
        return *this;
    }

    friend jet operator+(jet a, const jet &b)
    {
        a += b;
        return a;
    }

    friend jet operator-(jet a, const jet &b)
    {
        a -= b;
        return a;
    }

    friend jet operator*(jet a, const C &s)
    {
        a *= s;
        return a;
    }

    friend jet operator*(const C &s, jet a)
    {
        a *= s;
        return a;
    }

    // Truncated product: monomials of degree > order are dropped.
    friend jet operator*(const jet &a, const jet &b)
    {
        a.check_compatible(b);
        jet r(a.n_, a.order_);
        for (const auto &[ma, ca] : a.terms_) {
            const auto da = ma.degree();
            for (const auto &[mb, cb] : b.terms_) {
                // Terms are sorted by degree, so the rest of b is too high as well.
                if (da + mb.degree() > a.order_) {
                    break;
                }
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }

    jet &operator*=(const jet &o)
    {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const jet &a, const jet &b)
    {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    template <class F>
    auto map_coeffs(F &&f) const -> jet<decltype(f(std::declval<const C &>()))>
    {
        jet<decltype(f(std::declval<const C &>()))> r(n_, order_);
        for (const auto &[m, c] : terms_) {
            r.add_term(m, f(c));
        }
        return r;
    }

private:
    void check_compatible(const jet &o) const
    {
        if (n_ != o.n_) {
            throw std::invalid_argument("jet: variable count mismatch");
        }
        if (order_ != o.order_) {
            throw std::invalid_argument("jet: order mismatch (" + std::to_string(order_) + " vs "
                                        + std::to_string(o.order_) + ")");
        }
    }

    term_map terms_;
    unsigned n_ = 0;
    unsigned order_ = 0;
};

using jet_poly = jet<rational>;
using numeric_jet = jet<double>;

// Partial derivative in variable i (0-based). The result keeps the input
// order even though its top-degree coefficients are not determined by a
// k-jet; callers compare derivatives at order k-1.
template <class C>
jet<C> diff(const jet<C> &a, unsigned i)
{
    if (i >= a.nvars()) {
        throw std::invalid_argument("diff: variable index out of range");
    }
    jet<C> r(a.nvars(), a.order());
    for (const auto &[m, c] : a.terms()) {
        if (m[i] == 0) {
            continue;
        }
        auto mm = m;
        mm.set(i, m[i] - 1);
        r.add_term(mm, c * C(m[i]));
    }
    return r;
}

// Tuple of p jets in n variables sharing an order. With allow_constants false
// it models a map germ f:(R^n,0)->(R^p,0); with it true, a vector-field jet or
// an element of theta(f).
template <class C>
class map_jet
{
public:
    map_jet() = default;

    map_jet(unsigned n, unsigned p, unsigned order, bool allow_constants = false)
        : comps_(p, jet<C>(n, order)), n_(n), order_(order), allow_constants_(allow_constants)
    {
    }

    map_jet(std::vector<jet<C>> comps, bool allow_constants = false)
        : comps_(std::move(comps)), allow_constants_(allow_constants)
    {
        if (comps_.empty()) {
            throw std::invalid_argument("map_jet: at least one component is required");
        }
        n_ = comps_[0].nvars();
        order_ = comps_[0].order();
        for (const auto &c : comps_) {
            if (c.nvars() != n_ || c.order() != order_) {
                throw std::invalid_argument("map_jet: components must share variable count and order");
            }
        }
        validate();
    }

    unsigned source_dim() const
    {
        return n_;
    }

    unsigned target_dim() const
    {
        return static_cast<unsigned>(comps_.size());
    }

    unsigned order() const
    {
        return order_;
    }

    bool allows_constants() const
    {
        return allow_constants_;
    }

    const jet<C> &operator[](unsigned i) const
    {
        return comps_.at(i);
    }

    const std::vector<jet<C>> &components() const
    {
        return comps_;
    }

    void set_component(unsigned i, jet<C> c)
    {
        if (c.nvars() != n_ || c.order() != order_) {
            throw std::invalid_argument("map_jet: component shape mismatch");
        }
        comps_.at(i) = std::move(c);
        validate();
    }

    bool is_zero() const
    {
        return std::all_of(comps_.begin(), comps_.end(), [](const auto &c) { return c.is_zero(); });
    }

    map_jet truncated(unsigned k) const
    {
        map_jet r = *this;
        for (auto &c : r.comps_) {
            c = c.truncated(k);
        }
        r.order_ = k;
        return r;
    }

    map_jet with_order(unsigned k) const
    {
        map_jet r = *this;
        for (auto &c : r.comps_) {
            c = c.with_order(k);
        }
        r.order_ = k;
        return r;
    }

    map_jet homogeneous_part(unsigned d) const
    {
        map_jet r = *this;
        for (auto &c : r.comps_) {
            c = c.homogeneous_part(d);
        }
        return r;
    }

    friend bool operator==(const map_jet &a, const map_jet &b)
    {
        return a.comps_ == b.comps_;
    }

    template <class F>
    auto map_coeffs(F &&f) const
    {
        using D = decltype(f(std::declval<const C &>()));
        std::vector<jet<D>> cs;
        for (const auto &c : comps_) {
            cs.push_back(c.map_coeffs(f));
        }
        return map_jet<D>(std::move(cs), allow_constants_);
    }

private:
    void validate() const
    {
        if (allow_constants_) {
            return;
        }
        for (const auto &c : comps_) {
            if (!detail::is_zero(c.constant_term())) {
                throw std::invalid_argument("map germ components must have zero constant term");
            }
        }
    }

    std::vector<jet<C>> comps_;
    unsigned n_ = 0;
    unsigned order_ = 0;
    bool allow_constants_ = false;
};

using germ_jet = map_jet<rational>;
using numeric_map = map_jet<double>;

// Caches the products inner^alpha for repeated composition against the
// same inner map. Valid because inner has zero constant term.
template <class C>
class pullback_table
{
public:
    explicit pullback_table(const map_jet<C> &inner) : inner_(inner)
    {
        for (const auto &c : inner.components()) {
            if (!detail::is_zero(c.constant_term())) {
                throw std::invalid_argument("compose: inner map has a nonzero constant term");
            }
        }
    }

    const map_jet<C> &inner() const
    {
        return inner_;
    }

    // inner^alpha, truncated at the inner order.
    const jet<C> &power(const monomial &alpha)
    {
        if (alpha.nvars() != inner_.target_dim()) {
            throw std::invalid_argument("compose: outer variable count does not match inner target dimension");
        }
        auto it = cache_.find(alpha);
        if (it != cache_.end()) {
            return it->second;
        }
        jet<C> r;
        if (alpha.is_one()) {
            r = jet<C>::constant(inner_.source_dim(), inner_.order(), C(1));
        } else if (alpha.degree() > inner_.order()) {
            r = jet<C>(inner_.source_dim(), inner_.order());
        } else {
            unsigned i = 0;
            while (alpha[i] == 0) {
                ++i;
            }
            auto lower = alpha;
            lower.set(i, alpha[i] - 1);
            r = power(lower) * inner_[i];
        }
        return cache_.emplace(alpha, std::move(r)).first->second;
    }

    // outer o inner, at order min(outer order, inner order).
    jet<C> compose(const jet<C> &outer)
    {
        const unsigned k = std::min(outer.order(), inner_.order());
        jet<C> r(inner_.source_dim(), k);
        for (const auto &[m, c] : outer.terms()) {
            if (m.degree() > k) {
                break;
            }
            const auto &pw = power(m);
            for (const auto &[mm, cc] : pw.terms()) {
                if (mm.degree() > k) {
                    break;
                }
                r.add_term(mm, c * cc);
            }
        }
        return r;
    }

    map_jet<C> compose(const map_jet<C> &outer)
    {
        std::vector<jet<C>> cs;
        for (const auto &c : outer.components()) {
            cs.push_back(compose(c));
        }
        return map_jet<C>(std::move(cs), outer.allows_constants());
    }

private:
    map_jet<C> inner_;
    std::map<monomial, jet<C>, graded_lex_less> cache_;
};

// k-jet of outer o inner; inner must vanish at the origin.
template <class C>
jet<C> compose(const jet<C> &outer, const map_jet<C> &inner)
{
    return pullback_table<C>(inner).compose(outer);
}

template <class C>
map_jet<C> compose(const map_jet<C> &outer, const map_jet<C> &inner)
{
    return pullback_table<C>(inner).compose(outer);
}

// Entry (i, j) is d f_i / d x_j.
template <class C>
std::vector<std::vector<jet<C>>> jacobian(const map_jet<C> &f)
{
    std::vector<std::vector<jet<C>>> J(f.target_dim());
    for (unsigned i = 0; i < f.target_dim(); ++i) {
        for (unsigned j = 0; j < f.source_dim(); ++j) {
            J[i].push_back(diff(f[i], j));
        }
    }
    return J;
}

// Identity germ on R^n.
template <class C>
map_jet<C> identity_map(unsigned n, unsigned order)
{
    std::vector<jet<C>> cs;
    for (unsigned i = 0; i < n; ++i) {
        cs.push_back(jet<C>::variable(n, order, i));
    }
    return map_jet<C>(std::move(cs));
}

// Text form in the polynomial grammar.
template <class C>
std::string to_string(const jet<C> &a, char var = 'x')
{
    if (a.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[m, c] : a.terms()) {
        std::string cs;
        bool neg = false;
        if constexpr (std::is_same_v<C, rational>) {
            neg = ::sgn(c) < 0;
            cs = rational(neg ? rational(-c) : c).get_str();
        } else {
            neg = c < 0;
            std::array<char, 32> buf{};
            const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), neg ? -c : c);
            cs.assign(buf.data(), res.ptr);
        }
        if (s.empty()) {
            s = neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += cs;
        } else if (cs == "1") {
            s += m.to_string(var);
        } else {
            s += cs + "*" + m.to_string(var);
        }
    }
    return s;
}

} // namespace germlab

#endif
