#ifndef GERMLAB_SUBSPACE_HPP
#define GERMLAB_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <germlab/jet.hpp>
#include <germlab/matrix.hpp>

namespace germlab
{

// Incrementally maintained reduced row-echelon basis. Rows are kept sorted by
// pivot column with every pivot normalized to 1 and cleared from other rows.
class row_reducer
{
public:
    explicit row_reducer(std::size_t ncols) : ncols_(ncols)
    {
    }

    std::size_t ncols() const
    {
        return ncols_;
    }

    std::size_t rank() const
    {
        return rows_.size();
    }

    const std::vector<rvec> &rows() const
    {
        return rows_;
    }

    const std::vector<std::size_t> &pivots() const
    {
        return pivots_;
    }

    // Reduces v against the current basis in place.
    void reduce(rvec &v) const
    {
        if (v.size() != ncols_) {
            throw std::invalid_argument("row_reducer: vector length mismatch");
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto p = pivots_[r];
            if (::sgn(v[p]) == 0) {
                continue;
            }
            const rational f = v[p];
            const auto &row = rows_[r];
            for (std::size_t j = p; j < ncols_; ++j) {
                if (::sgn(row[j]) != 0) {
                    v[j] -= f * row[j];
                }
            }
        }
    }

    // Adds v to the span; returns true when the rank grew.
    bool add(rvec v)
    {
        reduce(v);
        std::size_t p = 0;
        while (p < ncols_ && ::sgn(v[p]) == 0) {
            ++p;
        }
        if (p == ncols_) {
            return false;
        }
        const rational inv = 1 / v[p];
        for (std::size_t j = p; j < ncols_; ++j) {
            if (::sgn(v[j]) != 0) {
                v[j] *= inv;
            }
        }
        for (auto &row : rows_) {
            if (::sgn(row[p]) == 0) {
                continue;
            }
            const rational f = row[p];
            for (std::size_t j = p; j < ncols_; ++j) {
                if (::sgn(v[j]) != 0) {
                    row[j] -= f * v[j];
                }
            }
        }
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    bool contains(rvec v) const
    {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const rational &x) { return ::sgn(x) == 0; });
    }

private:
    std::vector<rvec> rows_;
    std::vector<std::size_t> pivots_;
    std::size_t ncols_;
};

// A subspace of a labelled coordinate space, stored as its unique RREF basis.
// Subspaces with different labels are never mixed.
class subspace_basis
{
public:
    subspace_basis() = default;

    subspace_basis(std::string label, std::size_t ambient_dim) : label_(std::move(label)), ambient_dim_(ambient_dim)
    {
    }

    subspace_basis(std::string label, const row_reducer &red)
        : label_(std::move(label)), ambient_dim_(red.ncols()), rows_(red.rows()), pivots_(red.pivots())
    {
    }

    static subspace_basis full(std::string label, std::size_t ambient_dim)
    {
        row_reducer red(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            rvec v(ambient_dim, rational(0));
            v[i] = 1;
            red.add(std::move(v));
        }
        return subspace_basis(std::move(label), red);
    }

    const std::string &ambient_label() const
    {
        return label_;
    }

    std::size_t ambient_dim() const
    {
        return ambient_dim_;
    }

    std::size_t dim() const
    {
        return rows_.size();
    }

    const std::vector<rvec> &rows() const
    {
        return rows_;
    }

    const std::vector<std::size_t> &pivots() const
    {
        return pivots_;
    }

    row_reducer reducer() const
    {
        row_reducer red(ambient_dim_);
        for (const auto &r : rows_) {
            red.add(r);
        }
        return red;
    }

    bool contains(const rvec &v) const
    {
        if (v.size() != ambient_dim_) {
            throw std::invalid_argument("subspace: vector length mismatch");
        }
        rvec w = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto p = pivots_[r];
            if (::sgn(w[p]) == 0) {
                continue;
            }
            const rational f = w[p];
            for (std::size_t j = p; j < ambient_dim_; ++j) {
                if (::sgn(rows_[r][j]) != 0) {
                    w[j] -= f * rows_[r][j];
                }
            }
        }
        return std::all_of(w.begin(), w.end(), [](const rational &x) { return ::sgn(x) == 0; });
    }

    // Subspace inclusion *this <= o.
    bool is_subspace_of(const subspace_basis &o) const
    {
        check_label(o);
        return std::all_of(rows_.begin(), rows_.end(), [&](const rvec &r) { return o.contains(r); });
    }

    void check_label(const subspace_basis &o) const
    {
        if (label_ != o.label_ || ambient_dim_ != o.ambient_dim_) {
            throw std::invalid_argument("subspace: ambient mismatch ('" + label_ + "' vs '" + o.label_ + "')");
        }
    }

    // Echelon rows are unique, so equality of subspaces is equality of rows.
    friend bool operator==(const subspace_basis &a, const subspace_basis &b)
    {
        return a.label_ == b.label_ && a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
    }

private:
    std::string label_;
    std::size_t ambient_dim_ = 0;
    std::vector<rvec> rows_;
    std::vector<std::size_t> pivots_;
};

inline subspace_basis span(const std::vector<rvec> &vectors, const std::string &label, std::size_t ambient_dim)
{
    row_reducer red(ambient_dim);
    for (const auto &v : vectors) {
        if (v.size() != ambient_dim) {
            throw std::invalid_argument("span: vector length does not match ambient dimension");
        }
        red.add(v);
    }
    return subspace_basis(label, red);
}

inline subspace_basis subspace_sum(const subspace_basis &a, const subspace_basis &b)
{
    a.check_label(b);
    auto red = a.reducer();
    for (const auto &r : b.rows()) {
        red.add(r);
    }
    return subspace_basis(a.ambient_label(), red);
}

// Zassenhaus: reduce rows [a|a] and [b|0]; rows whose pivot lies in the right
// half have zero left half and their right halves span the intersection.
inline subspace_basis subspace_intersection(const subspace_basis &a, const subspace_basis &b)
{
    a.check_label(b);
    const auto n = a.ambient_dim();
    row_reducer red(2 * n);
    for (const auto &r : a.rows()) {
        rvec v(2 * n);
        std::copy(r.begin(), r.end(), v.begin());
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        red.add(std::move(v));
    }
    for (const auto &r : b.rows()) {
        rvec v(2 * n, rational(0));
        std::copy(r.begin(), r.end(), v.begin());
        red.add(std::move(v));
    }
    row_reducer out(n);
    for (std::size_t i = 0; i < red.rank(); ++i) {
        if (red.pivots()[i] >= n) {
            const auto &row = red.rows()[i];
            out.add(rvec(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
        }
    }
    return subspace_basis(a.ambient_label(), out);
}

inline subspace_basis kernel(const rational_matrix &m, const std::string &label)
{
    return span(kernel_vectors(m), label, m.cols());
}

inline std::size_t quotient_dim(const subspace_basis &sub, std::size_t ambient_dim)
{
    if (sub.ambient_dim() != ambient_dim) {
        throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
    }
    return ambient_dim - sub.dim();
}

// dim(larger / smaller) for smaller <= larger.
inline std::size_t relative_dim(const subspace_basis &larger, const subspace_basis &smaller)
{
    larger.check_label(smaller);
    if (!smaller.is_subspace_of(larger)) {
        throw invariant_error("relative_dim: subspace containment violated in '" + larger.ambient_label() + "'");
    }
    return larger.dim() - smaller.dim();
}

// Coordinatization of tuples of `ncomp` jets in n variables restricted to
// degrees min_degree..max_degree. Index = component * (#monomials) + monomial.
class jet_coordinates
{
public:
    jet_coordinates(std::string tag, unsigned n, unsigned ncomp, unsigned min_degree, unsigned max_degree)
        : n_(n), ncomp_(ncomp), min_(min_degree), max_(max_degree)
    {
        if (min_degree <= max_degree) {
            monos_ = monomial_basis(n, max_degree, min_degree);
        }
        for (std::size_t i = 0; i < monos_.size(); ++i) {
            index_.emplace(monos_[i], i);
        }
        label_ = tag + "(n=" + std::to_string(n) + ",comp=" + std::to_string(ncomp) + ",deg="
                 + std::to_string(min_degree) + ".." + std::to_string(max_degree) + ")";
    }

    const std::string &label() const
    {
        return label_;
    }

    std::size_t dim() const
    {
        return monos_.size() * ncomp_;
    }

    unsigned nvars() const
    {
        return n_;
    }

    unsigned ncomp() const
    {
        return ncomp_;
    }

    unsigned min_degree() const
    {
        return min_;
    }

    unsigned max_degree() const
    {
        return max_;
    }

    const std::vector<monomial> &monomials() const
    {
        return monos_;
    }

    std::size_t index(unsigned comp, const monomial &m) const
    {
        auto it = index_.find(m);
        if (it == index_.end() || comp >= ncomp_) {
            throw std::out_of_range("jet_coordinates: monomial " + m.to_string() + " outside " + label_);
        }
        return comp * monos_.size() + it->second;
    }

    bool has(const monomial &m) const
    {
        return index_.count(m) != 0;
    }

    // Coordinates of a tuple of jets. Terms above max_degree are dropped
    // (truncation); terms below min_degree are an error.
    rvec to_vector(const std::vector<jet_poly> &comps) const
    {
        if (comps.size() != ncomp_) {
            throw std::invalid_argument("jet_coordinates: component count mismatch");
        }
        rvec v(dim(), rational(0));
        for (unsigned c = 0; c < ncomp_; ++c) {
            for (const auto &[m, x] : comps[c].terms()) {
                if (m.degree() > max_) {
                    break;
                }
                if (m.degree() < min_) {
                    throw std::invalid_argument("jet_coordinates: term " + m.to_string() + " below minimum degree of "
                                                + label_);
                }
                v[index(c, m)] = x;
            }
        }
        return v;
    }

    rvec to_vector(const germ_jet &f) const
    {
        return to_vector(f.components());
    }

    std::vector<jet_poly> from_vector(const rvec &v, unsigned order) const
    {
        if (v.size() != dim()) {
            throw std::invalid_argument("jet_coordinates: vector length mismatch");
        }
        std::vector<jet_poly> comps(ncomp_, jet_poly(n_, order));
        for (unsigned c = 0; c < ncomp_; ++c) {
            for (std::size_t i = 0; i < monos_.size(); ++i) {
                comps[c].add_term(monos_[i], v[c * monos_.size() + i]);
            }
        }
        return comps;
    }

private:
    std::vector<monomial> monos_;
    std::map<monomial, std::size_t, graded_lex_less> index_;
    std::string label_;
    unsigned n_, ncomp_, min_, max_;
};

} // namespace germlab

#endif
