#ifndef GERMLAB_G_FIELDS_HPP
#define GERMLAB_G_FIELDS_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <germlab/jet.hpp>
#include <germlab/lie_catalog.hpp>
#include <germlab/subspace.hpp>

namespace germlab
{

using field_jet = map_jet<rational>;

// Coordinates of vector-field jets on R^p with degrees lo..hi.
inline jet_coordinates field_coordinates(unsigned p, unsigned lo, unsigned hi)
{
    return jet_coordinates("theta", p, p, lo, hi);
}

namespace detail
{

// Homogeneous degree-d fields whose Jacobian coefficient matrices lie in g.
// Each degree-(d-1) monomial mu contributes one equation per annihilator A:
// sum_ij A_ij (mu_j + 1) c_{i, mu*y_j} = 0.
inline subspace_basis generic_degree(const lie_algebra_spec &g, unsigned d)
{
    const unsigned p = g.p;
    const auto coords = field_coordinates(p, d, d);
    if (d == 0) {
        return subspace_basis::full(coords.label(), coords.dim());
    }
    rational_matrix sys(0, coords.dim());
    for (const auto &mu : monomials_of_degree(p, d - 1)) {
        for (const auto &A : g.annihilators) {
            rvec row(coords.dim(), rational(0));
            for (unsigned i = 0; i < p; ++i) {
                for (unsigned j = 0; j < p; ++j) {
                    if (::sgn(A(i, j)) == 0) {
                        continue;
                    }
                    const auto m = mu * monomial::variable(p, j);
                    row[coords.index(i, m)] += A(i, j) * (mu[j] + 1);
                }
            }
            sys.append_row(row);
        }
    }
    return kernel(sys, coords.label());
}

inline std::string sanitize(std::string s)
{
    for (auto &c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c))) {
            c = '_';
        }
    }
    return s;
}

} // namespace detail

// Memoizes the per-degree kernels by (group, degree). Concurrent readers,
// single writer. With GERMLAB_CACHE_DIR set, slices are also persisted.
class field_cache
{
public:
    static field_cache &instance()
    {
        static field_cache c;
        return c;
    }

    subspace_basis degree(const group_id &g, unsigned d)
    {
        const auto key = std::make_pair(g.spec(), d);
        {
            std::shared_lock lock(mutex_);
            auto it = slices_.find(key);
            if (it != slices_.end()) {
                return it->second;
            }
        }
        auto value = load(g, d);
        if (!value) {
            value = detail::generic_degree(algebra_of(g), d);
            store(g, d, *value);
        }
        std::unique_lock lock(mutex_);
        return slices_.try_emplace(key, std::move(*value)).first->second;
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        slices_.clear();
    }

private:
    static std::optional<std::filesystem::path> dir()
    {
        const char *env = std::getenv("GERMLAB_CACHE_DIR");
        if (env == nullptr || *env == '\0') {
            return std::nullopt;
        }
        return std::filesystem::path(env);
    }

    static std::filesystem::path file_for(const std::filesystem::path &root, const group_id &g, unsigned d)
    {
        return root / ("theta_" + detail::sanitize(g.spec()) + "_d" + std::to_string(d) + ".txt");
    }

    // Any malformed or stale file is ignored and recomputed.
    static std::optional<subspace_basis> load(const group_id &g, unsigned d)
    {
        const auto root = dir();
        if (!root) {
            return std::nullopt;
        }
        std::ifstream in(file_for(*root, g, d));
        if (!in) {
            return std::nullopt;
        }
        const auto coords = field_coordinates(g.p(), d, d);
        std::string magic, label;
        std::size_t ambient = 0, nrows = 0;
        if (!(in >> magic >> label >> ambient >> nrows) || magic != "germlab-theta-v1" || label != coords.label()
            || ambient != coords.dim()) {
            return std::nullopt;
        }
        std::vector<rvec> rows;
        try {
            for (std::size_t r = 0; r < nrows; ++r) {
                rvec v;
                for (std::size_t c = 0; c < ambient; ++c) {
                    std::string tok;
                    if (!(in >> tok)) {
                        return std::nullopt;
                    }
                    v.push_back(parse_rational(tok));
                }
                rows.push_back(std::move(v));
            }
        } catch (const user_error &) {
            return std::nullopt;
        }
        return span(rows, coords.label(), ambient);
    }

    static void store(const group_id &g, unsigned d, const subspace_basis &s)
    {
        const auto root = dir();
        if (!root) {
            return;
        }
        std::error_code ec;
        std::filesystem::create_directories(*root, ec);
        const auto target = file_for(*root, g, d);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) {
                return;
            }
            out << "germlab-theta-v1 " << s.ambient_label() << ' ' << s.ambient_dim() << ' ' << s.dim() << '\n';
            for (const auto &r : s.rows()) {
                for (std::size_t c = 0; c < r.size(); ++c) {
                    out << (c ? " " : "") << r[c].get_str();
                }
                out << '\n';
            }
        }
        std::filesystem::rename(tmp, target, ec);
    }

    std::shared_mutex mutex_;
    std::map<std::pair<std::string, unsigned>, subspace_basis> slices_;
};

// Homogeneous degree-d slice of theta[G](p).
inline subspace_basis theta_g_degree(const group_id &g, unsigned d)
{
    return field_cache::instance().degree(g, d);
}

// theta[G](p) (with constants) or theta[G]_0(p), degrees up to k, as a
// direct sum of homogeneous slices.
struct field_space {
    group_id group;
    unsigned k = 0;
    bool include_constants = false;
    std::vector<subspace_basis> per_degree; // index = degree; empty slice at 0 without constants

    unsigned min_degree() const
    {
        return include_constants ? 0 : 1;
    }

    std::size_t total_dim() const
    {
        std::size_t t = 0;
        for (const auto &s : per_degree) {
            t += s.dim();
        }
        return t;
    }

    jet_coordinates coordinates() const
    {
        return field_coordinates(group.p(), min_degree(), k);
    }

    // Basis fields as jets of the given order (>= k keeps them exact).
    std::vector<field_jet> fields(unsigned order) const
    {
        std::vector<field_jet> out;
        for (unsigned d = min_degree(); d <= k; ++d) {
            const auto c = field_coordinates(group.p(), d, d);
            for (const auto &r : per_degree[d].rows()) {
                out.emplace_back(c.from_vector(r, order), true);
            }
        }
        return out;
    }

    subspace_basis combined() const
    {
        const auto coords = coordinates();
        std::vector<rvec> rows;
        for (const auto &f : fields(k)) {
            rows.push_back(coords.to_vector(f));
        }
        return span(rows, coords.label(), coords.dim());
    }
};

inline field_space theta_g_jet(const group_id &g, unsigned k, bool include_constants)
{
    if (k < 1) {
        throw user_error("jet order must be at least 1");
    }
    field_space s{g, k, include_constants, {}};
    for (unsigned d = 0; d <= k; ++d) {
        if (d == 0 && !include_constants) {
            s.per_degree.emplace_back(field_coordinates(g.p(), 0, 0).label(), g.p());
        } else {
            s.per_degree.push_back(theta_g_degree(g, d));
        }
    }
    return s;
}

// Hamiltonian field (-dH/dy2, dH/dy1).
inline field_jet hamiltonian_field(const jet_poly &H)
{
    if (H.nvars() != 2) {
        throw user_error("hamiltonian_field: H must be a function of two variables");
    }
    if (::sgn(H.constant_term()) != 0) {
        throw user_error("hamiltonian_field: H must have zero constant term");
    }
    return field_jet({-diff(H, 1), diff(H, 0)}, true);
}

// sum_i d eta_i / d y_i, at order k-1.
inline jet_poly divergence(const field_jet &eta)
{
    if (eta.source_dim() != eta.target_dim()) {
        throw user_error("divergence: field must map R^p to R^p");
    }
    const unsigned k = eta.order();
    jet_poly out(eta.source_dim(), k);
    for (unsigned i = 0; i < eta.target_dim(); ++i) {
        out += diff(eta[i], i);
    }
    return out.truncated(k == 0 ? 0 : k - 1);
}

// Coefficients c_i = (-1)^(i-1) eta_i of the (p-1)-form
// sum_i c_i dy_1 ^ .. (dy_i omitted) .. ^ dy_p.
inline std::vector<jet_poly> field_to_form(const field_jet &eta)
{
    std::vector<jet_poly> out;
    for (unsigned i = 0; i < eta.target_dim(); ++i) {
        out.push_back(i % 2 == 0 ? eta[i] : -eta[i]);
    }
    return out;
}

// Coefficient of dy_1 ^ .. ^ dy_p in d(omega) for omega given by field_to_form.
inline jet_poly form_derivative(const std::vector<jet_poly> &c)
{
    if (c.empty()) {
        throw user_error("form_derivative: empty form");
    }
    const unsigned k = c[0].order();
    jet_poly out(c[0].nvars(), k);
    for (unsigned i = 0; i < c.size(); ++i) {
        const auto t = diff(c[i], i);
        out += i % 2 == 0 ? t : -t;
    }
    return out.truncated(k == 0 ? 0 : k - 1);
}

namespace detail
{

// Monomials of degree d in the variables [lo, hi) of R^p.
inline std::vector<monomial> block_monomials(unsigned p, unsigned lo, unsigned hi, unsigned d)
{
    std::vector<monomial> out;
    for (const auto &m : monomials_of_degree(hi - lo, d)) {
        monomial full(p);
        for (unsigned i = lo; i < hi; ++i) {
            full.set(i, m[i - lo]);
        }
        out.push_back(full);
    }
    return out;
}

inline void add_component_fields(std::vector<rvec> &rows, const jet_coordinates &c, unsigned comp_lo,
                                  unsigned comp_hi, const std::vector<monomial> &monos)
{
    for (unsigned i = comp_lo; i < comp_hi; ++i) {
        for (const auto &m : monos) {
            rvec v(c.dim(), rational(0));
            v[c.index(i, m)] = 1;
            rows.push_back(std::move(v));
        }
    }
}

// Generators of the closed-form description in a single degree d >= 1.
inline std::vector<rvec> closed_form_degree(const group_id &g, unsigned d)
{
    const unsigned p = g.p();
    const auto c = field_coordinates(p, d, d);
    std::vector<rvec> rows;
    auto rotations = [&](unsigned off, unsigned q) {
        if (d != 1) {
            return;
        }
        for (unsigned i = off; i < off + q; ++i) {
            for (unsigned j = i + 1; j < off + q; ++j) {
                // y_j d/dy_i - y_i d/dy_j
                rvec v(c.dim(), rational(0));
                v[c.index(i, monomial::variable(p, j))] = 1;
                v[c.index(j, monomial::variable(p, i))] = -1;
                rows.push_back(std::move(v));
            }
        }
    };
    switch (g.kind) {
    case group_kind::gl:
        add_component_fields(rows, c, 0, p, monomials_of_degree(p, d));
        break;
    case group_kind::so:
        rotations(0, p);
        break;
    case group_kind::socaptstar:
        rotations(0, g.p1);
        rotations(g.p1, g.p2);
        break;
    case group_kind::sl:
    case group_kind::sp:
        if (p != 2) {
            throw user_error("no closed form for " + g.spec() + "; only the generic kernel is available");
        }
        for (const auto &m : monomials_of_degree(2, d + 1)) {
            const auto f = hamiltonian_field(jet_poly::term(2, d + 1, m, rational(1)));
            rows.push_back(c.to_vector(f));
        }
        break;
    case group_kind::dstar:
        add_component_fields(rows, c, 0, g.p1, block_monomials(p, 0, g.p1, d));
        add_component_fields(rows, c, g.p1, p, block_monomials(p, g.p1, p, d));
        break;
    case group_kind::tstar:
        add_component_fields(rows, c, 0, g.p1, monomials_of_degree(p, d));
        add_component_fields(rows, c, g.p1, p, block_monomials(p, g.p1, p, d));
        break;
    case group_kind::istar:
        add_component_fields(rows, c, g.p1, p, block_monomials(p, g.p1, p, d));
        break;
    case group_kind::affplus:
        add_component_fields(rows, c, 0, p, block_monomials(p, 1, p, d));
        break;
    case group_kind::lagr: {
        // Coordinates (x_1..x_m, y_1..y_m). Fields
        // -sum_i (sum_k dxi_k/dy_i x_k + deta/dy_i) d/dx_i + sum_i xi_i d/dy_i
        // with xi_k of degree d and eta of degree d+1, both functions of y.
        const unsigned m = p / 2;
        auto emit = [&](const std::vector<jet_poly> &xi, const jet_poly &eta) {
            std::vector<jet_poly> comps(p, jet_poly(p, d + 1));
            for (unsigned i = 0; i < m; ++i) {
                jet_poly xc = diff(eta, m + i);
                for (unsigned k = 0; k < m; ++k) {
                    xc += diff(xi[k], m + i) * jet_poly::variable(p, d + 1, k);
                }
                comps[i] = -xc;
                comps[m + i] = xi[i];
            }
            rows.push_back(c.to_vector(comps));
        };
        const jet_poly zero(p, d + 1);
        for (unsigned k = 0; k < m; ++k) {
            for (const auto &mono : block_monomials(p, m, p, d)) {
                std::vector<jet_poly> xi(m, zero);
                xi[k] = jet_poly::term(p, d + 1, mono, rational(1));
                emit(xi, zero);
            }
        }
        for (const auto &mono : block_monomials(p, m, p, d + 1)) {
            emit(std::vector<jet_poly>(m, zero), jet_poly::term(p, d + 1, mono, rational(1)));
        }
        break;
    }
    case group_kind::trivial:
        break;
    }
    return rows;
}

} // namespace detail

// theta[G] built from the explicit generators of each catalog group.
inline field_space closed_form_basis(const group_id &g, unsigned k, bool include_constants)
{
    if (k < 1) {
        throw user_error("jet order must be at least 1");
    }
    const unsigned p = g.p();
    field_space s{g, k, include_constants, {}};
    for (unsigned d = 0; d <= k; ++d) {
        const auto c = field_coordinates(p, d, d);
        if (d == 0) {
            s.per_degree.push_back(include_constants ? subspace_basis::full(c.label(), c.dim())
                                                     : subspace_basis(c.label(), c.dim()));
        } else {
            s.per_degree.push_back(span(detail::closed_form_degree(g, d), c.label(), c.dim()));
        }
    }
    return s;
}

// Jet-level approximation of the ring E_p[G]: jets lambda of order k with
// A(eta (x) grad lambda) = 0 in every coefficient degree 0..k, for all
// annihilators A of g and all basis fields eta of theta[G]_0.
struct ring_jet {
    group_id group;
    unsigned k = 0;
    subspace_basis basis;

    jet_coordinates coordinates() const
    {
        return jet_coordinates("E", group.p(), 1, 0, k);
    }

    std::size_t dim() const
    {
        return basis.dim();
    }

    bool contains(const jet_poly &lambda) const
    {
        return basis.contains(coordinates().to_vector(std::vector<jet_poly>{lambda}));
    }

    std::vector<jet_poly> elements() const
    {
        std::vector<jet_poly> out;
        const auto c = coordinates();
        for (const auto &r : basis.rows()) {
            out.push_back(c.from_vector(r, k)[0]);
        }
        return out;
    }
};

inline ring_jet ring_eg_jet(const group_id &g, unsigned k)
{
    if (k < 1) {
        throw user_error("jet order must be at least 1");
    }
    const unsigned p = g.p();
    const auto alg = algebra_of(g);
    const auto fields = theta_g_jet(g, k, false).fields(k);
    const jet_coordinates coords("E", p, 1, 0, k);
    const auto &monos = coords.monomials();

    // Partial derivatives of each basis monomial, reused for every constraint.
    std::vector<std::vector<jet_poly>> grads(monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        const auto m = jet_poly::term(p, k, monos[c], rational(1));
        for (unsigned j = 0; j < p; ++j) {
            grads[c].push_back(diff(m, j));
        }
    }

    row_reducer red(monos.size());
    for (const auto &eta : fields) {
        for (const auto &A : alg.annihilators) {
            std::vector<jet_poly> w(p, jet_poly(p, k));
            for (unsigned j = 0; j < p; ++j) {
                for (unsigned i = 0; i < p; ++i) {
                    if (::sgn(A(i, j)) != 0) {
                        w[j] += A(i, j) * eta[i];
                    }
                }
            }
            // Column c holds sum_j w_j d(monomial_c)/dy_j; rows are output monomials.
            std::map<monomial, rvec, graded_lex_less> rows;
            for (std::size_t c = 0; c < monos.size(); ++c) {
                jet_poly acc(p, k);
                for (unsigned j = 0; j < p; ++j) {
                    if (!w[j].is_zero() && !grads[c][j].is_zero()) {
                        acc += w[j] * grads[c][j];
                    }
                }
                for (const auto &[m, x] : acc.terms()) {
                    auto &row = rows.try_emplace(m, rvec(monos.size(), rational(0))).first->second;
                    row[c] = x;
                }
            }
            for (auto &[m, row] : rows) {
                red.add(std::move(row));
            }
        }
    }
    rational_matrix sys(0, monos.size());
    for (const auto &r : red.rows()) {
        sys.append_row(r);
    }
    return ring_jet{g, k, kernel(sys, coords.label())};
}

struct linearity_report {
    bool linear_only = true;
    std::optional<unsigned> witness_degree; // first degree >= 2 carrying a nonzero field
    std::vector<std::size_t> dims;          // per-degree dims, index = degree
};

inline linearity_report is_linear_only(const group_id &g, unsigned k)
{
    if (k < 2) {
        throw user_error("is_linear_only needs jet order >= 2");
    }
    linearity_report r;
    r.dims.push_back(0);
    for (unsigned d = 1; d <= k; ++d) {
        const auto dim = theta_g_degree(g, d).dim();
        r.dims.push_back(dim);
        if (d >= 2 && dim != 0 && r.linear_only) {
            r.linear_only = false;
            r.witness_degree = d;
        }
    }
    return r;
}

} // namespace germlab

#endif
