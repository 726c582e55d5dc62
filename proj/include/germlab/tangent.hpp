#ifndef GERMLAB_TANGENT_HPP
#define GERMLAB_TANGENT_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <germlab/g_fields.hpp>
#include <germlab/jet.hpp>
#include <germlab/lie_catalog.hpp>
#include <germlab/subspace.hpp>

namespace germlab
{

enum class equivalence { ag, rxg };

enum class moduli_pair { ag_vs_rxg, ag_vs_ah, rxg_vs_rxh };

inline std::string to_string(equivalence e)
{
    return e == equivalence::ag ? "ag" : "rxg";
}

inline std::string to_string(moduli_pair m)
{
    switch (m) {
    case moduli_pair::ag_vs_rxg: return "ag-vs-rxg";
    case moduli_pair::ag_vs_ah: return "ag-vs-ah";
    case moduli_pair::rxg_vs_rxh: return "rxg-vs-rxh";
    }
    return "?";
}

inline equivalence parse_equivalence(const std::string &s)
{
    if (s == "ag") {
        return equivalence::ag;
    }
    if (s == "rxg") {
        return equivalence::rxg;
    }
    throw user_error("--eq must be ag or rxg, got '" + s + "'");
}

inline moduli_pair parse_moduli_pair(const std::string &s)
{
    if (s == "ag-vs-rxg") {
        return moduli_pair::ag_vs_rxg;
    }
    if (s == "ag-vs-ah") {
        return moduli_pair::ag_vs_ah;
    }
    if (s == "rxg-vs-rxh") {
        return moduli_pair::rxg_vs_rxh;
    }
    throw user_error("--pair must be ag-vs-rxg, ag-vs-ah or rxg-vs-rxh, got '" + s + "'");
}

// Jets of theta(f) at order k: the M_n-part when not extended, all of it otherwise.
inline jet_coordinates theta_f_coordinates(const germ_jet &f, unsigned k, bool extended)
{
    return jet_coordinates("theta_f", f.source_dim(), f.target_dim(), extended ? 0 : 1, k);
}

namespace detail
{

inline void require_order(const germ_jet &f, unsigned k)
{
    if (k < 1) {
        throw user_error("jet order must be at least 1");
    }
    if (f.order() < k + 1) {
        throw user_error("germ is given to order " + std::to_string(f.order()) + " but jet order " + std::to_string(k)
                         + " needs order >= " + std::to_string(k + 1));
    }
}

inline void require_target(const germ_jet &f, const group_id &g)
{
    if (f.target_dim() != g.p()) {
        throw user_error("group " + g.spec() + " acts on R^" + std::to_string(g.p()) + " but the germ maps to R^"
                         + std::to_string(f.target_dim()));
    }
}

} // namespace detail

// tf of x^alpha d/dx_i, |alpha| >= 1 (>= 0 when extended), at order k.
inline subspace_basis tf_image(const germ_jet &f, unsigned k, bool extended)
{
    detail::require_order(f, k);
    const auto coords = theta_f_coordinates(f, k, extended);
    const unsigned n = f.source_dim(), p = f.target_dim();
    row_reducer red(coords.dim());
    for (unsigned i = 0; i < n; ++i) {
        std::vector<jet_poly> df;
        for (unsigned c = 0; c < p; ++c) {
            df.push_back(diff(f[c], i).truncated(k));
        }
        for (const auto &alpha : monomial_basis(n, k, extended ? 0 : 1)) {
            rvec v(coords.dim(), rational(0));
            for (unsigned c = 0; c < p; ++c) {
                for (const auto &[m, x] : df[c].terms()) {
                    if (m.degree() + alpha.degree() > k) {
                        break;
                    }
                    v[coords.index(c, m * alpha)] += x;
                }
            }
            red.add(std::move(v));
        }
    }
    return subspace_basis(coords.label(), red);
}

// omega f of theta[G]_0 (theta[G] when extended), at order k.
inline subspace_basis omega_image(const germ_jet &f, const group_id &g, unsigned k, bool extended)
{
    detail::require_order(f, k);
    detail::require_target(f, g);
    const auto coords = theta_f_coordinates(f, k, extended);
    pullback_table<rational> pull(f.truncated(k));
    row_reducer red(coords.dim());
    for (const auto &xi : theta_g_jet(g, k, extended).fields(k)) {
        red.add(coords.to_vector(pull.compose(xi)));
    }
    return subspace_basis(coords.label(), red);
}

// g(f) = { X.f : X in g }.
inline subspace_basis g_of_f(const germ_jet &f, const group_id &g, unsigned k, bool extended)
{
    detail::require_target(f, g);
    const auto coords = theta_f_coordinates(f, k, extended);
    const auto ft = f.truncated(k);
    const unsigned p = f.target_dim();
    row_reducer red(coords.dim());
    for (const auto &X : algebra_of(g).basis) {
        std::vector<jet_poly> comps(p, jet_poly(f.source_dim(), k));
        for (unsigned i = 0; i < p; ++i) {
            for (unsigned j = 0; j < p; ++j) {
                if (::sgn(X(i, j)) != 0) {
                    comps[i] += X(i, j) * ft[j];
                }
            }
        }
        red.add(coords.to_vector(comps));
    }
    return subspace_basis(coords.label(), red);
}

// dim g_f = dim g - dim g(f), with g(f) taken on the full germ jet.
inline std::size_t annihilator_dim(const germ_jet &f, const group_id &g)
{
    return algebra_of(g).dim() - g_of_f(f, g, f.order(), false).dim();
}

struct tangent_report {
    group_id group;
    equivalence eq = equivalence::ag;
    unsigned k = 0;
    bool extended = false;
    std::size_t ambient_dim = 0;
    std::size_t tf_dim = 0;
    std::size_t omega_dim = 0; // omega f(theta[G]) for ag, g(f) for rxg
    std::size_t g_of_f_dim = 0;
    std::size_t tangent_dim = 0;
    std::size_t codim = 0;
    std::optional<std::size_t> codim_previous; // codim at order k-1
    bool stabilized = false;                   // heuristic: codim equal at k-1 and k
    subspace_basis tangent;
};

namespace detail
{

inline tangent_report tangent_at(const germ_jet &f, const group_id &g, equivalence eq, unsigned k, bool extended)
{
    tangent_report r;
    r.group = g;
    r.eq = eq;
    r.k = k;
    r.extended = extended;
    const auto tf = tf_image(f, k, extended);
    const auto gf = g_of_f(f, g, k, extended);
    const auto second = eq == equivalence::ag ? omega_image(f, g, k, extended) : gf;
    r.ambient_dim = tf.ambient_dim();
    r.tf_dim = tf.dim();
    r.omega_dim = second.dim();
    r.g_of_f_dim = gf.dim();
    r.tangent = subspace_sum(tf, second);
    r.tangent_dim = r.tangent.dim();
    r.codim = quotient_dim(r.tangent, r.ambient_dim);
    return r;
}

} // namespace detail

// T A[G](f) = tf + omega f(theta[G]_0) or T(R x G)(f) = tf + g(f), with
// their extended variants, at order k.
inline tangent_report tangent(const germ_jet &f, const group_id &g, equivalence eq, unsigned k, bool extended)
{
    detail::require_target(f, g);
    auto r = detail::tangent_at(f, g, eq, k, extended);
    if (k >= 2) {
        r.codim_previous = detail::tangent_at(f, g, eq, k - 1, extended).codim;
        r.stabilized = *r.codim_previous == r.codim;
    }
    return r;
}

struct moduli_report {
    moduli_pair pair = moduli_pair::ag_vs_rxg;
    group_id group;
    std::optional<group_id> subgroup;
    unsigned k = 0;
    bool extended = false;
    std::size_t larger_dim = 0;
    std::size_t smaller_dim = 0;
    std::size_t dim = 0;
    std::optional<std::size_t> bound; // dim G - dim H where it applies
    // dim(A/B) and dim((T n A)/(T n B)) for T = tf, A and B the group parts.
    std::size_t group_part_quotient = 0;
    std::size_t intersection_quotient = 0;
    bool exact_sequence_ok = false;
    bool subspaces_equal = false;
};

// Fills the dimension fields of r from tf image T and group parts B within A.
inline moduli_report moduli_from_parts(moduli_report r, const subspace_basis &T, const subspace_basis &A,
                                       const subspace_basis &B)
{
    if (!B.is_subspace_of(A)) {
        throw invariant_error("moduli: group part of the smaller tangent space is not contained in the larger one");
    }
    const auto larger = subspace_sum(T, A);
    const auto smaller = subspace_sum(T, B);
    r.larger_dim = larger.dim();
    r.smaller_dim = smaller.dim();
    r.dim = relative_dim(larger, smaller);
    r.subspaces_equal = larger == smaller;

    r.group_part_quotient = relative_dim(A, B);
    r.intersection_quotient = relative_dim(subspace_intersection(T, A), subspace_intersection(T, B));
    r.exact_sequence_ok = r.group_part_quotient >= r.intersection_quotient
                          && r.dim == r.group_part_quotient - r.intersection_quotient;
    if (r.bound && r.dim > *r.bound) {
        throw invariant_error("moduli: dimension " + std::to_string(r.dim) + " exceeds dim G - dim H = "
                              + std::to_string(*r.bound));
    }
    return r;
}

// Relative infinitesimal moduli space of the pair at order k.
inline moduli_report moduli(const germ_jet &f, moduli_pair pair, const group_id &g, const std::optional<group_id> &h,
                            unsigned k, bool extended = false)
{
    detail::require_target(f, g);
    moduli_report r;
    r.pair = pair;
    r.group = g;
    r.subgroup = h;
    r.k = k;
    r.extended = extended;
    if (pair != moduli_pair::ag_vs_rxg) {
        if (!h) {
            throw user_error("pair " + to_string(pair) + " needs --subgroup");
        }
        if (!subalgebra_check(*h, g)) {
            throw user_error(h->spec() + " is not a subgroup of " + g.spec());
        }
    }

    const auto T = tf_image(f, k, extended);
    subspace_basis A, B;
    switch (pair) {
    case moduli_pair::ag_vs_rxg:
        A = omega_image(f, g, k, extended);
        B = g_of_f(f, g, k, extended);
        break;
    case moduli_pair::ag_vs_ah:
        A = omega_image(f, g, k, extended);
        B = omega_image(f, *h, k, extended);
        break;
    case moduli_pair::rxg_vs_rxh:
        A = g_of_f(f, g, k, extended);
        B = g_of_f(f, *h, k, extended);
        r.bound = algebra_of(g).dim() - algebra_of(*h).dim();
        break;
    }
    return moduli_from_parts(std::move(r), T, A, B);
}

struct rigidity_row {
    std::string germ;
    bool tangent_equal = false;
    std::size_t moduli_dim = 0;
};

struct rigidity_report {
    group_id group;
    unsigned k = 0;
    linearity_report linearity;
    std::vector<rigidity_row> rows;
    bool consistent = true; // linear-only implies equal tangent spaces and zero moduli
};

inline rigidity_report rigidity(const group_id &g, unsigned k,
                                const std::vector<std::pair<std::string, germ_jet>> &samples)
{
    rigidity_report r;
    r.group = g;
    r.k = k;
    r.linearity = is_linear_only(g, k);
    if (!r.linearity.linear_only) {
        return r;
    }
    for (const auto &[name, f] : samples) {
        if (f.target_dim() != g.p()) {
            continue;
        }
        const auto m = moduli(f, moduli_pair::ag_vs_rxg, g, std::nullopt, k);
        r.rows.push_back({name, m.subspaces_equal, m.dim});
        r.consistent = r.consistent && m.subspaces_equal && m.dim == 0;
    }
    return r;
}

struct growth_report {
    std::vector<std::pair<unsigned, std::size_t>> codims; // (k, codim_k)
    bool strictly_increasing = true;
};

// codim_k for k = 2..k_max; evidence of infinite codimension, not proof.
inline growth_report growth_probe(const germ_jet &f, const group_id &g, equivalence eq, unsigned k_max, bool extended)
{
    if (k_max < 2) {
        throw user_error("growth probe needs k_max >= 2");
    }
    growth_report r;
    for (unsigned k = 2; k <= k_max; ++k) {
        const auto c = detail::tangent_at(f, g, eq, k, extended).codim;
        if (!r.codims.empty() && c <= r.codims.back().second) {
            r.strictly_increasing = false;
        }
        r.codims.emplace_back(k, c);
    }
    return r;
}

// A . (f o phi).
inline germ_jet transform_germ(const germ_jet &f, const rational_matrix &A, const germ_jet &phi)
{
    if (A.rows() != f.target_dim() || A.cols() != f.target_dim()) {
        throw user_error("transform_germ: matrix size does not match the target dimension");
    }
    const auto fp = compose(f, phi);
    std::vector<jet_poly> comps(f.target_dim(), jet_poly(f.source_dim(), fp.order()));
    for (unsigned i = 0; i < f.target_dim(); ++i) {
        for (unsigned j = 0; j < f.target_dim(); ++j) {
            if (::sgn(A(i, j)) != 0) {
                comps[i] += A(i, j) * fp[j];
            }
        }
    }
    return germ_jet(std::move(comps));
}

// Diffeomorphism jet: identity linear part plus small random rational terms of degree 2..order.
inline germ_jet random_diffeo(unsigned n, unsigned order, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> coeff(-2, 2), keep(0, 2);
    std::vector<jet_poly> comps;
    for (unsigned i = 0; i < n; ++i) {
        auto c = jet_poly::variable(n, order, i);
        for (const auto &m : monomial_basis(n, order, 2)) {
            if (keep(rng) == 0) {
                c.add_term(m, rational(coeff(rng)) / 2);
            }
        }
        comps.push_back(std::move(c));
    }
    return germ_jet(std::move(comps));
}

} // namespace germlab

#endif
