#ifndef GERMLAB_LIE_CATALOG_HPP
#define GERMLAB_LIE_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <germlab/matrix.hpp>
#include <germlab/rational.hpp>
#include <germlab/subspace.hpp>

namespace germlab
{

enum class group_kind { gl, sl, so, sp, dstar, tstar, istar, affplus, lagr, socaptstar, trivial };

// A linear Lie group G in GL(p). For the block groups R^p = R^p1 x R^p2;
// single-size groups keep their size in p1. affplus stores p2 only (p = 1+p2).
struct group_id {
    group_kind kind = group_kind::trivial;
    unsigned p1 = 0;
    unsigned p2 = 0;

    unsigned p() const
    {
        switch (kind) {
        case group_kind::dstar:
        case group_kind::tstar:
        case group_kind::istar:
        case group_kind::socaptstar:
            return p1 + p2;
        case group_kind::affplus:
            return 1 + p2;
        default:
            return p1;
        }
    }

    // CLI syntax, e.g. "so:3", "tstar:1,2".
    std::string spec() const
    {
        switch (kind) {
        case group_kind::gl: return "gl:" + std::to_string(p1);
        case group_kind::sl: return "sl:" + std::to_string(p1);
        case group_kind::so: return "so:" + std::to_string(p1);
        case group_kind::sp: return "sp:" + std::to_string(p1);
        case group_kind::lagr: return "lagr:" + std::to_string(p1);
        case group_kind::trivial: return "trivial:" + std::to_string(p1);
        case group_kind::affplus: return "affplus:" + std::to_string(p2);
        case group_kind::dstar: return "dstar:" + std::to_string(p1) + "," + std::to_string(p2);
        case group_kind::tstar: return "tstar:" + std::to_string(p1) + "," + std::to_string(p2);
        case group_kind::istar: return "istar:" + std::to_string(p1) + "," + std::to_string(p2);
        case group_kind::socaptstar: return "socaptstar:" + std::to_string(p1) + "," + std::to_string(p2);
        }
        return "?";
    }

    friend bool operator==(const group_id &, const group_id &) = default;

    static group_id gl(unsigned p) { return {group_kind::gl, p, 0}; }
    static group_id sl(unsigned p) { return {group_kind::sl, p, 0}; }
    static group_id so(unsigned p) { return {group_kind::so, p, 0}; }
    static group_id sp(unsigned p) { return {group_kind::sp, p, 0}; }
    static group_id lagr(unsigned p) { return {group_kind::lagr, p, 0}; }
    static group_id trivial(unsigned p) { return {group_kind::trivial, p, 0}; }
    static group_id affplus(unsigned p2) { return {group_kind::affplus, 0, p2}; }
    static group_id dstar(unsigned a, unsigned b) { return {group_kind::dstar, a, b}; }
    static group_id tstar(unsigned a, unsigned b) { return {group_kind::tstar, a, b}; }
    static group_id istar(unsigned a, unsigned b) { return {group_kind::istar, a, b}; }
    static group_id socaptstar(unsigned a, unsigned b) { return {group_kind::socaptstar, a, b}; }
};

namespace detail
{

inline unsigned parse_size(std::string_view s, std::string_view whole)
{
    if (s.empty() || s.size() > 2 || s.find_first_not_of("0123456789") != std::string_view::npos) {
        throw user_error("bad group size '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
    return static_cast<unsigned>(std::stoul(std::string(s)));
}

} // namespace detail

inline group_id parse_group(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw user_error("group spec '" + std::string(text) + "' must look like name:size");
    }
    const auto name = text.substr(0, colon);
    const auto args = text.substr(colon + 1);
    const auto comma = args.find(',');
    auto two = [&]() -> std::pair<unsigned, unsigned> {
        if (comma == std::string_view::npos) {
            throw user_error("group '" + std::string(name) + "' takes two sizes p1,p2");
        }
        return {detail::parse_size(args.substr(0, comma), text), detail::parse_size(args.substr(comma + 1), text)};
    };
    auto one = [&] {
        if (comma != std::string_view::npos) {
            throw user_error("group '" + std::string(name) + "' takes a single size");
        }
        return detail::parse_size(args, text);
    };

    group_id g;
    if (name == "gl") {
        g = group_id::gl(one());
    } else if (name == "sl") {
        g = group_id::sl(one());
    } else if (name == "so") {
        g = group_id::so(one());
    } else if (name == "sp") {
        g = group_id::sp(one());
    } else if (name == "lagr") {
        g = group_id::lagr(one());
    } else if (name == "trivial") {
        g = group_id::trivial(one());
    } else if (name == "affplus") {
        g = group_id::affplus(one());
    } else if (name == "dstar" || name == "tstar" || name == "istar" || name == "socaptstar") {
        auto [a, b] = two();
        const group_kind kinds[] = {group_kind::dstar, group_kind::tstar, group_kind::istar, group_kind::socaptstar};
        const std::string_view names[] = {"dstar", "tstar", "istar", "socaptstar"};
        for (int i = 0; i < 4; ++i) {
            if (name == names[i]) {
                g = {kinds[i], a, b};
            }
        }
        if (a == 0 || b == 0) {
            throw user_error("block sizes must be positive in '" + std::string(text) + "'");
        }
    } else {
        throw user_error("unknown group '" + std::string(name) + "'");
    }
    if (g.p() == 0 || g.p() > max_vars) {
        throw user_error("group size out of range 1.." + std::to_string(max_vars) + " in '" + std::string(text) + "'");
    }
    if ((g.kind == group_kind::sp || g.kind == group_kind::lagr) && g.p1 % 2 != 0) {
        throw user_error("'" + std::string(text) + "' needs an even ambient dimension");
    }
    return g;
}

// g = T_I G as a subspace of M_p. Annihilators are functionals
// X -> sum_ij A_ij X_ij whose common kernel is g.
struct lie_algebra_spec {
    unsigned p = 0;
    std::vector<rational_matrix> basis;
    std::vector<rational_matrix> annihilators;

    std::size_t dim() const
    {
        return basis.size();
    }

    std::string label() const
    {
        return "M(" + std::to_string(p) + ")";
    }

    subspace_basis subspace() const
    {
        std::vector<rvec> rows;
        for (const auto &b : basis) {
            rows.push_back(b.flat());
        }
        return span(rows, label(), std::size_t(p) * p);
    }
};

namespace detail
{

inline rational_matrix E(unsigned p, unsigned i, unsigned j)
{
    return rational_matrix::unit(p, i, j);
}

inline void add_block_gl(std::vector<rational_matrix> &out, unsigned p, unsigned r0, unsigned r1, unsigned c0,
                         unsigned c1)
{
    for (unsigned i = r0; i < r1; ++i) {
        for (unsigned j = c0; j < c1; ++j) {
            out.push_back(E(p, i, j));
        }
    }
}

inline void add_block_so(std::vector<rational_matrix> &out, unsigned p, unsigned off, unsigned q)
{
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = i + 1; j < q; ++j) {
            out.push_back(E(p, off + i, off + j) - E(p, off + j, off + i));
        }
    }
}

// Symmetric unit S_ij = E_ij + E_ji (E_ii on the diagonal) placed at (r0, c0).
inline rational_matrix sym_unit(unsigned p, unsigned r0, unsigned c0, unsigned i, unsigned j)
{
    auto m = E(p, r0 + i, c0 + j);
    if (i != j) {
        m = m + E(p, r0 + j, c0 + i);
    }
    return m;
}

} // namespace detail

inline lie_algebra_spec algebra_of(const group_id &g)
{
    using detail::E;
    const unsigned p = g.p();
    lie_algebra_spec s;
    s.p = p;
    auto &B = s.basis;
    switch (g.kind) {
    case group_kind::gl:
        detail::add_block_gl(B, p, 0, p, 0, p);
        break;
    case group_kind::sl:
        for (unsigned i = 0; i < p; ++i) {
            for (unsigned j = 0; j < p; ++j) {
                if (i != j) {
                    B.push_back(E(p, i, j));
                }
            }
        }
        for (unsigned i = 0; i + 1 < p; ++i) {
            B.push_back(E(p, i, i) - E(p, i + 1, i + 1));
        }
        break;
    case group_kind::so:
        detail::add_block_so(B, p, 0, p);
        break;
    case group_kind::sp: {
        // [[A, B], [C, -A^T]] with B, C symmetric.
        const unsigned m = p / 2;
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = 0; j < m; ++j) {
                B.push_back(E(p, i, j) - E(p, m + j, m + i));
            }
        }
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = i; j < m; ++j) {
                B.push_back(detail::sym_unit(p, 0, m, i, j));
                B.push_back(detail::sym_unit(p, m, 0, i, j));
            }
        }
        break;
    }
    case group_kind::lagr: {
        // [[-X^T, Y], [0, X]] with Y symmetric.
        const unsigned m = p / 2;
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = 0; j < m; ++j) {
                B.push_back(E(p, m + i, m + j) - E(p, j, i));
            }
        }
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = i; j < m; ++j) {
                B.push_back(detail::sym_unit(p, 0, m, i, j));
            }
        }
        break;
    }
    case group_kind::dstar:
        detail::add_block_gl(B, p, 0, g.p1, 0, g.p1);
        detail::add_block_gl(B, p, g.p1, p, g.p1, p);
        break;
    case group_kind::tstar:
        detail::add_block_gl(B, p, 0, g.p1, 0, p);
        detail::add_block_gl(B, p, g.p1, p, g.p1, p);
        break;
    case group_kind::istar:
        detail::add_block_gl(B, p, g.p1, p, g.p1, p);
        break;
    case group_kind::affplus:
        detail::add_block_gl(B, p, 0, 1, 1, p);
        detail::add_block_gl(B, p, 1, p, 1, p);
        break;
    case group_kind::socaptstar:
        detail::add_block_so(B, p, 0, g.p1);
        detail::add_block_so(B, p, g.p1, g.p2);
        break;
    case group_kind::trivial:
        break;
    }

    // Annihilators: orthogonal complement of the basis under the entrywise pairing.
    rational_matrix stacked(0, std::size_t(p) * p);
    for (const auto &b : B) {
        stacked.append_row(b.flat());
    }
    for (const auto &v : kernel_vectors(stacked)) {
        rational_matrix a(p, p);
        for (unsigned i = 0; i < p; ++i) {
            for (unsigned j = 0; j < p; ++j) {
                a(i, j) = v[i * p + j];
            }
        }
        s.annihilators.push_back(std::move(a));
    }
    return s;
}

// Closed-form dimension of the algebra.
inline std::size_t expected_algebra_dim(const group_id &g)
{
    const std::size_t p = g.p(), a = g.p1, b = g.p2, m = g.p1 / 2;
    switch (g.kind) {
    case group_kind::gl: return p * p;
    case group_kind::sl: return p * p - 1;
    case group_kind::so: return p * (p - 1) / 2;
    case group_kind::sp: return m * (2 * m + 1);
    case group_kind::lagr: return m * m + m * (m + 1) / 2;
    case group_kind::dstar: return a * a + b * b;
    case group_kind::tstar: return a * a + a * b + b * b;
    case group_kind::istar: return b * b;
    case group_kind::affplus: return b + b * b;
    case group_kind::socaptstar: return a * (a - 1) / 2 + b * (b - 1) / 2;
    case group_kind::trivial: return 0;
    }
    return 0;
}

inline bool contains_matrix(const lie_algebra_spec &s, const rational_matrix &m)
{
    if (m.rows() != s.p || m.cols() != s.p) {
        throw std::invalid_argument("contains_matrix: size mismatch");
    }
    for (const auto &a : s.annihilators) {
        rational acc(0);
        for (std::size_t i = 0; i < a.flat().size(); ++i) {
            acc += a.flat()[i] * m.flat()[i];
        }
        if (::sgn(acc) != 0) {
            return false;
        }
    }
    return true;
}

// True when the algebra of h is contained in that of g.
inline bool subalgebra_check(const group_id &h, const group_id &g)
{
    if (h.p() != g.p()) {
        throw user_error("subgroup check: " + h.spec() + " and " + g.spec() + " act on different dimensions");
    }
    const auto G = algebra_of(g);
    for (const auto &b : algebra_of(h).basis) {
        if (!contains_matrix(G, b)) {
            return false;
        }
    }
    return true;
}

// Every catalog group acting on R^p.
inline std::vector<group_id> catalog_groups(unsigned p)
{
    std::vector<group_id> out{group_id::gl(p), group_id::sl(p), group_id::so(p)};
    if (p % 2 == 0) {
        out.push_back(group_id::sp(p));
        out.push_back(group_id::lagr(p));
    }
    for (unsigned a = 1; a < p; ++a) {
        out.push_back(group_id::dstar(a, p - a));
        out.push_back(group_id::tstar(a, p - a));
        out.push_back(group_id::istar(a, p - a));
        out.push_back(group_id::socaptstar(a, p - a));
    }
    if (p >= 2) {
        out.push_back(group_id::affplus(p - 1));
    }
    out.push_back(group_id::trivial(p));
    return out;
}

// Random rational elements of G, for action-invariance checks.
class group_sampler
{
public:
    explicit group_sampler(std::uint64_t seed) : rng_(seed)
    {
    }

    rational_matrix sample(const group_id &g)
    {
        const unsigned p = g.p();
        switch (g.kind) {
        case group_kind::gl: return random_gl(p);
        case group_kind::sl: return random_sl(p);
        case group_kind::so: return random_so(p);
        case group_kind::trivial: return rational_matrix::identity(p);
        case group_kind::dstar: return block_diag(random_gl(g.p1), random_gl(g.p2));
        case group_kind::istar: return block_diag(rational_matrix::identity(g.p1), random_gl(g.p2));
        case group_kind::socaptstar: return block_diag(random_so(g.p1), random_so(g.p2));
        case group_kind::tstar: {
            auto m = block_diag(random_gl(g.p1), random_gl(g.p2));
            for (unsigned i = 0; i < g.p1; ++i) {
                for (unsigned j = g.p1; j < p; ++j) {
                    m(i, j) = small();
                }
            }
            return m;
        }
        case group_kind::affplus: {
            auto m = block_diag(rational_matrix::identity(1), random_gl(g.p2));
            for (unsigned j = 1; j < p; ++j) {
                m(0, j) = small();
            }
            return m;
        }
        case group_kind::sp: {
            const unsigned m = p / 2;
            const auto C = random_gl(m);
            auto r = block_diag(inverse(C).transpose(), C);
            r = upper_sym(m) * r;
            r = lower_sym(m) * r;
            return upper_sym(m) * r;
        }
        case group_kind::lagr: {
            const unsigned m = p / 2;
            const auto C = random_gl(m);
            const auto Cit = inverse(C).transpose();
            const auto D = random_sym(m);
            const auto B = Cit * D;
            auto r = block_diag(Cit, C);
            for (unsigned i = 0; i < m; ++i) {
                for (unsigned j = 0; j < m; ++j) {
                    r(i, m + j) = B(i, j);
                }
            }
            return r;
        }
        }
        return rational_matrix::identity(p);
    }

private:
    rational small()
    {
        std::uniform_int_distribution<int> d(-3, 3);
        return rational(d(rng_)) / (1 + std::uniform_int_distribution<int>(0, 1)(rng_));
    }

    rational nonzero()
    {
        static const int num[] = {1, -1, 2, -2, 1, -1, 3, 2};
        static const int den[] = {1, 1, 1, 1, 2, 2, 1, 3};
        const auto i = std::uniform_int_distribution<int>(0, 7)(rng_);
        return rational(num[i]) / den[i];
    }

    rational_matrix shear(unsigned p, unsigned i, unsigned j, const rational &t)
    {
        auto m = rational_matrix::identity(p);
        m(i, j) = t;
        return m;
    }

    rational_matrix random_sl(unsigned p)
    {
        auto m = rational_matrix::identity(p);
        if (p < 2) {
            return m;
        }
        std::uniform_int_distribution<unsigned> idx(0, p - 1);
        for (unsigned s = 0; s < 2 * p; ++s) {
            const auto i = idx(rng_);
            auto j = idx(rng_);
            if (i == j) {
                j = (i + 1) % p;
            }
            m = shear(p, i, j, small()) * m;
        }
        return m;
    }

    rational_matrix random_gl(unsigned p)
    {
        auto d = rational_matrix::identity(p);
        for (unsigned i = 0; i < p; ++i) {
            d(i, i) = nonzero();
        }
        return random_sl(p) * d;
    }

    // Rational rotation from a Pythagorean pair: ((m^2-n^2), 2mn) / (m^2+n^2).
    rational_matrix givens(unsigned p, unsigned i, unsigned j)
    {
        std::uniform_int_distribution<int> d(-4, 4);
        int m = 0, n = 0;
        while (m == 0 && n == 0) {
            m = d(rng_);
            n = d(rng_);
        }
        const rational r(m * m + n * n);
        const rational c = rational(m * m - n * n) / r, s = rational(2 * m * n) / r;
        auto g = rational_matrix::identity(p);
        g(i, i) = c;
        g(j, j) = c;
        g(i, j) = -s;
        g(j, i) = s;
        return g;
    }

    rational_matrix random_so(unsigned p)
    {
        auto m = rational_matrix::identity(p);
        for (unsigned i = 0; i < p; ++i) {
            for (unsigned j = i + 1; j < p; ++j) {
                m = givens(p, i, j) * m;
            }
        }
        return m;
    }

    rational_matrix random_sym(unsigned m)
    {
        rational_matrix s(m, m);
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = i; j < m; ++j) {
                s(i, j) = s(j, i) = small();
            }
        }
        return s;
    }

    rational_matrix upper_sym(unsigned m)
    {
        auto r = rational_matrix::identity(2 * m);
        const auto s = random_sym(m);
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = 0; j < m; ++j) {
                r(i, m + j) = s(i, j);
            }
        }
        return r;
    }

    rational_matrix lower_sym(unsigned m)
    {
        return upper_sym(m).transpose();
    }

    static rational_matrix block_diag(const rational_matrix &a, const rational_matrix &b)
    {
        const auto n = a.rows() + b.rows();
        rational_matrix r(n, n);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                r(i, j) = a(i, j);
            }
        }
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(a.rows() + i, a.cols() + j) = b(i, j);
            }
        }
        return r;
    }

    std::mt19937_64 rng_;
};

} // namespace germlab

#endif
