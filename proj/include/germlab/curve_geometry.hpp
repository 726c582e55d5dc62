#ifndef GERMLAB_CURVE_GEOMETRY_HPP
#define GERMLAB_CURVE_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include <germlab/jet.hpp>
#include <germlab/numeric_series.hpp>

namespace germlab
{

// Plane curve germ t -> (x(t), y(t)) with numeric coefficients.
struct plane_curve {
    series x, y;

    unsigned order() const
    {
        return std::min(x.order(), y.order());
    }
};

inline plane_curve to_plane_curve(const germ_jet &f)
{
    if (f.source_dim() != 1 || f.target_dim() != 2) {
        throw user_error("expected a plane curve germ (n = 1, p = 2)");
    }
    const auto F = to_numeric(f);
    return {series::from_jet(F[0]), series::from_jet(F[1])};
}

inline series det2(const series &a1, const series &a2, const series &b1, const series &b2)
{
    return a1 * b2 - a2 * b1;
}

// Type of a single component: smallest k with nonzero (k+1)-th derivative.
// at_least = true means every coefficient up to the order vanishes (A_{>=k}).
struct ak_type_result {
    unsigned k = 0;
    bool at_least = false;
};

inline ak_type_result ak_type(const jet_poly &f)
{
    if (f.nvars() != 1) {
        throw user_error("ak_type: expected a function of one variable");
    }
    if (::sgn(f.constant_term()) != 0) {
        throw user_error("ak_type: the component must vanish at 0");
    }
    if (f.is_zero()) {
        return {f.order(), true};
    }
    return {f.min_degree() - 1, false};
}

inline ak_type_result ak_type(const series &f, double tol = 1e-12)
{
    for (unsigned d = 1; d <= f.order(); ++d) {
        if (std::abs(f[d]) > tol) {
            return {d - 1, false};
        }
    }
    return {f.order(), true};
}

// (+-x^{k+1}, x^{k+1} h(x)) = J^r . (f o phi), J = ((0, 1), (-1, 0)), r in {0, 1}.
struct ak_normal_form {
    unsigned k = 0;
    int sign = 1;
    series h;
    series phi;
    bool rotated = false;
    double residual = 0.0;
};

inline ak_normal_form ak_normalize(const plane_curve &f)
{
    const unsigned N = f.order();
    const auto t1 = ak_type(f.x), t2 = ak_type(f.y);
    if (t1.at_least && t2.at_least) {
        throw user_error("ak_normalize: no component has a finite A_k type up to order " + std::to_string(N));
    }
    ak_normal_form out;
    // Ties go to the first component.
    const bool second = t1.at_least || (!t2.at_least && t2.k < t1.k);
    out.rotated = second;
    out.k = second ? t2.k : t1.k;
    const unsigned k = out.k;
    if (k + 1 > N) {
        throw user_error("ak_normalize: order too small for the normal form");
    }
    // Rotated curve: (f2, -f1).
    const series a = second ? f.y : f.x.truncated(N);
    const series b = second ? -1.0 * f.x : f.y.truncated(N);

    const double c = a[k + 1];
    out.sign = c > 0 ? 1 : -1;
    const series u = (1.0 / c) * a.shift_down(k + 1); // u(0) = 1, order N-k-1
    const double e = 1.0 / (k + 1);
    const series psi = std::pow(std::abs(c), e) * pow(u, e).shift_up(1); // order N-k
    out.phi = revert(psi);

    const auto phiN = out.phi.padded(N);
    const series A = compose(a.truncated(N), phiN);
    const series B = compose(b.truncated(N), phiN);
    out.h = B.shift_down(k + 1, 1e-9);

    const series target = series::monomial(N, k + 1, out.sign);
    out.residual = std::max(max_abs(A - target, N), max_abs(B - out.h.shift_up(k + 1), N));
    return out;
}

inline ak_normal_form ak_normalize(const germ_jet &f)
{
    return ak_normalize(to_plane_curve(f));
}

// Signed curvature (x'y'' - y'x'') / (x'^2 + y'^2)^{3/2}, at order N-2.
inline series curvature(const plane_curve &f)
{
    const auto d1x = f.x.derivative(), d1y = f.y.derivative();
    if (std::hypot(d1x[0], d1y[0]) < 1e-12) {
        throw user_error("curvature: the curve is singular at 0");
    }
    const auto d2x = d1x.derivative(), d2y = d1y.derivative();
    const auto speed2 = d1x * d1x + d1y * d1y;
    return (det2(d1x, d1y, d2x, d2y) * pow(speed2, -1.5)).truncated(f.order() >= 2 ? f.order() - 2 : 0);
}

// Euclidean arclength s(t) = int |f'|.
inline series arclength(const plane_curve &f)
{
    const auto d1x = f.x.derivative(), d1y = f.y.derivative();
    if (std::hypot(d1x[0], d1y[0]) < 1e-12) {
        throw user_error("arclength: the curve is singular at 0");
    }
    return sqrt(d1x * d1x + d1y * d1y).integral();
}

struct frontal_invariants {
    unsigned k = 0;
    int sign = 1;
    unsigned order = 0; // comparison order of ell and beta
    std::array<series, 2> mu, nu;
    series ell, beta;
    series ell_reference, beta_reference; // closed forms as printed
    series ell_closed;            // closed form -sign (k+1) W' / R^2, W = (k+1)h + x h'
    double frenet_residual = 0.0;
    double orthonormality_residual = 0.0;
    double ell_vs_reference = 0.0;
    double beta_vs_reference = 0.0;
    double ell_vs_closed = 0.0;
};

// Frame, (ell, beta) and Frenet residuals of (sign x^{k+1}, x^{k+1} h), h an exact polynomial.
inline frontal_invariants frontal(int sign, unsigned k, const series &h)
{
    frontal_invariants r;
    r.k = k;
    r.sign = sign;
    const unsigned M = h.order();
    const unsigned N = k + 1 + M;
    const plane_curve f{series::monomial(N, k + 1, sign), h.shift_up(k + 1)};

    // f' = x^k v with v(0) != 0; mu = v / |v|, nu = J mu, J = ((0, -1), (1, 0)).
    const auto fx = f.x.derivative(), fy = f.y.derivative();
    const auto vx = fx.shift_down(k), vy = fy.shift_down(k); // order M
    const auto inv_norm = pow(vx * vx + vy * vy, -0.5);
    r.mu = {vx * inv_norm, vy * inv_norm};
    r.nu = {-1.0 * r.mu[1], r.mu[0]};
    const auto dnu0 = r.nu[0].derivative(), dnu1 = r.nu[1].derivative();
    const auto dmu0 = r.mu[0].derivative(), dmu1 = r.mu[1].derivative();
    r.ell = dnu0 * r.mu[0] + dnu1 * r.mu[1];
    r.beta = fx * r.mu[0] + fy * r.mu[1];
    r.order = M >= 1 ? M - 1 : 0;

    const unsigned o = r.order;
    const auto res = [&](const series &s) { return max_abs(s, o); };
    r.frenet_residual = std::max({res(dnu0 - r.ell * r.mu[0]), res(dnu1 - r.ell * r.mu[1]),
                                  res(dmu0 + r.ell * r.nu[0]), res(dmu1 + r.ell * r.nu[1]),
                                  res(fx - r.beta * r.mu[0]), res(fy - r.beta * r.mu[1])});
    const auto one = series::monomial(o, 0);
    r.orthonormality_residual = std::max({res(r.mu[0] * r.mu[0] + r.mu[1] * r.mu[1] - one),
                                          res(r.nu[0] * r.nu[0] + r.nu[1] * r.nu[1] - one),
                                          res(r.mu[0] * r.nu[0] + r.mu[1] * r.nu[1])});

    // Closed forms, from h directly.
    const double kp1 = k + 1.0;
    const auto hp = h.padded(M + 2).derivative(), hpp = hp.derivative();
    const auto x = series::monomial(M + 1, 1);
    const auto W = kp1 * h.padded(M + 1) + x * hp;
    const auto Wp = (k + 2.0) * hp + x * hpp; // W'
    const auto R2 = kp1 * kp1 * series::monomial(M + 1, 0) + W * W;
    r.ell_reference = (sign * kp1) * Wp * pow(R2, -1.5);
    r.beta_reference = sqrt(R2).shift_up(k);
    r.ell_closed = (-sign * kp1) * Wp * reciprocal(R2);

    r.ell_vs_reference = res(r.ell - r.ell_reference);
    r.beta_vs_reference = res(r.beta - r.beta_reference);
    r.ell_vs_closed = res(r.ell - r.ell_closed);
    return r;
}

inline frontal_invariants frontal(const ak_normal_form &nf)
{
    return frontal(nf.sign, nf.k, nf.h);
}

// Equi-affine arclength sigma(t) = int |det(f', f'')|^{1/3}.
inline series equiaffine_arclength(const plane_curve &f)
{
    const auto d1x = f.x.derivative(), d1y = f.y.derivative();
    const auto d = det2(d1x, d1y, d1x.derivative(), d1y.derivative());
    if (std::abs(d[0]) < 1e-12) {
        throw user_error("equi-affine arclength: inflection or degenerate point at 0");
    }
    return pow(d[0] < 0 ? -1.0 * d : d, 1.0 / 3.0).integral();
}

// kappa^e = det(F'', F''') with F the curve in equi-affine arclength,
// returned as a function of sigma and of the original parameter.
struct equiaffine_result {
    series in_sigma;
    series in_t;
};

inline equiaffine_result equiaffine_curvature(const plane_curve &f)
{
    const unsigned N = f.order();
    if (N < 4) {
        throw user_error("equi-affine curvature needs curve order >= 4");
    }
    const auto sigma = equiaffine_arclength(f); // order N-1
    const auto t_of_sigma = revert(sigma);
    const auto Fx = compose(f.x.truncated(N - 1), t_of_sigma);
    const auto Fy = compose(f.y.truncated(N - 1), t_of_sigma);
    const auto F2x = Fx.derivative().derivative(), F2y = Fy.derivative().derivative();
    const auto ke = det2(F2x, F2y, F2x.derivative(), F2y.derivative());
    return {ke, compose(ke, sigma.truncated(ke.order()))};
}

enum class congruence_mode { euclidean, equiaffine };

struct congruence_result {
    bool match = false;
    int orientation = 1; // sig(phi)
    series phi;
    double residual = 0.0;
    int obstruction_degree = -1; // first mismatching coefficient of the invariant
    unsigned compared_order = 0;
};

// Looks for phi with kappa_g = sig(phi) kappa_f o phi. phi is pinned by the
// arclength of the chosen geometry: s_g = sig(phi) s_f o phi.
inline congruence_result congruence_test(const plane_curve &f, const plane_curve &g, congruence_mode mode, unsigned k,
                                         double tol)
{
    const bool eu = mode == congruence_mode::euclidean;
    const auto sf = eu ? arclength(f) : equiaffine_arclength(f);
    const auto sg = eu ? arclength(g) : equiaffine_arclength(g);
    const auto kf = eu ? curvature(f) : equiaffine_curvature(f).in_t;
    const auto kg = eu ? curvature(g) : equiaffine_curvature(g).in_t;
    const unsigned o = std::min({k, kf.order(), kg.order()});
    const auto sf_inv = revert(sf);

    congruence_result best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int eps : {1, -1}) {
        congruence_result r;
        r.orientation = eps;
        r.compared_order = o;
        r.phi = compose(sf_inv, (1.0 * eps) * sg);
        const auto diff = kg.truncated(o) - (1.0 * eps) * compose(kf.truncated(o), r.phi.truncated(o));
        r.residual = max_abs(diff, o);
        r.obstruction_degree = first_exceeding(diff, o, tol);
        r.match = r.obstruction_degree < 0;
        if (r.residual < best.residual) {
            best = r;
        }
    }
    return best;
}

struct monge_form {
    double lambda1 = 0.0, lambda2 = 0.0;
    std::array<double, 4> cubic{}; // a30, a21, a12, a03
    dmatrix rotation;              // R in SO(3)
    numeric_map phi;               // source reparametrization
    numeric_map normal_form;       // (x1, x2, z(x1, x2))
    double residual = 0.0;

    double principal_curvature(int i) const
    {
        return 2.0 * (i == 1 ? lambda1 : lambda2);
    }
};

// R . f o phi = (x1, x2, l1 x1^2 + l2 x2^2 + a30 x1^3 + a21 x1^2 x2 + a12 x1 x2^2 + a03 x2^3 + ...).
// Tie-breaks: l1 >= l2, normal chosen with l1 + l2 >= 0, first nonzero cubic coefficient positive.
inline monge_form monge_normal_form(const numeric_map &f)
{
    if (f.source_dim() != 2 || f.target_dim() != 3) {
        throw user_error("monge_normal_form: expected a surface germ (n = 2, p = 3)");
    }
    const unsigned N = f.order();
    if (N < 3) {
        throw user_error("monge_normal_form: germ order must be at least 3");
    }
    const auto L = linear_part(f);
    const std::array<double, 3> e1{L[0][0], L[1][0], L[2][0]}, e2{L[0][1], L[1][1], L[2][1]};
    auto cross = [](const std::array<double, 3> &a, const std::array<double, 3> &b) {
        return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    auto normalize = [](std::array<double, 3> v) {
        const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (auto &x : v) {
            x /= n;
        }
        return v;
    };
    const auto nn = cross(e1, e2);
    if (std::sqrt(nn[0] * nn[0] + nn[1] * nn[1] + nn[2] * nn[2]) < 1e-12) {
        throw user_error("monge_normal_form: the germ is not an immersion at 0");
    }
    const auto t1 = normalize(e1), nrm = normalize(nn), t2 = cross(nrm, t1);
    dmatrix R{{t1[0], t1[1], t1[2]}, {t2[0], t2[1], t2[2]}, {nrm[0], nrm[1], nrm[2]}};

    // Graph form by inverting the first two components.
    auto g = apply_matrix(R, f);
    auto phi = invert_map(numeric_map(std::vector<numeric_jet>{g[0], g[1]}));
    auto G = compose(g, phi);

    auto quad = [&](const numeric_map &F, unsigned a, unsigned b) { return F[2].coeff(monomial(2, {a, b})); };
    // Source rotation x -> Q x with target diag(Q^T, 1) keeps the graph form.
    auto rotate = [&](const dmatrix &Q, bool flip_normal) {
        dmatrix T = dmat_identity(3);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                T[i][j] = Q[j][i];
            }
        }
        if (flip_normal) {
            T[1][0] = -T[1][0];
            T[1][1] = -T[1][1];
            T[2][2] = -1.0;
        }
        std::vector<numeric_jet> lin;
        for (int i = 0; i < 2; ++i) {
            numeric_jet c(2, N);
            for (int j = 0; j < 2; ++j) {
                c.add_term(monomial::variable(2, j), Q[i][j] * (flip_normal && j == 1 ? -1.0 : 1.0));
            }
            lin.push_back(std::move(c));
        }
        const numeric_map S(std::move(lin));
        phi = compose(phi, S);
        G = apply_matrix(T, compose(G, S));
        R = dmat_mul(T, R);
    };

    // Normal orientation: trace of the quadratic form is lambda1 + lambda2.
    if (quad(G, 2, 0) + quad(G, 0, 2) < 0) {
        rotate(dmat_identity(2), true);
    }
    const double a = quad(G, 2, 0), b = quad(G, 1, 1), c = quad(G, 0, 2);
    double th = 0.5 * std::atan2(b, a - c);
    auto eig = [&](double t) { return a * std::cos(t) * std::cos(t) + b * std::sin(t) * std::cos(t) + c * std::sin(t) * std::sin(t); };
    if (eig(th) < eig(th + std::numbers::pi / 2)) {
        th += std::numbers::pi / 2;
    }
    rotate({{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}}, false);

    monge_form out;
    out.lambda1 = quad(G, 2, 0);
    out.lambda2 = quad(G, 0, 2);
    auto cubic = [&] {
        return std::array<double, 4>{quad(G, 3, 0), quad(G, 2, 1), quad(G, 1, 2), quad(G, 0, 3)};
    };
    out.cubic = cubic();
    const double scale = std::max({1.0, std::abs(out.lambda1), std::abs(out.lambda2)});
    for (double v : out.cubic) {
        if (std::abs(v) > 1e-9 * scale) {
            if (v < 0) {
                rotate({{-1.0, 0.0}, {0.0, -1.0}}, false);
                out.cubic = cubic();
            }
            break;
        }
    }

    // The off-diagonal quadratic term is zero by construction; drop the rounding.
    out.residual = std::abs(quad(G, 1, 1));
    const auto rebuilt = apply_matrix(R, compose(f, phi));
    out.residual = std::max(out.residual, max_abs(numeric_map(std::vector<numeric_jet>{
                                              rebuilt[0] - numeric_jet::variable(2, N, 0),
                                              rebuilt[1] - numeric_jet::variable(2, N, 1), rebuilt[2] - G[2]})));
    out.rotation = R;
    out.phi = phi;
    out.normal_form = G;
    return out;
}

inline monge_form monge_normal_form(const germ_jet &f)
{
    return monge_normal_form(to_numeric(f));
}

} // namespace germlab

#endif
