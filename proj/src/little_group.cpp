#include "relepr/little_group.hpp"

#include <cmath>

namespace relepr {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Rapidity beyond which cosh/sinh products are evaluated through scaled
// exponentials; direct evaluation is used below it.
constexpr double kLogDomainSwitch = 20.0;

struct Abcd {
    // A, B, C, D of the closed form, possibly all scaled by a common
    // positive factor (which cancels in cos/sin ratios).
    double A, B, C, D;
};

Abcd abcd_terms(double xi, double chi) {
    double ax = std::abs(xi), ac = std::abs(chi);
    double sign_b = (xi < 0) != (chi < 0) ? -1.0 : 1.0;
    if (std::max(ax, ac) <= kLogDomainSwitch) {
        double shx2 = std::sinh(ax / 2), shc2 = std::sinh(ac / 2);
        return {std::cosh(ax) + std::cosh(ac),
                sign_b * std::sinh(ax) * std::sinh(ac),
                4.0 * shx2 * shx2 * shc2 * shc2,
                std::cosh(ax) * std::cosh(ac) + 1.0};
    }
    // Scaled by exp(-(ax + ac)).
    double s = std::exp(-ax), u = std::exp(-ac);
    double s2 = s * s, u2 = u * u;
    return {(u * (1.0 + s2) + s * (1.0 + u2)) / 2.0,
            sign_b * (1.0 - s2) * (1.0 - u2) / 4.0,
            (1.0 - s) * (1.0 - s) * (1.0 - u) * (1.0 - u) / 4.0,
            (1.0 + s2) * (1.0 + u2) / 4.0 + s * u};
}

// 1 - 1/cosh(chi) in [0, 1), stable for every finite chi.
double cosh_deficit(double chi) {
    double t = std::tanh(chi / 2);
    return 2.0 * t * t / (1.0 + t * t);
}

template <typename S>
Vec4<S> massive_p_x(S xi) {
    return {{std::cosh(xi), std::sinh(xi), S(0), S(0)}};
}

}  // namespace

double normalize_angle(double a) {
    double r = std::remainder(a, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

LorentzTransform wigner_matrix(const LorentzTransform& lambda, const FourVector& p,
                               double mass, double kappa) {
    if (mass < 0.0) throw std::invalid_argument("mass must be nonnegative");
    FourVector lp = apply(lambda, p);
    LorentzTransform l_p = mass > 0.0 ? standard_boost_massive(p, mass)
                                      : standard_boost_massless(p, kappa);
    LorentzTransform l_lp = mass > 0.0 ? standard_boost_massive(lp, mass)
                                       : standard_boost_massless(lp, kappa);
    return l_lp.inverse() * lambda * l_p;
}

LorentzTransform wigner_observer_massive(Rapidity xi, Rapidity chi, double theta) {
    detail::require_finite(theta, "theta");
    using L = long double;
    Mat4<L> lam = detail::observer_boost_massive_m<L>(theta, chi.value);
    Vec4<L> p = massive_p_x<L>(xi.value);
    Vec4<L> lp = lam * p;
    Mat4<L> w = eta_transpose_eta(detail::standard_boost_massive_m(lp, L(1))) *
                (lam * detail::standard_boost_massive_m(p, L(1)));
    return {mat4_cast<double>(w)};
}

LorentzTransform wigner_observer_massless(Rapidity chi, double theta, double phi,
                                          int branch, Rapidity xi, double kappa) {
    detail::require_finite(theta, "theta");
    detail::require_finite(phi, "phi");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    using L = long double;
    Mat4<L> lam = detail::observer_boost_general_m<L>(theta, phi, chi.value);
    L e = L(kappa) * std::exp(L(xi.value));
    Vec4<L> p{{e, L(branch) * e, L(0), L(0)}};
    Vec4<L> lp = lam * p;
    Mat4<L> w = eta_transpose_eta(detail::standard_boost_massless_m(lp, L(kappa))) *
                (lam * detail::standard_boost_massless_m(p, L(kappa)));
    return {mat4_cast<double>(w)};
}

LittleGroupDecomposition extract_rotation_angle(const LorentzTransform& w) {
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(w(0, i)) > 1e-9 || std::abs(w(i, 0)) > 1e-9)
            throw NotInLittleGroup("transform mixes time and space components");
    if (std::abs(w(0, 0) - 1.0) > 1e-9)
        throw NotInLittleGroup("transform rescales the time component");

    auto s = [&](std::size_t i, std::size_t j) { return w(i + 1, j + 1); };
    // Frame-convention rotation: skew part gives -2 sin(angle) * axis.
    double wx = s(2, 1) - s(1, 2);
    double wy = s(0, 2) - s(2, 0);
    double wz = s(1, 0) - s(0, 1);
    double sin_mag = 0.5 * std::hypot(wx, std::hypot(wy, wz));
    double cos_a = 0.5 * (s(0, 0) + s(1, 1) + s(2, 2) - 1.0);
    double angle = std::atan2(sin_mag, cos_a);

    LittleGroupDecomposition d;
    d.kind = LittleGroupDecomposition::Kind::MassiveRotation;
    d.axis_ambiguous = angle > kPi - 1e-6;
    if (sin_mag > 1e-12 && !d.axis_ambiguous) {
        double inv = -1.0 / (2.0 * sin_mag);
        d.axis = {wx * inv, wy * inv, wz * inv};
    } else if (d.axis_ambiguous) {
        // Rotation by ~pi: axis from the symmetric part, s ~ 2 n n^T - 1.
        std::size_t k = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (s(i, i) > s(k, k)) k = i;
        double nk = std::sqrt(std::max(0.0, (s(k, k) + 1.0) / 2.0));
        for (std::size_t i = 0; i < 3; ++i)
            d.axis[i] = (i == k) ? nk : (s(k, i) + s(i, k)) / (4.0 * nk);
        double n = std::hypot(d.axis[0], std::hypot(d.axis[1], d.axis[2]));
        for (auto& c : d.axis) c /= n;
    } else {
        d.axis = {0.0, 1.0, 0.0};  // identity: conventional axis
        angle = 0.0;
    }
    // Canonical sign: largest-magnitude axis component positive.
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(d.axis[i]) > std::abs(d.axis[k])) k = i;
    if (d.axis[k] < 0.0) {
        for (auto& c : d.axis) c = -c;
        angle = -angle;
    }
    d.angle = normalize_angle(angle);
    d.reconstruction_residual = max_abs_diff(rotation_about(d.axis, d.angle).m, w.m);
    return d;
}

LorentzTransform rotation_about(const std::array<double, 3>& axis, double angle) {
    double n = std::hypot(axis[0], std::hypot(axis[1], axis[2]));
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("axis must be nonzero");
    double ux = axis[0] / n, uy = axis[1] / n, uz = axis[2] / n;
    double c = std::cos(angle), s = std::sin(angle);
    Mat4<double> m = Mat4<double>::identity();
    const double u[3] = {ux, uy, uz};
    const double cross[3][3] = {{0, -uz, uy}, {uz, 0, -ux}, {-uy, ux, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i + 1, j + 1) = c * (i == j ? 1.0 : 0.0) + (1.0 - c) * u[i] * u[j] -
                              s * cross[i][j];
    return {m};
}

LorentzTransform s_translation(double alpha, double beta) {
    detail::require_finite(alpha, "alpha");
    detail::require_finite(beta, "beta");
    double zeta = (alpha * alpha + beta * beta) / 2.0;
    Mat4<double> m = Mat4<double>::identity();
    m(0, 0) = 1.0 + zeta; m(0, 1) = alpha; m(0, 2) = beta; m(0, 3) = -zeta;
    m(1, 0) = alpha;                       m(1, 3) = -alpha;
    m(2, 0) = beta;                        m(2, 3) = -beta;
    m(3, 0) = zeta;  m(3, 1) = alpha; m(3, 2) = beta; m(3, 3) = 1.0 - zeta;
    return {m};
}

LittleGroupDecomposition decompose_iso2(const LorentzTransform& w) {
    FourVector k{1.0, 0.0, 0.0, 1.0};
    FourVector wk = apply(w, k);
    double fix = std::max(std::max(std::abs(wk.t - 1.0), std::abs(wk.x)),
                          std::max(std::abs(wk.y), std::abs(wk.z - 1.0)));
    if (fix > 1e-9)
        throw NotInLittleGroup("transform does not fix the standard lightlike momentum");

    LittleGroupDecomposition d;
    d.kind = LittleGroupDecomposition::Kind::MasslessIso2;
    d.gamma = std::atan2(-w(2, 1), w(2, 2));
    d.alpha = w(1, 0);
    d.beta = w(2, 0);
    LorentzTransform recon = s_translation(d.alpha, d.beta) * rot_z(d.gamma);
    d.reconstruction_residual = max_abs_diff(recon.m, w.m);
    if (d.reconstruction_residual > 1e-9)
        throw NotInLittleGroup("ISO(2) reconstruction failed");
    return d;
}

DeltaCosSin delta_closed_form(Rapidity xi, Rapidity chi, double theta) {
    detail::require_finite(theta, "theta");
    Abcd t = abcd_terms(xi.value, chi.value);
    double ct = std::cos(theta), st = std::sin(theta);
    double den = t.D - t.B * ct;  // >= cosh(xi - chi) + 1 >= 2 (scaled: > 0)
    if (!(den > 0.0)) throw std::domain_error("closed-form denominator not positive");
    double c = (t.A - t.B * ct + t.C * ct * ct) / den;
    double s = (t.B - t.C * ct) * st / den;
    double n = std::hypot(c, s);
    return {c / n, s / n};
}

double delta_orthogonal(Rapidity xi, Rapidity chi) {
    Abcd t = abcd_terms(xi.value, chi.value);
    return std::atan2(t.B, t.A);
}

double momentum_rotation_angle(Rapidity xi, Rapidity chi) {
    return std::atan2(std::abs(std::sinh(chi.value)), std::abs(std::tanh(xi.value)));
}

double epsilon_closed_form(Rapidity chi, double theta, double phi, int branch) {
    detail::require_finite(theta, "theta");
    detail::require_finite(phi, "phi");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    double b = branch;
    double r = cosh_deficit(chi.value);  // (cosh chi - 1)/cosh chi
    double ct = std::cos(theta), st = std::sin(theta);
    double sp = std::sin(phi), cp = std::cos(phi);
    // D_pm, E_pm scaled by 1/cosh(chi).
    double dterm = (1.0 - r) - b * std::tanh(chi.value) * ct + r * (ct * ct + st * st * sp * sp);
    double eterm = b * r * st * st * sp * cp;
    return std::atan2(eterm, dterm);
}

double epsilon_orthogonal(Rapidity chi, double phi) {
    detail::require_finite(phi, "phi");
    double r = cosh_deficit(chi.value);
    double sp = std::sin(phi), cp = std::cos(phi);
    return std::atan2(r * sp * cp, (1.0 - r) + r * sp * sp);
}

double epsilon_argmax_phi(Rapidity chi) {
    if (!(chi.value > 0.0))
        throw std::domain_error("epsilon vanishes identically at chi = 0; maximum undefined");
    double t = std::tanh(chi.value / 2);
    return 0.5 * std::acos(t * t);
}

WignerAngles orthogonal_wigner_angles(Rapidity xi, Rapidity chi, double phi) {
    return {delta_orthogonal(xi, chi), momentum_rotation_angle(xi, chi),
            epsilon_orthogonal(chi, phi)};
}

}  // namespace relepr
