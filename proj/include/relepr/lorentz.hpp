// Restricted Lorentz transformations and standard boosts for massive and
// massless four-momenta. Units: M = c = 1 on massive paths, kappa = 1 by
// default on massless paths; rapidities are dimensionless.
#pragma once

#include <stdexcept>
#include <string>

#include "relepr/mat4.hpp"

namespace relepr {

struct ShellViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Dimensionless boost parameter; v/c = tanh(value).
struct Rapidity {
    double value = 0.0;

    Rapidity() = default;
    explicit Rapidity(double v);
};

Rapidity rapidity_from_velocity(double v_over_c);

struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    double operator[](std::size_t i) const {
        return i == 0 ? t : (i == 1 ? x : (i == 2 ? y : z));
    }
    double spatial_norm2() const { return x * x + y * y + z * z; }
};

// p.q with metric diag(-1, 1, 1, 1).
double minkowski_dot(const FourVector& p, const FourVector& q);

// Mass-shell helpers (relative tolerance against the energy scale).
bool on_shell_massive(const FourVector& p, double mass, double rel_tol = 1e-9);
bool on_shell_massless(const FourVector& p, double rel_tol = 1e-9);

FourVector massive_momentum_x(Rapidity xi, double mass = 1.0);
// Lightlike momentum (kappa e^xi, branch * kappa e^xi, 0, 0); branch = +1 or -1.
FourVector massless_momentum_x(Rapidity xi, int branch, double kappa = 1.0);

// Element of the restricted Lorentz group, stored as a 4x4 real matrix.
struct LorentzTransform {
    Mat4<double> m = Mat4<double>::identity();

    double operator()(std::size_t mu, std::size_t nu) const { return m(mu, nu); }

    // max-abs entry of Lambda^T eta Lambda - eta
    double pseudo_orthogonality_residual() const { return gram_residual(m); }
    double determinant() const { return det4(m); }
    // Residuals scale with the square of the matrix magnitude in double
    // precision, so membership is checked against tol * max(1, |Lambda|^2).
    bool is_restricted(double tol = 1e-12) const;

    // Exact inverse eta Lambda^T eta (valid for pseudo-orthogonal matrices).
    LorentzTransform inverse() const { return {eta_transpose_eta(m)}; }

    static LorentzTransform identity() { return {}; }
};

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);
inline LorentzTransform operator*(const LorentzTransform& a, const LorentzTransform& b) {
    return compose(a, b);
}

FourVector apply(const LorentzTransform& lambda, const FourVector& p);

LorentzTransform boost_x(Rapidity xi);
LorentzTransform boost_z(Rapidity xi);
LorentzTransform rot_x(double theta);
LorentzTransform rot_y(double theta);
LorentzTransform rot_z(double theta);

// L(p) carrying the rest momentum (M, 0, 0, 0) to p.
// Throws ShellViolation off the mass shell; |p| = 0 gives the identity.
LorentzTransform standard_boost_massive(const FourVector& p, double mass = 1.0);

// L(p) = R_z^-1(phi) R_y^-1(theta) B_z(ln(|p|/kappa)) carrying
// (kappa, 0, 0, kappa) to lightlike p. At the poles phi is taken as 0.
LorentzTransform standard_boost_massless(const FourVector& p, double kappa = 1.0);

// Frame change to an observer moving in (cos theta, 0, sin theta):
// Lambda = R_y(theta) B_x^-1(chi) R_y^-1(theta).
LorentzTransform observer_boost_massive(double theta, Rapidity chi);

// Observer moving in (cos theta, sin theta sin phi, sin theta cos phi):
// Lambda = R_x(phi) R_y(theta) B_x^-1(chi) R_y^-1(theta) R_x^-1(phi).
LorentzTransform observer_boost_general(double theta, double phi, Rapidity chi);

namespace detail {

// Construction templates shared by the double-precision API and the
// extended-precision Wigner chains.
template <typename S>
Mat4<S> standard_boost_massive_m(const Vec4<S>& p, S mass) {
    Mat4<S> L = Mat4<S>::identity();
    S g = p[0] / mass;
    L(0, 0) = g;
    S n2 = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    if (n2 == S(0)) return L;
    for (std::size_t i = 0; i < 3; ++i) {
        L(0, 1 + i) = L(1 + i, 0) = p[1 + i] / mass;
        for (std::size_t k = 0; k < 3; ++k)
            L(1 + i, 1 + k) = (i == k ? S(1) : S(0)) + (g - S(1)) * p[1 + i] * p[1 + k] / n2;
    }
    return L;
}

template <typename S>
Mat4<S> standard_boost_massless_m(const Vec4<S>& p, S kappa) {
    // Built from the direction components directly; extracting angles first
    // loses the transverse part near the poles.
    S x = p[1], y = p[2], z = p[3];
    S n = std::sqrt(x * x + y * y + z * z);
    S rho = std::hypot(x, y);
    S ct = z / n, st = rho / n;
    S cp = S(1), sp = S(0);
    if (rho > S(0)) { cp = x / rho; sp = y / rho; }
    Mat4<S> ry_inv = Mat4<S>::identity();  // R_y(-theta)
    ry_inv(1, 1) = ct; ry_inv(1, 3) = st;
    ry_inv(3, 1) = -st; ry_inv(3, 3) = ct;
    Mat4<S> rz_inv = Mat4<S>::identity();  // R_z(-phi)
    rz_inv(1, 1) = cp; rz_inv(1, 2) = -sp;
    rz_inv(2, 1) = sp; rz_inv(2, 2) = cp;
    return rz_inv * (ry_inv * boost_z_m(std::log(n / kappa)));
}

template <typename S>
Mat4<S> observer_boost_massive_m(S theta, S chi) {
    return rot_y_m(theta) * (boost_x_m(-chi) * rot_y_m(-theta));
}

template <typename S>
Mat4<S> observer_boost_general_m(S theta, S phi, S chi) {
    return rot_x_m(phi) * (rot_y_m(theta) * (boost_x_m(-chi) * (rot_y_m(-theta) * rot_x_m(-phi))));
}

void require_finite(double v, const char* what);

}  // namespace detail

}  // namespace relepr
