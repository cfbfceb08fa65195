#include "relepr/lorentz.hpp"

#include <cmath>

namespace relepr {

namespace detail {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace detail

Rapidity::Rapidity(double v) : value(v) {
    detail::require_finite(v, "rapidity");
}

Rapidity rapidity_from_velocity(double v_over_c) {
    detail::require_finite(v_over_c, "v/c");
    if (v_over_c <= -1.0 || v_over_c >= 1.0)
        throw std::invalid_argument("v/c must lie in (-1, 1)");
    return Rapidity(std::atanh(v_over_c));
}

double minkowski_dot(const FourVector& p, const FourVector& q) {
    return -p.t * q.t + p.x * q.x + p.y * q.y + p.z * q.z;
}

bool on_shell_massive(const FourVector& p, double mass, double rel_tol) {
    double scale = std::max(1.0, p.spatial_norm2() + mass * mass);
    return std::abs(minkowski_dot(p, p) + mass * mass) <= rel_tol * scale && p.t > 0.0;
}

bool on_shell_massless(const FourVector& p, double rel_tol) {
    double scale = std::max(1.0, p.t * p.t);
    return std::abs(minkowski_dot(p, p)) <= rel_tol * scale && p.t > 0.0;
}

FourVector massive_momentum_x(Rapidity xi, double mass) {
    return {mass * std::cosh(xi.value), mass * std::sinh(xi.value), 0.0, 0.0};
}

FourVector massless_momentum_x(Rapidity xi, int branch, double kappa) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    double e = kappa * std::exp(xi.value);
    return {e, branch * e, 0.0, 0.0};
}

bool LorentzTransform::is_restricted(double tol) const {
    double mag = max_abs_entry(m);
    double scaled = tol * std::max(1.0, mag * mag);
    return pseudo_orthogonality_residual() <= scaled &&
           std::abs(determinant() - 1.0) <= scaled && m(0, 0) >= 1.0 - scaled;
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b) {
    return {a.m * b.m};
}

FourVector apply(const LorentzTransform& lambda, const FourVector& p) {
    Vec4<double> v{{p.t, p.x, p.y, p.z}};
    Vec4<double> r = lambda.m * v;
    return {r[0], r[1], r[2], r[3]};
}

LorentzTransform boost_x(Rapidity xi) { return {boost_x_m(xi.value)}; }
LorentzTransform boost_z(Rapidity xi) { return {boost_z_m(xi.value)}; }

LorentzTransform rot_x(double theta) {
    detail::require_finite(theta, "angle");
    return {rot_x_m(theta)};
}

LorentzTransform rot_y(double theta) {
    detail::require_finite(theta, "angle");
    return {rot_y_m(theta)};
}

LorentzTransform rot_z(double theta) {
    detail::require_finite(theta, "angle");
    return {rot_z_m(theta)};
}

LorentzTransform standard_boost_massive(const FourVector& p, double mass) {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (!on_shell_massive(p, mass))
        throw ShellViolation("momentum is not on the mass shell");
    Vec4<double> v{{p.t, p.x, p.y, p.z}};
    return {detail::standard_boost_massive_m(v, mass)};
}

LorentzTransform standard_boost_massless(const FourVector& p, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
    if (!on_shell_massless(p))
        throw ShellViolation("momentum is not lightlike with positive energy");
    Vec4<double> v{{p.t, p.x, p.y, p.z}};
    return {detail::standard_boost_massless_m(v, kappa)};
}

LorentzTransform observer_boost_massive(double theta, Rapidity chi) {
    detail::require_finite(theta, "theta");
    return {detail::observer_boost_massive_m(theta, chi.value)};
}

LorentzTransform observer_boost_general(double theta, double phi, Rapidity chi) {
    detail::require_finite(theta, "theta");
    detail::require_finite(phi, "phi");
    return {detail::observer_boost_general_m(theta, phi, chi.value)};
}

}  // namespace relepr
