#include "relepr/states.hpp"

#include <cmath>

namespace relepr {

namespace {

constexpr double kPiHalf = 1.57079632679489661923;
const Complex kI{0.0, 1.0};

double inv_sqrt2() { return 1.0 / std::sqrt(2.0); }

// Helicity components of |zeta>_pm = (e^{i z}|+> pm e^{-i z}|->)/sqrt2.
std::array<Complex, 2> linear_pol(double zeta, int parity) {
    double r = inv_sqrt2();
    return {r * std::exp(kI * zeta), double(parity) * r * std::exp(-kI * zeta)};
}

}  // namespace

namespace detail {

double norm2(const Amplitudes4& a) {
    double s = 0.0;
    for (const auto& c : a) s += std::norm(c);
    return s;
}

void require_normalized(const Amplitudes4& a) {
    if (std::abs(norm2(a) - 1.0) > 1e-9)
        throw std::invalid_argument("state is not unit-normalized");
}

Amplitudes4 apply_local(const Mat2c& u1, const Mat2c& u2, const Amplitudes4& a) {
    Amplitudes4 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex s{};
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s += u1[2 * i + k] * u2[2 * j + l] * a[2 * k + l];
            r[2 * i + j] = s;
        }
    return r;
}

double pair_expectation(const Amplitudes4& a, const Mat2c& op1, const Mat2c& op2) {
    Amplitudes4 oa = apply_local(op1, op2, a);
    Complex s{};
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * oa[i];
    return s.real();
}

}  // namespace detail

Mat2c wigner_d_half(double delta) {
    detail::require_finite(delta, "delta");
    double c = std::cos(delta / 2), s = std::sin(delta / 2);
    return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
}

Mat2c pauli_x() { return {Complex{0}, Complex{1}, Complex{1}, Complex{0}}; }
Mat2c pauli_y() { return {Complex{0}, -kI, kI, Complex{0}}; }
Mat2c pauli_z() { return {Complex{1}, Complex{0}, Complex{0}, Complex{-1}}; }

Mat2c spin_matrix(const Vec3& n) {
    double len = std::hypot(n[0], std::hypot(n[1], n[2]));
    if (std::abs(len - 1.0) > 1e-9)
        throw std::invalid_argument("measurement direction must be a unit vector");
    return {Complex{n[2]}, Complex{n[0], -n[1]}, Complex{n[0], n[1]}, Complex{-n[2]}};
}

Mat2c polarization_matrix(double zeta) {
    detail::require_finite(zeta, "zeta");
    return {Complex{0}, std::exp(2.0 * kI * zeta), std::exp(-2.0 * kI * zeta), Complex{0}};
}

SpinHalfAmplitudes make_singlet(Rapidity xi) {
    SpinHalfAmplitudes s;
    double r = inv_sqrt2();
    s.a = {Complex{0}, Complex{r}, Complex{-r}, Complex{0}};
    s.branch1 = massive_momentum_x(xi);
    s.branch2 = massive_momentum_x(Rapidity(-xi.value));
    return s;
}

PhotonPairAmplitudes make_photon_pair(double zeta1, double zeta2, Rapidity xi, double kappa) {
    detail::require_finite(zeta1, "zeta");
    detail::require_finite(zeta2, "zeta");
    auto b1p = linear_pol(zeta1, +1), b1m = linear_pol(zeta1, -1);
    auto b2p = linear_pol(zeta2, +1), b2m = linear_pol(zeta2, -1);
    PhotonPairAmplitudes s;
    double r = inv_sqrt2();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s.a[2 * i + j] = r * (b1p[i] * b2m[j] - b1m[i] * b2p[j]);
    s.branch1 = massless_momentum_x(xi, +1, kappa);
    s.branch2 = massless_momentum_x(xi, -1, kappa);
    s.zeta1 = zeta1;
    s.zeta2 = zeta2;
    return s;
}

PhotonPairAmplitudes make_photon_epr(double zeta, Rapidity xi, double kappa) {
    return make_photon_pair(zeta, zeta, xi, kappa);
}

SpinHalfAmplitudes transform_pair_massive(Rapidity xi, Rapidity chi) {
    double d = delta_orthogonal(xi, chi);
    SpinHalfAmplitudes out = make_singlet(xi);
    out.a = detail::apply_local(wigner_d_half(d), wigner_d_half(-d), out.a);

    // Cross-check against the printed mixing of singlet and triplet.
    double r = inv_sqrt2();
    double cd = std::cos(d), sd = std::sin(d);
    Amplitudes4 closed{Complex{sd * r}, Complex{cd * r}, Complex{-cd * r}, Complex{sd * r}};
    for (int i = 0; i < 4; ++i)
        if (std::abs(out.a[i] - closed[i]) > 1e-12)
            throw std::logic_error("transformation-law routes disagree");

    LorentzTransform lam = observer_boost_massive(kPiHalf, chi);
    out.branch1 = apply(lam, out.branch1);
    out.branch2 = apply(lam, out.branch2);
    return out;
}

PhotonPairAmplitudes transform_pair_massless(Rapidity chi, double phi, double zeta,
                                             Rapidity xi, double kappa) {
    double eps = epsilon_orthogonal(chi, phi);
    PhotonPairAmplitudes out = make_photon_epr(zeta, xi, kappa);
    // Helicity sigma = +1, -1; branch 1 picks up e^{i eps sigma},
    // branch 2 e^{-i eps sigma}.
    const double sigma[2] = {1.0, -1.0};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.a[2 * i + j] *= std::exp(kI * eps * (sigma[i] - sigma[j]));
    out.zeta1 = zeta + eps;
    out.zeta2 = zeta - eps;
    LorentzTransform lam = observer_boost_general(kPiHalf, phi, chi);
    out.branch1 = apply(lam, out.branch1);
    out.branch2 = apply(lam, out.branch2);
    return out;
}

std::array<Complex, 2> post_measurement_partner(double delta, SpinOutcome outcome1) {
    detail::require_finite(delta, "delta");
    double cd = std::cos(delta), sd = std::sin(delta);
    // Rows of the transformed pair for the given first-particle outcome.
    std::array<Complex, 2> partner = outcome1 == SpinOutcome::Up
                                         ? std::array<Complex, 2>{Complex{sd}, Complex{cd}}
                                         : std::array<Complex, 2>{Complex{-cd}, Complex{sd}};
    double n = std::sqrt(std::norm(partner[0]) + std::norm(partner[1]));
    if (n < 1e-12) throw std::domain_error("conditioning on a zero-probability outcome");
    partner[0] /= n;
    partner[1] /= n;
    return partner;
}

namespace {

double entropy_of(const Amplitudes4& a) {
    detail::require_normalized(a);
    // Reduced density matrix of branch 1.
    Complex r00{}, r01{}, r11{};
    for (int j = 0; j < 2; ++j) {
        r00 += a[j] * std::conj(a[j]);
        r01 += a[j] * std::conj(a[2 + j]);
        r11 += a[2 + j] * std::conj(a[2 + j]);
    }
    double tr = r00.real() + r11.real();
    double det = r00.real() * r11.real() - std::norm(r01);
    double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    double l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    double s = 0.0;
    for (double l : {l1, l2})
        if (l > 1e-15) s -= l * std::log(l);
    return s;
}

}  // namespace

double entanglement_entropy(const SpinHalfAmplitudes& state) { return entropy_of(state.a); }
double entanglement_entropy(const PhotonPairAmplitudes& state) { return entropy_of(state.a); }

double measure_correlation(const SpinHalfAmplitudes& state, const Vec3& n1, const Vec3& n2) {
    detail::require_normalized(state.a);
    return detail::pair_expectation(state.a, spin_matrix(n1), spin_matrix(n2));
}

double measure_correlation(const PhotonPairAmplitudes& state, double zeta1, double zeta2) {
    detail::require_normalized(state.a);
    return detail::pair_expectation(state.a, polarization_matrix(zeta1),
                                    polarization_matrix(zeta2));
}

}  // namespace relepr
