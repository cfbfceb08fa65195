// Two-particle spin / polarization states attached to momentum branches and
// their frame-change transformation laws. Momentum branches are orthonormal
// discrete labels; amplitudes are unit-normalized.
#pragma once

#include <array>
#include <complex>

#include "relepr/little_group.hpp"
#include "relepr/lorentz.hpp"

namespace relepr {

using Complex = std::complex<double>;
using Mat2c = std::array<Complex, 4>;        // row-major 2x2
using Amplitudes4 = std::array<Complex, 4>;  // product basis (s1, s2)
using Vec3 = std::array<double, 3>;

// Basis order: spin (up, down); photon helicity (+1, -1).
// Pair index = 2 * s1 + s2.

enum class SpinOutcome { Up, Down };

struct SpinHalfAmplitudes {
    Amplitudes4 a{};  // uu, ud, du, dd
    FourVector branch1, branch2;
};

struct PhotonPairAmplitudes {
    Amplitudes4 a{};  // ++, +-, -+, --
    FourVector branch1, branch2;
    double zeta1 = 0.0, zeta2 = 0.0;  // linear-polarization labels per branch
};

// D^(1/2)(R_y^-1(delta)) = [[cos d/2, -sin d/2], [sin d/2, cos d/2]].
Mat2c wigner_d_half(double delta);

Mat2c pauli_x();
Mat2c pauli_y();
Mat2c pauli_z();
// n . sigma for a unit 3-vector.
Mat2c spin_matrix(const Vec3& n);
// Polarization readout at angle zeta in the helicity basis (+, -):
// P(zeta) |zeta>_pm = pm |zeta>_pm.
Mat2c polarization_matrix(double zeta);

// Spin-singlet EPR pair, particles moving along +-x with rapidity xi.
SpinHalfAmplitudes make_singlet(Rapidity xi = Rapidity(1.0));

// Photon pair (1/sqrt2)[ |p+; z1>_+ |p-; z2>_-  -  |p+; z1>_- |p-; z2>_+ ]
// with helicity amplitudes derived from the linear-polarization expansion.
PhotonPairAmplitudes make_photon_pair(double zeta1, double zeta2,
                                      Rapidity xi = Rapidity(1.0), double kappa = 1.0);
PhotonPairAmplitudes make_photon_epr(double zeta = 0.0, Rapidity xi = Rapidity(1.0),
                                     double kappa = 1.0);

// Singlet as seen by the orthogonal observer: particle 1 rotated by delta,
// particle 2 by -delta. Computed by D(delta) x D(-delta) and cross-checked
// against the closed-form mixing cos d (singlet) + sin d (triplet).
SpinHalfAmplitudes transform_pair_massive(Rapidity xi, Rapidity chi);

// Photon EPR pair as seen by the yz-plane observer: branch phases
// e^{i eps sigma} / e^{-i eps sigma}, polarization labels zeta +- eps.
PhotonPairAmplitudes transform_pair_massless(Rapidity chi, double phi, double zeta = 0.0,
                                             Rapidity xi = Rapidity(1.0), double kappa = 1.0);

// State of particle 2 after particle 1 of transform_pair_massive(...) is
// measured along z; (up, down) amplitudes, normalized. The result is the
// -(+)1 eigenstate of spin along (-sin 2d, 0, cos 2d) for outcome Up (Down).
std::array<Complex, 2> post_measurement_partner(double delta, SpinOutcome outcome1);

// Von Neumann entropy (nats) of the reduced single-branch density matrix.
double entanglement_entropy(const SpinHalfAmplitudes& state);
double entanglement_entropy(const PhotonPairAmplitudes& state);

// E(n1, n2) = <(sigma.n1) x (sigma.n2)> or <P(z1) x P(z2)>, in [-1, 1].
double measure_correlation(const SpinHalfAmplitudes& state, const Vec3& n1, const Vec3& n2);
double measure_correlation(const PhotonPairAmplitudes& state, double zeta1, double zeta2);

namespace detail {

double norm2(const Amplitudes4& a);
void require_normalized(const Amplitudes4& a);
// (u1 x u2) a
Amplitudes4 apply_local(const Mat2c& u1, const Mat2c& u2, const Amplitudes4& a);
// Re <a| (op1 x op2) |a>
double pair_expectation(const Amplitudes4& a, const Mat2c& op1, const Mat2c& op2);

}  // namespace detail

}  // namespace relepr
