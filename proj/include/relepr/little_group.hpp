// Wigner rotations W(Lambda, p) = L^-1(Lambda p) Lambda L(p), little-group
// membership checks, and the closed-form rotation angles delta (massive,
// SO(3) little group) and epsilon (massless, ISO(2) little group).
#pragma once

#include <array>

#include "relepr/lorentz.hpp"

namespace relepr {

struct NotInLittleGroup : std::domain_error {
    using std::domain_error::domain_error;
};

// Result of factoring a little-group element: either a spatial rotation
// (angle about a unit axis) or an ISO(2) triple W = S(alpha, beta) R_z(gamma).
struct LittleGroupDecomposition {
    enum class Kind { MassiveRotation, MasslessIso2 };

    Kind kind = Kind::MassiveRotation;
    double angle = 0.0;                          // signed, in (-pi, pi]
    std::array<double, 3> axis{0.0, 1.0, 0.0};   // unit axis (massive)
    bool axis_ambiguous = false;                 // angle within ~1e-6 of pi
    double alpha = 0.0, beta = 0.0, gamma = 0.0; // ISO(2) parameters (massless)
    double reconstruction_residual = 0.0;
};

struct WignerAngles {
    double delta = 0.0;    // spin rotation angle
    double delta_p = 0.0;  // momentum rotation angle
    double epsilon = 0.0;  // polarization rotation angle
};

struct DeltaCosSin {
    double cos_delta = 1.0;
    double sin_delta = 0.0;
};

// W(Lambda, p) for a momentum on the shell of the given mass (mass = 0 for
// the lightlike case, where kappa fixes the standard momentum). Throws
// ShellViolation off shell.
LorentzTransform wigner_matrix(const LorentzTransform& lambda, const FourVector& p,
                               double mass, double kappa = 1.0);

// Full Wigner chains for the standard scenarios, evaluated in extended
// internal precision: particle along x with rapidity xi (signed; the second
// particle of a pair is xi -> -xi), observer with rapidity chi moving in
// (cos theta, 0, sin theta) for the massive case and
// (cos theta, sin theta sin phi, sin theta cos phi) for the massless one.
LorentzTransform wigner_observer_massive(Rapidity xi, Rapidity chi, double theta);
LorentzTransform wigner_observer_massless(Rapidity chi, double theta, double phi,
                                          int branch, Rapidity xi = Rapidity(1.0),
                                          double kappa = 1.0);

// Axis/angle of a pure spatial rotation embedded in a LorentzTransform.
// Throws NotInLittleGroup when W moves the rest momentum. The axis is
// canonicalized so its largest-magnitude component is positive; for the
// identity it is taken as +y.
LittleGroupDecomposition extract_rotation_angle(const LorentzTransform& w);

// Rebuild the paper-convention rotation matrix from axis and angle.
LorentzTransform rotation_about(const std::array<double, 3>& axis, double angle);

// ISO(2) factorization W = S(alpha, beta) R_z(gamma) of a transform fixing
// (kappa, 0, 0, kappa); gamma is read from the y-row of the spatial block
// and the result is verified by reconstruction.
LittleGroupDecomposition decompose_iso2(const LorentzTransform& w);

// The "translation" element S(alpha, beta) of the massless little group.
LorentzTransform s_translation(double alpha, double beta);

// cos/sin of the spin rotation angle for observer direction theta in the
// xz-plane; normalized so cos^2 + sin^2 = 1.
DeltaCosSin delta_closed_form(Rapidity xi, Rapidity chi, double theta);

// Orthogonal observer (theta = pi/2): delta = atan2(sinh xi sinh chi,
// cosh xi + cosh chi); in [0, pi/2) for nonnegative rapidities.
double delta_orthogonal(Rapidity xi, Rapidity chi);

// Rotation angle of the momentum itself, atan(sinh chi / tanh xi); pi/2
// when xi = 0 with chi > 0, zero when both vanish.
double momentum_rotation_angle(Rapidity xi, Rapidity chi);

// Polarization rotation for the photon branches (+1 along +x, -1 along -x),
// observer direction (cos theta, sin theta sin phi, sin theta cos phi).
double epsilon_closed_form(Rapidity chi, double theta, double phi, int branch);

// Observer in the yz-plane (theta = pi/2):
// tan epsilon = (cosh chi - 1) sin phi cos phi / (1 + (cosh chi - 1) sin^2 phi).
double epsilon_orthogonal(Rapidity chi, double phi);

// Angle maximizing epsilon at fixed chi: phi* = arccos(tanh^2(chi/2)) / 2.
// Throws std::domain_error at chi = 0 where epsilon vanishes identically.
double epsilon_argmax_phi(Rapidity chi);

// delta, delta_p, epsilon for the orthogonal-observer scenarios.
WignerAngles orthogonal_wigner_angles(Rapidity xi, Rapidity chi, double phi);

// Normalize an angle to (-pi, pi].
double normalize_angle(double a);

}  // namespace relepr
