#ifndef CBOHM_COMPLEXFN_HPP
#define CBOHM_COMPLEXFN_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbohm {

using cplx = std::complex<double>;

/// Thrown when an evaluation point sits on a declared singularity
/// (a pole of a velocity field, a wavefunction node, ...).
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Behaviour of an analytic field under the conjugation f -> f*(z*):
/// Real fields are invariant, Imag fields flip sign, General fields are neither.
enum class Parity { Real, Imag, General };

/** A complex -> complex scalar field with hand-coded analytic derivatives.
 *
 * Derivatives are exact closed forms, never finite differences; the
 * finite-difference machinery below exists only as a diagnostic against
 * them. Fields are immutable after construction and safe to share
 * between threads. */
struct AnalyticScalarField {
    std::function<cplx(cplx)> eval;
    std::function<cplx(cplx)> deriv1;
    std::function<cplx(cplx)> deriv2;   // optional, empty when not needed
    Parity parity = Parity::General;
    std::string domain_note;            // human-readable singularity description
    std::vector<cplx> poles;            // declared isolated singularities

    cplx operator()(cplx z) const { return eval(z); }
    bool has_deriv2() const { return static_cast<bool>(deriv2); }
};

/// f*(z*): conjugate of f evaluated at the conjugate point. Analytic in z,
/// unlike f(z*) or f*(z). Throws singularity_error when z* hits a declared pole.
cplx conj_bar(const AnalyticScalarField& f, cplx z);

/// The conjugated field as a field in its own right (evaluator and
/// derivatives composed through the reflection). Parity tags carry over:
/// Real and Imag fields are fixed points (up to sign) of the map.
AnalyticScalarField bar_field(const AnalyticScalarField& f);

/// Splits f into its Real and Imag components,
///   (f(z) + f*(z*)) / 2  and  (f(z) - f*(z*)) / 2.
/// Both components are analytic and sum back to f(z) exactly.
std::pair<cplx, cplx> reim_parts(const AnalyticScalarField& f, cplx z);

AnalyticScalarField re_part(const AnalyticScalarField& f);
AnalyticScalarField im_part(const AnalyticScalarField& f);

/// |D_x f - D_iy f| with central differences of step h along the real and
/// imaginary directions; ~0 iff f satisfies the Cauchy-Riemann conditions at z.
double cr_residual(const AnalyticScalarField& f, cplx z, double h);

/// Deviation from the declared parity at z: |bar(f) - f| for Real,
/// |bar(f) + f| for Imag, 0 for General.
double parity_residual(const AnalyticScalarField& f, cplx z);

Parity product_parity(Parity a, Parity b);

AnalyticScalarField sum_fields(const AnalyticScalarField& f, const AnalyticScalarField& g);
AnalyticScalarField product_fields(const AnalyticScalarField& f, const AnalyticScalarField& g);
AnalyticScalarField scaled_field(cplx a, const AnalyticScalarField& f);

/// Step used by all finite-difference diagnostics: 1e-6 * (1 + |z|).
double fd_step(cplx z);

/// Central difference (g(z+h) - g(z-h)) / (2h).
cplx central_diff(const std::function<cplx(cplx)>& g, cplx z, double h);

} // namespace cbohm

#endif
