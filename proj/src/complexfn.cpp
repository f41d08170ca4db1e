#include "cbohm/complexfn.hpp"

#include <cmath>

namespace cbohm {

namespace {

void check_not_pole(const AnalyticScalarField& f, cplx z) {
    for (cplx p : f.poles)
        if (std::abs(z - p) < 1e-12)
            throw singularity_error("evaluation point hits a declared pole");
}

} // namespace

cplx conj_bar(const AnalyticScalarField& f, cplx z) {
    check_not_pole(f, std::conj(z));
    return std::conj(f.eval(std::conj(z)));
}

AnalyticScalarField bar_field(const AnalyticScalarField& f) {
    AnalyticScalarField g;
    g.eval = [f](cplx z) { return std::conj(f.eval(std::conj(z))); };
    // d/dz f*(z*) = (f')*(z*): conjugation commutes with differentiation
    g.deriv1 = [f](cplx z) { return std::conj(f.deriv1(std::conj(z))); };
    if (f.has_deriv2())
        g.deriv2 = [f](cplx z) { return std::conj(f.deriv2(std::conj(z))); };
    g.parity = f.parity;
    g.domain_note = f.domain_note;
    g.poles.reserve(f.poles.size());
    for (cplx p : f.poles) g.poles.push_back(std::conj(p));
    return g;
}

std::pair<cplx, cplx> reim_parts(const AnalyticScalarField& f, cplx z) {
    const cplx fz = f.eval(z);
    const cplx gz = conj_bar(f, z);
    return {0.5 * (fz + gz), 0.5 * (fz - gz)};
}

AnalyticScalarField re_part(const AnalyticScalarField& f) {
    AnalyticScalarField g;
    g.eval   = [f](cplx z) { return 0.5 * (f.eval(z) + std::conj(f.eval(std::conj(z)))); };
    g.deriv1 = [f](cplx z) { return 0.5 * (f.deriv1(z) + std::conj(f.deriv1(std::conj(z)))); };
    if (f.has_deriv2())
        g.deriv2 = [f](cplx z) { return 0.5 * (f.deriv2(z) + std::conj(f.deriv2(std::conj(z)))); };
    g.parity = Parity::Real;
    g.domain_note = f.domain_note;
    g.poles = f.poles;
    for (cplx p : f.poles) g.poles.push_back(std::conj(p));
    return g;
}

AnalyticScalarField im_part(const AnalyticScalarField& f) {
    AnalyticScalarField g;
    g.eval   = [f](cplx z) { return 0.5 * (f.eval(z) - std::conj(f.eval(std::conj(z)))); };
    g.deriv1 = [f](cplx z) { return 0.5 * (f.deriv1(z) - std::conj(f.deriv1(std::conj(z)))); };
    if (f.has_deriv2())
        g.deriv2 = [f](cplx z) { return 0.5 * (f.deriv2(z) - std::conj(f.deriv2(std::conj(z)))); };
    g.parity = Parity::Imag;
    g.domain_note = f.domain_note;
    g.poles = f.poles;
    for (cplx p : f.poles) g.poles.push_back(std::conj(p));
    return g;
}

double cr_residual(const AnalyticScalarField& f, cplx z, double h) {
    const cplx dx = (f.eval(z + h) - f.eval(z - h)) / (2.0 * h);
    const cplx ih(0.0, h);
    const cplx dy = (f.eval(z + ih) - f.eval(z - ih)) / (2.0 * ih);
    return std::abs(dx - dy);
}

double parity_residual(const AnalyticScalarField& f, cplx z) {
    switch (f.parity) {
        case Parity::Real:    return std::abs(conj_bar(f, z) - f.eval(z));
        case Parity::Imag:    return std::abs(conj_bar(f, z) + f.eval(z));
        case Parity::General: return 0.0;
    }
    return 0.0;
}

Parity product_parity(Parity a, Parity b) {
    if (a == Parity::General || b == Parity::General) return Parity::General;
    return a == b ? Parity::Real : Parity::Imag;
}

AnalyticScalarField sum_fields(const AnalyticScalarField& f, const AnalyticScalarField& g) {
    AnalyticScalarField s;
    s.eval   = [f, g](cplx z) { return f.eval(z) + g.eval(z); };
    s.deriv1 = [f, g](cplx z) { return f.deriv1(z) + g.deriv1(z); };
    if (f.has_deriv2() && g.has_deriv2())
        s.deriv2 = [f, g](cplx z) { return f.deriv2(z) + g.deriv2(z); };
    s.parity = (f.parity == g.parity) ? f.parity : Parity::General;
    s.poles = f.poles;
    s.poles.insert(s.poles.end(), g.poles.begin(), g.poles.end());
    return s;
}

AnalyticScalarField product_fields(const AnalyticScalarField& f, const AnalyticScalarField& g) {
    AnalyticScalarField p;
    p.eval   = [f, g](cplx z) { return f.eval(z) * g.eval(z); };
    p.deriv1 = [f, g](cplx z) { return f.deriv1(z) * g.eval(z) + f.eval(z) * g.deriv1(z); };
    if (f.has_deriv2() && g.has_deriv2())
        p.deriv2 = [f, g](cplx z) {
            return f.deriv2(z) * g.eval(z) + 2.0 * f.deriv1(z) * g.deriv1(z) + f.eval(z) * g.deriv2(z);
        };
    p.parity = product_parity(f.parity, g.parity);
    p.poles = f.poles;
    p.poles.insert(p.poles.end(), g.poles.begin(), g.poles.end());
    return p;
}

AnalyticScalarField scaled_field(cplx a, const AnalyticScalarField& f) {
    AnalyticScalarField s;
    s.eval   = [a, f](cplx z) { return a * f.eval(z); };
    s.deriv1 = [a, f](cplx z) { return a * f.deriv1(z); };
    if (f.has_deriv2())
        s.deriv2 = [a, f](cplx z) { return a * f.deriv2(z); };
    const bool real_a = a.imag() == 0.0, imag_a = a.real() == 0.0;
    if (real_a && !imag_a) s.parity = f.parity;
    else if (imag_a && !real_a) s.parity = product_parity(Parity::Imag, f.parity);
    else s.parity = Parity::General;
    s.poles = f.poles;
    return s;
}

double fd_step(cplx z) { return 1e-6 * (1.0 + std::abs(z)); }

cplx central_diff(const std::function<cplx(cplx)>& g, cplx z, double h) {
    return (g(z + h) - g(z - h)) / (2.0 * h);
}

} // namespace cbohm
