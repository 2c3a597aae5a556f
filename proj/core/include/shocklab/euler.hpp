#pragma once

#include <cmath>

#include "shocklab/error.hpp"

namespace shocklab {

/// Raise x to a small nonnegative integer power by repeated multiplication.
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x;
    return r;
}

/// Polytropic equation of state p = (gamma0 - 1) * eps in n space dimensions.
///
/// The exponent gamma0 = 1 + 2/n is the distinguished value for which the
/// full kinematical group (including the projective part) is a symmetry of
/// the flow; `symmetric()` reports whether gamma0 sits on that value.
class Polytrope {
public:
    Polytrope(double gamma0, int dim, double r_gas = 1.0)
        : gamma0_(gamma0), dim_(dim), r_gas_(r_gas) {
        if (!(gamma0 > 1.0))
            throw domain_error("polytropic exponent must exceed 1");
        if (dim < 1 || dim > 3)
            throw domain_error("space dimension must be 1, 2 or 3");
        if (!(r_gas > 0.0))
            throw domain_error("gas constant must be positive");
    }

    double gamma0() const { return gamma0_; }
    int dim() const { return dim_; }
    double r_gas() const { return r_gas_; }

    /// True iff gamma0 = 1 + 2/n to within 1e-14.
    bool symmetric() const {
        return std::abs(gamma0_ - (1.0 + 2.0 / dim_)) <= 1e-14;
    }

    /// Specific heat at constant volume, C_v = R / (gamma0 - 1).
    double c_v() const { return r_gas_ / (gamma0_ - 1.0); }

private:
    double gamma0_;
    int dim_;
    double r_gas_;
};

/// Primitive fluid state (density, velocity, pressure).  The velocity is the
/// single component of the planar or radial reduction.
struct Primitive {
    double rho;
    double u;
    double p;
};

/// Conserved fluid state (density, momentum density, total energy density).
struct Conserved {
    double rho;
    double mom;
    double E;
};

/// Entropy bookkeeping for one state: chi = eps / rho^gamma0 and the
/// relative specific entropy C_v * log(chi).  Only entropy differences are
/// meaningful; the additive constant is not fixed here.
struct EntropyState {
    double chi;
    double s_rel;
};

inline void validate(const Primitive& s) {
    if (!(s.rho > 0.0) || !std::isfinite(s.rho))
        throw domain_error("density must be positive");
    if (!(s.p > 0.0) || !std::isfinite(s.p))
        throw domain_error("pressure must be positive");
    if (!std::isfinite(s.u)) throw domain_error("velocity must be finite");
}

/// eps = p / (gamma0 - 1).
inline double eps_from_p(double p, const Polytrope& eos) {
    if (!(p > 0.0)) throw domain_error("pressure must be positive");
    return p / (eos.gamma0() - 1.0);
}

/// p = (gamma0 - 1) * eps.
inline double p_from_eps(double eps, const Polytrope& eos) {
    if (!(eps > 0.0)) throw domain_error("energy density must be positive");
    return (eos.gamma0() - 1.0) * eps;
}

inline Conserved prim_to_cons(const Primitive& s, const Polytrope& eos) {
    validate(s);
    const double eps = eps_from_p(s.p, eos);
    return {s.rho, s.rho * s.u, 0.5 * s.rho * s.u * s.u + eps};
}

inline Primitive cons_to_prim(const Conserved& c, const Polytrope& eos) {
    if (!(c.rho > 0.0) || !std::isfinite(c.rho))
        throw domain_error("density must be positive");
    const double u = c.mom / c.rho;
    const double eps = c.E - 0.5 * c.mom * c.mom / c.rho;
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw domain_error("internal energy must be positive");
    return {c.rho, u, p_from_eps(eps, eos)};
}

/// chi = eps / rho^gamma0.  Advected along particle paths in smooth flow and
/// a scalar under the full kinematical group.
inline double chi(const Primitive& s, const Polytrope& eos) {
    validate(s);
    return eps_from_p(s.p, eos) / std::pow(s.rho, eos.gamma0());
}

inline EntropyState entropy_state(const Primitive& s, const Polytrope& eos) {
    const double c = chi(s, eos);
    return {c, eos.c_v() * std::log(c)};
}

/// Adiabatic sound speed sqrt(gamma0 * p / rho).
inline double sound_speed(const Primitive& s, const Polytrope& eos) {
    validate(s);
    return std::sqrt(eos.gamma0() * s.p / s.rho);
}

} // namespace shocklab
