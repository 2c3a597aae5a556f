#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "shocklab/field.hpp"

namespace shocklab {

/// Element of SL(2,R): t -> (alpha t + beta) / (gamma t + delta) together
/// with the 1/(gamma t + delta) rescaling of space.  The constructor
/// renormalizes the entries by 1/sqrt(det) when the determinant is positive
/// and rejects nonpositive determinants.
///
/// An element and its negation describe the same transformation on the
/// branch gamma*t + delta > 0: every operation first replaces the element
/// by whichever of the two sign representatives is positively oriented at
/// the evaluation time, so (a,b,c,d) and (-a,-b,-c,-d) act identically.
class Sl2Element {
public:
    Sl2Element() : a_(1), b_(0), c_(0), d_(1) {}
    Sl2Element(double alpha, double beta, double gamma, double delta);

    static Sl2Element identity() { return {}; }
    /// (0, -1, 1, 0): t -> -1/t, x -> x/t.  Maps explosions to implosions.
    static Sl2Element explosion_implosion() { return {0.0, -1.0, 1.0, 0.0}; }

    double alpha() const { return a_; }
    double beta() const { return b_; }
    double gamma() const { return c_; }
    double delta() const { return d_; }

    double det() const { return a_ * d_ - b_ * c_; }
    bool is_identity(double tol = 1e-14) const;

    /// gamma*t + delta for the stored sign representative.
    double time_factor(double t) const { return c_ * t + d_; }

    /// Sign representative with time_factor(t) > 0; throws
    /// singular_time_error when gamma*t + delta = 0.
    Sl2Element oriented_at(double t) const;

    Sl2Element inverse() const { return raw(d_, -b_, -c_, a_); }
    /// 2x2 matrix product; (a*b) applies b first.
    friend Sl2Element operator*(const Sl2Element& l, const Sl2Element& r) {
        return raw(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
                   l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
    }

private:
    static Sl2Element raw(double a, double b, double c, double d) {
        Sl2Element e;
        e.a_ = a;
        e.b_ = b;
        e.c_ = c;
        e.d_ = d;
        return e;
    }
    double a_, b_, c_, d_;
};

/// Static Galilei element of the 1-D reduction: x -> rot*x + v*t + a with
/// rot the one-dimensional orthogonal part (+1 or -1).
struct GalileiElement {
    double rot = 1.0;
    double v = 0.0;
    double a = 0.0;

    GalileiElement() = default;
    GalileiElement(double rot_, double v_, double a_);
    static GalileiElement identity() { return {}; }
    bool is_identity(double tol = 1e-14) const;
};

/// Element of the full kinematical group, applied as Galilei first and the
/// SL(2,R) part second.
struct GroupElement {
    Sl2Element sl2;
    GalileiElement gal;

    static GroupElement identity() { return {}; }
    static GroupElement pure(const Sl2Element& s) { return {s, {}}; }
    static GroupElement pure(const GalileiElement& g) { return {{}, g}; }

    /// Inverse element, recovered operationally from the inverse coordinate
    /// map (see fit_element).  t_hint anchors the sampling window.
    GroupElement inverse(double t_hint = 0.0) const;
};

struct SpacetimePoint {
    double x;
    double t;
};

/// Image of (x, t): x' = (rot*x + v*t + a) / (gamma*t + delta),
/// t' = (alpha*t + beta) / (gamma*t + delta).
SpacetimePoint act_coords(const GroupElement& g, double x, double t);

/// Preimage of (x', t') under g (closed-form inversion of the map).
SpacetimePoint act_coords_inverse(const GroupElement& g, double xp, double tp);

/// Transformed fluid state at the image point:
///   rho' = f^n rho,  u' = f (rot u + v) - gamma (rot x + v t + a),
///   p' = (gamma0 - 1) chi rho'^gamma0     (chi is a scalar),
/// with f = gamma*t + delta > 0.  The map is defined for any exponent; it
/// is a symmetry of the flow only when eos.symmetric() holds.
Primitive act_state(const GroupElement& g, const Primitive& s, double x, double t,
                    const Polytrope& eos);

/// Viscosity fields transform like scalar densities: eta' = f^n eta.
std::pair<double, double> act_viscosity(const GroupElement& g, double eta,
                                        double zeta, double t, const Polytrope& eos);

/// Which expansion-block row convention the 6x6 matrix uses; `published`
/// keeps the alpha (instead of alpha^2) leading entry that appears in
/// print, which breaks det M = 1 for generic elements and is retained only
/// as a regression control.
enum class RepVariant { corrected, published };

/// 6x6 matrix acting on the current stack (rho, K, P, A, D, H): the singlet
/// rho, the doublet (K, P) and the triplet (A, D, H).
class RepresentationMatrix {
public:
    explicit RepresentationMatrix(const std::array<std::array<double, 6>, 6>& m)
        : m_(m) {}

    double operator()(int r, int c) const { return m_[r][c]; }
    double det() const;
    RepresentationMatrix operator*(const RepresentationMatrix& o) const;
    std::array<double, 6> apply(const std::array<double, 6>& v) const;
    double max_abs_diff(const RepresentationMatrix& o) const;

    static constexpr int idx_rho = 0, idx_K = 1, idx_P = 2, idx_A = 3,
                         idx_D = 4, idx_H = 5;

private:
    std::array<std::array<double, 6>, 6> m_;
};

RepresentationMatrix representation_matrix(const Sl2Element& s,
                                           RepVariant variant = RepVariant::corrected);

/// Jacobian data of the coordinate map of a pure SL(2,R) element at (x, t).
/// Matrices are the (t, x) reduction; the determinant counts all n space
/// dimensions: det(dx/dx') = f^(n+2).
struct JacobianFactors {
    double det_dx_dxp;
    std::array<std::array<double, 2>, 2> forward;  ///< dx'^mu / dx^nu
    std::array<std::array<double, 2>, 2> pullback; ///< dx^nu / dx'^mu

    /// Covector transform n'_mu = (dx^nu/dx'^mu) n_nu.
    std::array<double, 2> pull_covector(const std::array<double, 2>& n) const {
        return {pullback[0][0] * n[0] + pullback[0][1] * n[1],
                pullback[1][0] * n[0] + pullback[1][1] * n[1]};
    }
};

JacobianFactors jacobian_factors(const Sl2Element& s, double x, double t, int dim);

/// Recover a group element from a black-box coordinate map by sampling it
/// near t_hint and solving for the Moebius and affine parameters.  Used to
/// realize composition and inversion without an explicit product law.
GroupElement fit_element(const std::function<SpacetimePoint(double, double)>& map,
                         double t_hint);

/// g2 after g1 (operational composition).
GroupElement compose(const GroupElement& g2, const GroupElement& g1,
                     double t_hint = 0.0);

struct TransformOptions {
    enum class Interp { linear, cubic };
    Interp interp = Interp::linear;
    /// Output grid; defaults to the source grid.
    std::optional<Grid> target_grid;
    ZoneOptions zones{};
};

/// Whole-field pullback result; from_zone[k][i] marks target samples whose
/// preimage fell inside a flagged discontinuity zone (those are sampled
/// nearest-side without interpolation across the jump).
struct TransformedField {
    SpacetimeField field;
    std::vector<std::vector<std::uint8_t>> from_zone;
};

/// Map a whole field through g: for each requested output time and each
/// target cell, pull the state back to the source, sample it, and push the
/// fields forward with act_state.  Requires gamma*t + delta > 0 across the
/// source window; requires a trivial Galilei part on spherical grids.
TransformedField transform_snapshot(const GroupElement& g, const SpacetimeField& src,
                                    const std::vector<double>& target_times,
                                    const TransformOptions& opts = {});

} // namespace shocklab
