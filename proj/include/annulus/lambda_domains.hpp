#pragma once

#include <optional>
#include <span>
#include <vector>

#include "annulus/circle_transform.hpp"
#include "annulus/core.hpp"
#include "annulus/zero_mean.hpp"

namespace annulus {

/// One side of the quadric (z - a)(w - conj a) = rho^2 minus its real circle:
/// plus is the sheet with 0 < |z - a| < rho, minus the sheet with |z - a| > rho.
struct LambdaSpec {
  CircleSpec circle;
  Side side;
};

enum class OmegaRegion { plus, minus, boundary_sigma, outside };

const char* to_string(OmegaRegion region);

struct OmegaMembership {
  OmegaRegion region = OmegaRegion::outside;
  std::optional<Complex> witness_center;
  double residual = 0.0;  // variety-equation defect at the witness (or best attempt)
};

/// Result of the multistart Newton search for a plus-sheet witness center.
struct PlusWitnessSearch {
  std::optional<Complex> center;
  double residual = 0.0;
};

bool lambda_contains(const C2Point& p, const LambdaSpec& spec, double tol);

/// Searches for a center a with |a| < (r2-r1)/2 such that p lies on the plus
/// sheet of the circle of radius (r1+r2)/2 centered at a. 5x5 multistart Newton
/// over the admissible center disc; deterministic selection (lowest residual,
/// then start order). When no witness qualifies, residual reports the smallest
/// defect reached.
PlusWitnessSearch solve_plus_witness(const C2Point& p, const Annulus& annulus,
                                     double solver_tol);

/// Classifies p against the two domains attached to the lifted annulus:
/// boundary when w = conj z with |z| in [r1, r2], otherwise plus/minus via the
/// witness solver (the minus test reuses the plus solver on the reflected
/// point). Solver failure reports outside, never throws.
OmegaMembership omega_membership(const C2Point& p, const Annulus& annulus,
                                 double solver_tol = 1e-10);

/// Plus sheets of two distinct circles intersect iff the centers differ and one
/// circle strictly surrounds the other.
bool lambda_intersect_plus_plus(const CircleSpec& c1, const CircleSpec& c2);

/// A plus sheet and a minus sheet intersect iff the closed discs are disjoint.
bool lambda_intersect_plus_minus(const CircleSpec& c1, const CircleSpec& c2);

/// G^+(z, w) = sum_{n>=1} w^{-(n-1)} p_n(z w) with p_n the plus polynomial of
/// harmonic n; on the boundary G^+(z, conj z) = conj(z) * f_plus(z).
Complex eval_g_plus(const ZeroMeanCoefficients& coeffs, const C2Point& p);

/// Mirror with the roles of z and w exchanged: G^-(z, conj z) = z * f_minus(z).
Complex eval_g_minus(const ZeroMeanCoefficients& coeffs, const C2Point& p);

/// Damped extension series F_t: for the plus side
///   F_t(z, w) = sum_{n>=1} (t/w)^n p_n(z w),
/// which satisfies F_t(z, w) = F(t z, w / t) with F the t = 1 series.
Complex eval_f_t(const ZeroMeanCoefficients& coeffs, Side side, AbelParameter t,
                 const C2Point& p);

/// The t = 1 series of eval_f_t. On the boundary it equals f_plus / f_minus.
Complex eval_f_limit(const ZeroMeanCoefficients& coeffs, Side side, const C2Point& p);

/// Pluriharmonic extension Psi(z, w) = F_plus(z, w) + F_minus(conj w, conj z);
/// on boundary points (z, conj z) this evaluates to f(z).
Complex eval_psi(const ZeroMeanCoefficients& coeffs, const C2Point& p);

/// Antiholomorphic reflection across the circle:
///   zeta -> center + radius^2 / (conj zeta - conj center).
Complex reflect(Complex zeta, const CircleSpec& c);

/// Points approaching the boundary point (z0, conj z0) along the plus sheet of
/// the mid-radius circle through z0, one point per requested distance in C^2.
/// Requires r1 < |z0| < r2.
std::vector<C2Point> boundary_approach_path(Complex z0, const Annulus& annulus,
                                            std::span<const double> distances);

}  // namespace annulus
