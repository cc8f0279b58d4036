#pragma once

#include <vector>

#include "crofton/chords.hpp"
#include "crofton/direction.hpp"
#include "crofton/oracle.hpp"

namespace crofton {

// v_{w,P}(alpha) = sum_i |<w, delta_i>|. Exact rational directions are summed
// exactly; interval directions contribute their enclosure width.
Interval directional_variation(const PathSpec& path, const Partition& partition, const Direction& d,
                               Precision p = Precision(64));
Interval directional_variation(const std::vector<Point>& chords, const Direction& d, Precision p);

// Same quantity in cosine form, sum_i |cos(theta - theta_i)| l_i. Kept as a
// cross-check of the inner-product form.
Interval directional_variation_cosine_form(const std::vector<ChordStats>& chords,
                                           const Interval& theta, Precision p);

struct ProfileSample {
  Interval theta;
  Interval value;
};

// v_{theta_j,P} at theta_j = j pi / count, j = 0..count.
std::vector<ProfileSample> variation_profile(const PathSpec& path, const Partition& partition,
                                             int count, Precision p = Precision(64));

// 2 l_P: Lipschitz modulus of theta -> v_{theta,P}.
Interval direction_lipschitz_bound(const Interval& polygon_length);

// r(gamma) = 1 / c(gamma) with c(gamma) = min_theta |cos theta| + |cos(theta + gamma)|
// = sin gamma. Then l <= r(gamma) (v_theta + v_{theta+gamma}) for every theta.
// gamma must lie strictly inside (0, pi).
Interval two_direction_length_bound(const Interval& gamma, Precision p = Precision(64));

// Certified branch-and-bound minimization of |cos theta| + |cos(theta+gamma)|
// over [0, pi]; returns an enclosure of the minimum of width <= tol.
// Independent of the closed form used above.
Interval pair_cosine_minimum(const Interval& gamma, const Dyadic& tol);

// M >= l_P(alpha) for every P, from the oracle's horizontal and vertical
// variation upper bounds.
Interval length_upper_bound(const VariationOracle& oracle);

// Enclosure of the integral over [0, pi] of theta -> v_{theta,P}, by the
// midpoint rule on `cells` cells with a rigorous remainder (the integrand is
// l_P-Lipschitz with curvature bounded by l_P away from kinks).
Interval integrate_profile(const std::vector<Point>& chords, long cells, Precision p = Precision(64));

}  // namespace crofton
