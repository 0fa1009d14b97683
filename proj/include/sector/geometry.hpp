#pragma once
// Upper half-space model of hyperbolic 3-space.
//
// A point is p = z + y j = (x1, x2, y) with y > 0 and metric
// ds^2 = (dx1^2 + dx2^2 + dy^2) / y^2.  The distinguished vertical plane
// P = {x2 = 0} is totally geodesic; the sector chart
//
//   x = x1,   u = log sqrt(x2^2 + y^2),   v = arctan(x2 / y)
//
// measures the signed angle v from P, and sec v = cosh(distance to P).
// The chart metric is diag(e^{-2u}, 1, 1) / cos^2 v and the Laplacian is
//   e^{2u} cos^2 v d^2/dx^2 + cos^2 v (d^2/du^2 + d^2/dv^2)
//   - cos^2 v d/du + sin v cos v d/dv,
// both of which this module can verify by finite differences.

#include <functional>

#include "sector/gaussian_int.hpp"

namespace sector {

struct Point {
    double x1 = 0.0;
    double x2 = 0.0;
    double y = 1.0;
};

struct SectorCoords {
    double x = 0.0;
    double u = 0.0;
    double v = 0.0;  // radians, in (-pi/2, pi/2)
};

// chart maps; to_sector requires y > 0, from_sector requires |v| < pi/2
SectorCoords to_sector(const Point& p);
Point from_sector(const SectorCoords& s);

// Moebius action of a determinant-1 matrix on upper half-space.
Point moebius_act(const GMatrix& g, const Point& p);

// point-pair invariant: delta(p, q) = cosh d(p, q)
//   = (|z_p - z_q|^2 + y_p^2 + y_q^2) / (2 y_p y_q)
double pp_invariant(const Point& p, const Point& q);

// sec of the angle from the plane; equals pp_invariant(p, projection)
double sec_v(const Point& p);

// orthogonal projection onto P = {x2 = 0}: (x1, 0, sqrt(x2^2 + y^2))
Point project_to_plane(const Point& p);

// Pulls the Cartesian hyperbolic metric back through from_sector with a
// finite-difference Jacobian and returns the max absolute deviation from the
// closed-form chart tensor.  Deviation is O(step^2).  Throws "chart
// degenerate" when |v| is within 1e-3 of pi/2.
double check_metric_tensor(const SectorCoords& s, double step = 1e-5);

using ScalarField = std::function<double(const Point&)>;

// Applies the chart Laplacian (central differences in x, u, v) and the
// Cartesian Laplacian y^2(d^2x1 + d^2x2 + d^2y) - y dy to the same scalar
// field at the same geometric point; returns |difference|, O(step^2).
// With richardson=true both sides combine step and step/2 evaluations.
double check_laplacian(const SectorCoords& s, const ScalarField& f,
                       double step = 1e-4, bool richardson = false);

}  // namespace sector
