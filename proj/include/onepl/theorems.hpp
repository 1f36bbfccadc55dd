#pragma once

#include "onepl/checks.hpp"
#include "onepl/drawing.hpp"
#include "onepl/reports.hpp"

namespace onepl {

// Face relation of plane maps with 3/4-faces only:
// 3*f3 + 4*f4 = 2|E(H)| and f3 + 2*f4 = 2n - 4.
IdentityReport euler_face_relation(const SkeletonMap& s);

// Triangle-count identity N(G,K3) = s3(H) + f3(H) + 4*f4(H) for rich
// drawings whose skeleton H is 3-connected with 3/4-faces only.
IdentityReport gollin_triangle_identity(const OnePlaneDrawing& d);

// N(G,K3) = f3(H) + 4*f4(H) and N(G,K4) = f4(H). Theorem mode requires a
// 7-connected graph; audit mode instead requires s3(H) = 0, richness and
// every K4 pyramidal, and when s3(H) > 0 it checks the measured discrepancy
// N(G,K3) - (f3 + 4*f4) against s3(H).
IdentityReport lemma34_identity(const OnePlaneDrawing& d, bool audit = false);

// Clique census against the 7-connected thresholds {4n-12, 4n-16, n-6, 0,
// total 10n-33}, or in audit-4conn mode the 4-connected thresholds
// {6n-14, 4n-9, n-2}. The drawing, when given, must match the graph and
// serves as the 1-planarity evidence.
BoundReport theorem_bounds(const SimpleGraph& g, const OnePlaneDrawing* drawing = nullptr,
                           bool audit_4conn = false);

// t3 >= 8 when the drawing is triangulated with minimum degree 7.
IdentityReport skeleton_f3_lower(const OnePlaneDrawing& d);

}  // namespace onepl
