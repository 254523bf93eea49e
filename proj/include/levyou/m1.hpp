#pragma once

#include <optional>
#include <vector>

#include "levyou/cadlag.hpp"

namespace levyou {

// Ground distance between graph points: max(|dz|, |dt|).
double graph_point_distance(const GraphVertex& a, const GraphVertex& b);

// Polyline with every segment split so that max(|dz|,|dt|) <= pitch.
std::vector<GraphVertex> refine_polyline(const std::vector<GraphVertex>& poly, double pitch);

// Discrete Frechet distance between two vertex chains under the max(|dz|,|dt|)
// ground distance: min over monotone traversals of the max matched distance.
double discrete_frechet(const std::vector<GraphVertex>& a, const std::vector<GraphVertex>& b);

// Skorokhod M1 distance on [0,T], approximated by the discrete Frechet
// distance of the completed graphs refined to segment pitch 1/mesh. The
// approximation error is bounded by the larger refinement pitch. Both paths
// must be defined at least up to T.
double m1_distance(const CadlagPath& p1, const CadlagPath& p2, double T, int mesh);

// \int_0^{T_max} e^{-T} (1 ^ d_{M1,T}) dT by composite Simpson with
// `quad_nodes` panels; the dropped tail is bounded by e^{-T_max}.
double m1_whole_line_distance(const CadlagPath& p1, const CadlagPath& p2, double t_max,
                              int quad_nodes, int mesh);

// sup_{t<=T} |p1_t - p2_t| over the merged breakpoint grid (exact for
// step/linear paths; left limits included).
double uniform_distance(const CadlagPath& p1, const CadlagPath& p2, double T);

// Distance from x to the segment between x1 and x2.
double oscillation(double x1, double x, double x2);

// sup of oscillation(p_{t1}, p_t, p_{t2}) over breakpoint-refined grid triples
// t1 < t < t2 <= T with t2 - t1 <= delta. refine_pitch <= 0 picks delta/4.
double m1_oscillation_sup(const CadlagPath& p, double delta, double T, double refine_pitch = 0.0);

// S_t = sup_{s<=t} p_s as a path.
CadlagPath running_supremum(const CadlagPath& p);

// inf{t >= 0 : p_t > a}, strict inequality; empty when the level is never
// exceeded on [0,T].
std::optional<double> first_passage(const CadlagPath& p, double a);

}  // namespace levyou
