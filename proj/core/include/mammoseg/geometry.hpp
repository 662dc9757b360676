#pragma once

#include <vector>

#include "mammoseg/types.hpp"

namespace mammoseg {

enum class Connectivity { Four, Eight };

/// Closed polygon with real-valued vertices, counter-clockwise or
/// clockwise; the segmentation snakes evolve these before rasterization.
using Polygon = std::vector<PointF>;

Polygon circle_polygon(PointF center, double radius, int n_points);
Polygon ellipse_polygon(PointF center, double a, double b, double angle, int n_points);

/// Resample a closed polygon to vertices equally spaced along its arc
/// length; spacing is a target, the count is clamped to [min_pts, max_pts].
Polygon resample_closed(const Polygon& poly, double spacing, int min_pts, int max_pts);

/// Resample a closed polygon to exactly n vertices.
Polygon resample_closed_n(const Polygon& poly, int n);

double polygon_area(const Polygon& poly);  // shoelace, absolute value

/// Rasterize a closed polygon into an 8-connected boundary chain
/// (Bresenham along each edge, consecutive duplicates removed).
Contour rasterize_closed(const Polygon& poly);

/// True when the contour is a well-formed closed chain: >= 4 points,
/// consecutive points (cyclically) 8-adjacent and never equal.
bool is_closed_chain(const Contour& c);

/// Pixels covered by the contour itself.
Mask chain_mask(const Contour& c, int width, int height);

/// Contour pixels plus everything they enclose (flood from the image
/// border over the complement, 4-connected).
Mask region_from_contour(const Contour& c, int width, int height);

struct ContourInterior {
  Mask region;           // chain + enclosed pixels
  size_t interior_count; // enclosed pixels strictly inside the chain
  PointF centroid;       // mean coordinate of the strict interior
};

/// Throws InvalidArgument when the contour encloses zero interior pixels.
ContourInterior contour_interior(const Contour& c, int width, int height);

/// Mask pixels having at least one of their 8 neighbours outside the mask
/// (or lying on the image edge).
std::vector<Point> boundary_pixels(const Mask& m);
Mask boundary_mask(const Mask& m);

/// Connected component of `m` containing `seed` (empty mask when the seed
/// pixel is not set).
Mask component_containing(const Mask& m, Point seed, Connectivity conn);
Mask largest_component(const Mask& m, Connectivity conn);

/// Outer boundary of the component containing `start` as a closed chain
/// (Moore neighbour tracing). `start` may be any pixel of the component.
Contour trace_boundary(const Mask& m, Point start);
/// Same, on the largest 8-connected component.
Contour trace_boundary(const Mask& m);

/// Freeman chain length: 1 per axial step, sqrt(2) per diagonal step,
/// generalized to Euclidean length for non-adjacent consecutive points.
double chain_length(const Contour& c);

struct MaskMoments {
  double m00 = 0;                    // pixel count
  double cx = 0, cy = 0;             // centroid
  double mu20 = 0, mu02 = 0, mu11 = 0;  // central second moments (not normalized)
};

MaskMoments mask_moments(const Mask& m);

/// Major-axis orientation from second-order central moments, radians.
double major_axis_angle(const MaskMoments& mom);

}  // namespace mammoseg
