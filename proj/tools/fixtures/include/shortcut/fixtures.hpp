#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "shortcut/contour.hpp"
#include "shortcut/geometry.hpp"

// Synthetic silhouettes used by the tests, the benchmarks and the
// `shortcut-fixtures` generator.
namespace shortcut::fixtures {

// --- Polygons ---------------------------------------------------------------

Polygon rectangle(double x0, double y0, double x1, double y1);
Polygon regular_polygon(std::size_t sides, double radius, Point center = {0, 0}, double phase = 0);

/// Plus sign: a central square of side `arm_width` with four arms of length
/// `arm_length`, lower-left corner of the bounding box at `origin`. The four
/// inner corners are the reflex vertices.
Polygon plus_sign(double arm_width, double arm_length, Point origin = {0, 0});

/// Stem of width `stem_width` under a bar; the two reflex corners sit where
/// the stem meets the bar.
Polygon t_shape(double bar_width, double bar_height, double stem_width, double stem_height,
                Point origin = {0, 0});

/// "L": a vertical arm and a horizontal foot, one reflex corner.
Polygon l_shape(double width, double height, double thickness, Point origin = {0, 0});

/// "U": two arms on a base, two reflex corners at the bottom of the notch.
Polygon u_shape(double width, double height, double thickness, double base, Point origin = {0, 0});

/// Two circular lobes joined at a pinched neck (two reflex vertices).
Polygon dumbbell(double lobe_radius, double neck_half_width, std::size_t samples_per_lobe = 48,
                 Point center = {0, 0});

/// Star-shaped polygon with `n` vertices at jittered angles and random radii
/// in [0.35, 1] * radius; always simple.
Polygon random_star(std::mt19937_64& rng, std::size_t n, double radius, Point center = {0, 0});

/// Circle of `n` vertices with radial noise uniform in [-noise, noise].
Polygon noisy_circle(std::mt19937_64& rng, std::size_t n, double radius, double noise,
                     Point center = {0, 0});

Polygon rotated(const Polygon& poly, double angle, Point pivot);
Polygon scaled(const Polygon& poly, double factor);
Polygon translated(const Polygon& poly, Point offset);
/// Same polygon with the vertex list starting at `shift`.
Polygon rotate_start(const Polygon& poly, std::size_t shift);

// --- Masks --------------------------------------------------------------------

/// Pixel-centre membership test in mask coordinates.
using Region = std::function<bool(Point)>;

Region disk_region(Point c, double r);
Region ellipse_region(Point c, double rx, double ry, double angle = 0);
/// Thick segment with rounded ends, radius r.
Region capsule_region(Point a, Point b, double r);
/// Tapered capsule: radius ra at a, rb at b.
Region cone_region(Point a, Point b, double ra, double rb);
Region polygon_region(const Polygon& poly);
Region union_region(std::vector<Region> parts);

Mask paint(int width, int height, const Region& region);
/// Scales every coordinate of the region by `factor` about the origin.
Region scaled_region(const Region& region, double factor);

/// Polygon fixture drawn into a mask (pixel centres inside or on the edge).
Mask polygon_mask(const Polygon& poly, int width, int height);

/// The "T" silhouette, optionally with its boundary pushed in/out by uniform
/// noise in [-noise, noise] px (sampled every pixel along the outline).
Mask t_mask(double noise, std::uint64_t seed);

/// Elephant silhouette (side view: body, head, trunk, ear, four legs, tail)
/// on a 256 x 200 canvas, multiplied by `scale`.
Mask elephant_mask(double scale = 1.0);

/// Hand silhouettes for the gesture classifier.
Mask fist_mask();
Mask open_hand_mask();
Mask two_finger_mask();

struct NamedMask {
  std::string name;
  Mask mask;
};

/// Deterministic set of shapes used for evaluation sweeps: each comes with a
/// set of hand-placed annotation lines.
struct AnnotatedShape {
  std::string name;
  Mask mask;
  std::vector<Segment> lines;
};
std::vector<AnnotatedShape> annotated_suite();

/// Every mask fixture used by the end-to-end tests.
std::vector<NamedMask> mask_suite();

}  // namespace shortcut::fixtures
