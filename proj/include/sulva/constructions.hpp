#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sulva/text_tags.hpp"
#include "sulva/trace.hpp"

namespace sulva {

struct PythagoreanTriple {
    long a = 0, b = 0, c = 0;

    bool valid() const { return a > 0 && b > 0 && c > 0 && a * a + b * b == c * c; }
    bool primitive() const;
};

struct CatalogTriple {
    PythagoreanTriple triple;
    TextSet attested;
};

/// The five triples recorded in the texts, with per-text attestation.
std::vector<CatalogTriple> triple_catalog();

struct SideResult {
    Scalar side;
    Trace trace;
};

/// Side of the square whose area is a^2 + b^2 (rectangle diagonal).
SideResult sum_of_squares_side(const Scalar& a, const Scalar& b);

/// Side of the square whose area is a^2 - b^2 (arc of radius a cutting
/// the base line); requires a > b.
SideResult difference_of_squares_side(const Scalar& a, const Scalar& b);

/// Squares a rectangle: first the difference of the squares on
/// (length+width)/2 and (length-width)/2, then the arc construction.
SideResult rectangle_to_square(const Scalar& length, const Scalar& width);

struct AltitudeResult {
    Scalar altitude;   // sqrt(n)
    Scalar base;       // n - 1
    Scalar equal_side; // (n + 1) / 2
    Trace trace;
};

/// sqrt(n) as the altitude of the isosceles triangle with base n-1 and
/// equal sides (n+1)/2 each. Requires n >= 1.
AltitudeResult sqrt_n_altitude(const Rational& n);

struct AugmentResult {
    Scalar scale;
    Trace trace;
};

/// Side scale factor turning a figure of area `area_from` into one of
/// area `area_to` (> area_from), built as the sum-of-squares combination
/// of the unit with a square of area (area_to/area_from - 1).
AugmentResult augment_unit(const Rational& area_from, const Rational& area_to);

struct DronacitiSplit {
    Scalar small_side; // area = side^2 / 10
    Scalar large_side; // area = 9 * side^2 / 10
};

DronacitiSplit dronaciti_partition(const Scalar& side);

struct CircleFromSquareResult {
    Scalar radius;
    Trace trace;
};

/// Circle with (approximately) the square's area: radius is half the
/// side plus a third of the half-diagonal's overhang, side*(2+sqrt(2))/6.
CircleFromSquareResult circle_from_square(const Scalar& side);

enum class CircleSquaringMethod { FineBaudhayana, CoarseRatio, MaitrayaniyaRadius };

const char* circle_squaring_method_name(CircleSquaringMethod m);

/// Side of the square with (approximately) the circle's area.
/// Fine: side = diameter * 9785/11136. Coarse: side = diameter * 13/15.
/// MaitrayaniyaRadius only describes the square->circle direction and is
/// rejected here (MethodMismatch).
Scalar square_from_circle(const Scalar& diameter, CircleSquaringMethod method);

/// The rational approximation of sqrt(2):
/// 1 + 1/3 + 1/(3*4) - 1/(3*4*34) = 577/408.
Scalar sqrt2_savisesha();

const std::vector<Rational>& default_square_fractions(); // 1/2, 1/3, 1/4

/// (side, area) rows for integers 1..max_n followed by the fractions.
std::vector<std::pair<Scalar, Scalar>>
square_area_table(int max_n, const std::vector<Rational>& fractions = default_square_fractions());

enum class TheoremCheck { Holds, Undecided };

/// Confirms diagonal^2 equals length^2 + width^2 on the constructed
/// rectangle, exactly.
TheoremCheck diagonal_rectangle_theorem_check(const Scalar& length, const Scalar& width);

struct ChordResult {
    Segment segment;
    Trace trace;
};

/// East-west line from the two shadow crossings on the circle around the
/// pole base. Both points must lie on the circle; the returned segment
/// runs west -> east.
ChordResult east_west_from_shadow(const Point& pole_base, const Scalar& circle_radius,
                                  const Point& shadow_crossing_1, const Point& shadow_crossing_2);

/// Perpendicular bisector of the east-west segment via the rope gesture;
/// returned segment runs south -> north relative to ew's direction.
ChordResult north_south_perpendicular(const Segment& ew);

/// The two apexes of the rope gesture on segment ab, with the cord
/// joining them; a construction-level wrapper over the geometry primitive.
struct StretchResult {
    Point apex_north, apex_south;
    Trace trace;
};
StretchResult stretch_cord_apexes(const Point& a, const Point& b,
                                  const Rational& slack = Rational(3, 4));

/// School-compass perpendicular: flank points either side of line_point,
/// arcs of arc_radius > flank_distance, chord through the two meets.
ChordResult compass_perpendicular(const Point& line_point, const Point& line_direction,
                                  const Scalar& arc_radius, const Scalar& flank_distance);

struct RectangleResult {
    std::array<Point, 4> corners; // counterclockwise from origin
    Trace trace;
};

/// Rectangle laid out with the marked-cord right angle: the triple's legs
/// (scaled by cord_scale) fix the perpendicular at origin, then the sides
/// are measured off along the two directions.
RectangleResult nyancana_rectangle(const Point& origin, const Point& east_direction,
                                   const Scalar& width, const Scalar& length,
                                   const PythagoreanTriple& triple, const Scalar& cord_scale);

} // namespace sulva
