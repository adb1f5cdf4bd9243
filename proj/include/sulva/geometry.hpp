#pragma once

#include <utility>
#include <vector>

#include "sulva/interval.hpp"
#include "sulva/scalar.hpp"

namespace sulva {

// Plane convention: +x is East, +y is North.

struct Point {
    Scalar x, y;
};

struct Segment {
    Point start, end;
};

struct Circle {
    Point center;
    Scalar radius;
};

/// Certified helpers. Comparisons that stay Undecided at the default
/// precision throw UndecidablePredicate rather than guessing.
bool points_equal(const Point& a, const Point& b);
bool scalar_is_zero(const Scalar& s);
int certified_sign(const Scalar& s);

Scalar dot(const Point& vertex, const Point& a, const Point& b);
Scalar cross(const Point& origin, const Point& a, const Point& b);
Scalar distance_squared(const Point& a, const Point& b);
Scalar distance(const Point& a, const Point& b);

/// Validated constructors: endpoints must differ, radius must be positive.
Segment make_segment(Point start, Point end);
Circle make_circle(Point center, Scalar radius);

/// Intersections treat a Segment as the full line through it. Points come
/// back in lexicographic (x, y) order; identical objects raise
/// CoincidentObjects; disjoint objects give an empty list.
std::vector<Point> intersect(const Segment& a, const Segment& b);
std::vector<Point> intersect(const Segment& line, const Circle& circle);
std::vector<Point> intersect(const Circle& circle, const Segment& line);
std::vector<Point> intersect(const Circle& a, const Circle& b);

/// The rope gesture: a cord tied at a and b, held at its midpoint and
/// pulled taut to either side. The apexes are the two points at distance
/// slack*|ab| from both ends (slack > 1/2); the line through them is the
/// perpendicular bisector of ab, which is the contract that matters.
/// Returns (north, south) relative to the a->b direction (north = left).
std::pair<Point, Point> cord_stretch_midpoint(const Point& a, const Point& b,
                                              const Rational& slack = Rational(3, 4));

/// Point on the ray origin->toward at the given distance from origin.
Point mark_on_line(const Point& origin, const Point& toward, const Scalar& distance);

enum class AngleCheck { Right, NotRight, Undecided };
AngleCheck right_angle_check(const Point& vertex, const Point& arm1, const Point& arm2);

/// Exact shoelace area, positive for counterclockwise vertex order.
Scalar area_of_polygon(const std::vector<Point>& vertices);

} // namespace sulva
