#include "sulva/geometry.hpp"

#include <algorithm>

namespace sulva {

namespace {

int sign_of(CompareResult r) {
    switch (r) {
    case CompareResult::Less: return -1;
    case CompareResult::Greater: return 1;
    case CompareResult::Equal: return 0;
    default:
        fail(Errc::UndecidablePredicate, "comparison undecided at default precision");
    }
}

bool lex_less(const Point& a, const Point& b) {
    int cx = certified_sign(a.x - b.x);
    if (cx != 0)
        return cx < 0;
    return certified_sign(a.y - b.y) < 0;
}

void sort_points(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
}

} // namespace

int certified_sign(const Scalar& s) {
    return sign_of(compare(s, Scalar(0)));
}

bool scalar_is_zero(const Scalar& s) {
    return compare(s, Scalar(0)) == CompareResult::Equal;
}

bool points_equal(const Point& a, const Point& b) {
    return certified_equal(a.x, b.x) && certified_equal(a.y, b.y);
}

Scalar dot(const Point& vertex, const Point& a, const Point& b) {
    return (a.x - vertex.x) * (b.x - vertex.x) + (a.y - vertex.y) * (b.y - vertex.y);
}

Scalar cross(const Point& origin, const Point& a, const Point& b) {
    return (a.x - origin.x) * (b.y - origin.y) - (a.y - origin.y) * (b.x - origin.x);
}

Scalar distance_squared(const Point& a, const Point& b) {
    return square(b.x - a.x) + square(b.y - a.y);
}

Scalar distance(const Point& a, const Point& b) {
    return sqrt(distance_squared(a, b));
}

Segment make_segment(Point start, Point end) {
    if (points_equal(start, end))
        fail(Errc::CoincidentPoints, "segment endpoints coincide");
    return Segment{std::move(start), std::move(end)};
}

Circle make_circle(Point center, Scalar radius) {
    if (certified_sign(radius) <= 0)
        fail(Errc::NonpositiveInput, "circle radius must be positive");
    return Circle{std::move(center), std::move(radius)};
}

std::vector<Point> intersect(const Segment& a, const Segment& b) {
    Point d1{a.end.x - a.start.x, a.end.y - a.start.y};
    Point d2{b.end.x - b.start.x, b.end.y - b.start.y};
    Scalar denom = d1.x * d2.y - d1.y * d2.x;
    if (scalar_is_zero(denom)) {
        // Parallel. Coincident iff b.start lies on line a.
        Scalar off = (b.start.x - a.start.x) * d1.y - (b.start.y - a.start.y) * d1.x;
        if (scalar_is_zero(off))
            fail(Errc::CoincidentObjects, "lines are identical");
        return {};
    }
    Scalar t = ((b.start.x - a.start.x) * d2.y - (b.start.y - a.start.y) * d2.x) / denom;
    return {Point{a.start.x + t * d1.x, a.start.y + t * d1.y}};
}

namespace {

// Line through p with direction d against a circle; shared by the
// line/circle and circle/circle cases.
std::vector<Point> line_circle(const Point& p, const Point& d, const Circle& c) {
    Scalar qa = d.x * d.x + d.y * d.y;
    Scalar fx = p.x - c.center.x;
    Scalar fy = p.y - c.center.y;
    Scalar qb = Scalar(2) * (fx * d.x + fy * d.y);
    Scalar qc = fx * fx + fy * fy - c.radius * c.radius;
    Scalar disc = qb * qb - Scalar(4) * qa * qc;
    int s = certified_sign(disc);
    if (s < 0)
        return {};
    if (s == 0) {
        Scalar t = -qb / (Scalar(2) * qa);
        return {Point{p.x + t * d.x, p.y + t * d.y}};
    }
    Scalar root = sqrt(disc);
    Scalar t1 = (-qb - root) / (Scalar(2) * qa);
    Scalar t2 = (-qb + root) / (Scalar(2) * qa);
    std::vector<Point> out{Point{p.x + t1 * d.x, p.y + t1 * d.y},
                           Point{p.x + t2 * d.x, p.y + t2 * d.y}};
    sort_points(out);
    return out;
}

} // namespace

std::vector<Point> intersect(const Segment& line, const Circle& circle) {
    Point d{line.end.x - line.start.x, line.end.y - line.start.y};
    return line_circle(line.start, d, circle);
}

std::vector<Point> intersect(const Circle& circle, const Segment& line) {
    return intersect(line, circle);
}

std::vector<Point> intersect(const Circle& a, const Circle& b) {
    Scalar gx = Scalar(2) * (b.center.x - a.center.x);
    Scalar gy = Scalar(2) * (b.center.y - a.center.y);
    bool same_center = scalar_is_zero(gx) && scalar_is_zero(gy);
    if (same_center) {
        if (certified_equal(a.radius, b.radius))
            fail(Errc::CoincidentObjects, "circles are identical");
        return {};
    }
    // Radical line: gx*x + gy*y = k, guaranteed to hold at any common point.
    Scalar k = a.radius * a.radius - b.radius * b.radius
             + b.center.x * b.center.x - a.center.x * a.center.x
             + b.center.y * b.center.y - a.center.y * a.center.y;
    Scalar norm = gx * gx + gy * gy;
    Point p0{gx * k / norm, gy * k / norm};
    Point dir{gy, -gx};
    return line_circle(p0, dir, a);
}

std::pair<Point, Point> cord_stretch_midpoint(const Point& a, const Point& b,
                                              const Rational& slack) {
    if (points_equal(a, b))
        fail(Errc::DegenerateCord, "cord endpoints coincide");
    if (!(slack > Rational(1, 2)))
        fail(Errc::DegenerateCord, "slack factor must exceed 1/2");
    Scalar reach = Scalar(slack) * distance(a, b);
    auto apexes = intersect(Circle{a, reach}, Circle{b, reach});
    if (apexes.size() != 2)
        fail(Errc::DegenerateCord, "cord stretch produced no apex pair");
    // North apex: on the left of a->b.
    if (certified_sign(cross(a, b, apexes[0])) > 0)
        return {apexes[0], apexes[1]};
    return {apexes[1], apexes[0]};
}

Point mark_on_line(const Point& origin, const Point& toward, const Scalar& distance_along) {
    if (points_equal(origin, toward))
        fail(Errc::DegenerateDirection, "direction point coincides with origin");
    if (certified_sign(distance_along) < 0)
        fail(Errc::DegenerateDirection, "mark distance must be nonnegative");
    Scalar len = distance(origin, toward);
    Scalar t = distance_along / len;
    return Point{origin.x + t * (toward.x - origin.x), origin.y + t * (toward.y - origin.y)};
}

AngleCheck right_angle_check(const Point& vertex, const Point& arm1, const Point& arm2) {
    switch (compare(dot(vertex, arm1, arm2), Scalar(0))) {
    case CompareResult::Equal: return AngleCheck::Right;
    case CompareResult::Undecided: return AngleCheck::Undecided;
    default: return AngleCheck::NotRight;
    }
}

Scalar area_of_polygon(const std::vector<Point>& vertices) {
    if (vertices.size() < 3)
        fail(Errc::DegeneratePolygon, "polygon needs at least 3 vertices");
    Scalar twice{0};
    for (size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        twice = twice + (p.x * q.y - q.x * p.y);
    }
    return twice / Scalar(2);
}

} // namespace sulva
