#include "sulva/constructions.hpp"

#include <numeric>

namespace sulva {

bool PythagoreanTriple::primitive() const {
    return valid() && std::gcd(std::gcd(a, b), c) == 1;
}

std::vector<CatalogTriple> triple_catalog() {
    using T = TextTag;
    // Baudhāyana lists all five; Kātyāyana works with the first two only;
    // Āpastamba uses four, leaving out (7,24,25).
    return {
        {{3, 4, 5}, {T::Baudhayana, T::Apastamba, T::Katyayana}},
        {{5, 12, 13}, {T::Baudhayana, T::Apastamba, T::Katyayana}},
        {{8, 15, 17}, {T::Baudhayana, T::Apastamba}},
        {{12, 35, 37}, {T::Baudhayana, T::Apastamba}},
        {{7, 24, 25}, {T::Baudhayana}},
    };
}

namespace {

void require_positive(const Scalar& v, const char* what) {
    if (certified_sign(v) <= 0)
        fail(Errc::NonpositiveInput, std::string(what) + " must be positive");
}

} // namespace

SideResult sum_of_squares_side(const Scalar& a, const Scalar& b) {
    require_positive(a, "side a");
    require_positive(b, "side b");
    // Rectangle with base a and height b; the diagonal carries the area
    // of both squares together.
    TraceBuilder tb("sum-of-squares");
    tb.peg("P", {Scalar(0), Scalar(0)});
    tb.peg("A", {a, Scalar(0)});
    tb.peg("C", {a, b});
    tb.peg("B", {Scalar(0), b});
    tb.cord("base", "P", "A");
    tb.cord("flank", "A", "C");
    std::string diag = tb.cord("diagonal", "P", "C");
    tb.label("result_side", diag);
    Scalar side = sqrt(square(a) + square(b));
    return {side, tb.take()};
}

SideResult difference_of_squares_side(const Scalar& a, const Scalar& b) {
    require_positive(b, "side b");
    if (certified_sign(a - b) <= 0)
        fail(Errc::NotLarger, "difference of squares needs a > b");
    // Stand the smaller side upright and cut the base line with an arc of
    // the larger side; the foot segment squares to a^2 - b^2.
    TraceBuilder tb("difference-of-squares");
    tb.peg("P", {Scalar(0), Scalar(0)});
    tb.peg("T", {Scalar(0), b});
    tb.peg("A", {a, Scalar(0)});
    tb.cord("base", "P", "A");
    tb.cord("upright", "P", "T");
    tb.circle("arc", "T", a);
    std::string foot = tb.intersect_pick("F", "base", "arc", 1);
    std::string res = tb.cord("foot_side", "P", foot);
    tb.label("result_side", res);
    Scalar side = sqrt(square(a) - square(b));
    return {side, tb.take()};
}

SideResult rectangle_to_square(const Scalar& length, const Scalar& width) {
    require_positive(width, "width");
    if (certified_sign(length - width) < 0)
        fail(Errc::NonpositiveInput, "length must be at least width");
    Scalar big = (length + width) / Scalar(2);
    Scalar small = (length - width) / Scalar(2);
    if (scalar_is_zero(small)) {
        // Already a square; nothing to move around.
        TraceBuilder tb("rectangle-to-square");
        tb.peg("P", {Scalar(0), Scalar(0)});
        tb.peg("A", {length, Scalar(0)});
        tb.peg("C", {length, width});
        tb.peg("B", {Scalar(0), width});
        std::string res = tb.cord("side", "P", "A");
        tb.label("result_side", res);
        return {length, tb.take()};
    }
    // Half the extra part moves around: the rectangle becomes the square
    // on (l+w)/2 minus the square on (l-w)/2.
    TraceBuilder tb("rectangle-to-square");
    tb.peg("P", {Scalar(0), Scalar(0)});
    tb.peg("A", {length, Scalar(0)});
    tb.peg("C", {length, width});
    tb.peg("B", {Scalar(0), width});
    tb.peg("M", {big, Scalar(0)});
    tb.peg("T", {Scalar(0), small});
    tb.cord("base", "P", "M");
    tb.cord("upright", "P", "T");
    tb.circle("arc", "T", big);
    std::string foot = tb.intersect_pick("F", "base", "arc", 1);
    std::string res = tb.cord("foot_side", "P", foot);
    tb.label("result_side", res);
    Scalar side = sqrt(square(big) - square(small));
    return {side, tb.take()};
}

AltitudeResult sqrt_n_altitude(const Rational& n) {
    if (n < Rational(1))
        fail(Errc::NotRealizable, "altitude construction needs n >= 1");
    Scalar base{Rational(n) - Rational(1)};
    Scalar equal_side{(Rational(n) + Rational(1)) / Rational(2)};
    Scalar altitude = sqrt(square(equal_side) - square(base / Scalar(2)));
    TraceBuilder tb("sqrt-n-altitude");
    if (n == Rational(1)) {
        // Degenerate base: the triangle collapses to the unit upright.
        tb.peg("E1", {Scalar(0), Scalar(0)});
        tb.peg("apex", {Scalar(0), Scalar(1)});
        std::string alt = tb.cord("altitude", "E1", "apex");
        tb.label("result_side", alt);
        return {altitude, base, equal_side, tb.take()};
    }
    tb.peg("E1", {Scalar(0), Scalar(0)});
    tb.peg("E2", {base, Scalar(0)});
    tb.peg("M", {base / Scalar(2), Scalar(0)});
    tb.circle("arc1", "E1", equal_side);
    tb.circle("arc2", "E2", equal_side);
    std::string apex = tb.intersect_pick("apex", "arc1", "arc2", 1);
    tb.cord("side1", "E1", apex);
    tb.cord("side2", "E2", apex);
    tb.cord("base_cord", "E1", "E2");
    std::string alt = tb.cord("altitude", "M", apex);
    tb.label("result_side", alt);
    return {altitude, base, equal_side, tb.take()};
}

AugmentResult augment_unit(const Rational& area_from, const Rational& area_to) {
    if (!(area_from > Rational(0)))
        fail(Errc::NonpositiveInput, "areas must be positive");
    if (!(area_to > area_from))
        fail(Errc::NotAugmentation, "target area must exceed source area");
    Rational ratio = area_to / area_from;
    Scalar extra = sqrt(Scalar(ratio - Rational(1)));
    SideResult sum = sum_of_squares_side(Scalar(1), extra);
    sum.trace.title = "augment-unit";
    return {sum.side, std::move(sum.trace)};
}

DronacitiSplit dronaciti_partition(const Scalar& side) {
    require_positive(side, "side");
    Scalar tenth = sqrt(Scalar(Rational(1, 10)));
    return {side * tenth, Scalar(3) * side * tenth};
}

CircleFromSquareResult circle_from_square(const Scalar& side) {
    require_positive(side, "side");
    Scalar half = side / Scalar(2);
    Scalar half_diagonal = half * sqrt(Scalar(2));
    // Half the side, plus a third of what the half-diagonal juts out.
    Scalar radius = half + (half_diagonal - half) / Scalar(3);
    TraceBuilder tb("circle-from-square");
    tb.peg("A", {-half, -half});
    tb.peg("B", {half, -half});
    tb.peg("C", {half, half});
    tb.peg("D", {-half, half});
    tb.cord("side_ab", "A", "B");
    tb.cord("side_bc", "B", "C");
    tb.cord("side_cd", "C", "D");
    tb.cord("side_da", "D", "A");
    tb.peg("P", {Scalar(0), Scalar(0)});
    tb.peg("E", {half, Scalar(0)});
    tb.cord("half_diagonal", "P", "C");
    tb.mark("Q", "P", "E", half_diagonal);
    tb.mark("R", "P", "E", radius);
    std::string pr = tb.cord("PR", "P", "R");
    std::string circle = tb.circle("circle", "P", radius);
    tb.label("result_radius", pr);
    tb.label("result_circle", circle);
    return {radius, tb.take()};
}

const char* circle_squaring_method_name(CircleSquaringMethod m) {
    switch (m) {
    case CircleSquaringMethod::FineBaudhayana: return "fine";
    case CircleSquaringMethod::CoarseRatio: return "coarse";
    case CircleSquaringMethod::MaitrayaniyaRadius: return "maitrayaniya";
    }
    return "?";
}

Scalar square_from_circle(const Scalar& diameter, CircleSquaringMethod method) {
    require_positive(diameter, "diameter");
    switch (method) {
    case CircleSquaringMethod::FineBaudhayana: {
        // 7/8 + 1/(8*29) - 1/(8*29*6) + 1/(8*29*6*8), as a ratio of the
        // diameter; sums exactly to 9785/11136.
        Scalar ratio = Scalar(Rational(7, 8)) + Scalar(Rational(1, 8 * 29))
                     - Scalar(Rational(1, 8 * 29 * 6)) + Scalar(Rational(1, 8 * 29 * 6 * 8));
        return diameter * ratio;
    }
    case CircleSquaringMethod::CoarseRatio:
        return diameter * Scalar(Rational(13, 15));
    case CircleSquaringMethod::MaitrayaniyaRadius:
        fail(Errc::MethodMismatch,
             "the 9/16 rule runs square->circle; it is catalogued, not a squaring method");
    }
    fail(Errc::InvalidArgument, "unknown circle squaring method");
}

Scalar sqrt2_savisesha() {
    return Scalar(Rational(1)) + Scalar(Rational(1, 3)) + Scalar(Rational(1, 3 * 4))
         - Scalar(Rational(1, 3 * 4 * 34));
}

const std::vector<Rational>& default_square_fractions() {
    static const std::vector<Rational> fractions{Rational(1, 2), Rational(1, 3), Rational(1, 4)};
    return fractions;
}

std::vector<std::pair<Scalar, Scalar>>
square_area_table(int max_n, const std::vector<Rational>& fractions) {
    if (max_n < 1)
        fail(Errc::InvalidArgument, "table needs max_n >= 1");
    std::vector<std::pair<Scalar, Scalar>> rows;
    for (int i = 1; i <= max_n; ++i)
        rows.emplace_back(Scalar(i), Scalar(i) * Scalar(i));
    for (const auto& f : fractions) {
        if (!(f > Rational(0)))
            fail(Errc::NonpositiveInput, "table fractions must be positive");
        rows.emplace_back(Scalar(f), Scalar(f * f));
    }
    return rows;
}

TheoremCheck diagonal_rectangle_theorem_check(const Scalar& length, const Scalar& width) {
    require_positive(length, "length");
    require_positive(width, "width");
    Point p{Scalar(0), Scalar(0)};
    Point c{length, width};
    Scalar diagonal = distance(p, c);
    switch (compare(square(diagonal), square(length) + square(width))) {
    case CompareResult::Equal: return TheoremCheck::Holds;
    case CompareResult::Undecided: return TheoremCheck::Undecided;
    default:
        // The identity is algebraic; a certified inequality would mean the
        // arithmetic itself is broken.
        fail(Errc::UndecidablePredicate, "diagonal identity came out false");
    }
}

ChordResult east_west_from_shadow(const Point& pole_base, const Scalar& circle_radius,
                                  const Point& shadow_crossing_1, const Point& shadow_crossing_2) {
    require_positive(circle_radius, "circle radius");
    Scalar r2 = square(circle_radius);
    for (const Point* p : {&shadow_crossing_1, &shadow_crossing_2})
        if (compare(distance_squared(pole_base, *p), r2) != CompareResult::Equal)
            fail(Errc::PointOffCircle, "shadow crossing does not lie on the circle");
    if (points_equal(shadow_crossing_1, shadow_crossing_2))
        fail(Errc::CoincidentPoints, "shadow crossings coincide");

    // West first, east second: order the crossings by x (then y).
    Point west = shadow_crossing_1, east = shadow_crossing_2;
    int cx = certified_sign(east.x - west.x);
    if (cx < 0 || (cx == 0 && certified_sign(east.y - west.y) < 0))
        std::swap(west, east);

    TraceBuilder tb("east-west-from-shadow");
    tb.peg("base", pole_base);
    tb.circle("pole_circle", "base", circle_radius);
    tb.peg("W", west);
    tb.peg("E", east);
    std::string chord = tb.cord("east_west", "W", "E");
    tb.label("west_point", "W");
    tb.label("east_point", "E");
    tb.label("result_line", chord);
    return {make_segment(west, east), tb.take()};
}

StretchResult stretch_cord_apexes(const Point& a, const Point& b, const Rational& slack) {
    auto [north, south] = cord_stretch_midpoint(a, b, slack);
    Scalar reach = Scalar(slack) * distance(a, b);
    TraceBuilder tb("stretch-cord-apexes");
    tb.peg("A", a);
    tb.peg("B", b);
    tb.cord("line", "A", "B");
    tb.circle("swing_a", "A", reach);
    tb.circle("swing_b", "B", reach);
    auto apexes = tb.intersect_all("apex", "swing_a", "swing_b");
    std::string cord = tb.cord("bisector", apexes[0], apexes[1]);
    // Identify which intersection came out north (lexicographic order does
    // not know about sides).
    bool first_is_north = points_equal(tb.point(apexes[0]), north);
    tb.label("apex_north", first_is_north ? apexes[0] : apexes[1]);
    tb.label("apex_south", first_is_north ? apexes[1] : apexes[0]);
    tb.label("result_line", cord);
    return {north, south, tb.take()};
}

ChordResult north_south_perpendicular(const Segment& ew) {
    StretchResult stretch = stretch_cord_apexes(ew.start, ew.end);
    stretch.trace.title = "north-south-perpendicular";
    return {make_segment(stretch.apex_south, stretch.apex_north), std::move(stretch.trace)};
}

ChordResult compass_perpendicular(const Point& line_point, const Point& line_direction,
                                  const Scalar& arc_radius, const Scalar& flank_distance) {
    require_positive(flank_distance, "flank distance");
    if (certified_sign(arc_radius - flank_distance) <= 0)
        fail(Errc::ArcsDontMeet, "arc radius must exceed the flank distance");
    if (points_equal(line_point, line_direction))
        fail(Errc::DegenerateDirection, "line direction coincides with the point");

    Point flank1 = mark_on_line(line_point, line_direction, flank_distance);
    // The opposite flank is the reflection of flank1 through line_point.
    Point flank2{Scalar(2) * line_point.x - flank1.x, Scalar(2) * line_point.y - flank1.y};

    TraceBuilder tb("compass-perpendicular");
    tb.peg("L", line_point);
    tb.peg("D", line_direction);
    tb.mark("F1", "L", "D", flank_distance);
    tb.peg("F2", flank2);
    tb.cord("line", "F1", "F2");
    tb.circle("arc1", "F1", arc_radius);
    tb.circle("arc2", "F2", arc_radius);
    auto meets = tb.intersect_all("M", "arc1", "arc2");
    std::string perp = tb.cord("perpendicular", meets[0], meets[1]);
    tb.label("result_line", perp);
    return {make_segment(tb.point(meets[0]), tb.point(meets[1])), tb.take()};
}

RectangleResult nyancana_rectangle(const Point& origin, const Point& east_direction,
                                   const Scalar& width, const Scalar& length,
                                   const PythagoreanTriple& triple, const Scalar& cord_scale) {
    if (!triple.valid())
        fail(Errc::InvalidTriple, "triple fails a^2 + b^2 = c^2");
    require_positive(width, "width");
    require_positive(length, "length");
    require_positive(cord_scale, "cord scale");
    if (points_equal(origin, east_direction))
        fail(Errc::DegenerateDirection, "east direction coincides with origin");

    Scalar leg_a = Scalar(triple.a) * cord_scale;
    Scalar leg_b = Scalar(triple.b) * cord_scale;
    Scalar hyp = Scalar(triple.c) * cord_scale;

    TraceBuilder tb("nyancana-rectangle");
    tb.peg("O", origin);
    tb.peg("E", east_direction);
    tb.mark("B", "O", "E", leg_a);
    // Marked cord: b*scale from O, c*scale from B; the meet stands
    // perpendicular over O by the converse of the diagonal relation.
    tb.circle("cord_o", "O", leg_b);
    tb.circle("cord_b", "B", hyp);
    auto meets = tb.intersect_all("meet", "cord_o", "cord_b");
    // Keep the apex on the north side of O->E.
    Point m0 = tb.point(meets[0]);
    std::string apex = meets[0];
    if (certified_sign(cross(origin, east_direction, m0)) < 0)
        apex = meets[1];
    std::string v1 = tb.mark("V1", "O", "E", length);
    std::string v3 = tb.mark("V3", "O", apex, width);
    Point pv1 = tb.point(v1);
    Point pv3 = tb.point(v3);
    Point pv2{pv1.x + pv3.x - origin.x, pv1.y + pv3.y - origin.y};
    std::string v2 = tb.peg("V2", pv2);
    tb.cord("south", "O", v1);
    tb.cord("east_side", v1, v2);
    tb.cord("north", v2, v3);
    tb.cord("west_side", v3, "O");
    tb.label("corner0", "O");
    tb.label("corner1", v1);
    tb.label("corner2", v2);
    tb.label("corner3", v3);
    return {{origin, pv1, pv2, pv3}, tb.take()};
}

} // namespace sulva
