#include <doctest.h>

#include "oracle.hpp"
#include "sulva/constructions.hpp"

using namespace sulva;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Point pt(long x, long y) { return {q(x), q(y)}; }

Scalar labeled_segment_length(const Trace& trace, const std::string& label) {
    GeoEnvironment env = replay(trace);
    const Segment& s = std::get<Segment>(env.at(trace.labels.at(label)));
    return distance(s.start, s.end);
}

// Round-trips the trace through JSON before replaying, so the check also
// covers serialization.
void check_result_side(const Trace& trace, const Scalar& expected) {
    Trace reloaded = trace_from_json(trace_to_json(trace));
    CHECK(certified_equal(labeled_segment_length(reloaded, "result_side"), expected));
}

} // namespace

TEST_CASE("sum of squares: the diagonal carries both areas") {
    auto r34 = sum_of_squares_side(q(3), q(4));
    CHECK(certified_equal(r34.side, q(5)));
    check_result_side(r34.trace, r34.side);

    auto dvikarani = sum_of_squares_side(q(1), q(1));
    CHECK(certified_equal(square(dvikarani.side), q(2)));
    check_result_side(dvikarani.trace, dvikarani.side);

    auto augment = sum_of_squares_side(q(1), sqrt(q(2, 15)));
    CHECK(certified_equal(square(augment.side), q(17, 15)));

    CHECK_THROWS_AS(sum_of_squares_side(q(0), q(1)), Error);
}

TEST_CASE("difference of squares needs the larger square first") {
    auto r = difference_of_squares_side(q(13), q(12));
    CHECK(certified_equal(r.side, q(5)));
    check_result_side(r.trace, r.side);

    auto undouble = difference_of_squares_side(sqrt(q(2)), q(1));
    CHECK(certified_equal(undouble.side, q(1)));
    check_result_side(undouble.trace, undouble.side);

    CHECK_THROWS_AS(difference_of_squares_side(q(1), q(1)), Error);
    CHECK_THROWS_AS(difference_of_squares_side(q(1), q(2)), Error);
}

TEST_CASE("a rectangle squares to the side carrying its area") {
    auto r = rectangle_to_square(q(2), q(1, 2));
    CHECK(certified_equal(r.side, q(1)));
    check_result_side(r.trace, r.side);

    auto r41 = rectangle_to_square(q(4), q(1));
    CHECK(certified_equal(r41.side, q(2)));

    auto already = rectangle_to_square(q(3), q(3));
    CHECK(certified_equal(already.side, q(3)));
    check_result_side(already.trace, already.side);

    CHECK_THROWS_AS(rectangle_to_square(q(1), q(2)), Error);
    CHECK_THROWS_AS(rectangle_to_square(q(1), q(0)), Error);
}

TEST_CASE("exact area identities hold on random rational inputs") {
    auto gen = oracle::rng(1234);
    for (int i = 0; i < 200; ++i) {
        Scalar a{oracle::random_positive_rational(gen, 12)};
        Scalar b{oracle::random_positive_rational(gen, 12)};
        CHECK(certified_equal(square(sum_of_squares_side(a, b).side), square(a) + square(b)));
        Scalar big = a + b; // guaranteed larger than b
        CHECK(certified_equal(square(difference_of_squares_side(big, b).side),
                              square(big) - square(b)));
        Scalar l = a + b, w = a;
        CHECK(certified_equal(square(rectangle_to_square(l, w).side), l * w));
    }
}

TEST_CASE("the altitude construction produces sqrt(n)") {
    for (long n = 1; n <= 50; ++n) {
        auto r = sqrt_n_altitude(Rational(n));
        CHECK(certified_equal(square(r.altitude), q(n)));
        CHECK(certified_equal(r.base, q(n - 1)));
        CHECK(certified_equal(r.equal_side, q(n + 1, 2)));
        CHECK(certified_equal(labeled_segment_length(r.trace, "result_side"), r.altitude));
    }
    CHECK(*sqrt_n_altitude(Rational(4)).altitude.rational_value() == Rational(2));

    auto bracket = oracle::sqrt_bracket(7, 1, 12);
    auto r7 = sqrt_n_altitude(Rational(7));
    CHECK(compare(r7.altitude, Scalar(bracket.lower)) == CompareResult::Greater);
    CHECK(compare(r7.altitude, Scalar(bracket.upper)) == CompareResult::Less);
    CHECK(to_decimal(r7.altitude, 8) == "2.6457513");

    auto gen = oracle::rng(55);
    for (int i = 0; i < 20; ++i) {
        Rational n = Rational(1) + oracle::random_positive_rational(gen, 30);
        CHECK(certified_equal(square(sqrt_n_altitude(n).altitude), Scalar(n)));
    }

    CHECK_THROWS_AS(sqrt_n_altitude(Rational(1, 2)), Error);
    CHECK_THROWS_AS(sqrt_n_altitude(Rational(0)), Error);
}

TEST_CASE("unit augmentation scales areas exactly") {
    auto r = augment_unit(Rational(15, 2), Rational(17, 2));
    CHECK(certified_equal(square(r.scale), q(17, 15)));
    check_result_side(r.trace, r.scale);

    auto doubling = augment_unit(Rational(1), Rational(2));
    CHECK(certified_equal(doubling.scale, sqrt(q(2))));

    CHECK_THROWS_AS(augment_unit(Rational(2), Rational(1)), Error);
    CHECK_THROWS_AS(augment_unit(Rational(2), Rational(2)), Error);
    CHECK_THROWS_AS(augment_unit(Rational(0), Rational(1)), Error);
}

TEST_CASE("the dronaciti split divides a square into 1/10 and 9/10") {
    auto split = dronaciti_partition(q(1));
    CHECK(certified_equal(square(split.small_side), q(1, 10)));
    CHECK(certified_equal(square(split.large_side), q(9, 10)));
    CHECK(certified_equal(square(split.small_side) + square(split.large_side), q(1)));

    auto exact = dronaciti_partition(sqrt(q(10)));
    CHECK(*exact.small_side.rational_value() == Rational(1));
    CHECK(*exact.large_side.rational_value() == Rational(3));

    // The parts recombine to the original square.
    auto recombined = sum_of_squares_side(split.small_side, split.large_side);
    CHECK(certified_equal(recombined.side, q(1)));

    CHECK_THROWS_AS(dronaciti_partition(q(0)), Error);
}

TEST_CASE("circling the square uses radius side*(2+sqrt(2))/6") {
    auto r = circle_from_square(q(1));
    Scalar expected = (q(2) + sqrt(q(2))) / q(6);
    CHECK(certified_equal(r.radius, expected));

    auto doubled = circle_from_square(q(2));
    CHECK(certified_equal(doubled.radius, (q(2) + sqrt(q(2))) / q(3)));

    // Replay: the labeled radius segment measures the returned radius and
    // the labeled circle carries it.
    Trace reloaded = trace_from_json(trace_to_json(r.trace));
    GeoEnvironment env = replay(reloaded);
    const Segment& pr = std::get<Segment>(env.at(reloaded.labels.at("result_radius")));
    CHECK(certified_equal(distance(pr.start, pr.end), r.radius));
    const Circle& circle = std::get<Circle>(env.at(reloaded.labels.at("result_circle")));
    CHECK(certified_equal(circle.radius, r.radius));

    CHECK_THROWS_AS(circle_from_square(q(-1)), Error);
}

TEST_CASE("squaring the circle has one fine and one coarse ratio") {
    Scalar fine = square_from_circle(q(2), CircleSquaringMethod::FineBaudhayana);
    CHECK(*fine.rational_value() == Rational(9785, 5568));
    CHECK(*square_from_circle(q(1), CircleSquaringMethod::FineBaudhayana).rational_value() ==
          Rational(9785, 11136));

    Scalar coarse = square_from_circle(q(2), CircleSquaringMethod::CoarseRatio);
    CHECK(*coarse.rational_value() == Rational(26, 15));
    CHECK(*square(coarse).rational_value() == Rational(676, 225));
    CHECK(*square_from_circle(q(1), CircleSquaringMethod::CoarseRatio).rational_value() ==
          Rational(13, 15));

    CHECK_THROWS_AS(square_from_circle(q(2), CircleSquaringMethod::MaitrayaniyaRadius), Error);
    CHECK_THROWS_AS(square_from_circle(q(0), CircleSquaringMethod::CoarseRatio), Error);
}

TEST_CASE("the two circle approximations are not mutual inverses") {
    auto circ = circle_from_square(q(1));
    Scalar diameter = q(2) * circ.radius;
    Scalar back = square_from_circle(diameter, CircleSquaringMethod::FineBaudhayana);
    CHECK(compare(back, q(1)) != CompareResult::Equal);

    // The round-trip area ratio is the fixed constant 4*sigma^2*rho^2.
    Scalar sigma = q(9785, 11136);
    Scalar rho = (q(2) + sqrt(q(2))) / q(6);
    Scalar expected_ratio = q(4) * square(sigma) * square(rho);
    CHECK(certified_equal(square(back), expected_ratio));
    Interval ratio = evaluate(expected_ratio, 10);
    CHECK(ratio.entirely_above(Rational(1)));
    CHECK(ratio.entirely_below(Rational(100001, 100000)));
    CHECK(to_decimal(expected_ratio, 7) == "1.000005");
}

TEST_CASE("savisesha is the exact rational 577/408") {
    Scalar v = sqrt2_savisesha();
    CHECK(*v.rational_value() == Rational(577, 408));
    CHECK(to_decimal(v, 8) == "1.4142157");
    CHECK(compare(v, sqrt(q(2))) == CompareResult::Greater);
}

TEST_CASE("the square table lists integer and fractional sides") {
    auto rows = square_area_table(4);
    REQUIRE(rows.size() == 7);
    CHECK(*rows[1].second.rational_value() == Rational(4));
    CHECK(*rows[2].second.rational_value() == Rational(9));
    CHECK(*rows[3].second.rational_value() == Rational(16));
    CHECK(*rows[4].second.rational_value() == Rational(1, 4));
    CHECK(*rows[5].second.rational_value() == Rational(1, 9));
    CHECK(*rows[6].second.rational_value() == Rational(1, 16));
    CHECK_THROWS_AS(square_area_table(0), Error);
    CHECK_THROWS_AS(square_area_table(2, {Rational(-1, 2)}), Error);
}

TEST_CASE("the diagonal theorem holds on rational and surd rectangles") {
    CHECK(diagonal_rectangle_theorem_check(q(3), q(4)) == TheoremCheck::Holds);
    CHECK(diagonal_rectangle_theorem_check(q(1), q(1)) == TheoremCheck::Holds);
    CHECK(diagonal_rectangle_theorem_check(sqrt(q(3)), sqrt(q(5))) == TheoremCheck::Holds);
}

TEST_CASE("east-west runs through the shadow crossings") {
    Scalar half = q(1, 2);
    Point s1{sqrt(q(3)) / q(2), half};
    Point s2{q(0) - sqrt(q(3)) / q(2), half};
    auto r = east_west_from_shadow(pt(0, 0), q(1), s1, s2);
    // West first, east second; the chord runs along y = 1/2.
    CHECK(certified_sign(r.segment.start.x) < 0);
    CHECK(certified_sign(r.segment.end.x) > 0);
    CHECK(certified_equal(r.segment.start.y, half));
    CHECK(certified_equal(r.segment.end.y, half));

    auto diameter = east_west_from_shadow(pt(0, 0), q(1), pt(1, 0), pt(-1, 0));
    CHECK(certified_equal(diameter.segment.start.x, q(-1)));
    CHECK(certified_equal(diameter.segment.end.x, q(1)));

    CHECK_THROWS_AS(east_west_from_shadow(pt(0, 0), q(1), pt(2, 0), pt(-1, 0)), Error);
    CHECK_THROWS_AS(east_west_from_shadow(pt(0, 0), q(1), pt(1, 0), pt(1, 0)), Error);
}

TEST_CASE("north-south is the certified perpendicular of east-west") {
    Segment ew = make_segment(pt(0, 0), pt(2, 0));
    auto ns = north_south_perpendicular(ew);
    Point mid = pt(1, 0);
    CHECK(certified_equal(ns.segment.start.x, q(1)));
    CHECK(certified_equal(ns.segment.end.x, q(1)));
    CHECK(certified_sign(ns.segment.end.y) > 0);   // ends north
    CHECK(certified_sign(ns.segment.start.y) < 0); // starts south
    CHECK(right_angle_check(mid, ew.end, ns.segment.end) == AngleCheck::Right);

    // Applied twice: back to a line parallel to the original east-west.
    auto again = north_south_perpendicular(ns.segment);
    Scalar cross_dir = (again.segment.end.x - again.segment.start.x) * (ew.end.y - ew.start.y)
                     - (again.segment.end.y - again.segment.start.y) * (ew.end.x - ew.start.x);
    CHECK(scalar_is_zero(cross_dir));
}

TEST_CASE("the compass perpendicular stands at the given point") {
    auto r = compass_perpendicular(pt(0, 0), pt(1, 0), q(2), q(1));
    CHECK(scalar_is_zero(r.segment.start.x));
    CHECK(scalar_is_zero(r.segment.end.x));
    CHECK(certified_equal(square(r.segment.end.y), q(3)));
    CHECK(right_angle_check(pt(0, 0), pt(1, 0), r.segment.end) == AngleCheck::Right);

    CHECK_THROWS_AS(compass_perpendicular(pt(0, 0), pt(1, 0), q(1), q(1)), Error);
    CHECK_THROWS_AS(compass_perpendicular(pt(0, 0), pt(1, 0), q(1, 2), q(1)), Error);
}

TEST_CASE("nyancana rectangles are right-angled with the stated sides") {
    auto r = nyancana_rectangle(pt(0, 0), pt(1, 0), q(3), q(4), {3, 4, 5}, q(1));
    CHECK(points_equal(r.corners[0], pt(0, 0)));
    CHECK(points_equal(r.corners[1], pt(4, 0)));
    CHECK(points_equal(r.corners[2], pt(4, 3)));
    CHECK(points_equal(r.corners[3], pt(0, 3)));

    auto tall = nyancana_rectangle(pt(0, 0), pt(1, 0), q(12), q(5), {5, 12, 13}, q(1));
    CHECK(points_equal(tall.corners[2], pt(5, 12)));

    CHECK_THROWS_AS(nyancana_rectangle(pt(0, 0), pt(1, 0), q(3), q(4), {3, 4, 6}, q(1)), Error);

    for (const auto& entry : triple_catalog()) {
        auto rect = nyancana_rectangle({q(1), q(2)}, {q(2), q(3)}, q(2), q(7), entry.triple,
                                       q(1, 3));
        for (int i = 0; i < 4; ++i) {
            const Point& prev = rect.corners[(i + 3) % 4];
            const Point& here = rect.corners[i];
            const Point& next = rect.corners[(i + 1) % 4];
            CHECK(right_angle_check(here, prev, next) == AngleCheck::Right);
        }
        CHECK(certified_equal(distance(rect.corners[0], rect.corners[1]),
                              distance(rect.corners[3], rect.corners[2])));
        CHECK(certified_equal(distance(rect.corners[1], rect.corners[2]),
                              distance(rect.corners[0], rect.corners[3])));
    }
}

TEST_CASE("the triple catalog matches the texts") {
    auto catalog = triple_catalog();
    REQUIRE(catalog.size() == 5);
    for (const auto& entry : catalog) {
        CHECK(entry.triple.valid());
        CHECK(entry.triple.primitive());
        CHECK(entry.attested.count(TextTag::Baudhayana) == 1);
    }
    auto find = [&](long a, long b, long c) -> const CatalogTriple& {
        for (const auto& e : catalog)
            if (e.triple.a == a && e.triple.b == b && e.triple.c == c)
                return e;
        FAIL("triple not found");
        return catalog[0];
    };
    CHECK(find(3, 4, 5).attested.count(TextTag::Katyayana) == 1);
    CHECK(find(5, 12, 13).attested.count(TextTag::Katyayana) == 1);
    CHECK(find(8, 15, 17).attested.count(TextTag::Katyayana) == 0);
    CHECK(find(12, 35, 37).attested.count(TextTag::Katyayana) == 0);
    CHECK(find(7, 24, 25).attested.count(TextTag::Katyayana) == 0);
    CHECK(find(7, 24, 25).attested.count(TextTag::Apastamba) == 0);
    CHECK(find(8, 15, 17).attested.count(TextTag::Apastamba) == 1);
    CHECK(find(12, 35, 37).attested.count(TextTag::Apastamba) == 1);
}

TEST_CASE("construction traces replay deterministically after reload") {
    auto constructions = {
        sum_of_squares_side(q(2), q(3)).trace,
        difference_of_squares_side(q(7), q(2)).trace,
        rectangle_to_square(q(5), q(2)).trace,
        sqrt_n_altitude(Rational(11)).trace,
        circle_from_square(q(3)).trace,
        east_west_from_shadow(pt(0, 0), q(5), pt(3, 4), pt(-3, 4)).trace,
        north_south_perpendicular(make_segment(pt(0, 0), pt(4, 2))).trace,
        compass_perpendicular(pt(1, 1), pt(3, 1), q(3), q(2)).trace,
        nyancana_rectangle(pt(0, 0), pt(1, 0), q(2), q(3), {3, 4, 5}, q(1)).trace,
    };
    for (const Trace& trace : constructions) {
        CAPTURE(trace.title);
        Trace reloaded = trace_from_json(trace_to_json(trace));
        GeoEnvironment a = replay(trace);
        GeoEnvironment b = replay(reloaded);
        REQUIRE(a.size() == b.size());
        for (const auto& [name, obj] : a) {
            if (const Point* p = std::get_if<Point>(&obj))
                CHECK(points_equal(*p, std::get<Point>(b.at(name))));
        }
    }
}
