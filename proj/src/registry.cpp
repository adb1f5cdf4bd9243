#include "sulva/registry.hpp"

#include <sstream>

namespace sulva {

const Scalar* OpResult::find_scalar(std::string_view name) const {
    for (const auto& [n, v] : scalars)
        if (n == name)
            return &v;
    return nullptr;
}

namespace {

template <typename Map>
const auto& fetch(const Map& map, const std::string& name, const char* kind) {
    auto it = map.find(name);
    if (it == map.end())
        fail(Errc::InvalidArgument, std::string("missing ") + kind + " argument '" + name + "'");
    return it->second;
}

} // namespace

const Scalar& Arguments::scalar(const std::string& name) const { return fetch(scalars, name, "scalar"); }
long Arguments::integer(const std::string& name) const { return fetch(ints, name, "integer"); }
const Rational& Arguments::rational(const std::string& name) const { return fetch(rationals, name, "rational"); }
const std::string& Arguments::method(const std::string& name) const { return fetch(methods, name, "method"); }
const std::vector<Scalar>& Arguments::list(const std::string& name) const { return fetch(lists, name, "list"); }

const ParamSpec* OpSpec::find_param(std::string_view pname) const {
    for (const auto& p : params)
        if (p.name == pname)
            return &p;
    return nullptr;
}

void bind_argument(Arguments& args, const ParamSpec& param, const std::string& text,
                   const NameResolver& resolver) {
    switch (param.kind) {
    case ParamKind::ScalarExpr:
        args.scalars[param.name] = parse_expression(text, resolver);
        break;
    case ParamKind::Int: {
        Scalar v = parse_expression(text, resolver);
        auto q = v.rational_value();
        if (!q || !q->is_integer())
            fail(Errc::InvalidArgument, "argument '" + param.name + "' must be an integer");
        args.ints[param.name] = static_cast<long>(q->numerator().get_si());
        break;
    }
    case ParamKind::RationalNum: {
        Scalar v = parse_expression(text, resolver);
        auto q = v.rational_value();
        if (!q)
            fail(Errc::InvalidArgument, "argument '" + param.name + "' must be rational");
        args.rationals[param.name] = *q;
        break;
    }
    case ParamKind::Method:
        args.methods[param.name] = text;
        break;
    case ParamKind::ScalarList: {
        // Comma-separated expressions, optionally in [brackets].
        std::string body = text;
        if (!body.empty() && body.front() == '[') {
            if (body.back() != ']')
                fail(Errc::InvalidArgument, "list argument '" + param.name + "' missing ']'");
            body = body.substr(1, body.size() - 2);
        }
        std::vector<Scalar> items;
        size_t start = 0;
        int depth = 0;
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i < body.size() && (body[i] == '(')) ++depth;
            if (i < body.size() && (body[i] == ')')) --depth;
            if (i == body.size() || (body[i] == ',' && depth == 0)) {
                std::string piece = body.substr(start, i - start);
                if (piece.find_first_not_of(" \t") != std::string::npos)
                    items.push_back(parse_expression(piece, resolver));
                start = i + 1;
            }
        }
        args.lists[param.name] = std::move(items);
        break;
    }
    }
}

OpResult invoke_operation(const OpSpec& op, Arguments args, int precision) {
    for (const auto& param : op.params) {
        bool present = args.scalars.count(param.name) || args.ints.count(param.name) ||
                       args.rationals.count(param.name) || args.methods.count(param.name) ||
                       args.lists.count(param.name);
        if (present)
            continue;
        if (param.required)
            fail(Errc::InvalidArgument,
                 "operation '" + op.name + "' needs argument '" + param.name + "'");
        if (!param.default_text.empty() || param.kind == ParamKind::ScalarList)
            bind_argument(args, param, param.default_text, {});
    }
    return op.invoke(args, precision);
}

namespace {

CircleSquaringMethod parse_method(const std::string& name) {
    if (name == "fine")
        return CircleSquaringMethod::FineBaudhayana;
    if (name == "coarse")
        return CircleSquaringMethod::CoarseRatio;
    if (name == "maitrayaniya")
        return CircleSquaringMethod::MaitrayaniyaRadius;
    fail(Errc::InvalidArgument,
         "unknown squaring method '" + name + "' (fine, coarse, maitrayaniya)");
}

std::vector<OpSpec> build_registry() {
    std::vector<OpSpec> ops;

    ops.push_back({"square-area-table",
                   "exact squares for integer sides 1..max-n and select fractions",
                   {{"max-n", ParamKind::Int, false, "4"},
                    {"fractions", ParamKind::ScalarList, false, "[1/2, 1/3, 1/4]"}},
                   [](const Arguments& a, int) {
                       std::vector<Rational> fractions;
                       for (const auto& f : a.list("fractions")) {
                           auto q = f.rational_value();
                           if (!q)
                               fail(Errc::InvalidArgument, "fractions must be rational");
                           fractions.push_back(*q);
                       }
                       OpResult out;
                       for (const auto& [side, area] :
                            square_area_table(static_cast<int>(a.integer("max-n")), fractions))
                           out.notes.push_back("square on " + side.expression_string() + " is " +
                                               area.expression_string());
                       return out;
                   }});

    ops.push_back({"east-west-from-shadow",
                   "east-west line through the two shadow crossings on the pole circle",
                   {{"base-x", ParamKind::ScalarExpr, false, "0"},
                    {"base-y", ParamKind::ScalarExpr, false, "0"},
                    {"radius", ParamKind::ScalarExpr},
                    {"s1-x", ParamKind::ScalarExpr},
                    {"s1-y", ParamKind::ScalarExpr},
                    {"s2-x", ParamKind::ScalarExpr},
                    {"s2-y", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = east_west_from_shadow(
                           {a.scalar("base-x"), a.scalar("base-y")}, a.scalar("radius"),
                           {a.scalar("s1-x"), a.scalar("s1-y")},
                           {a.scalar("s2-x"), a.scalar("s2-y")});
                       OpResult out;
                       out.points.emplace_back("west", r.segment.start);
                       out.points.emplace_back("east", r.segment.end);
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"north-south-perpendicular",
                   "perpendicular bisector of an east-west segment by the rope gesture",
                   {{"ax", ParamKind::ScalarExpr},
                    {"ay", ParamKind::ScalarExpr},
                    {"bx", ParamKind::ScalarExpr},
                    {"by", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       Segment ew = make_segment({a.scalar("ax"), a.scalar("ay")},
                                                 {a.scalar("bx"), a.scalar("by")});
                       auto r = north_south_perpendicular(ew);
                       OpResult out;
                       out.points.emplace_back("south", r.segment.start);
                       out.points.emplace_back("north", r.segment.end);
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"cord-stretch-midpoint",
                   "the two apexes reached by stretching the tied cord to either side",
                   {{"ax", ParamKind::ScalarExpr},
                    {"ay", ParamKind::ScalarExpr},
                    {"bx", ParamKind::ScalarExpr},
                    {"by", ParamKind::ScalarExpr},
                    {"slack", ParamKind::RationalNum, false, "3/4"}},
                   [](const Arguments& a, int) {
                       auto r = stretch_cord_apexes({a.scalar("ax"), a.scalar("ay")},
                                                    {a.scalar("bx"), a.scalar("by")},
                                                    a.rational("slack"));
                       OpResult out;
                       out.points.emplace_back("apex-north", r.apex_north);
                       out.points.emplace_back("apex-south", r.apex_south);
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"compass-perpendicular",
                   "perpendicular at a point of a line from two flanking arcs",
                   {{"px", ParamKind::ScalarExpr},
                    {"py", ParamKind::ScalarExpr},
                    {"dx", ParamKind::ScalarExpr},
                    {"dy", ParamKind::ScalarExpr},
                    {"radius", ParamKind::ScalarExpr},
                    {"flank", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = compass_perpendicular({a.scalar("px"), a.scalar("py")},
                                                      {a.scalar("dx"), a.scalar("dy")},
                                                      a.scalar("radius"), a.scalar("flank"));
                       OpResult out;
                       out.points.emplace_back("foot1", r.segment.start);
                       out.points.emplace_back("foot2", r.segment.end);
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"nyancana-rectangle",
                   "rectangle from the marked-cord right angle of a Pythagorean triple",
                   {{"width", ParamKind::ScalarExpr},
                    {"length", ParamKind::ScalarExpr},
                    {"a", ParamKind::Int, false, "3"},
                    {"b", ParamKind::Int, false, "4"},
                    {"c", ParamKind::Int, false, "5"},
                    {"scale", ParamKind::ScalarExpr, false, "1"},
                    {"origin-x", ParamKind::ScalarExpr, false, "0"},
                    {"origin-y", ParamKind::ScalarExpr, false, "0"},
                    {"east-x", ParamKind::ScalarExpr, false, "1"},
                    {"east-y", ParamKind::ScalarExpr, false, "0"}},
                   [](const Arguments& a, int) {
                       PythagoreanTriple triple{a.integer("a"), a.integer("b"), a.integer("c")};
                       auto r = nyancana_rectangle({a.scalar("origin-x"), a.scalar("origin-y")},
                                                   {a.scalar("east-x"), a.scalar("east-y")},
                                                   a.scalar("width"), a.scalar("length"), triple,
                                                   a.scalar("scale"));
                       OpResult out;
                       for (size_t i = 0; i < r.corners.size(); ++i)
                           out.points.emplace_back("corner" + std::to_string(i), r.corners[i]);
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"triple-catalog",
                   "the five attested Pythagorean triples and who records them",
                   {},
                   [](const Arguments&, int) {
                       OpResult out;
                       for (const auto& entry : triple_catalog()) {
                           std::ostringstream line;
                           line << "(" << entry.triple.a << ", " << entry.triple.b << ", "
                                << entry.triple.c << ")  " << text_set_display(entry.attested);
                           out.notes.push_back(line.str());
                       }
                       return out;
                   }});

    ops.push_back({"sum-of-squares",
                   "side of the square holding the areas of both given squares",
                   {{"a", ParamKind::ScalarExpr}, {"b", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = sum_of_squares_side(a.scalar("a"), a.scalar("b"));
                       OpResult out;
                       out.scalars.emplace_back("side", r.side);
                       out.primary = "side";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"difference-of-squares",
                   "side of the square holding the difference of the given areas",
                   {{"a", ParamKind::ScalarExpr}, {"b", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = difference_of_squares_side(a.scalar("a"), a.scalar("b"));
                       OpResult out;
                       out.scalars.emplace_back("side", r.side);
                       out.primary = "side";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"rectangle-to-square",
                   "side of the square with the rectangle's area",
                   {{"length", ParamKind::ScalarExpr}, {"width", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = rectangle_to_square(a.scalar("length"), a.scalar("width"));
                       OpResult out;
                       out.scalars.emplace_back("side", r.side);
                       out.primary = "side";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"sqrt-n-altitude",
                   "sqrt(n) as the altitude of the isosceles triangle on base n-1",
                   {{"n", ParamKind::RationalNum}},
                   [](const Arguments& a, int) {
                       auto r = sqrt_n_altitude(a.rational("n"));
                       OpResult out;
                       out.scalars.emplace_back("altitude", r.altitude);
                       out.scalars.emplace_back("base", r.base);
                       out.scalars.emplace_back("equal-side", r.equal_side);
                       out.primary = "altitude";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"augment-unit",
                   "unit scale factor taking a figure from one area to a larger one",
                   {{"area-from", ParamKind::RationalNum}, {"area-to", ParamKind::RationalNum}},
                   [](const Arguments& a, int) {
                       auto r = augment_unit(a.rational("area-from"), a.rational("area-to"));
                       OpResult out;
                       out.scalars.emplace_back("scale", r.scale);
                       out.primary = "scale";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"dronaciti-partition",
                   "sides of the 1/10 and 9/10 squares a square splits into",
                   {{"side", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = dronaciti_partition(a.scalar("side"));
                       OpResult out;
                       out.scalars.emplace_back("small-side", r.small_side);
                       out.scalars.emplace_back("large-side", r.large_side);
                       return out;
                   }});

    ops.push_back({"circle-from-square",
                   "circle with (approximately) the square's area",
                   {{"side", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       auto r = circle_from_square(a.scalar("side"));
                       OpResult out;
                       out.scalars.emplace_back("radius", r.radius);
                       out.primary = "radius";
                       out.traces.push_back(std::move(r.trace));
                       return out;
                   }});

    ops.push_back({"square-from-circle",
                   "side of the square with (approximately) the circle's area",
                   {{"diameter", ParamKind::ScalarExpr},
                    {"method", ParamKind::Method, false, "fine"}},
                   [](const Arguments& a, int) {
                       Scalar side = square_from_circle(a.scalar("diameter"),
                                                        parse_method(a.method("method")));
                       OpResult out;
                       out.scalars.emplace_back("side", side);
                       out.primary = "side";
                       return out;
                   }});

    ops.push_back({"sqrt2-savisesha",
                   "the rational sqrt(2) rule 1 + 1/3 + 1/12 - 1/408",
                   {},
                   [](const Arguments&, int) {
                       OpResult out;
                       out.scalars.emplace_back("value", sqrt2_savisesha());
                       out.primary = "value";
                       return out;
                   }});

    ops.push_back({"diagonal-theorem-check",
                   "the diagonal of a rectangle carries the areas of both sides",
                   {{"length", ParamKind::ScalarExpr}, {"width", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int) {
                       Scalar l = a.scalar("length");
                       Scalar w = a.scalar("width");
                       TheoremCheck check = diagonal_rectangle_theorem_check(l, w);
                       OpResult out;
                       out.scalars.emplace_back("diagonal", sqrt(square(l) + square(w)));
                       out.primary = "diagonal";
                       out.notes.push_back(check == TheoremCheck::Holds ? "Holds" : "Undecided");
                       return out;
                   }});

    ops.push_back({"compare-sqrt2",
                   "difference, relative error and matching decimals against sqrt(2)",
                   {{"candidate", ParamKind::ScalarExpr}},
                   [](const Arguments& a, int precision) {
                       ErrorReport rep = compare_sqrt2(a.scalar("candidate"), precision);
                       OpResult out;
                       out.scalars.emplace_back("difference", *rep.difference);
                       out.scalars.emplace_back("relative-error", *rep.difference / sqrt(Scalar(2)));
                       out.scalars.emplace_back("agreement-digits", Scalar(rep.agreement_digits));
                       out.primary = "difference";
                       out.notes.push_back("agreement_digits = " +
                                           std::to_string(rep.agreement_digits));
                       return out;
                   }});

    return ops;
}

} // namespace

const std::vector<OpSpec>& operation_registry() {
    static const std::vector<OpSpec> registry = build_registry();
    return registry;
}

const OpSpec* find_operation(std::string_view name) {
    for (const auto& op : operation_registry())
        if (op.name == name)
            return &op;
    return nullptr;
}

} // namespace sulva
