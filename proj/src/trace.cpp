#include "sulva/trace.hpp"

#include <json.hpp>

#include "sulva/expr_parse.hpp"

namespace sulva {

const char* step_op_name(StepOp op) {
    switch (op) {
    case StepOp::PlacePeg: return "place-peg";
    case StepOp::StretchCord: return "stretch-cord";
    case StepOp::MarkDistance: return "mark-distance";
    case StepOp::DrawCircle: return "draw-circle";
    case StepOp::Intersect: return "intersect";
    }
    return "?";
}

StepOp step_op_from_name(const std::string& name) {
    for (StepOp op : {StepOp::PlacePeg, StepOp::StretchCord, StepOp::MarkDistance,
                      StepOp::DrawCircle, StepOp::Intersect})
        if (name == step_op_name(op))
            return op;
    fail(Errc::BadTrace, "unknown step op '" + name + "'");
}

namespace {

const std::string& param(const TraceStep& step, const std::string& key) {
    auto it = step.params.find(key);
    if (it == step.params.end())
        fail(Errc::BadTrace, std::string(step_op_name(step.op)) + " step missing param '" + key + "'");
    return it->second;
}

const GeoObject& lookup(const GeoEnvironment& env, const std::string& name) {
    auto it = env.find(name);
    if (it == env.end())
        fail(Errc::BadTrace, "step references undefined object '" + name + "'");
    return it->second;
}

Point as_point(const GeoObject& obj, const std::string& name) {
    if (const Point* p = std::get_if<Point>(&obj))
        return *p;
    fail(Errc::BadTrace, "object '" + name + "' is not a point");
}

std::vector<Point> run_intersection(const GeoObject& a, const GeoObject& b) {
    if (const Segment* sa = std::get_if<Segment>(&a)) {
        if (const Segment* sb = std::get_if<Segment>(&b))
            return intersect(*sa, *sb);
        if (const Circle* cb = std::get_if<Circle>(&b))
            return intersect(*sa, *cb);
    }
    if (const Circle* ca = std::get_if<Circle>(&a)) {
        if (const Segment* sb = std::get_if<Segment>(&b))
            return intersect(*ca, *sb);
        if (const Circle* cb = std::get_if<Circle>(&b))
            return intersect(*ca, *cb);
    }
    fail(Errc::BadTrace, "intersect inputs must be segments or circles");
}

void execute_step(const TraceStep& step, GeoEnvironment& env) {
    auto expect_outputs = [&](size_t n) {
        if (step.outputs.size() != n)
            fail(Errc::BadTrace, std::string(step_op_name(step.op)) + " step output count mismatch");
    };
    switch (step.op) {
    case StepOp::PlacePeg: {
        expect_outputs(1);
        Point p{parse_expression(param(step, "x")), parse_expression(param(step, "y"))};
        env[step.outputs[0]] = p;
        break;
    }
    case StepOp::StretchCord: {
        expect_outputs(1);
        if (step.inputs.size() != 2)
            fail(Errc::BadTrace, "stretch-cord needs two input pegs");
        Point a = as_point(lookup(env, step.inputs[0]), step.inputs[0]);
        Point b = as_point(lookup(env, step.inputs[1]), step.inputs[1]);
        env[step.outputs[0]] = make_segment(a, b);
        break;
    }
    case StepOp::MarkDistance: {
        expect_outputs(1);
        if (step.inputs.size() != 2)
            fail(Errc::BadTrace, "mark-distance needs origin and direction pegs");
        Point origin = as_point(lookup(env, step.inputs[0]), step.inputs[0]);
        Point toward = as_point(lookup(env, step.inputs[1]), step.inputs[1]);
        env[step.outputs[0]] = mark_on_line(origin, toward, parse_expression(param(step, "distance")));
        break;
    }
    case StepOp::DrawCircle: {
        expect_outputs(1);
        if (step.inputs.size() != 1)
            fail(Errc::BadTrace, "draw-circle needs a center peg");
        Point center = as_point(lookup(env, step.inputs[0]), step.inputs[0]);
        env[step.outputs[0]] = make_circle(center, parse_expression(param(step, "radius")));
        break;
    }
    case StepOp::Intersect: {
        if (step.inputs.size() != 2)
            fail(Errc::BadTrace, "intersect needs two input objects");
        auto points = run_intersection(lookup(env, step.inputs[0]), lookup(env, step.inputs[1]));
        const std::string& pick = param(step, "pick");
        if (pick == "all") {
            expect_outputs(points.size());
            for (size_t i = 0; i < points.size(); ++i)
                env[step.outputs[i]] = points[i];
        } else {
            expect_outputs(1);
            size_t index = static_cast<size_t>(std::stol(pick));
            if (index >= points.size())
                fail(Errc::BadTrace, "intersection pick out of range");
            env[step.outputs[0]] = points[index];
        }
        break;
    }
    }
}

} // namespace

GeoEnvironment replay(const Trace& trace) {
    GeoEnvironment env;
    for (const auto& step : trace.steps) {
        for (const auto& in : step.inputs)
            lookup(env, in);
        for (const auto& out : step.outputs)
            if (env.count(out))
                fail(Errc::BadTrace, "step redefines object '" + out + "'");
        execute_step(step, env);
    }
    for (const auto& [semantic, object] : trace.labels)
        if (!env.count(object))
            fail(Errc::BadTrace, "label '" + semantic + "' names missing object '" + object + "'");
    return env;
}

std::string trace_to_json(const Trace& trace, int decimal_precision) {
    nlohmann::ordered_json doc;
    doc["title"] = trace.title;
    doc["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : trace.steps) {
        nlohmann::ordered_json s;
        s["op"] = step_op_name(step.op);
        s["inputs"] = step.inputs;
        s["outputs"] = step.outputs;
        s["params"] = step.params;
        doc["steps"].push_back(std::move(s));
    }
    doc["labels"] = trace.labels;

    // Sidecar decimals: informational only, ignored on reload.
    GeoEnvironment env = replay(trace);
    nlohmann::ordered_json approx;
    for (const auto& [name, obj] : env) {
        nlohmann::ordered_json o;
        if (const Point* p = std::get_if<Point>(&obj)) {
            o["type"] = "point";
            o["x"] = to_decimal(p->x, decimal_precision);
            o["y"] = to_decimal(p->y, decimal_precision);
        } else if (const Segment* s = std::get_if<Segment>(&obj)) {
            o["type"] = "segment";
            o["x1"] = to_decimal(s->start.x, decimal_precision);
            o["y1"] = to_decimal(s->start.y, decimal_precision);
            o["x2"] = to_decimal(s->end.x, decimal_precision);
            o["y2"] = to_decimal(s->end.y, decimal_precision);
        } else if (const Circle* c = std::get_if<Circle>(&obj)) {
            o["type"] = "circle";
            o["cx"] = to_decimal(c->center.x, decimal_precision);
            o["cy"] = to_decimal(c->center.y, decimal_precision);
            o["r"] = to_decimal(c->radius, decimal_precision);
        }
        approx[name] = std::move(o);
    }
    doc["approx"] = std::move(approx);
    doc["decimal_precision"] = decimal_precision;
    return doc.dump(2) + "\n";
}

Trace trace_from_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    Trace trace;
    trace.title = doc.value("title", "");
    for (const auto& s : doc.at("steps")) {
        TraceStep step;
        step.op = step_op_from_name(s.at("op").get<std::string>());
        for (const auto& in : s.at("inputs"))
            step.inputs.push_back(in.get<std::string>());
        for (const auto& out : s.at("outputs"))
            step.outputs.push_back(out.get<std::string>());
        for (const auto& [k, v] : s.at("params").items())
            step.params[k] = v.get<std::string>();
        trace.steps.push_back(std::move(step));
    }
    if (doc.contains("labels"))
        for (const auto& [k, v] : doc["labels"].items())
            trace.labels[k] = v.get<std::string>();
    return trace;
}

void TraceBuilder::define(const std::string& name, GeoObject obj) {
    if (env_.count(name))
        fail(Errc::BadTrace, "trace object '" + name + "' defined twice");
    env_.emplace(name, std::move(obj));
}

std::string TraceBuilder::peg(const std::string& name, const Point& p) {
    trace_.steps.push_back({StepOp::PlacePeg, {}, {name},
                            {{"x", p.x.expression_string()}, {"y", p.y.expression_string()}}});
    define(name, p);
    return name;
}

std::string TraceBuilder::cord(const std::string& name, const std::string& from,
                               const std::string& to) {
    Segment s = make_segment(point(from), point(to));
    trace_.steps.push_back({StepOp::StretchCord, {from, to}, {name}, {}});
    define(name, s);
    return name;
}

std::string TraceBuilder::mark(const std::string& name, const std::string& origin,
                               const std::string& toward, const Scalar& distance) {
    Point p = mark_on_line(point(origin), point(toward), distance);
    trace_.steps.push_back({StepOp::MarkDistance, {origin, toward}, {name},
                            {{"distance", distance.expression_string()}}});
    define(name, p);
    return name;
}

std::string TraceBuilder::circle(const std::string& name, const std::string& center,
                                 const Scalar& radius) {
    Circle c = make_circle(point(center), radius);
    trace_.steps.push_back({StepOp::DrawCircle, {center}, {name},
                            {{"radius", radius.expression_string()}}});
    define(name, c);
    return name;
}

std::vector<std::string> TraceBuilder::intersect_all(const std::string& base,
                                                     const std::string& a,
                                                     const std::string& b) {
    auto points = run_intersection(object(a), object(b));
    std::vector<std::string> names;
    for (size_t i = 0; i < points.size(); ++i) {
        names.push_back(base + std::to_string(i));
        define(names.back(), points[i]);
    }
    trace_.steps.push_back({StepOp::Intersect, {a, b}, names, {{"pick", "all"}}});
    return names;
}

std::string TraceBuilder::intersect_pick(const std::string& name, const std::string& a,
                                         const std::string& b, int pick) {
    auto points = run_intersection(object(a), object(b));
    if (pick < 0 || static_cast<size_t>(pick) >= points.size())
        fail(Errc::BadTrace, "intersection pick out of range");
    trace_.steps.push_back({StepOp::Intersect, {a, b}, {name},
                            {{"pick", std::to_string(pick)}}});
    define(name, points[static_cast<size_t>(pick)]);
    return name;
}

void TraceBuilder::label(const std::string& semantic, const std::string& object_name) {
    if (!env_.count(object_name))
        fail(Errc::BadTrace, "label references undefined object '" + object_name + "'");
    trace_.labels[semantic] = object_name;
}

const GeoObject& TraceBuilder::object(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end())
        fail(Errc::BadTrace, "no trace object named '" + name + "'");
    return it->second;
}

Point TraceBuilder::point(const std::string& name) const {
    return as_point(object(name), name);
}

Segment TraceBuilder::segment(const std::string& name) const {
    if (const Segment* s = std::get_if<Segment>(&object(name)))
        return *s;
    fail(Errc::BadTrace, "object '" + name + "' is not a segment");
}

} // namespace sulva
