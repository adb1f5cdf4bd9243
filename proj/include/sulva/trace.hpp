#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sulva/geometry.hpp"

namespace sulva {

/// The five primitive cord-and-peg moves every construction is spelled
/// out in. A trace replays to exactly the objects it was built from.
enum class StepOp { PlacePeg, StretchCord, MarkDistance, DrawCircle, Intersect };

const char* step_op_name(StepOp op);
StepOp step_op_from_name(const std::string& name);

struct TraceStep {
    StepOp op;
    std::vector<std::string> inputs;          // names of earlier outputs
    std::vector<std::string> outputs;         // names this step defines
    std::map<std::string, std::string> params; // exact expression strings
};

using GeoObject = std::variant<Point, Segment, Circle>;
using GeoEnvironment = std::map<std::string, GeoObject>;

struct Trace {
    std::string title;
    std::vector<TraceStep> steps;
    std::map<std::string, std::string> labels; // semantic name -> object name
};

/// Executes the steps in order; every input must name an earlier output
/// and every label must name a produced object (else BadTrace).
GeoEnvironment replay(const Trace& trace);

/// JSON round-trip. Serialization carries exact coordinate expressions
/// plus a sidecar decimal rendering of every object at `decimal_precision`
/// significant digits.
std::string trace_to_json(const Trace& trace, int decimal_precision = 7);
Trace trace_from_json(const std::string& json_text);

/// Builds a trace while keeping a live environment, so constructions can
/// use the objects as they lay them down.
class TraceBuilder {
public:
    explicit TraceBuilder(std::string title) { trace_.title = std::move(title); }

    std::string peg(const std::string& name, const Point& p);
    std::string cord(const std::string& name, const std::string& from, const std::string& to);
    std::string mark(const std::string& name, const std::string& origin,
                     const std::string& toward, const Scalar& distance);
    std::string circle(const std::string& name, const std::string& center, const Scalar& radius);

    /// Intersects two named objects and binds all points, in lexicographic
    /// order, to names "<base>0", "<base>1", ...
    std::vector<std::string> intersect_all(const std::string& base, const std::string& a,
                                           const std::string& b);
    /// Intersects and keeps only the pick-th point (by the same ordering).
    std::string intersect_pick(const std::string& name, const std::string& a,
                               const std::string& b, int pick);

    void label(const std::string& semantic, const std::string& object);

    const GeoObject& object(const std::string& name) const;
    Point point(const std::string& name) const;
    Segment segment(const std::string& name) const;

    Trace take() { return std::move(trace_); }

private:
    void define(const std::string& name, GeoObject obj);
    Trace trace_;
    GeoEnvironment env_;
};

} // namespace sulva
