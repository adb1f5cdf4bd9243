#pragma once

#include <stdexcept>
#include <string>

namespace sulva {

// Every failure mode of the engine carries one of these codes so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class Errc {
    DivisionByZero,
    NegativeRadicand,
    UndecidablePredicate,
    UnknownUnit,
    CoincidentObjects,
    CoincidentPoints,
    DegenerateCord,
    DegenerateDirection,
    DegeneratePolygon,
    PointOffCircle,
    ArcsDontMeet,
    InvalidTriple,
    NonpositiveInput,
    NotLarger,
    NotRealizable,
    NotAugmentation,
    MethodMismatch,
    NotGeometric,
    EmptyTraceSet,
    EmptyRecordList,
    UnsupportedFormat,
    InvalidArgument,
    BadTrace,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::UndecidablePredicate: return "UndecidablePredicate";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::CoincidentObjects: return "CoincidentObjects";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::DegenerateCord: return "DegenerateCord";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::DegeneratePolygon: return "DegeneratePolygon";
    case Errc::PointOffCircle: return "PointOffCircle";
    case Errc::ArcsDontMeet: return "ArcsDontMeet";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::NonpositiveInput: return "NonpositiveInput";
    case Errc::NotLarger: return "NotLarger";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::NotAugmentation: return "NotAugmentation";
    case Errc::MethodMismatch: return "MethodMismatch";
    case Errc::NotGeometric: return "NotGeometric";
    case Errc::EmptyTraceSet: return "EmptyTraceSet";
    case Errc::EmptyRecordList: return "EmptyRecordList";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BadTrace: return "BadTrace";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace sulva
