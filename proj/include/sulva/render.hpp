#pragma once

#include <string>
#include <vector>

#include "sulva/trace.hpp"

namespace sulva {

/// Figure styling. Objects named by a trace label are drawn with the
/// thick result stroke, auxiliary objects thin, matching the source
/// figures' convention. +y (North) renders upward.
struct RenderSpec {
    int width = 480;
    int height = 480;
    bool decimal_labels = false;
    int label_precision = 7;
    std::string thin_style = "stroke:#888888;stroke-width:1;fill:none";
    std::string thick_style = "stroke:#000000;stroke-width:3;fill:none";
    std::string peg_style = "fill:#000000";
};

/// Deterministic SVG 1.1 document; traces are laid out left to right.
/// Throws EmptyTraceSet when no traces are given.
std::string render_svg(const std::vector<Trace>& traces, const RenderSpec& spec = {});

} // namespace sulva
