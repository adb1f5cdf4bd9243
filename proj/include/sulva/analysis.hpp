#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sulva/constructions.hpp"
#include "sulva/interval.hpp"
#include "sulva/text_tags.hpp"

namespace sulva {

enum class ReferenceKind { Pi, Sqrt2 };
enum class RuleDirection { SquareToCircle, CircleToSquare, ScalarValue };

/// One attested approximation rule. For SquareToCircle the value is the
/// circle radius per unit square side; for CircleToSquare the square side
/// per unit circle diameter; for ScalarValue the number itself.
/// Placeholders (a rule the source names but gives no formula for) carry
/// no exact value and are skipped by the error computations.
struct ApproximationRecord {
    std::string name;
    std::optional<Scalar> exact_value;
    ReferenceKind reference_kind = ReferenceKind::Pi;
    RuleDirection direction = RuleDirection::ScalarValue;
    TextSet attested_in;
    std::string description;
};

struct ErrorReport {
    ApproximationRecord record;
    Interval reference;                  // enclosure of pi or sqrt(2)
    Interval relative_error;             // (constructed - true) / true
    std::optional<Interval> implied_pi;  // geometric rules only
    std::optional<Scalar> difference;    // sqrt2 rules: candidate - sqrt(2)
    int agreement_digits = -1;           // sqrt2 rules: matching decimal places
};

/// Certified enclosure of pi with width at most 10^(1-precision).
Interval reference_pi(int precision_digits);

/// Certified enclosure of sqrt(2).
Interval reference_sqrt2(int precision_digits);

/// The pi value a geometric rule silently assumes: 1/ratio^2 for
/// square->circle (radius per unit side), 4*ratio^2 for circle->square
/// (side per unit diameter). Throws NotGeometric for scalar records.
Interval implied_pi(const ApproximationRecord& record, int precision_digits);

/// Relative area error of a geometric rule against the true circle/square.
ErrorReport area_error(const ApproximationRecord& record, int precision_digits);

/// Comparison of a candidate sqrt(2) value against the real thing:
/// signed exact difference, relative error, and the count of leading
/// decimal places on which the rounded renderings agree.
ErrorReport compare_sqrt2(const Scalar& candidate, int precision_digits);

/// The attested rules: circling (Baudhāyana/Kātyāyana), the 9/16 radius
/// rule, the unrecorded Mānava circling (placeholder), fine and coarse
/// circle-squaring, and the saviśeṣa sqrt(2) value.
std::vector<ApproximationRecord> builtin_catalog();

/// The Babylonian sexagesimal sqrt(2) value 1.4142129, for comparison rows.
ApproximationRecord babylonian_sqrt2_record();

/// All primitive triples with hypotenuse <= limit, ordered by (c, a).
std::vector<PythagoreanTriple> generate_triples(int limit);

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> report_format_from_name(const std::string& name);

/// Deterministic report over the given records; byte-stable for fixed
/// inputs. Throws EmptyRecordList for an empty record set.
std::string emit_error_table(const std::vector<ApproximationRecord>& records,
                             int precision_digits, ReportFormat format);

} // namespace sulva
