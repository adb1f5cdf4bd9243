#include "sulva/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace sulva {

Interval reference_pi(int precision_digits) {
    if (precision_digits < 1)
        precision_digits = 1;
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(precision_digits) * 10 / 3 + 64;
    Interval out;
    out.lower = BigFloat(bits);
    out.upper = BigFloat(bits);
    mpfr_const_pi(out.lower.get(), MPFR_RNDD);
    mpfr_const_pi(out.upper.get(), MPFR_RNDU);
    out.precision_digits = precision_digits;
    return out;
}

Interval reference_sqrt2(int precision_digits) {
    return evaluate(sqrt(Scalar(2)), precision_digits);
}

namespace {

Scalar implied_pi_scalar(const ApproximationRecord& record) {
    if (!record.exact_value || record.direction == RuleDirection::ScalarValue)
        fail(Errc::NotGeometric, "record '" + record.name + "' has no geometric ratio");
    const Scalar& ratio = *record.exact_value;
    if (record.direction == RuleDirection::SquareToCircle)
        return Scalar(1) / square(ratio);
    return Scalar(4) * square(ratio);
}

// Endpoint arithmetic for strictly positive enclosures.
Interval div_pos(const Interval& num, const Interval& den, int digits) {
    mpfr_prec_t bits = std::max(mpfr_get_prec(num.lower.get()), mpfr_get_prec(den.lower.get()));
    Interval out;
    out.lower = BigFloat(bits);
    out.upper = BigFloat(bits);
    mpfr_div(out.lower.get(), num.lower.get(), den.upper.get(), MPFR_RNDD);
    mpfr_div(out.upper.get(), num.upper.get(), den.lower.get(), MPFR_RNDU);
    out.precision_digits = digits;
    return out;
}

Interval sub_one(const Interval& x, int digits) {
    Interval out = x;
    mpfr_sub_ui(out.lower.get(), x.lower.get(), 1, MPFR_RNDD);
    mpfr_sub_ui(out.upper.get(), x.upper.get(), 1, MPFR_RNDU);
    out.precision_digits = digits;
    return out;
}

// Relative area error as an enclosure: square->circle rules compare the
// constructed circle against the unit square (pi/implied - 1), while
// circle->square rules compare the constructed square against the circle
// (implied/pi - 1).
Interval relative_error_interval(const ApproximationRecord& record, int digits) {
    Interval implied = evaluate(implied_pi_scalar(record), digits + 4);
    Interval pi = reference_pi(digits + 4);
    if (record.direction == RuleDirection::SquareToCircle)
        return sub_one(div_pos(pi, implied, digits), digits);
    return sub_one(div_pos(implied, pi, digits), digits);
}

} // namespace

Interval implied_pi(const ApproximationRecord& record, int precision_digits) {
    return evaluate(implied_pi_scalar(record), precision_digits);
}

ErrorReport area_error(const ApproximationRecord& record, int precision_digits) {
    ErrorReport report;
    report.record = record;
    report.reference = reference_pi(precision_digits);
    report.implied_pi = implied_pi(record, precision_digits);
    report.relative_error = relative_error_interval(record, precision_digits);
    return report;
}

ErrorReport compare_sqrt2(const Scalar& candidate, int precision_digits) {
    if (certified_sign(candidate) <= 0)
        fail(Errc::NonpositiveInput, "sqrt(2) candidate must be positive");
    Scalar root2 = sqrt(Scalar(2));
    ErrorReport report;
    report.record = ApproximationRecord{"candidate", candidate, ReferenceKind::Sqrt2,
                                        RuleDirection::ScalarValue, {}, ""};
    report.reference = reference_sqrt2(precision_digits);
    Scalar diff = candidate - root2;
    report.difference = diff;
    report.relative_error = evaluate(diff / root2, precision_digits);

    // Matching decimal places of the rounded renderings.
    std::string lhs = to_fixed(candidate, precision_digits);
    std::string rhs = to_fixed(root2, precision_digits);
    auto dot_l = lhs.find('.');
    auto dot_r = rhs.find('.');
    int agree = 0;
    if (lhs.substr(0, dot_l) == rhs.substr(0, dot_r)) {
        std::string dl = dot_l == std::string::npos ? "" : lhs.substr(dot_l + 1);
        std::string dr = dot_r == std::string::npos ? "" : rhs.substr(dot_r + 1);
        size_t n = std::min(dl.size(), dr.size());
        while (static_cast<size_t>(agree) < n && dl[agree] == dr[agree])
            ++agree;
    }
    report.agreement_digits = agree;
    return report;
}

std::vector<ApproximationRecord> builtin_catalog() {
    using T = TextTag;
    std::vector<ApproximationRecord> out;
    Scalar circling_ratio = (Scalar(2) + sqrt(Scalar(2))) / Scalar(6);
    out.push_back({"circling-rule", circling_ratio, ReferenceKind::Pi,
                   RuleDirection::SquareToCircle, {T::Baudhayana, T::Katyayana},
                   "radius = half the side plus a third of the half-diagonal overhang"});
    out.push_back({"maitrayaniya-circling", Scalar(Rational(9, 16)), ReferenceKind::Pi,
                   RuleDirection::SquareToCircle, {T::Maitrayaniya},
                   "radius = 9/16 of the side"});
    out.push_back({"manava-circling", std::nullopt, ReferenceKind::Pi,
                   RuleDirection::SquareToCircle, {T::Manava},
                   "a closer circling rule is attested; no formula recorded"});
    out.push_back({"fine-squaring",
                   square_from_circle(Scalar(1), CircleSquaringMethod::FineBaudhayana),
                   ReferenceKind::Pi, RuleDirection::CircleToSquare, {T::Baudhayana},
                   "side = diameter * 9785/11136 (four-term series)"});
    out.push_back({"coarse-squaring",
                   square_from_circle(Scalar(1), CircleSquaringMethod::CoarseRatio),
                   ReferenceKind::Pi, RuleDirection::CircleToSquare,
                   {T::Baudhayana, T::Apastamba, T::Katyayana},
                   "side = 13/15 of the diameter"});
    out.push_back({"savisesha-sqrt2", sqrt2_savisesha(), ReferenceKind::Sqrt2,
                   RuleDirection::ScalarValue, {T::Baudhayana, T::Apastamba, T::Katyayana},
                   "1 + 1/3 + 1/12 - 1/408"});
    return out;
}

ApproximationRecord babylonian_sqrt2_record() {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 7);
    return {"babylonian-sqrt2", Scalar(Rational(mpz_class(14142129), den)),
            ReferenceKind::Sqrt2, RuleDirection::ScalarValue, {},
            "sexagesimal tablet value, 1.4142129"};
}

std::vector<PythagoreanTriple> generate_triples(int limit) {
    if (limit < 5)
        fail(Errc::InvalidArgument, "triple generation needs limit >= 5");
    std::vector<PythagoreanTriple> out;
    for (long m = 2; m * m + 1 <= limit; ++m)
        for (long n = 1; n < m; ++n) {
            if (std::gcd(m, n) != 1 || (m + n) % 2 == 0)
                continue;
            long c = m * m + n * n;
            if (c > limit)
                continue;
            long a = m * m - n * n;
            long b = 2 * m * n;
            out.push_back({std::min(a, b), std::max(a, b), c});
        }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.c != y.c ? x.c < y.c : x.a < y.a;
    });
    return out;
}

std::optional<ReportFormat> report_format_from_name(const std::string& name) {
    if (name == "text")
        return ReportFormat::Text;
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    return std::nullopt;
}

namespace {

std::string pad(std::string s, size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

// Renders f(precision) down to a string until the enclosure pins every
// printed character; deterministic fallback to the tightest midpoint.
std::string settled(const std::function<Interval(int)>& make, int base_digits,
                    const std::function<std::string(const BigFloat&)>& show) {
    for (int extra : {6, 16, 32, 64}) {
        Interval iv = make(base_digits + extra);
        std::string lo = show(iv.lower);
        std::string hi = show(iv.upper);
        if (lo == hi)
            return lo;
    }
    return show(make(base_digits + 64).midpoint());
}

std::string signed_fixed(const BigFloat& f, int places) {
    std::string s = f.to_fixed(places);
    if (!s.empty() && s[0] != '-')
        s.insert(0, "+");
    return s;
}

struct ReportRow {
    std::string name;
    std::string exact;       // expression or "-"
    std::string decimal;     // ratio / candidate value
    std::string area_unit;   // circle rows
    std::string implied_pi;  // circle rows
    std::string error;       // percent for circle rows, blank for sqrt2
    std::string reference;   // sqrt2 rows
    std::string difference;  // sqrt2 rows
    std::string rel_error;   // sqrt2 rows
    std::string agree;       // sqrt2 rows
    std::string kind;
    std::string direction;
    TextSet attested;
};

ReportRow make_row(const ApproximationRecord& record, int precision) {
    ReportRow row;
    row.name = record.name;
    row.kind = record.reference_kind == ReferenceKind::Pi ? "pi" : "sqrt2";
    switch (record.direction) {
    case RuleDirection::SquareToCircle: row.direction = "square-to-circle"; break;
    case RuleDirection::CircleToSquare: row.direction = "circle-to-square"; break;
    case RuleDirection::ScalarValue: row.direction = "scalar"; break;
    }
    row.attested = record.attested_in;
    if (!record.exact_value) {
        row.exact = row.decimal = row.area_unit = row.implied_pi = row.error = "-";
        return row;
    }
    const Scalar& value = *record.exact_value;
    row.exact = value.expression_string();
    row.decimal = to_decimal(value, 8);
    if (record.reference_kind == ReferenceKind::Pi) {
        row.implied_pi = to_decimal(implied_pi_scalar(record), 8);
        // Constructed area for the unit input: pi*rho^2 for square->circle
        // (the unit square), 4*sigma^2 for circle->square (the unit-radius
        // circle; this equals the implied pi).
        if (record.direction == RuleDirection::SquareToCircle) {
            Scalar rho2 = square(value);
            row.area_unit = settled(
                [&](int d) {
                    Interval pi = reference_pi(d);
                    Interval r2 = evaluate(rho2, d);
                    Interval out = pi;
                    mpfr_mul(out.lower.get(), pi.lower.get(), r2.lower.get(), MPFR_RNDD);
                    mpfr_mul(out.upper.get(), pi.upper.get(), r2.upper.get(), MPFR_RNDU);
                    return out;
                },
                precision, [](const BigFloat& f) { return f.to_decimal(8); });
        } else {
            row.area_unit = row.implied_pi;
        }
        row.error = settled(
                        [&](int d) { return relative_error_interval(record, d); }, precision,
                        [](const BigFloat& f) {
                            BigFloat scaled = f;
                            mpfr_mul_ui(scaled.get(), scaled.get(), 100, MPFR_RNDN);
                            return signed_fixed(scaled, 2);
                        }) +
                    "%";
    } else {
        ErrorReport rep = compare_sqrt2(value, std::max(precision, 10));
        row.reference = to_decimal(sqrt(Scalar(2)), 8);
        row.difference = to_scientific(*rep.difference, 4);
        row.rel_error = to_scientific(*rep.difference / sqrt(Scalar(2)), 4);
        row.agree = std::to_string(rep.agreement_digits);
    }
    return row;
}

std::string render_text(const std::vector<ReportRow>& rows, int precision) {
    std::ostringstream out;
    out << "Sulvasutra approximation report (precision " << precision << ")\n";
    out << "\n";
    out << "circle constructions\n";
    out << "  " << pad("name", 22) << pad("ratio", 26) << pad("value", 13) << pad("area(unit)", 13)
        << pad("implied pi", 13) << pad("error", 10) << "attested\n";
    for (const auto& row : rows) {
        if (row.kind != "pi")
            continue;
        out << "  " << pad(row.name, 22) << pad(row.exact, 26) << pad(row.decimal, 13)
            << pad(row.area_unit, 13) << pad(row.implied_pi, 13) << pad(row.error, 10)
            << text_set_display(row.attested) << "\n";
    }
    out << "\n";
    out << "sqrt(2) approximations\n";
    out << "  " << pad("name", 22) << pad("value", 13) << pad("sqrt(2)", 13)
        << pad("difference", 13) << pad("rel.error", 13) << pad("agree", 7) << "attested\n";
    for (const auto& row : rows) {
        if (row.kind != "sqrt2")
            continue;
        out << "  " << pad(row.name, 22) << pad(row.decimal, 13) << pad(row.reference, 13)
            << pad(row.difference, 13) << pad(row.rel_error, 13) << pad(row.agree, 7)
            << text_set_display(row.attested) << "\n";
    }
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "name,kind,direction,exact,decimal,area_unit,implied_pi,error,"
           "sqrt2_difference,sqrt2_rel_error,agreement_digits,attested\n";
    for (const auto& row : rows) {
        out << csv_escape(row.name) << ',' << row.kind << ',' << row.direction << ','
            << csv_escape(row.exact) << ',' << row.decimal << ',' << row.area_unit << ','
            << row.implied_pi << ',' << row.error << ',' << row.difference << ','
            << row.rel_error << ',' << row.agree << ',' << text_set_slugs(row.attested) << "\n";
    }
    return out.str();
}

std::string render_json(const std::vector<ReportRow>& rows, int precision) {
    nlohmann::ordered_json doc;
    doc["precision"] = precision;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["name"] = row.name;
        r["kind"] = row.kind;
        r["direction"] = row.direction;
        r["exact"] = row.exact;
        r["decimal"] = row.decimal;
        if (row.kind == "pi") {
            r["area_unit"] = row.area_unit;
            r["implied_pi"] = row.implied_pi;
            r["error"] = row.error;
        } else {
            r["reference"] = row.reference;
            r["difference"] = row.difference;
            r["rel_error"] = row.rel_error;
            r["agreement_digits"] = row.agree;
        }
        std::vector<std::string> tags;
        for (TextTag t : row.attested)
            tags.push_back(text_tag_slug(t));
        r["attested"] = tags;
        doc["records"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string emit_error_table(const std::vector<ApproximationRecord>& records,
                             int precision_digits, ReportFormat format) {
    if (records.empty())
        fail(Errc::EmptyRecordList, "no records to report");
    std::vector<ReportRow> rows;
    rows.reserve(records.size());
    for (const auto& record : records)
        rows.push_back(make_row(record, precision_digits));
    switch (format) {
    case ReportFormat::Text: return render_text(rows, precision_digits);
    case ReportFormat::Csv: return render_csv(rows);
    case ReportFormat::Json: return render_json(rows, precision_digits);
    }
    fail(Errc::UnsupportedFormat, "unknown report format");
}

} // namespace sulva
