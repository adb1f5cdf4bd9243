#pragma once

#include <string>
#include <vector>

#include "sulva/rational.hpp"
#include "sulva/scalar.hpp"
#include "sulva/text_tags.hpp"

namespace sulva {

/// One Vedic length unit. Ratios are exact; the metric note on the base
/// unit is display metadata and never enters computation.
struct LengthUnit {
    std::string name;                 // display form, e.g. "aṅgula"
    std::vector<std::string> aliases; // ASCII input forms, e.g. "angula"
    Rational ratio_to_angula;
    TextSet attested_in;
    std::string note;
};

struct LengthQuantity {
    Scalar magnitude;
    std::string unit; // display name
};

class UnitTable {
public:
    /// The shipped table: aṅgula, tila, vitasti, prādeśa, pada, bāhu,
    /// yuga, puruṣa, īṣā with their attested ratios.
    static UnitTable defaults();

    /// Parses a JSON array of {name, ratio_to_angula: "p/q",
    /// attested_in: [...], aliases: [...]} into a table.
    static UnitTable from_json(const std::string& json_text);

    const LengthUnit& find(std::string_view name_or_alias) const; // throws UnknownUnit
    const std::vector<LengthUnit>& units() const { return units_; }

    LengthQuantity convert(const LengthQuantity& q, std::string_view target) const;

    void add(LengthUnit u);

private:
    std::vector<LengthUnit> units_;
};

} // namespace sulva
