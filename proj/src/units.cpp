#include "sulva/units.hpp"

#include <json.hpp>

namespace sulva {

std::string text_set_display(const TextSet& s) {
    std::string out;
    for (TextTag t : s) {
        if (!out.empty())
            out += ", ";
        out += text_tag_display(t);
    }
    return out.empty() ? "-" : out;
}

std::string text_set_slugs(const TextSet& s, char sep) {
    std::string out;
    for (TextTag t : s) {
        if (!out.empty())
            out += sep;
        out += text_tag_slug(t);
    }
    return out;
}

UnitTable UnitTable::defaults() {
    using T = TextTag;
    UnitTable t;
    t.add({"aṅgula", {"angula"}, Rational(1), {T::Baudhayana, T::Apastamba, T::Manava, T::Katyayana},
           "base unit (finger); about 3/4 inch, display metadata only"});
    t.add({"tila", {}, Rational(1, 34), {T::Baudhayana}, "sesame seed; fine unit"});
    t.add({"vitasti", {}, Rational(12), {T::Katyayana}, ""});
    t.add({"prādeśa", {"pradesha", "pradesa"}, Rational(12), {T::Baudhayana}, ""});
    t.add({"pada", {}, Rational(12), {T::Katyayana}, ""});
    t.add({"bāhu", {"bahu"}, Rational(36), {T::Baudhayana}, ""});
    t.add({"yuga", {}, Rational(86), {T::Baudhayana}, ""});
    t.add({"puruṣa", {"purusha", "purusa"}, Rational(120), {T::Baudhayana, T::Katyayana}, "man-height; common large unit"});
    t.add({"īṣā", {"isha", "isa"}, Rational(188), {T::Baudhayana, T::Katyayana}, "pole; largest unit"});
    return t;
}

UnitTable UnitTable::from_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_array())
        fail(Errc::InvalidArgument, "unit table must be a JSON array");
    UnitTable t;
    for (const auto& entry : doc) {
        LengthUnit u;
        u.name = entry.at("name").get<std::string>();
        u.ratio_to_angula = Rational::parse(entry.at("ratio_to_angula").get<std::string>());
        if (!(u.ratio_to_angula > Rational(0)))
            fail(Errc::InvalidArgument, "unit '" + u.name + "' must have positive ratio");
        if (entry.contains("aliases"))
            for (const auto& a : entry["aliases"])
                u.aliases.push_back(a.get<std::string>());
        if (entry.contains("attested_in"))
            for (const auto& a : entry["attested_in"]) {
                auto tag = text_tag_from_slug(a.get<std::string>());
                if (!tag)
                    fail(Errc::InvalidArgument, "unknown text tag '" + a.get<std::string>() + "'");
                u.attested_in.insert(*tag);
            }
        if (entry.contains("note"))
            u.note = entry["note"].get<std::string>();
        t.add(std::move(u));
    }
    return t;
}

void UnitTable::add(LengthUnit u) {
    units_.push_back(std::move(u));
}

const LengthUnit& UnitTable::find(std::string_view name_or_alias) const {
    for (const auto& u : units_) {
        if (u.name == name_or_alias)
            return u;
        for (const auto& a : u.aliases)
            if (a == name_or_alias)
                return u;
    }
    fail(Errc::UnknownUnit, "no unit named '" + std::string(name_or_alias) + "'");
}

LengthQuantity UnitTable::convert(const LengthQuantity& q, std::string_view target) const {
    const LengthUnit& from = find(q.unit);
    const LengthUnit& to = find(target);
    Scalar factor{Rational(from.ratio_to_angula / to.ratio_to_angula)};
    return LengthQuantity{q.magnitude * factor, to.name};
}

} // namespace sulva
