#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace sulva {

/// Source texts an item (unit, triple, approximation rule) is attested in.
enum class TextTag { Baudhayana, Apastamba, Manava, Katyayana, Maitrayaniya };

using TextSet = std::set<TextTag>;

inline const char* text_tag_slug(TextTag t) {
    switch (t) {
    case TextTag::Baudhayana: return "baudhayana";
    case TextTag::Apastamba: return "apastamba";
    case TextTag::Manava: return "manava";
    case TextTag::Katyayana: return "katyayana";
    case TextTag::Maitrayaniya: return "maitrayaniya";
    }
    return "?";
}

inline const char* text_tag_display(TextTag t) {
    switch (t) {
    case TextTag::Baudhayana: return "Baudhāyana";
    case TextTag::Apastamba: return "Āpastamba";
    case TextTag::Manava: return "Mānava";
    case TextTag::Katyayana: return "Kātyāyana";
    case TextTag::Maitrayaniya: return "Maitrāyaṇīya";
    }
    return "?";
}

inline std::optional<TextTag> text_tag_from_slug(std::string_view s) {
    for (TextTag t : {TextTag::Baudhayana, TextTag::Apastamba, TextTag::Manava,
                      TextTag::Katyayana, TextTag::Maitrayaniya})
        if (s == text_tag_slug(t))
            return t;
    return std::nullopt;
}

std::string text_set_display(const TextSet& s);
std::string text_set_slugs(const TextSet& s, char sep = ';');

} // namespace sulva
