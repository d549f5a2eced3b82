#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace semidx {

enum class Pos : std::uint8_t { Noun = 0, Verb = 1, Adjective = 2, Adverb = 3 };

inline constexpr std::array<Pos, 4> kAllPos = {Pos::Noun, Pos::Verb, Pos::Adjective,
                                               Pos::Adverb};

constexpr std::size_t pos_index(Pos p) { return static_cast<std::size_t>(p); }

constexpr char pos_letter(Pos p) {
    switch (p) {
        case Pos::Noun: return 'n';
        case Pos::Verb: return 'v';
        case Pos::Adjective: return 'a';
        case Pos::Adverb: return 'r';
    }
    return '?';
}

/// 's' (adjective satellite) maps onto Adjective.
constexpr std::optional<Pos> pos_from_letter(char c) {
    switch (c) {
        case 'n': return Pos::Noun;
        case 'v': return Pos::Verb;
        case 'a':
        case 's': return Pos::Adjective;
        case 'r': return Pos::Adverb;
        default: return std::nullopt;
    }
}

constexpr std::string_view pos_name(Pos p) {
    switch (p) {
        case Pos::Noun: return "noun";
        case Pos::Verb: return "verb";
        case Pos::Adjective: return "adj";
        case Pos::Adverb: return "adv";
    }
    return "?";
}

/// Only nouns and verbs carry an is-a hierarchy.
constexpr bool pos_has_hierarchy(Pos p) { return p == Pos::Noun || p == Pos::Verb; }

}  // namespace semidx
