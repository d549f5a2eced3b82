#pragma once

#include <compare>
#include <string>
#include <variant>

#include "semidx/lexdb.hpp"

namespace semidx {

/// What a vector dimension is: a disambiguated concept or an orphan
/// keyword. Ordering puts concepts (by pos, offset) before orphans
/// (lexicographic) so serialization is deterministic.
class IndexUnit {
  public:
    IndexUnit() : value_(SynsetId{}) {}

    static IndexUnit of(SynsetId id) { return IndexUnit(id); }
    static IndexUnit orphan(std::string lemma) { return IndexUnit(std::move(lemma)); }

    bool is_concept() const { return value_.index() == 0; }
    const SynsetId& synset() const { return std::get<SynsetId>(value_); }
    const std::string& lemma() const { return std::get<std::string>(value_); }

    auto operator<=>(const IndexUnit&) const = default;

    /// "c:00001740-n" or "k:word"; parse() accepts the same forms.
    std::string to_string() const;
    static IndexUnit parse(std::string_view text);

  private:
    explicit IndexUnit(SynsetId id) : value_(id) {}
    explicit IndexUnit(std::string lemma) : value_(std::move(lemma)) {}
    std::variant<SynsetId, std::string> value_;
};

}  // namespace semidx
