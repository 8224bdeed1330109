#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "hps/normalize.hpp"
#include "hps/rules.hpp"

namespace hps {

/// Per-POS surface -> stem map consulted before automaton stripping.
class ExceptionLexicon {
public:
    ExceptionLexicon() = default;
    explicit ExceptionLexicon(PosTag pos) : pos_(pos) {}

    static ExceptionLexicon parse(std::string_view text, PosTag pos,
                                  const std::string& origin);
    static ExceptionLexicon load(const std::filesystem::path& path, PosTag pos);

    std::optional<NormalizedWord> lookup(const NormalizedWord& w) const;

    void insert(const NormalizedWord& surface, const NormalizedWord& stem);
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    PosTag pos() const { return pos_; }

private:
    PosTag pos_ = PosTag::N;
    std::unordered_map<NormalizedWord, NormalizedWord, NormalizedWordHash> entries_;
};

/// The bundled fixture lexicon for one POS (identical to data/lexicon/<P>.tsv).
const std::string& default_lexicon_text(PosTag pos);
ExceptionLexicon default_lexicon(PosTag pos);

} // namespace hps
