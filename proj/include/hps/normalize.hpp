#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hps {

/// A word reduced to canonical Persian letters. ZWNJ occurrences are kept as
/// gap indices (a gap at i sits between letters[i-1] and letters[i]), so the
/// letter sequence itself is what the automata consume.
struct NormalizedWord {
    std::u32string letters;
    std::vector<std::size_t> zwnj; // sorted, each in [1, letters.size()-1]

    bool operator==(const NormalizedWord&) const = default;
    std::size_t letter_count() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

/// Canonicalizes one word: folds Arabic yeh/kaf and alef/waw/heh variants onto
/// the Persian code points, strips diacritics and direction marks, records
/// ZWNJ. Throws EmptyInputError or NonPersianContentError.
NormalizedWord normalize(std::string_view raw);

/// UTF-8 text for a normalized word, ZWNJ reinserted at its gaps.
std::string render(const NormalizedWord& w);

std::size_t letter_count(const NormalizedWord& w);

/// Word minus its last k letters; gaps that become trailing are dropped.
NormalizedWord drop_last(const NormalizedWord& w, std::size_t k);

/// Word minus its first k letters; gaps that become leading are dropped.
NormalizedWord drop_first(const NormalizedWord& w, std::size_t k);

bool ends_with(const NormalizedWord& w, std::u32string_view tail);
bool starts_with(const NormalizedWord& w, std::u32string_view head);

bool is_canonical_letter(char32_t cp);

/// The 32-letter canonical alphabet, in dictionary order.
const std::u32string& canonical_alphabet();

struct NormalizedWordHash {
    std::size_t operator()(const NormalizedWord& w) const;
};

} // namespace hps
