#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hps/automata.hpp"
#include "hps/lexicon.hpp"
#include "hps/normalize.hpp"
#include "hps/rules.hpp"

namespace hps {

struct RemovedSuffix {
    std::string group;
    std::u32string suffix;
    std::u32string repaired; // letters deleted by repairs right after this strip
};

struct StemResult {
    NormalizedWord stem;
    std::optional<std::u32string> removed_prefix;
    std::vector<RemovedSuffix> removed_suffixes;
    bool lexicon_hit = false;
    std::size_t iterations = 0; // number of suffix strips performed
};

/// The full pipeline: normalize, one prefix pass, then per-POS loop of
/// lexicon lookup / suffix strip / orthographic repair, under the minimum
/// stem length and the noun stacking order. Immutable once built; stem() is
/// safe to call from many threads.
class HpsStemmer {
public:
    static HpsStemmer build(AffixRuleSet rules, std::map<PosTag, ExceptionLexicon> lexicons);

    /// Stemmer over the bundled rule set and fixture lexicons.
    static HpsStemmer with_defaults();

    StemResult stem(std::string_view word, PosTag pos) const;
    StemResult stem(NormalizedWord w, PosTag pos) const;

    bool lexicons_enabled() const { return lexicons_enabled_; }
    void set_lexicons_enabled(bool on) { lexicons_enabled_ = on; }

    const AffixRuleSet& rules() const { return rules_; }
    const SuffixDfa& suffix_dfa(PosTag pos) const;
    const ExceptionLexicon& lexicon(PosTag pos) const;

private:
    HpsStemmer() = default;

    AffixRuleSet rules_;
    PrefixDfa prefix_dfa_;
    std::map<PosTag, SuffixDfa> suffix_dfas_;
    std::map<PosTag, ExceptionLexicon> lexicons_;
    bool lexicons_enabled_ = true;
};

struct StreamResult {
    std::string word;
    PosTag pos = PosTag::N;
    std::optional<StemResult> result;
    std::string error; // set instead of result when the record failed
};

/// Element-wise stem() preserving order; per-record errors are reported in
/// place without aborting the stream.
std::vector<StreamResult> stem_stream(const HpsStemmer& stemmer,
                                      const std::vector<std::pair<std::string, PosTag>>& records);

} // namespace hps
