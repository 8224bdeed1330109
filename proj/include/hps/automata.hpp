#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hps/normalize.hpp"
#include "hps/rules.hpp"

namespace hps {

struct SuffixMatch {
    std::string group;
    std::u32string matched;
    std::size_t cut_length = 0;
    NounStage stage = NounStage::Other;
    bool weak = false;
};

/// Trie of reversed suffixes. Accepting states carry the owning group; the
/// runner reads a word from its last letter inward and keeps the deepest
/// acceptable state it passed.
class SuffixDfa {
public:
    /// Compiles the groups of one POS. Throws ConflictError when two groups
    /// claim the same string.
    static SuffixDfa compile(const std::vector<const SuffixGroup*>& groups, PosTag pos);
    static SuffixDfa compile(const AffixRuleSet& rules, PosTag pos);

    /// Longest suffix of w owned by any group, preferring non-weak entries.
    std::optional<SuffixMatch> match_longest(const NormalizedWord& w) const;

    /// Same, considering only groups with stage >= min_stage.
    std::optional<SuffixMatch> match_longest(const NormalizedWord& w,
                                             NounStage min_stage) const;

    /// DOT graph of the automaton (states, group labels, letter edges).
    std::string to_dot() const;

    std::size_t state_count() const { return states_.size(); }
    PosTag pos() const { return pos_; }

private:
    struct Accept {
        std::string group;
        std::size_t cut = 0;
        NounStage stage = NounStage::Other;
        bool weak = false;
    };
    struct State {
        std::map<char32_t, int> next;
        int accept = -1; // index into accepts_
    };

    std::vector<State> states_{State{}};
    std::vector<Accept> accepts_;
    PosTag pos_ = PosTag::N;
};

/// Word minus the matched suffix; a ZWNJ left trailing is dropped with it.
NormalizedWord strip_suffix(const NormalizedWord& w, const SuffixMatch& m);

struct PrefixStrip {
    NormalizedWord rest;
    std::u32string removed;
};

/// Forward trie over the prefix strings; accepting states carry the rule so
/// POS applicability and next-letter conditions are checked during the run.
class PrefixDfa {
public:
    static PrefixDfa compile(const std::vector<PrefixRule>& prefixes);

    /// Longest applicable prefix removed, or nullopt. A cut is applicable when
    /// the rule covers `pos`, its next-letter condition holds, and at least
    /// min_stem letters remain.
    std::optional<PrefixStrip> match_and_strip(const NormalizedWord& w, PosTag pos,
                                               std::size_t min_stem) const;

    std::size_t state_count() const { return states_.size(); }

private:
    struct State {
        std::map<char32_t, int> next;
        int rule = -1; // index into rules_
    };

    std::vector<State> states_{State{}};
    std::vector<PrefixRule> rules_;
};

} // namespace hps
