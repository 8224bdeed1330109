#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hps/normalize.hpp"

namespace hps {

enum class PosTag { N, A, V };

constexpr std::array<PosTag, 3> kAllPos = {PosTag::N, PosTag::A, PosTag::V};

char pos_letter(PosTag pos);
std::optional<PosTag> pos_from_letter(char c);

/// Stacking stage of a noun suffix group, outermost first.
enum class NounStage { Possessive = 0, Plural = 1, Other = 2, Done = 3 };

std::string_view stage_name(NounStage s);

struct SuffixEntry {
    NormalizedWord text;
    bool weak = false; // loses to any shorter non-weak match

    bool operator==(const SuffixEntry&) const = default;
};

struct SuffixGroup {
    std::string name;
    PosTag pos = PosTag::N;
    std::size_t cut_length = 0;
    std::vector<SuffixEntry> suffixes;
    NounStage stage = NounStage::Other; // derived from the name prefix (Po/Pl/Ot)
    bool reserved = false;              // declared empty placeholder

    bool operator==(const SuffixGroup&) const = default;
};

struct PrefixRule {
    NormalizedWord prefix;
    std::vector<PosTag> applicable_pos;
    std::u32string required_next; // empty: unconditional; else residue must start
                                  // with one of these letters

    bool applies_to(PosTag pos) const;
    bool operator==(const PrefixRule&) const = default;
};

struct OrthoRepair {
    enum class Action { Delete, Substitute };

    std::u32string trigger;      // matched against the residue's last letters
    Action action = Action::Delete;
    std::size_t delete_count = 1;     // Delete
    char32_t replacement = 0;         // Substitute: replaces the last letter
    std::vector<PosTag> pos_filter;   // empty: any
    std::vector<std::u32string> after_filter; // empty: any just-stripped suffix

    bool applies_to(PosTag pos) const;
    bool applies_after(std::u32string_view stripped) const;
    bool operator==(const OrthoRepair&) const = default;
};

struct AffixRuleSet {
    std::vector<PrefixRule> prefixes;
    std::vector<SuffixGroup> groups; // file order, all POS mixed
    std::vector<OrthoRepair> repairs;
    std::size_t min_stem_length = 3;
    std::size_t max_passes_n = 3;
    std::size_t max_passes_a = 2;
    std::size_t max_passes_v = 2;

    std::vector<const SuffixGroup*> groups_for(PosTag pos) const;
    std::size_t max_passes(PosTag pos) const;
    bool operator==(const AffixRuleSet&) const = default;
};

/// Parses rule text. `origin` names the source in error messages.
AffixRuleSet parse_rules(std::string_view text, const std::string& origin);

/// Loads and validates a rule file. Throws IoError, ParseError, ValidationError.
AffixRuleSet load_rules(const std::filesystem::path& path);

/// Rule text that parses back to an equal rule set.
std::string serialize(const AffixRuleSet& rules);

/// The bundled rule set (identical to the shipped data/rules.tsv).
const AffixRuleSet& default_ruleset();

/// Raw text of the bundled rule file.
const std::string& default_rules_text();

} // namespace hps
