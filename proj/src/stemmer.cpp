#include "hps/stemmer.hpp"

#include "hps/errors.hpp"

namespace hps {

namespace {

NounStage next_stage(NounStage s) {
    switch (s) {
        case NounStage::Possessive: return NounStage::Plural;
        case NounStage::Plural: return NounStage::Other;
        default: return NounStage::Done;
    }
}

// Applies repairs in file order until none fires. A repair is skipped when it
// would cut the residue below min_stem. Returns the letters it deleted.
std::u32string apply_repairs(NormalizedWord& w, const AffixRuleSet& rules, PosTag pos,
                             std::u32string_view stripped) {
    std::u32string erased;
    bool fired = true;
    std::size_t guard = w.letter_count() + rules.repairs.size() + 1;
    while (fired && guard-- > 0) {
        fired = false;
        for (const auto& rep : rules.repairs) {
            if (!rep.applies_to(pos) || !rep.applies_after(stripped)) continue;
            if (!ends_with(w, rep.trigger)) continue;
            if (rep.action == OrthoRepair::Action::Delete) {
                if (w.letter_count() - rep.delete_count < rules.min_stem_length) continue;
                erased += w.letters.substr(w.letters.size() - rep.delete_count);
                w = drop_last(w, rep.delete_count);
            } else {
                if (w.letters.back() == rep.replacement) continue;
                erased += w.letters.back();
                w.letters.back() = rep.replacement;
            }
            fired = true;
            break;
        }
    }
    return erased;
}

} // namespace

HpsStemmer HpsStemmer::build(AffixRuleSet rules, std::map<PosTag, ExceptionLexicon> lexicons) {
    HpsStemmer s;
    s.rules_ = std::move(rules);
    s.prefix_dfa_ = PrefixDfa::compile(s.rules_.prefixes);
    for (PosTag pos : kAllPos) {
        s.suffix_dfas_.emplace(pos, SuffixDfa::compile(s.rules_, pos));
        auto it = lexicons.find(pos);
        s.lexicons_.emplace(pos, it == lexicons.end() ? ExceptionLexicon(pos)
                                                      : std::move(it->second));
    }
    return s;
}

HpsStemmer HpsStemmer::with_defaults() {
    std::map<PosTag, ExceptionLexicon> lexicons;
    for (PosTag pos : kAllPos) lexicons.emplace(pos, default_lexicon(pos));
    return build(default_ruleset(), std::move(lexicons));
}

const SuffixDfa& HpsStemmer::suffix_dfa(PosTag pos) const { return suffix_dfas_.at(pos); }

const ExceptionLexicon& HpsStemmer::lexicon(PosTag pos) const { return lexicons_.at(pos); }

StemResult HpsStemmer::stem(std::string_view word, PosTag pos) const {
    return stem(normalize(word), pos);
}

StemResult HpsStemmer::stem(NormalizedWord w, PosTag pos) const {
    StemResult res;

    if (auto cut = prefix_dfa_.match_and_strip(w, pos, rules_.min_stem_length)) {
        res.removed_prefix = cut->removed;
        w = std::move(cut->rest);
    }

    const SuffixDfa& dfa = suffix_dfas_.at(pos);
    const ExceptionLexicon& lex = lexicons_.at(pos);
    const std::size_t max_passes = rules_.max_passes(pos);
    NounStage stage = NounStage::Possessive;

    for (;;) {
        if (lexicons_enabled_) {
            if (auto hit = lex.lookup(w)) {
                res.stem = std::move(*hit);
                res.lexicon_hit = true;
                return res;
            }
        }
        if (res.iterations >= max_passes) break;
        if (pos == PosTag::N && stage == NounStage::Done) break;

        auto match = dfa.match_longest(w, pos == PosTag::N ? stage : NounStage::Possessive);
        if (!match) break;
        if (w.letter_count() - match->cut_length < rules_.min_stem_length) break;

        w = strip_suffix(w, *match);
        std::u32string repaired = apply_repairs(w, rules_, pos, match->matched);
        res.removed_suffixes.push_back({match->group, match->matched, std::move(repaired)});
        if (pos == PosTag::N) stage = next_stage(match->stage);
        ++res.iterations;
    }

    res.stem = std::move(w);
    return res;
}

std::vector<StreamResult> stem_stream(const HpsStemmer& stemmer,
                                      const std::vector<std::pair<std::string, PosTag>>& records) {
    std::vector<StreamResult> out;
    out.reserve(records.size());
    for (const auto& [word, pos] : records) {
        StreamResult r;
        r.word = word;
        r.pos = pos;
        try {
            r.result = stemmer.stem(word, pos);
        } catch (const Error& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hps
