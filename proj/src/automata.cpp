#include "hps/automata.hpp"

#include <cassert>

#include "hps/errors.hpp"
#include "hps/utf8.hpp"

namespace hps {

SuffixDfa SuffixDfa::compile(const std::vector<const SuffixGroup*>& groups, PosTag pos) {
    SuffixDfa dfa;
    dfa.pos_ = pos;
    for (const SuffixGroup* g : groups) {
        if (!g || g->pos != pos) continue;
        for (const auto& entry : g->suffixes) {
            int state = 0;
            const auto& letters = entry.text.letters;
            for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
                auto found = dfa.states_[state].next.find(*it);
                if (found == dfa.states_[state].next.end()) {
                    dfa.states_.push_back(State{});
                    int fresh = static_cast<int>(dfa.states_.size() - 1);
                    dfa.states_[state].next.emplace(*it, fresh);
                    state = fresh;
                } else {
                    state = found->second;
                }
            }
            if (dfa.states_[state].accept >= 0) {
                const Accept& prior = dfa.accepts_[dfa.states_[state].accept];
                throw ConflictError("suffix '" + render(entry.text) + "' claimed by groups " +
                                    prior.group + " and " + g->name + " for POS " +
                                    std::string(1, pos_letter(pos)));
            }
            dfa.states_[state].accept = static_cast<int>(dfa.accepts_.size());
            dfa.accepts_.push_back({g->name, g->cut_length, g->stage, entry.weak});
        }
    }
    return dfa;
}

SuffixDfa SuffixDfa::compile(const AffixRuleSet& rules, PosTag pos) {
    return compile(rules.groups_for(pos), pos);
}

std::optional<SuffixMatch> SuffixDfa::match_longest(const NormalizedWord& w) const {
    return match_longest(w, NounStage::Possessive);
}

std::optional<SuffixMatch> SuffixDfa::match_longest(const NormalizedWord& w,
                                                    NounStage min_stage) const {
    const Accept* best = nullptr;
    const Accept* best_weak = nullptr;
    int state = 0;
    std::size_t depth = 0;
    for (std::size_t i = w.letters.size(); i-- > 0;) {
        auto it = states_[state].next.find(w.letters[i]);
        if (it == states_[state].next.end()) break;
        state = it->second;
        ++depth;
        if (states_[state].accept < 0) continue;
        const Accept& a = accepts_[states_[state].accept];
        assert(a.cut == depth);
        if (pos_ == PosTag::N && a.stage < min_stage) continue;
        if (a.weak)
            best_weak = &a;
        else
            best = &a;
    }
    const Accept* pick = best ? best : best_weak;
    if (!pick) return std::nullopt;
    SuffixMatch m;
    m.group = pick->group;
    m.cut_length = pick->cut;
    m.matched = w.letters.substr(w.letters.size() - pick->cut);
    m.stage = pick->stage;
    m.weak = pick->weak;
    return m;
}

std::string SuffixDfa::to_dot() const {
    std::string out = "digraph suffix_dfa_";
    out += pos_letter(pos_);
    out += " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const State& s = states_[i];
        std::string label = s.accept >= 0 ? accepts_[s.accept].group : std::string("NIL");
        out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + "\\n" + label +
               "\"";
        if (s.accept >= 0) out += " shape=doublecircle";
        out += "];\n";
    }
    for (std::size_t i = 0; i < states_.size(); ++i)
        for (const auto& [letter, target] : states_[i].next)
            out += "  " + std::to_string(i) + " -> " + std::to_string(target) +
                   " [label=\"" + encode_utf8(letter) + "\"];\n";
    out += "}\n";
    return out;
}

NormalizedWord strip_suffix(const NormalizedWord& w, const SuffixMatch& m) {
    assert(ends_with(w, m.matched));
    return drop_last(w, m.cut_length);
}

PrefixDfa PrefixDfa::compile(const std::vector<PrefixRule>& prefixes) {
    PrefixDfa dfa;
    dfa.rules_ = prefixes;
    for (std::size_t r = 0; r < prefixes.size(); ++r) {
        int state = 0;
        for (char32_t cp : prefixes[r].prefix.letters) {
            auto found = dfa.states_[state].next.find(cp);
            if (found == dfa.states_[state].next.end()) {
                dfa.states_.push_back(State{});
                int fresh = static_cast<int>(dfa.states_.size() - 1);
                dfa.states_[state].next.emplace(cp, fresh);
                state = fresh;
            } else {
                state = found->second;
            }
        }
        if (dfa.states_[state].rule >= 0)
            throw ConflictError("duplicate prefix '" + render(prefixes[r].prefix) + "'");
        dfa.states_[state].rule = static_cast<int>(r);
    }
    return dfa;
}

std::optional<PrefixStrip> PrefixDfa::match_and_strip(const NormalizedWord& w, PosTag pos,
                                                      std::size_t min_stem) const {
    int best = -1;
    std::size_t best_depth = 0;
    int state = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        auto it = states_[state].next.find(w.letters[i]);
        if (it == states_[state].next.end()) break;
        state = it->second;
        std::size_t depth = i + 1;
        if (states_[state].rule < 0) continue;
        const PrefixRule& rule = rules_[states_[state].rule];
        if (!rule.applies_to(pos)) continue;
        if (w.letters.size() - depth < min_stem) continue;
        if (!rule.required_next.empty()) {
            if (depth >= w.letters.size()) continue;
            if (rule.required_next.find(w.letters[depth]) == std::u32string::npos) continue;
        }
        best = states_[state].rule;
        best_depth = depth;
    }
    if (best < 0) return std::nullopt;
    PrefixStrip strip;
    strip.removed = rules_[best].prefix.letters;
    strip.rest = drop_first(w, best_depth);
    return strip;
}

} // namespace hps
