#include "hps/rules.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hps/errors.hpp"
#include "hps/utf8.hpp"

namespace hps {

char pos_letter(PosTag pos) {
    switch (pos) {
        case PosTag::N: return 'N';
        case PosTag::A: return 'A';
        case PosTag::V: return 'V';
    }
    return '?';
}

std::optional<PosTag> pos_from_letter(char c) {
    switch (c) {
        case 'N': return PosTag::N;
        case 'A': return PosTag::A;
        case 'V': return PosTag::V;
        default: return std::nullopt;
    }
}

std::string_view stage_name(NounStage s) {
    switch (s) {
        case NounStage::Possessive: return "Possessive";
        case NounStage::Plural: return "Plural";
        case NounStage::Other: return "Other";
        case NounStage::Done: return "Done";
    }
    return "?";
}

bool PrefixRule::applies_to(PosTag pos) const {
    return std::find(applicable_pos.begin(), applicable_pos.end(), pos) !=
           applicable_pos.end();
}

bool OrthoRepair::applies_to(PosTag pos) const {
    if (pos_filter.empty()) return true;
    return std::find(pos_filter.begin(), pos_filter.end(), pos) != pos_filter.end();
}

bool OrthoRepair::applies_after(std::u32string_view stripped) const {
    if (after_filter.empty()) return true;
    for (const auto& s : after_filter)
        if (s == stripped) return true;
    return false;
}

std::vector<const SuffixGroup*> AffixRuleSet::groups_for(PosTag pos) const {
    std::vector<const SuffixGroup*> out;
    for (const auto& g : groups)
        if (g.pos == pos) out.push_back(&g);
    return out;
}

std::size_t AffixRuleSet::max_passes(PosTag pos) const {
    switch (pos) {
        case PosTag::N: return max_passes_n;
        case PosTag::A: return max_passes_a;
        case PosTag::V: return max_passes_v;
    }
    return 0;
}

namespace {

NounStage stage_from_name(std::string_view name, PosTag pos) {
    if (pos != PosTag::N) return NounStage::Other;
    if (name.rfind("Po", 0) == 0) return NounStage::Possessive;
    if (name.rfind("Pl", 0) == 0) return NounStage::Plural;
    return NounStage::Other;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<PosTag> parse_pos_list(const std::string& s, const std::string& origin,
                                   std::size_t line) {
    std::vector<PosTag> out;
    for (char c : s) {
        auto p = pos_from_letter(c);
        if (!p) throw ParseError(origin, line, "bad POS list '" + s + "'");
        if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
    if (out.empty()) throw ParseError(origin, line, "empty POS list");
    return out;
}

NormalizedWord normalize_field(const std::string& s, const std::string& origin,
                               std::size_t line, const char* what) {
    try {
        return normalize(s);
    } catch (const Error& e) {
        throw ParseError(origin, line,
                         std::string(what) + " '" + s + "': " + e.what());
    }
}

std::size_t parse_count(const std::string& s, const std::string& origin,
                        std::size_t line, const char* what) {
    std::size_t value = 0;
    if (s.empty()) throw ParseError(origin, line, std::string(what) + " is empty");
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ParseError(origin, line, std::string(what) + " '" + s + "' is not a number");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

struct WeakMark {
    PosTag pos;
    NormalizedWord text;
    std::size_t line;
};

} // namespace

AffixRuleSet parse_rules(std::string_view text, const std::string& origin) {
    AffixRuleSet rs;
    std::vector<WeakMark> weak_marks;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    bool first_line = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first_line) {
            first_line = false;
            if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        }
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;

        std::vector<std::string> f = split(line, '\t');
        const std::string& kind = f[0];

        if (kind == "option") {
            if (f.size() != 3) throw ParseError(origin, lineno, "option needs KEY and VALUE");
            std::size_t value = parse_count(f[2], origin, lineno, "option value");
            if (f[1] == "min_stem_length") {
                if (value < 1)
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": min_stem_length must be at least 1");
                rs.min_stem_length = value;
            } else if (f[1] == "max_passes_N") {
                rs.max_passes_n = value;
            } else if (f[1] == "max_passes_A") {
                rs.max_passes_a = value;
            } else if (f[1] == "max_passes_V") {
                rs.max_passes_v = value;
            } else {
                throw ParseError(origin, lineno, "unknown option '" + f[1] + "'");
            }
        } else if (kind == "prefix") {
            if (f.size() != 3 && f.size() != 4)
                throw ParseError(origin, lineno, "prefix needs POSLIST and STRING");
            PrefixRule rule;
            rule.applicable_pos = parse_pos_list(f[1], origin, lineno);
            rule.prefix = normalize_field(f[2], origin, lineno, "prefix");
            if (f.size() == 4) {
                if (f[3].rfind("next=", 0) != 0)
                    throw ParseError(origin, lineno, "bad prefix constraint '" + f[3] + "'");
                for (const auto& item : split(f[3].substr(5), ',')) {
                    NormalizedWord letter =
                        normalize_field(item, origin, lineno, "next-letter");
                    if (letter.letter_count() != 1)
                        throw ParseError(origin, lineno,
                                         "next= entries must be single letters");
                    rule.required_next += letter.letters;
                }
            }
            for (const auto& existing : rs.prefixes)
                if (existing.prefix == rule.prefix)
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": duplicate prefix '" + f[2] + "'");
            rs.prefixes.push_back(std::move(rule));
        } else if (kind == "repair") {
            if (f.size() != 3 && f.size() != 4)
                throw ParseError(origin, lineno, "repair needs TRIGGER and ACTION");
            OrthoRepair rep;
            rep.trigger = normalize_field(f[1], origin, lineno, "trigger").letters;
            const std::string& action = f[2];
            if (action.rfind("del", 0) == 0) {
                rep.action = OrthoRepair::Action::Delete;
                rep.delete_count = parse_count(action.substr(3), origin, lineno, "del count");
                if (rep.delete_count < 1 || rep.delete_count > rep.trigger.size())
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": del count out of range for trigger");
            } else if (action.rfind("sub:", 0) == 0) {
                rep.action = OrthoRepair::Action::Substitute;
                NormalizedWord repl =
                    normalize_field(action.substr(4), origin, lineno, "replacement");
                if (repl.letter_count() != 1)
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": sub: replacement must be one letter");
                rep.replacement = repl.letters[0];
            } else {
                throw ParseError(origin, lineno, "unknown repair action '" + action + "'");
            }
            if (f.size() == 4) {
                for (const auto& constraint : split(f[3], ';')) {
                    if (constraint.rfind("pos=", 0) == 0) {
                        rep.pos_filter = parse_pos_list(constraint.substr(4), origin, lineno);
                    } else if (constraint.rfind("after=", 0) == 0) {
                        for (const auto& item : split(constraint.substr(6), ','))
                            rep.after_filter.push_back(
                                normalize_field(item, origin, lineno, "after suffix").letters);
                    } else {
                        throw ParseError(origin, lineno,
                                         "bad repair constraint '" + constraint + "'");
                    }
                }
            }
            rs.repairs.push_back(std::move(rep));
        } else if (kind == "weak") {
            if (f.size() != 3) throw ParseError(origin, lineno, "weak needs POS and STRING");
            auto p = pos_from_letter(f[1].size() == 1 ? f[1][0] : '?');
            if (!p) throw ParseError(origin, lineno, "bad POS '" + f[1] + "'");
            weak_marks.push_back(
                {*p, normalize_field(f[2], origin, lineno, "weak suffix"), lineno});
        } else {
            // suffix group record
            if (f.size() != 4)
                throw ParseError(origin, lineno,
                                 "group needs NAME, POS, CUT and members, got " +
                                     std::to_string(f.size()) + " fields");
            SuffixGroup g;
            g.name = f[0];
            auto p = pos_from_letter(f[1].size() == 1 ? f[1][0] : '?');
            if (!p) throw ParseError(origin, lineno, "bad POS '" + f[1] + "'");
            g.pos = *p;
            g.cut_length = parse_count(f[2], origin, lineno, "cut length");
            if (g.cut_length < 1)
                throw ValidationError(origin + ":" + std::to_string(lineno) +
                                      ": cut length must be positive");
            g.stage = stage_from_name(g.name, g.pos);
            if (f[3] == "@reserved") {
                g.reserved = true;
            } else {
                for (const auto& member : split(f[3], ',')) {
                    SuffixEntry entry;
                    entry.text = normalize_field(member, origin, lineno, "suffix");
                    if (entry.text.letter_count() != g.cut_length)
                        throw ValidationError(
                            origin + ":" + std::to_string(lineno) + ": suffix '" + member +
                            "' in group " + g.name + " has " +
                            std::to_string(entry.text.letter_count()) +
                            " letters, cut length is " + std::to_string(g.cut_length));
                    g.suffixes.push_back(std::move(entry));
                }
                if (g.suffixes.empty())
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": group " + g.name + " has no members");
            }
            for (const auto& existing : rs.groups)
                if (existing.pos == g.pos && existing.name == g.name)
                    throw ValidationError(origin + ":" + std::to_string(lineno) +
                                          ": duplicate group name " + g.name);
            rs.groups.push_back(std::move(g));
        }
    }

    for (const auto& mark : weak_marks) {
        bool found = false;
        for (auto& g : rs.groups) {
            if (g.pos != mark.pos) continue;
            for (auto& entry : g.suffixes) {
                if (entry.text == mark.text) {
                    entry.weak = true;
                    found = true;
                }
            }
        }
        if (!found)
            throw ValidationError(origin + ":" + std::to_string(mark.line) +
                                  ": weak suffix is not a member of any group");
    }

    for (PosTag p : kAllPos) {
        bool any = false;
        for (const auto& g : rs.groups)
            if (g.pos == p) any = true;
        if (!any)
            throw ValidationError(origin + ": no suffix groups for POS " +
                                  std::string(1, pos_letter(p)));
    }
    return rs;
}

AffixRuleSet load_rules(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str(), path.string());
}

std::string serialize(const AffixRuleSet& rs) {
    std::string out;
    auto add_word = [&out](const NormalizedWord& w) { out += render(w); };

    out += "option\tmin_stem_length\t" + std::to_string(rs.min_stem_length) + "\n";
    out += "option\tmax_passes_N\t" + std::to_string(rs.max_passes_n) + "\n";
    out += "option\tmax_passes_A\t" + std::to_string(rs.max_passes_a) + "\n";
    out += "option\tmax_passes_V\t" + std::to_string(rs.max_passes_v) + "\n";

    for (const auto& g : rs.groups) {
        out += g.name;
        out += '\t';
        out += pos_letter(g.pos);
        out += '\t' + std::to_string(g.cut_length) + '\t';
        if (g.reserved) {
            out += "@reserved";
        } else {
            for (std::size_t i = 0; i < g.suffixes.size(); ++i) {
                if (i) out += ',';
                add_word(g.suffixes[i].text);
            }
        }
        out += '\n';
    }
    for (const auto& g : rs.groups)
        for (const auto& entry : g.suffixes)
            if (entry.weak) {
                out += "weak\t";
                out += pos_letter(g.pos);
                out += '\t';
                add_word(entry.text);
                out += '\n';
            }
    for (const auto& rule : rs.prefixes) {
        out += "prefix\t";
        for (PosTag p : rule.applicable_pos) out += pos_letter(p);
        out += '\t';
        add_word(rule.prefix);
        if (!rule.required_next.empty()) {
            out += "\tnext=";
            for (std::size_t i = 0; i < rule.required_next.size(); ++i) {
                if (i) out += ',';
                out += encode_utf8(rule.required_next[i]);
            }
        }
        out += '\n';
    }
    for (const auto& rep : rs.repairs) {
        out += "repair\t" + encode_utf8(rep.trigger) + '\t';
        if (rep.action == OrthoRepair::Action::Delete)
            out += "del" + std::to_string(rep.delete_count);
        else
            out += "sub:" + encode_utf8(rep.replacement);
        if (!rep.pos_filter.empty() || !rep.after_filter.empty()) {
            out += '\t';
            bool first = true;
            if (!rep.pos_filter.empty()) {
                out += "pos=";
                for (PosTag p : rep.pos_filter) out += pos_letter(p);
                first = false;
            }
            if (!rep.after_filter.empty()) {
                if (!first) out += ';';
                out += "after=";
                for (std::size_t i = 0; i < rep.after_filter.size(); ++i) {
                    if (i) out += ',';
                    out += encode_utf8(rep.after_filter[i]);
                }
            }
        }
        out += '\n';
    }
    return out;
}

const AffixRuleSet& default_ruleset() {
    static const AffixRuleSet rules = parse_rules(default_rules_text(), "<builtin rules>");
    return rules;
}

} // namespace hps
