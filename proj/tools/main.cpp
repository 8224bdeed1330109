// hps: batch Persian stemming over POS-tagged TSV word lists.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hps/errors.hpp"
#include "hps/eval.hpp"
#include "hps/lexicon.hpp"
#include "hps/normalize.hpp"
#include "hps/rules.hpp"
#include "hps/stemmer.hpp"
#include "hps/utf8.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct Options {
    std::string rules_path;
    std::string lexicon_dir;
    bool no_lexicon = false;

    std::string stem_input = "-";
    std::string stem_output = "-";
    bool trace = false;

    std::string eval_gold;
    std::string eval_output = "-";
    bool ablation = false;
    bool machine = false;

    std::string dfa_pos = "N";
    std::string dfa_output = "-";
};

hps::AffixRuleSet load_ruleset(const Options& opt) {
    if (!opt.rules_path.empty()) return hps::load_rules(opt.rules_path);
    return hps::default_ruleset();
}

hps::HpsStemmer build_stemmer(const Options& opt) {
    std::map<hps::PosTag, hps::ExceptionLexicon> lexicons;
    for (hps::PosTag pos : hps::kAllPos) {
        if (!opt.lexicon_dir.empty()) {
            std::filesystem::path file =
                std::filesystem::path(opt.lexicon_dir) /
                (std::string(1, hps::pos_letter(pos)) + ".tsv");
            lexicons.emplace(pos, hps::ExceptionLexicon::load(file, pos));
        } else {
            lexicons.emplace(pos, hps::default_lexicon(pos));
        }
    }
    hps::HpsStemmer stemmer = hps::HpsStemmer::build(load_ruleset(opt), std::move(lexicons));
    stemmer.set_lexicons_enabled(!opt.no_lexicon);
    return stemmer;
}

std::istream* open_input(const std::string& path, std::ifstream& file) {
    if (path == "-") return &std::cin;
    file.open(path, std::ios::binary);
    if (!file) throw hps::IoError("cannot open input: " + path);
    return &file;
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path == "-") return &std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw hps::IoError("cannot open output: " + path);
    return &file;
}

std::string trace_column(const hps::StemResult& res) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += ' ';
        out += piece;
    };
    if (res.removed_prefix) append("pre=" + hps::encode_utf8(*res.removed_prefix));
    for (const auto& removed : res.removed_suffixes) {
        append(removed.group + "=" + hps::encode_utf8(removed.suffix));
        if (!removed.repaired.empty()) append("rep=" + hps::encode_utf8(removed.repaired));
    }
    if (res.lexicon_hit) append("lex");
    return out.empty() ? "-" : out;
}

int cmd_stem(const Options& opt) {
    hps::HpsStemmer stemmer = build_stemmer(opt);

    std::ifstream in_file;
    std::ofstream out_file;
    std::istream& in = *open_input(opt.stem_input, in_file);
    std::ostream& out = *open_output(opt.stem_output, out_file);

    std::string line;
    std::size_t lineno = 0;
    bool first_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first_line) {
            first_line = false;
            if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        }
        if (line.empty()) continue;

        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            std::cerr << "line " << lineno << ": expected word<TAB>pos, skipped\n";
            continue;
        }
        std::string word = line.substr(0, tab);
        std::string pos_field = line.substr(tab + 1);
        auto pos = hps::pos_from_letter(pos_field.size() == 1 ? pos_field[0] : '?');
        if (!pos) {
            // untagged parts of speech pass through unstemmed
            out << word << '\t' << pos_field << '\t' << word;
            if (opt.trace) out << "\t-";
            out << '\n';
            continue;
        }
        try {
            hps::StemResult res = stemmer.stem(word, *pos);
            out << word << '\t' << pos_field << '\t' << hps::render(res.stem);
            if (opt.trace) out << '\t' << trace_column(res);
            out << '\n';
        } catch (const hps::Error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << ", skipped\n";
        }
    }
    return kExitOk;
}

int cmd_eval(const Options& opt) {
    hps::HpsStemmer stemmer = build_stemmer(opt);
    hps::GoldFile gold = hps::load_gold(opt.eval_gold);
    if (gold.skipped > 0)
        std::cerr << "skipped " << gold.skipped << " rows with POS outside N/A/V\n";

    std::ofstream out_file;
    std::ostream& out = *open_output(opt.eval_output, out_file);
    if (opt.ablation) {
        auto [with, without] = hps::ablation_compare(stemmer, gold.records);
        if (opt.machine) {
            out << "with_accuracy=" << hps::format_percent(with.accuracy_percent) << '\n'
                << "without_accuracy=" << hps::format_percent(without.accuracy_percent)
                << '\n';
        } else {
            out << hps::format_ablation(with, without);
        }
    } else {
        hps::EvalReport report = hps::evaluate(stemmer, gold.records);
        out << (opt.machine ? hps::format_machine(report) : hps::format_report(report));
    }
    return kExitOk;
}

int cmd_rules(const Options& opt) {
    hps::AffixRuleSet rules = load_ruleset(opt);
    std::cout << "option\tmin_stem_length\t" << rules.min_stem_length << '\n';
    std::cout << "option\tmax_passes\tN=" << rules.max_passes_n << " A=" << rules.max_passes_a
              << " V=" << rules.max_passes_v << '\n';
    for (const auto& g : rules.groups) {
        std::cout << g.name << '\t' << hps::pos_letter(g.pos) << '\t' << g.cut_length << '\t';
        if (g.reserved) {
            std::cout << "@reserved";
        } else {
            for (std::size_t i = 0; i < g.suffixes.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << hps::render(g.suffixes[i].text);
                if (g.suffixes[i].weak) std::cout << "(weak)";
            }
        }
        if (g.pos == hps::PosTag::N) std::cout << '\t' << hps::stage_name(g.stage);
        std::cout << '\n';
    }
    for (const auto& rule : rules.prefixes) {
        std::cout << "prefix\t";
        for (hps::PosTag pos : rule.applicable_pos) std::cout << hps::pos_letter(pos);
        std::cout << '\t' << hps::render(rule.prefix);
        if (!rule.required_next.empty())
            std::cout << "\tnext=" << hps::encode_utf8(rule.required_next);
        std::cout << '\n';
    }
    for (const auto& rep : rules.repairs) {
        std::cout << "repair\t" << hps::encode_utf8(rep.trigger) << '\t';
        if (rep.action == hps::OrthoRepair::Action::Delete)
            std::cout << "del" << rep.delete_count;
        else
            std::cout << "sub:" << hps::encode_utf8(rep.replacement);
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_dfa_dump(const Options& opt) {
    hps::AffixRuleSet rules = load_ruleset(opt);
    auto pos = hps::pos_from_letter(opt.dfa_pos.size() == 1 ? opt.dfa_pos[0] : '?');
    if (!pos) throw hps::ValidationError("--pos must be N, A or V");
    hps::SuffixDfa dfa = hps::SuffixDfa::compile(rules, *pos);
    std::ofstream out_file;
    std::ostream& out = *open_output(opt.dfa_output, out_file);
    out << dfa.to_dot();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"hierarchical Persian stemmer"};
    app.require_subcommand(1);

    app.add_option("--rules", opt.rules_path, "rule file overriding the bundled set")
        ->envname("HPS_RULES");
    app.add_option("--lexicon-dir", opt.lexicon_dir,
                   "directory with N.tsv, A.tsv, V.tsv exception lexicons");
    app.add_flag("--no-lexicon", opt.no_lexicon, "disable exception lexicons");

    CLI::App* stem = app.add_subcommand("stem", "stem a word<TAB>pos stream");
    stem->add_option("input", opt.stem_input, "input TSV path, - for stdin");
    stem->add_option("--output", opt.stem_output, "output path, - for stdout");
    stem->add_flag("--trace", opt.trace, "append a removed-affix trace column");

    CLI::App* eval = app.add_subcommand("eval", "score against a gold word/pos/stem TSV");
    eval->add_option("gold", opt.eval_gold, "gold TSV path")->required();
    eval->add_option("--output", opt.eval_output, "output path, - for stdout");
    eval->add_flag("--ablation", opt.ablation, "compare with vs without lexicons");
    eval->add_flag("--machine", opt.machine, "line-oriented key=value output");

    CLI::App* rules_cmd = app.add_subcommand("rules", "print the active rule set");

    CLI::App* dfa = app.add_subcommand("dfa", "automaton inspection");
    CLI::App* dump = dfa->add_subcommand("dump", "emit a suffix automaton as DOT");
    dump->add_option("--pos", opt.dfa_pos, "automaton to dump: N, A or V")->required();
    dump->add_option("--output", opt.dfa_output, "output path, - for stdout");
    dfa->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (stem->parsed()) return cmd_stem(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (rules_cmd->parsed()) return cmd_rules(opt);
        if (dfa->parsed() && dump->parsed()) return cmd_dfa_dump(opt);
    } catch (const hps::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const hps::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
