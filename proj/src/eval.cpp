#include "hps/eval.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hps/errors.hpp"
#include "hps/normalize.hpp"

namespace hps {

GoldFile parse_gold(std::string_view text, const std::string& origin) {
    GoldFile gold;
    std::size_t lineno = 0;
    std::size_t at = 0;
    bool first_line = true;
    while (at <= text.size()) {
        std::size_t eol = text.find('\n', at);
        std::string line(text.substr(at, eol == std::string_view::npos ? std::string_view::npos
                                                                       : eol - at));
        at = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first_line) {
            first_line = false;
            if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        }
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;

        std::size_t tab1 = line.find('\t');
        std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                     : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos ||
            line.find('\t', tab2 + 1) != std::string::npos)
            throw ParseError(origin, lineno, "expected word<TAB>pos<TAB>stem");

        GoldRecord rec;
        rec.word = line.substr(0, tab1);
        std::string pos_field = line.substr(tab1 + 1, tab2 - tab1 - 1);
        rec.gold_stem = line.substr(tab2 + 1);

        auto pos = pos_from_letter(pos_field.size() == 1 ? pos_field[0] : '?');
        if (!pos) {
            ++gold.skipped;
            continue;
        }
        rec.pos = *pos;
        try {
            normalize(rec.word);
            normalize(rec.gold_stem);
        } catch (const Error& e) {
            throw ParseError(origin, lineno, e.what());
        }
        gold.records.push_back(std::move(rec));
    }
    return gold;
}

GoldFile load_gold(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open gold file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gold(buf.str(), path.string());
}

EvalReport evaluate(const HpsStemmer& stemmer, const std::vector<GoldRecord>& gold) {
    EvalReport report;
    for (PosTag pos : kAllPos) report.per_pos[pos];
    for (const auto& rec : gold) {
        bool ok = false;
        try {
            NormalizedWord produced = stemmer.stem(rec.word, rec.pos).stem;
            ok = produced == normalize(rec.gold_stem);
        } catch (const Error&) {
            ok = false;
        }
        ++report.total;
        if (ok) {
            ++report.correct;
            ++report.per_pos[rec.pos].correct;
        } else {
            ++report.wrong;
            ++report.per_pos[rec.pos].wrong;
        }
    }
    if (report.total > 0)
        report.accuracy_percent = 100.0 * static_cast<double>(report.correct) /
                                  static_cast<double>(report.total);
    return report;
}

std::pair<EvalReport, EvalReport> ablation_compare(const HpsStemmer& stemmer,
                                                   const std::vector<GoldRecord>& gold) {
    HpsStemmer with = stemmer;
    with.set_lexicons_enabled(true);
    HpsStemmer without = stemmer;
    without.set_lexicons_enabled(false);
    return {evaluate(with, gold), evaluate(without, gold)};
}

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string format_report(const EvalReport& report) {
    std::string out;
    out += "pos   total  correct  wrong  accuracy\n";
    for (const auto& [pos, count] : report.per_pos) {
        std::size_t total = count.correct + count.wrong;
        double acc = total ? 100.0 * static_cast<double>(count.correct) /
                                 static_cast<double>(total)
                           : 0.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-5c %5zu  %7zu  %5zu  %8s\n", pos_letter(pos),
                      total, count.correct, count.wrong,
                      total ? format_percent(acc).c_str() : "-");
        out += buf;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-5s %5zu  %7zu  %5zu  %8s\n", "all", report.total,
                  report.correct, report.wrong,
                  format_percent(report.accuracy_percent).c_str());
    out += buf;
    return out;
}

std::string format_machine(const EvalReport& report) {
    std::string out;
    out += "total=" + std::to_string(report.total) + "\n";
    out += "correct=" + std::to_string(report.correct) + "\n";
    out += "wrong=" + std::to_string(report.wrong) + "\n";
    out += "accuracy=" + format_percent(report.accuracy_percent) + "\n";
    for (const auto& [pos, count] : report.per_pos) {
        std::string p(1, pos_letter(pos));
        out += "pos_" + p + "_correct=" + std::to_string(count.correct) + "\n";
        out += "pos_" + p + "_wrong=" + std::to_string(count.wrong) + "\n";
    }
    return out;
}

std::string format_ablation(const EvalReport& with, const EvalReport& without) {
    std::string out;
    out += "with lexicons:\n" + format_report(with);
    out += "without lexicons:\n" + format_report(without);
    out += "accuracy with=" + format_percent(with.accuracy_percent) +
           " without=" + format_percent(without.accuracy_percent) + "\n";
    return out;
}

} // namespace hps
