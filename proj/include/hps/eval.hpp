#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hps/rules.hpp"
#include "hps/stemmer.hpp"

namespace hps {

struct GoldRecord {
    std::string word;
    PosTag pos = PosTag::N;
    std::string gold_stem;
};

struct GoldFile {
    std::vector<GoldRecord> records;
    std::size_t skipped = 0; // rows with a POS outside N/A/V
};

struct PosCount {
    std::size_t correct = 0;
    std::size_t wrong = 0;
};

struct EvalReport {
    std::size_t total = 0;
    std::size_t correct = 0;
    std::size_t wrong = 0;
    double accuracy_percent = 0.0;
    std::map<PosTag, PosCount> per_pos;
};

/// Loads `word<TAB>pos<TAB>stem` rows; both word columns must normalize.
GoldFile load_gold(const std::filesystem::path& path);
GoldFile parse_gold(std::string_view text, const std::string& origin);

/// A record is correct iff the stemmed word equals the normalized gold stem.
/// Records that fail to stem count as wrong.
EvalReport evaluate(const HpsStemmer& stemmer, const std::vector<GoldRecord>& gold);

/// Two reports over identical input, lexicons enabled then disabled.
std::pair<EvalReport, EvalReport> ablation_compare(const HpsStemmer& stemmer,
                                                   const std::vector<GoldRecord>& gold);

std::string format_report(const EvalReport& report);
std::string format_machine(const EvalReport& report);
std::string format_ablation(const EvalReport& with, const EvalReport& without);

/// Percentage with two decimals, as the reports print it.
std::string format_percent(double value);

} // namespace hps
