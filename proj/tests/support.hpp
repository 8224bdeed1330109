#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hps/normalize.hpp"
#include "hps/rules.hpp"

namespace support {

inline std::filesystem::path data_path(const std::string& rel) {
    return std::filesystem::path(HPS_DATA_DIR) / rel;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class TempFile {
public:
    explicit TempFile(const std::string& content, const std::string& tag = "hps") {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) +
                 ".tsv");
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the hps binary with the given arguments, capturing stdout.
inline CliResult run_cli(const std::string& args, const std::string& stdin_path = "") {
    std::string cmd = std::string(HPS_CLI_PATH) + " " + args;
    if (!stdin_path.empty()) cmd += " < " + stdin_path;
    cmd += " 2>/dev/null";
    CliResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Deterministic words over the canonical alphabet, length 3..15.
class WordGen {
public:
    explicit WordGen(unsigned seed = 0xC0FFEE) : rng_(seed) {}

    hps::NormalizedWord word(bool with_zwnj = false) {
        const std::u32string& alphabet = hps::canonical_alphabet();
        std::uniform_int_distribution<std::size_t> len(3, 15);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        hps::NormalizedWord w;
        std::size_t n = len(rng_);
        for (std::size_t i = 0; i < n; ++i) w.letters.push_back(alphabet[pick(rng_)]);
        if (with_zwnj && n > 2) {
            std::uniform_int_distribution<std::size_t> gap(1, n - 1);
            std::size_t g = gap(rng_);
            w.zwnj.push_back(g);
        }
        return w;
    }

    hps::PosTag pos() {
        std::uniform_int_distribution<int> pick(0, 2);
        return hps::kAllPos[static_cast<std::size_t>(pick(rng_))];
    }

private:
    std::mt19937 rng_;
};

/// Words from the bundled gold fixtures, for corpus-driven properties.
std::vector<std::pair<std::string, hps::PosTag>> fixture_words();

} // namespace support
