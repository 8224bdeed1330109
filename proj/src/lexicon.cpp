#include "hps/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "hps/errors.hpp"

namespace hps {

ExceptionLexicon ExceptionLexicon::parse(std::string_view text, PosTag pos,
                                         const std::string& origin) {
    ExceptionLexicon lex(pos);
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

        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw ParseError(origin, lineno, "expected surface<TAB>stem");
        NormalizedWord surface, stem;
        try {
            surface = normalize(line.substr(0, tab));
            stem = normalize(line.substr(tab + 1));
        } catch (const Error& e) {
            throw ParseError(origin, lineno, e.what());
        }
        auto it = lex.entries_.find(surface);
        if (it != lex.entries_.end()) {
            if (it->second != stem)
                throw DuplicateKeyError(origin + ":" + std::to_string(lineno) +
                                        ": surface '" + line.substr(0, tab) +
                                        "' already maps to a different stem");
            continue;
        }
        lex.entries_.emplace(std::move(surface), std::move(stem));
    }
    return lex;
}

ExceptionLexicon ExceptionLexicon::load(const std::filesystem::path& path, PosTag pos) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), pos, path.string());
}

std::optional<NormalizedWord> ExceptionLexicon::lookup(const NormalizedWord& w) const {
    auto it = entries_.find(w);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ExceptionLexicon::insert(const NormalizedWord& surface, const NormalizedWord& stem) {
    entries_[surface] = stem;
}

ExceptionLexicon default_lexicon(PosTag pos) {
    return ExceptionLexicon::parse(default_lexicon_text(pos), pos, "<builtin lexicon>");
}

} // namespace hps
