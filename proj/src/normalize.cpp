#include "hps/normalize.hpp"

#include <algorithm>

#include "hps/errors.hpp"
#include "hps/utf8.hpp"

namespace hps {

namespace {

constexpr char32_t kZwnj = 0x200C;

// 28 Arabic-script base letters plus گ چ پ ژ.
constexpr char32_t kAlphabet[] = {
    0x0627, // ا
    0x0628, // ب
    0x067E, // پ
    0x062A, // ت
    0x062B, // ث
    0x062C, // ج
    0x0686, // چ
    0x062D, // ح
    0x062E, // خ
    0x062F, // د
    0x0630, // ذ
    0x0631, // ر
    0x0632, // ز
    0x0698, // ژ
    0x0633, // س
    0x0634, // ش
    0x0635, // ص
    0x0636, // ض
    0x0637, // ط
    0x0638, // ظ
    0x0639, // ع
    0x063A, // غ
    0x0641, // ف
    0x0642, // ق
    0x06A9, // ک
    0x06AF, // گ
    0x0644, // ل
    0x0645, // م
    0x0646, // ن
    0x0648, // و
    0x0647, // ه
    0x06CC, // ی
};

char32_t fold_variant(char32_t cp) {
    switch (cp) {
        case 0x064A: // Arabic yeh
        case 0x0649: // alef maksura
        case 0x0626: // yeh with hamza
        case 0x06D2: // yeh barree
            return 0x06CC;
        case 0x0643: // Arabic kaf
        case 0x06AA: // swash kaf
            return 0x06A9;
        case 0x0622: // alef with madda
        case 0x0623: // alef with hamza above
        case 0x0625: // alef with hamza below
        case 0x0671: // alef wasla
            return 0x0627;
        case 0x0624: // waw with hamza
            return 0x0648;
        case 0x0629: // teh marbuta
        case 0x06C0: // heh with yeh above
            return 0x0647;
        default:
            return cp;
    }
}

bool is_ignorable(char32_t cp) {
    if (cp >= 0x064B && cp <= 0x065F) return true; // harakat, tanween, combining hamza
    switch (cp) {
        case 0x0621: // standalone hamza
        case 0x0640: // tatweel
        case 0x0670: // superscript alef
        case 0x200D: // ZWJ
        case 0x200E: // LRM
        case 0x200F: // RLM
        case 0x00AD: // soft hyphen
        case 0xFEFF: // BOM
            return true;
        default:
            return false;
    }
}

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n' || cp == U'\f' ||
           cp == U'\v' || cp == 0x00A0;
}

} // namespace

bool is_canonical_letter(char32_t cp) {
    for (char32_t c : kAlphabet)
        if (c == cp) return true;
    return false;
}

const std::u32string& canonical_alphabet() {
    static const std::u32string letters(kAlphabet, std::size(kAlphabet));
    return letters;
}

NormalizedWord normalize(std::string_view raw) {
    std::u32string cps = decode_utf8(raw);

    std::size_t begin = 0, end = cps.size();
    while (begin < end && is_space(cps[begin])) ++begin;
    while (end > begin && is_space(cps[end - 1])) --end;
    if (begin == end) throw EmptyInputError("input has no letters");

    NormalizedWord w;
    bool pending_zwnj = false;
    for (std::size_t i = begin; i < end; ++i) {
        char32_t cp = fold_variant(cps[i]);
        if (is_ignorable(cp)) continue;
        if (cp == kZwnj) {
            if (!w.letters.empty()) pending_zwnj = true;
            continue;
        }
        if (is_space(cp))
            throw NonPersianContentError("input contains whitespace; one word per call");
        if (!is_canonical_letter(cp)) {
            static const char* hex = "0123456789ABCDEF";
            std::string code;
            for (int shift = 20; shift >= 0; shift -= 4)
                code += hex[(static_cast<unsigned>(cp) >> shift) & 0xF];
            throw NonPersianContentError("non-Persian character U+" + code);
        }
        if (pending_zwnj) {
            w.zwnj.push_back(w.letters.size());
            pending_zwnj = false;
        }
        w.letters.push_back(cp);
    }
    if (w.letters.empty()) throw EmptyInputError("input has no letters");
    return w;
}

std::string render(const NormalizedWord& w) {
    std::string out;
    std::size_t gap = 0;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (gap < w.zwnj.size() && w.zwnj[gap] == i) {
            out += encode_utf8(static_cast<char32_t>(kZwnj));
            ++gap;
        }
        out += encode_utf8(w.letters[i]);
    }
    return out;
}

std::size_t letter_count(const NormalizedWord& w) { return w.letters.size(); }

NormalizedWord drop_last(const NormalizedWord& w, std::size_t k) {
    NormalizedWord r;
    std::size_t n = w.letters.size() - std::min(k, w.letters.size());
    r.letters = w.letters.substr(0, n);
    for (std::size_t g : w.zwnj)
        if (g >= 1 && g < n) r.zwnj.push_back(g);
    return r;
}

NormalizedWord drop_first(const NormalizedWord& w, std::size_t k) {
    NormalizedWord r;
    std::size_t start = std::min(k, w.letters.size());
    r.letters = w.letters.substr(start);
    for (std::size_t g : w.zwnj)
        if (g > start && g - start < r.letters.size()) r.zwnj.push_back(g - start);
    return r;
}

bool ends_with(const NormalizedWord& w, std::u32string_view tail) {
    if (tail.size() > w.letters.size()) return false;
    return std::equal(tail.rbegin(), tail.rend(), w.letters.rbegin());
}

bool starts_with(const NormalizedWord& w, std::u32string_view head) {
    if (head.size() > w.letters.size()) return false;
    return std::equal(head.begin(), head.end(), w.letters.begin());
}

std::size_t NormalizedWordHash::operator()(const NormalizedWord& w) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (char32_t cp : w.letters) mix(static_cast<std::size_t>(cp));
    mix(0x1F);
    for (std::size_t g : w.zwnj) mix(g);
    return h;
}

} // namespace hps
