#pragma once

#include <string>
#include <string_view>

namespace hps {

/// Decodes UTF-8 into code points. Throws EncodingError on malformed input.
std::u32string decode_utf8(std::string_view s);

/// Encodes code points as UTF-8.
std::string encode_utf8(std::u32string_view s);
std::string encode_utf8(char32_t cp);

} // namespace hps
