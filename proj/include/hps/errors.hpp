#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hps {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input had no letters left after trimming and normalization.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Input contained characters outside the Persian/Arabic script.
class NonPersianContentError : public Error {
public:
    using Error::Error;
};

/// Bad byte-level or record-level syntax in a data file.
class ParseError : public Error {
public:
    ParseError(const std::string& origin, std::size_t line, const std::string& reason)
        : Error(origin + ":" + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid rule file with inconsistent contents.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two suffix groups claim the same string for one part of speech.
class ConflictError : public Error {
public:
    using Error::Error;
};

/// One lexicon surface mapped to two different stems.
class DuplicateKeyError : public Error {
public:
    using Error::Error;
};

/// Malformed UTF-8.
class EncodingError : public Error {
public:
    using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace hps
