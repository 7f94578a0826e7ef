#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ralad {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration or missing infrastructure (paths, tools, wiring).
class ConfigError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

// The corpus matched zero usable files; retrieval would be meaningless.
class EmptyCorpusError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class EmptyIndexError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// Transient network/transport failure; callers may retry.
class TransportError : public Error {
public:
    using Error::Error;
};

class AuthError : public Error {
public:
    using Error::Error;
};

// Remote service answered with an unexpected wire shape.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Index file defects, one class per failure mode so callers can tell them apart.
class IndexFormatError : public Error {
public:
    using Error::Error;
};

class IndexVersionError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

class IndexTruncatedError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

class IndexChecksumError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

// Synthesis report could not be parsed; message names the missing key/path.
class ParseError : public Error {
public:
    using Error::Error;
};

class PromptTooLongError : public Error {
public:
    PromptTooLongError(const std::string& msg, std::size_t overflow_chars)
        : Error(msg), overflow_chars_(overflow_chars) {}

    std::size_t overflow_chars() const { return overflow_chars_; }

private:
    std::size_t overflow_chars_;
};

}  // namespace ralad
