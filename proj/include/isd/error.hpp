#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data: tweet records, graph snapshots, value files.
class DataError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration or command-line parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A precondition of a graph algorithm does not hold (e.g. disconnected input).
class GraphError : public Error {
public:
    using Error::Error;
};

/// Pattern or rule text that does not parse. Carries the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace isd
