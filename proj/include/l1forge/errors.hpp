#pragma once

#include <stdexcept>
#include <string>

namespace l1forge {

/// Base class for data-level failures (bad schema, bad offsets, bad labels).
/// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Failure while talking to an HTTP endpoint. Exit code 3 in the CLI.
/// Carries nothing by itself; generate_batch throws the derived
/// TransportError in llm_client.hpp which holds partial results.
class HttpError : public Error {
public:
    explicit HttpError(const std::string& what) : Error(what) {}
};

inline Error line_error(std::size_t line_no, const std::string& msg) {
    return Error("line " + std::to_string(line_no) + ": " + msg);
}

inline Error record_error(std::size_t record_index, const std::string& field,
                          const std::string& msg) {
    return Error("record " + std::to_string(record_index) + ", field '" + field +
                 "': " + msg);
}

}  // namespace l1forge
