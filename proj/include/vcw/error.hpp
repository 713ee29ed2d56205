#pragma once
#include <stdexcept>
#include <string>

namespace vcw {

// Input document could not be read (message carries the 1-based line).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A synthesis precondition (3-edge-connectivity, qualifying vertex, ...)
// does not hold for the given graph.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vcw
