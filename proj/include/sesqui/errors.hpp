#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sesqui {

// Input text could not be decoded; offset is the byte position of the defect.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An operation was asked to run beyond its supported size bound.
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search hit its configured resource cap before reaching an answer.
// Distinct from a negative answer.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A certificate tree violated a structural invariant.
class structure_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sesqui
