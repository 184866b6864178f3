#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppbase {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration, lattice or search hit its explicit cap. Never downgraded
// to an approximate answer.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A search ran past its time budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Text input (cycle notation, group files) failed to parse.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ppbase
