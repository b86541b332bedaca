#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nichols {

/// Arithmetic on an operand outside the operation's domain (division by zero,
/// root-of-unity test on zero, mismatched fields).
class InvalidOperand : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input. `position` is a byte offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          message_(std::move(message)), position_(position) {}

    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

class NonHomogeneous : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CutoffExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Reflection at vertex i is blocked because m_ij does not exist.
class UndefinedCartanEntry : public std::runtime_error {
public:
    UndefinedCartanEntry(int i, int j)
        : std::runtime_error("m_ij undefined for (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")"),
          i_(i), j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

} // namespace nichols
