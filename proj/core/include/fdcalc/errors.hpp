#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdcalc {

/// Malformed group spec string. `position` is the byte offset of the
/// first offending character in the original input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Descriptor denotes an infinite group where a concrete finite one is required.
class NotFiniteError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested homomorphism does not exist (generator image order mismatch).
class IllDefinedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input lies outside the class of groups the computation covers.
class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation requires nontrivial groups.
class TrivialGroupError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scan certified finite by a structural test ran past its hard cap.
/// This means closed form and definitional scan disagree somewhere;
/// it is a defect signal, not a user error.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what, std::uint64_t cap)
        : std::runtime_error(what), cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

/// Definitional oracle was asked to do more work than its budget allows.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fdcalc
