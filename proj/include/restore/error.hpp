#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace restore {

/// Raised when an instance violates the damaged-tree assumptions.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        CycleDetected,
        Disconnected,
        MultipleRoots,
        UnknownRoot,
        UnknownNode,
        NegativeRepairTime,
        NegativeWeight,
        DuplicateId,
        NoPositiveWeight,
        InvalidCrews,
    };

    ValidationError(Kind kind, std::string element)
        : std::runtime_error(std::string(kind_name(kind)) + "(" + element + ")"),
          kind_(kind),
          element_(std::move(element)) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& element() const noexcept { return element_; }

    static constexpr std::string_view kind_name(Kind kind) {
        switch (kind) {
        case Kind::CycleDetected: return "CycleDetected";
        case Kind::Disconnected: return "Disconnected";
        case Kind::MultipleRoots: return "MultipleRoots";
        case Kind::UnknownRoot: return "UnknownRoot";
        case Kind::UnknownNode: return "UnknownNode";
        case Kind::NegativeRepairTime: return "NegativeRepairTime";
        case Kind::NegativeWeight: return "NegativeWeight";
        case Kind::DuplicateId: return "DuplicateId";
        case Kind::NoPositiveWeight: return "NoPositiveWeight";
        case Kind::InvalidCrews: return "InvalidCrews";
        }
        return "ValidationError";
    }

private:
    Kind kind_;
    std::string element_;
};

/// Malformed JSON; carries the 1-based position of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("ParseError at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed JSON that does not match the instance schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(std::string field, const std::string& detail = {})
        : std::runtime_error("SchemaError(" + field + ")" + (detail.empty() ? "" : ": " + detail)),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ListNotPermutation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration guard tripped (brute force or exhaustive separation).
class TooLarge : public std::length_error {
public:
    TooLarge(std::string_view what, std::size_t n, std::size_t limit)
        : std::length_error("TooLarge(" + std::to_string(n) + "): " + std::string(what) +
                            " is limited to " + std::to_string(limit)),
          n_(n) {}

    std::size_t n() const noexcept { return n_; }

private:
    std::size_t n_;
};

class LpError : public std::runtime_error {
public:
    enum class Kind { Infeasible, Unbounded, IterationLimit };

    LpError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A proven bound or structural invariant failed; always an implementation bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace restore
