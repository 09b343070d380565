#pragma once

#include <stdexcept>
#include <string>

namespace gpe {

/// Malformed input data (graph files, edge-set files). Carries a 1-based
/// line number when one is known, 0 otherwise.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A caller violated a documented precondition (bad n, wrong family, set
/// member not an edge, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checked integer arithmetic would wrap.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gpe
