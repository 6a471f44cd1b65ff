#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace surgery {

/// Input text/JSON could not be parsed. Carries the 1-based line number
/// when the offending location is known (0 otherwise).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line_number() const { return line_; }

private:
    int line_ = 0;
};

/// A precondition on the mathematical input was violated (simplex not in the
/// complex, wrong dimension, non-simplicial vertex map, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (d∘d != 0, chain-map identity broken,
/// shape mismatch). Indicates a bug or a sign-convention inconsistency.
class structural_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// No ±1 facet weighting with zero boundary exists. The witness names the
/// offending codimension-1 simplex (empty when the failure is global).
class not_orientable_error : public std::runtime_error {
public:
    not_orientable_error(const std::string& msg, std::vector<int> witness_vertices)
        : std::runtime_error(msg), witness_(std::move(witness_vertices)) {}

    const std::vector<int>& witness_vertices() const { return witness_; }

private:
    std::vector<int> witness_;
};

} // namespace surgery
