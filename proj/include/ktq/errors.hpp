#pragma once

#include <stdexcept>
#include <string>

namespace ktq {

// A configured resource guard tripped (basis size cap, enumeration limit).
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed. This is stronger than argument validation:
// it indicates either a bug or an input that silently broke a precondition
// (e.g. propagating a coloring with a non-quasigroup table).
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace ktq
