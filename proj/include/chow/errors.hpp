#pragma once

#include <stdexcept>
#include <string>

namespace chow {

// Base class for all errors thrown by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-supplied argument (excluded parameter, conductor 0, ...).
struct invalid_argument_error : error {
    using error::error;
};

// Operands built over different field contexts.
struct context_mismatch_error : error {
    using error::error;
};

// Division by zero and friends.
struct arithmetic_error : error {
    using error::error;
};

// Embedding index not coprime to the conductor.
struct invalid_embedding_error : error {
    using error::error;
};

// An operation would leave the factored-linear class of rational functions.
struct unsupported_shape_error : error {
    using error::error;
};

// A cycle fails the admissibility criterion; message carries the witness.
struct inadmissible_error : error {
    using error::error;
};

// A curve term is not a function of x^n.
struct not_descendable_error : error {
    using error::error;
};

// Replaying a derivation or ledger step failed.
struct verification_error : error {
    using error::error;
};

// Parse failure; position is a byte offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// The numerical regulator cannot handle the geometric position of a cycle.
struct degenerate_position_error : error {
    using error::error;
};

}  // namespace chow
