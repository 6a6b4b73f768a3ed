#pragma once

#include <stdexcept>
#include <string>

namespace germ {

/// Input validation failure (bad job data, point off locus, ...); exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lemma-level or engine invariant failed; exit code 2.  Signals an
/// implementation bug or a genuine counterexample, never a valid outcome.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded; exit code 3.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace germ
