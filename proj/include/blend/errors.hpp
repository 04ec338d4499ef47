#pragma once

#include <stdexcept>
#include <string>

namespace blend {

// Base class for all toolkit errors. The CLI maps anything derived from
// Error to exit code 2; everything else is a usage error (exit 1).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad content in an input file (duplicate id, out-of-range score, bad label).
struct IngestError : Error {
    using Error::Error;
};

// Structurally malformed file (wrong header, unparseable line).
struct FormatError : Error {
    using Error::Error;
};

// Id sets that were required to match do not.
struct AlignmentError : Error {
    using Error::Error;
};

// Labels contain only one class; AUROC is undefined.
struct DegenerateLabelsError : Error {
    using Error::Error;
};

// An operation received an empty table where a non-empty one is required.
struct EmptyInputError : Error {
    using Error::Error;
};

// Invalid configuration value or inconsistent argument shapes.
struct ConfigError : Error {
    using Error::Error;
};

// A score is outside the domain an operator is defined on.
struct DomainError : Error {
    using Error::Error;
};

// The objective returned a non-finite value during optimization.
struct ObjectiveError : Error {
    using Error::Error;
};

// A recipe reference cannot be resolved against the supplied models.
struct RecipeError : Error {
    using Error::Error;
};

// Filesystem-level failure while writing output.
struct IoError : Error {
    using Error::Error;
};

}  // namespace blend
