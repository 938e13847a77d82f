#pragma once

#include <stdexcept>
#include <string>

namespace hopfcat {

/// Base class of all hopfcat errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: unparsable scalars, wrong tensor shapes, bad JSON.
/// CLI exit code 2.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

/// Well-formed data that violates a mathematical precondition (not a
/// sub-Hopf algebra, non-parallel pair, section mismatch, ...).
/// CLI exit code 3.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A law the library guarantees failed to hold at runtime. These are the
/// most valuable failures: a reachable one is a counterexample to a theorem
/// the code relies on. CLI exit code 4.
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace hopfcat
