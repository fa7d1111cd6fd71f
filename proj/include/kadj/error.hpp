#pragma once

#include <stdexcept>
#include <string>

namespace kadj {

// Base class for all library errors; the CLI maps these to exit code 2
// (input/format problems) unless they represent verification violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector shape mismatches and out-of-range indices.
struct DimensionError : Error {
    using Error::Error;
};

// Parameter outside its documented range (e.g. k > n).
struct RangeError : Error {
    using Error::Error;
};

// A subspace or flat does not have the rank an operation requires.
struct RankError : Error {
    using Error::Error;
};

// Malformed input: unparsable rationals, zero normals, duplicate
// hyperplanes, non-essential arrangements, dependent subspace bases.
struct InputError : Error {
    using Error::Error;
};

// An enumeration exceeded its configured budget (e.g. chain cap).
struct BudgetError : Error {
    using Error::Error;
};

} // namespace kadj
