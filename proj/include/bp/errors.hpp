#pragma once

#include <stdexcept>
#include <string>

namespace bp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyMatrix : Error {
    EmptyMatrix() : Error("matrix has no rows or no columns") {}
};

struct NonFiniteEntry : Error {
    long row, col;
    NonFiniteEntry(long r, long c)
        : Error("non-finite entry at (" + std::to_string(r) + "," + std::to_string(c) + ")"),
          row(r), col(c) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InfeasibleNu : Error {
    using Error::Error;
};

struct TooFewRows : Error {
    using Error::Error;
};

struct TooFewScores : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct OneClassOnly : Error {
    OneClassOnly() : Error("AUC needs at least one positive and one negative label") {}
};

struct InvalidRho : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct ParseError : Error {
    long line;
    ParseError(long l, const std::string& what)
        : Error("line " + std::to_string(l) + ": " + what), line(l) {}
};

struct MissingLabelColumn : Error {
    using Error::Error;
};

struct NonNumericFeature : Error {
    long row, col;
    NonNumericFeature(long r, long c, const std::string& cell)
        : Error("non-numeric feature '" + cell + "' at row " + std::to_string(r) +
                ", column " + std::to_string(c)),
          row(r), col(c) {}
};

struct UnsupportedAttributeKind : Error {
    using Error::Error;
};

struct MissingOutlierAttribute : Error {
    using Error::Error;
};

struct IoFailure : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    using Error::Error;
};

}  // namespace bp
