#pragma once

#include <stdexcept>
#include <string>

namespace chessgaze {

// Base for everything this library throws. DataError covers malformed or
// inconsistent inputs, NumericError covers failures of the math itself.
// The CLI maps them to exit codes 2 and 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct MalformedFen : DataError {
    using DataError::DataError;
};

struct MalformedPgn : DataError {
    using DataError::DataError;
};

struct IllegalMove : DataError {
    IllegalMove(const std::string& msg, int game_index = -1, int ply = -1)
        : DataError(msg), game_index(game_index), ply(ply) {}
    int game_index;
    int ply;
};

struct AmbiguousMove : DataError {
    using DataError::DataError;
};

struct UnknownGlyphSet : DataError {
    using DataError::DataError;
};

struct WindowOutOfBounds : DataError {
    using DataError::DataError;
};

struct DimensionMismatch : DataError {
    using DataError::DataError;
};

struct EmptyFixations : DataError {
    using DataError::DataError;
};

struct NonPositiveSigma : DataError {
    using DataError::DataError;
};

struct EmptyList : DataError {
    using DataError::DataError;
};

struct ConstantMap : NumericError {
    using NumericError::NumericError;
};

struct ZeroMass : NumericError {
    using NumericError::NumericError;
};

struct NoFixationsFound : DataError {
    using DataError::DataError;
};

struct MissingBoardState : DataError {
    using DataError::DataError;
};

struct InvalidConfig : DataError {
    using DataError::DataError;
};

struct EmptyDataset : DataError {
    using DataError::DataError;
};

struct NonFiniteLoss : NumericError {
    NonFiniteLoss(const std::string& msg, int epoch = -1)
        : NumericError(msg), epoch(epoch) {}
    int epoch;
};

struct FormatMismatch : DataError {
    using DataError::DataError;
};

struct IoFailure : DataError {
    using DataError::DataError;
};

struct MalformedCsv : DataError {
    using DataError::DataError;
};

struct MissingImage : DataError {
    using DataError::DataError;
};

struct EmptyTask : DataError {
    using DataError::DataError;
};

struct UnknownTask : DataError {
    using DataError::DataError;
};

struct OverlappingSpec : DataError {
    using DataError::DataError;
};

struct TooManyFolds : DataError {
    using DataError::DataError;
};

struct CorruptSmap : DataError {
    using DataError::DataError;
};

} // namespace chessgaze
