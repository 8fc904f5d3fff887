#pragma once

#include <stdexcept>
#include <string>

namespace dreem {

/// Base class for every error raised by the simulator library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies farther than the field radius from the base station.
class OutsideField : public Error {
public:
    using Error::Error;
};

/// A region id is not valid for the requested query.
class InvalidRegion : public Error {
public:
    using Error::Error;
};

/// A bit count, distance or energy amount was negative.
class NegativeInput : public Error {
public:
    using Error::Error;
};

/// A round was requested on a network with no alive nodes.
class EmptyNetwork : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

/// Aggregation was asked to summarize zero replications.
class EmptyInput : public Error {
public:
    using Error::Error;
};

} // namespace dreem
