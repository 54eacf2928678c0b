#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affweyl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedRank : public Error {
public:
    using Error::Error;
};

class NotARoot : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class NotInCorootLattice : public Error {
public:
    using Error::Error;
};

class ImaginaryRootReflection : public Error {
public:
    using Error::Error;
};

class LemmaConditionFailed : public Error {
public:
    using Error::Error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

class FixtureUnavailable : public Error {
public:
    using Error::Error;
};

} // namespace affweyl
