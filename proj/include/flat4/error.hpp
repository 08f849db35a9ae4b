#pragma once

#include <stdexcept>
#include <string>

namespace flat4 {

/// Base class for every failure raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class UnrepresentableRadical : public Error {
public:
    explicit UnrepresentableRadical(long long n)
        : Error("unrepresentable radical: sqrt(" + std::to_string(n) + ")") {}
};

class UnsupportedFixedLattice : public Error {
public:
    using Error::Error;
};

class InvalidGroup : public Error {
public:
    using Error::Error;
};

class NotDiagonalType : public Error {
public:
    NotDiagonalType() : Error("not diagonal type") {}
};

class NonabelianUnsupported : public Error {
public:
    NonabelianUnsupported() : Error("nonabelian holonomy unsupported") {}
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

}  // namespace flat4
