#pragma once

#include <stdexcept>
#include <string>

namespace cfem {

// Base class for all library failures. Subclasses distinguish the
// conditions callers may want to recover from individually.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

// The C(K) radicand came out negative past floating-point noise.
// This indicates a broken metric computation, not a bad input.
class NegativeRadicand : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class TooFine : public Error {
public:
    using Error::Error;
};

class ConformityError : public Error {
public:
    ConformityError(const std::string& msg, int elem_a, int elem_b = -1)
        : Error(msg), elem_a(elem_a), elem_b(elem_b) {}
    int elem_a;  // first offending triangle
    int elem_b;  // second triangle, or -1
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

class FormatVersionError : public Error {
public:
    using Error::Error;
};

class MissingHessian : public Error {
public:
    using Error::Error;
};

class MissingExact : public Error {
public:
    using Error::Error;
};

class MaxIterations : public Error {
public:
    MaxIterations(const std::string& msg, int iterations, double residual)
        : Error(msg), iterations(iterations), residual(residual) {}
    int iterations;
    double residual;
};

class SizeCap : public Error {
public:
    using Error::Error;
};

class NonFinite : public Error {
public:
    using Error::Error;
};

}  // namespace cfem
