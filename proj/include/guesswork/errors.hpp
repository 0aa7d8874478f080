#ifndef GUESSWORK_ERRORS_HPP
#define GUESSWORK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace guesswork {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveWeight : public Error {
public:
    using Error::Error;
};

class TooSmallAlphabet : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class OrderIsOne : public Error {
public:
    using Error::Error;
};

class DegenerateBase : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class BadRank : public Error {
public:
    using Error::Error;
};

class NonPositiveRho : public Error {
public:
    using Error::Error;
};

} // namespace guesswork

#endif // GUESSWORK_ERRORS_HPP
