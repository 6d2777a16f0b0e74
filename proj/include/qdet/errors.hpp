#pragma once

#include <stdexcept>
#include <string>

namespace qdet {

// Base for every error raised by the library. Catching this is enough to
// keep a verification run alive when a parameter point turns out singular.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// A structural denominator (Pochhammer factor, recurrence coefficient, pivot
// of a closed form) vanished. `where()` names the offending factor.
class PoleError : public Error {
public:
    explicit PoleError(std::string where)
        : Error("pole at " + where), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace qdet
