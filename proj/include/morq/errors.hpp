#pragma once

#include <stdexcept>
#include <string>

namespace morq {

// Enumeration refuses to run past its configured cap; callers shrink the
// parameters or raise --budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& where, unsigned long long required,
                   unsigned long long cap)
        : std::runtime_error(where + ": enumeration size " + std::to_string(required) +
                             " exceeds budget " + std::to_string(cap)),
          required(required), cap(cap) {}
    unsigned long long required;
    unsigned long long cap;
};

class UnsupportedShape : public std::runtime_error {
public:
    explicit UnsupportedShape(const std::string& msg) : std::runtime_error(msg) {}
};

// Every weight value admits an exact King equality; no chamber decomposition.
class AllIrregular : public std::runtime_error {
public:
    explicit AllIrregular(const std::string& msg) : std::runtime_error(msg) {}
};

class MissingConstant : public std::runtime_error {
public:
    explicit MissingConstant(const std::string& key)
        : std::runtime_error("required linear-algebra constant not available: " + key),
          key(key) {}
    std::string key;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace morq
