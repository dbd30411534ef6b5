#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ufa/bitset.hpp"

namespace ufa {

using Word = std::vector<Index>;  // symbol indices into an alphabet

class UnknownSymbol : public std::invalid_argument {
public:
    explicit UnknownSymbol(const std::string& label)
        : std::invalid_argument("symbol not in alphabet: " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// Determinization discovered more subsets than the caller allowed.
class StateLimitExceeded : public std::runtime_error {
public:
    StateLimitExceeded(std::size_t cap, std::size_t discovered)
        : std::runtime_error("state limit exceeded: more than " + std::to_string(cap) + " subsets (" +
                             std::to_string(discovered) + " discovered)"),
          cap_(cap),
          discovered_(discovered) {}
    std::size_t cap() const { return cap_; }
    std::size_t discovered() const { return discovered_; }

private:
    std::size_t cap_;
    std::size_t discovered_;
};

// An operation that requires a UFA was given an ambiguous automaton.
class AmbiguousInput : public std::invalid_argument {
public:
    AmbiguousInput(Word witness, const std::string& rendered)
        : std::invalid_argument("automaton is ambiguous; witness word: " + rendered), witness_(std::move(witness)) {}
    const Word& witness() const { return witness_; }

private:
    Word witness_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ufa
