#pragma once

#include "sturmalg/word.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmalg {

class SpecParseError : public std::domain_error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : std::domain_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar:
///   alpha := INT "/" INT | "(" INT ("+"|"-") INT "*sqrt(" INT "))/" INT
///   spec  := "periodic:" BITSTRING | "mech:" alpha ["," "rho=" INT "/" INT]
/// e.g. "mech:1/2", "mech:(3-1*sqrt(5))/2,rho=1/3", "periodic:001".
WordSpec parse_spec(std::string_view text);

/// Inverse of parse_spec: parse_spec(render_spec(s)) == s.
std::string render_spec(const WordSpec& spec);

/// "INT/INT" or plain "INT".
Rat parse_rational(std::string_view text);

} // namespace sturmalg
