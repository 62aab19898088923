#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdnorm {

enum class Errc {
    invalid_radicand,   // m < 2
    perfect_square,     // m is a perfect square
    radicand_mismatch,  // binary operation on different m
    zero_element,
    not_a_unit,
    nonpositive_norm,   // n <= 0 handed to the solver
    invalid_rd_form,
    precondition,
    unknown_claim,
    composite,
    invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this one exception type; the
// code is what the command-line front end puts in its error envelope.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace rdnorm
