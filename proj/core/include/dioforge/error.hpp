#pragma once

#include <stdexcept>
#include <string>

namespace dioforge {

/// Stable error codes for every failure mode the library reports.
/// The names (via errc_name) appear verbatim in CLI JSON output.
enum class Errc {
    zero_denominator,
    negative_radicand,
    factorization_incomplete,
    singular_curve,
    point_off_curve,
    not_on_twist,
    map_undefined,
    excluded_parameter,
    degenerate_multiple,
    degenerate_q,
    degenerate_seed,
    torsion_seed,
    malformed_tuple,
    parse_error,
    bad_fixture,
    internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace dioforge
