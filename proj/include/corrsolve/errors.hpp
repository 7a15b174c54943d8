#ifndef CORRSOLVE_ERRORS_HPP
#define CORRSOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corrsolve {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input (polynomial text, start point, flags). CLI exit 1.
struct input_error : error {
    using error::error;
};

struct parse_error : input_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Two finiteness methods produced contradictory evidence, or an exact
// verification that must hold failed. CLI exit 3.
struct inconsistency_error : error {
    using error::error;
};

// A computation hit a documented structural limitation (e.g. a component
// of the curve is a coordinate line, or a Puiseux degeneracy beyond the
// supported field towers).
struct unsupported_error : error {
    using error::error;
};

} // namespace corrsolve

#endif
