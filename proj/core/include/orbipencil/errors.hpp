#pragma once

#include <stdexcept>
#include <string>

namespace orbipencil {

// Failure codes surfaced through calc_error.  These are contract violations
// detected during a computation (bad inputs, inconsistent annotations), as
// opposed to schema_error which flags malformed input files.
enum class errc {
    not_coprime,
    non_divisible,
    odd_degree,
    unknown_family,
    unramified_character,
    stabilizer_mismatch,
    non_extendable,
    infinite_mark,
    malformed_graph,
    negative_intersection,
    not_contractible,
    integrality_violation,
    missing_annotation,
    ramification_mismatch,
    adjunction_violation,
    inconsistent_incidence,
    unknown_reference,
};

const char* errc_name(errc e);

class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Malformed scenario/spec files; carries a location hint when available.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbipencil
