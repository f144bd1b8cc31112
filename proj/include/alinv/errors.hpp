#pragma once

#include <stdexcept>
#include <string>

namespace alinv {

enum class Errc {
    not_prime,
    degree_too_large,
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    ambient_mismatch,
    not_invertible,
    closure_cap_exceeded,
    empty_collection,
    empty_subset,
    collection_too_large,
    group_too_large,
    hypothesis_violated,
    char_divides_group_order,
    not_invariant,
    not_stable,
    descent_failed,
    not_applicable,
    invalid_pairing,
    invalid_argument,
    schema_error,
    internal_check_failed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Internal consistency checks guard certified claims; a failure is a bug,
// never a recoverable condition.
inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) fail(Errc::internal_check_failed, msg);
}

} // namespace alinv
