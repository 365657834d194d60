#pragma once

#include <stdexcept>
#include <string>

namespace lierealise {

// Every failure raised by the library carries a stable machine-readable code
// ("dimension_mismatch", "parse_error", "schema_violation", ...). The CLI
// forwards the code verbatim in its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string &message)
        : std::runtime_error(message), code_(std::move(code))
    {
    }

    const std::string &code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char *dimension_mismatch = "dimension_mismatch";
inline constexpr const char *parse_error = "parse_error";
inline constexpr const char *schema_violation = "schema_violation";
inline constexpr const char *invalid_argument = "invalid_argument";
inline constexpr const char *not_a_lie_algebra = "not_a_lie_algebra";
inline constexpr const char *not_a_representation = "not_a_representation";
inline constexpr const char *malformed_pair = "malformed_pair";
inline constexpr const char *singular_linear_part = "singular_linear_part";
inline constexpr const char *nonzero_constant_term = "nonzero_constant_term";
inline constexpr const char *bracket_not_closed = "bracket_not_closed";
inline constexpr const char *unknown_entry = "unknown_entry";
inline constexpr const char *file_not_found = "file_not_found";
inline constexpr const char *degree_limit = "degree_limit";
} // namespace errc

} // namespace lierealise
