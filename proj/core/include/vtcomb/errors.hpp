#ifndef VTCOMB_ERRORS_HPP
#define VTCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vt {

// All domain failures carry a stable machine-readable code alongside the
// human message. The CLI maps these to error JSON and exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline Error invalid_input(const std::string& msg)  { return Error("invalid-input", msg); }
inline Error oracle_too_large(const std::string& msg) { return Error("oracle-too-large", msg); }
inline Error size_cap(const std::string& msg)       { return Error("size-cap-exceeded", msg); }
inline Error cycle_error(const std::string& msg)    { return Error("directed-cycle", msg); }
inline Error unsupported_term(const std::string& msg) { return Error("unsupported-term", msg); }
inline Error inconclusive(const std::string& msg)   { return Error("inconclusive", msg); }
inline Error margin_error(const std::string& msg)   { return Error("margin", msg); }
inline Error coverage_error(const std::string& msg) { return Error("coverage", msg); }
inline Error missing_offset(const std::string& msg) { return Error("unresolvable-offset", msg); }

}  // namespace vt

#endif
