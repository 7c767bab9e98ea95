#pragma once

#include <stdexcept>
#include <string>

namespace gradlab {

// Failure categories. The CLI maps them onto exit codes:
//   InputError / PreconditionViolation -> 2, ResourceExhausted -> 3.
// InternalError signals a broken invariant (a bug), never bad user input.
enum class ErrorKind {
    InputError,
    PreconditionViolation,
    ResourceExhausted,
    InternalError,
};

class GradlabError : public std::runtime_error {
public:
    GradlabError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& message) {
    throw GradlabError(ErrorKind::InputError, message);
}

[[noreturn]] inline void throw_precondition(const std::string& message) {
    throw GradlabError(ErrorKind::PreconditionViolation, message);
}

[[noreturn]] inline void throw_resource(const std::string& message) {
    throw GradlabError(ErrorKind::ResourceExhausted, message);
}

[[noreturn]] inline void throw_internal(const std::string& message) {
    throw GradlabError(ErrorKind::InternalError, message);
}

// Invariant check that stays active in release builds; the library is oracle
// material, so broken invariants must never pass silently.
inline void require_internal(bool condition, const std::string& message) {
    if (!condition) throw_internal(message);
}

}  // namespace gradlab
