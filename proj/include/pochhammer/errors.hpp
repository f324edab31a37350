#pragma once

#include <stdexcept>
#include <string>

namespace pochhammer {

/// Base of every error raised by the library. `user_facing()` separates
/// bad input (reported with exit code 2 by the CLI) from internal failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, bool user_facing = true)
        : std::runtime_error(what), user_facing_(user_facing) {}
    bool user_facing() const noexcept { return user_facing_; }

private:
    bool user_facing_;
};

#define POCHHAMMER_ERROR(Name, user)                                   \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(what, user) {}  \
    }

// ring
POCHHAMMER_ERROR(DivisionByZero, true);
POCHHAMMER_ERROR(EvaluationPole, false);
POCHHAMMER_ERROR(ParseError, true);
POCHHAMMER_ERROR(ShapeError, true);
// linalg
POCHHAMMER_ERROR(RandomizedRankFailure, false);
POCHHAMMER_ERROR(RankDisagreement, false);
// words / homology
POCHHAMMER_ERROR(DomainError, true);
POCHHAMMER_ERROR(InvalidHom, true);
POCHHAMMER_ERROR(NotALoopUpstairs, true);
POCHHAMMER_ERROR(InvalidInclusion, true);
// pants
POCHHAMMER_ERROR(KeyError, true);
POCHHAMMER_ERROR(ValidationError, true);
POCHHAMMER_ERROR(FlipUnsupported, true);
POCHHAMMER_ERROR(InvalidFlipSpec, true);
POCHHAMMER_ERROR(FashionObstruction, true);
POCHHAMMER_ERROR(UndecoratedGraph, true);
POCHHAMMER_ERROR(NotFashionable, true);

#undef POCHHAMMER_ERROR

}  // namespace pochhammer
