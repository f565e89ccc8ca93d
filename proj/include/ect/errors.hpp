#pragma once

#include <stdexcept>
#include <string>

namespace ect {

enum class Errc {
    InvalidArgument,
    DivisionByZero,
    NotASquare,
    ZeroSeries,
    TowerDepthExceeded,
    SingularCurve,
    DegenerateLambda,
    PointNotOnCurve,
    ZeroTwist,
    RootsNotInTower,
    BudgetExceeded,
    PrecisionLoss,
    AmbiguousTolerance,
    KernelElement,
    NotNormalized,
    NotIntegralModel,
    RamifiedTwist,
    AdditiveReduction,
    NotOnIdentityComponent,
    IdentityPoint,
    MultiplierNotFound,
    Unsupported,
};

const char* errc_name(Errc c) noexcept;

// Exit code class used by the command-line front end: 2 for bad input,
// 3 for budget or precision exhaustion.
int errc_exit_code(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ect
