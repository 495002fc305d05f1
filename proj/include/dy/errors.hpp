#pragma once

#include <stdexcept>
#include <string>

namespace dy {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define DY_ERROR(Name)                                                     \
    struct Name : Error {                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}     \
    }

DY_ERROR(ZeroDenominator);
DY_ERROR(PoleAtExpansionPoint);
DY_ERROR(EvaluationAtPole);
DY_ERROR(PoleCollision);
DY_ERROR(SingularT);
DY_ERROR(SingularLeadingMinor);
DY_ERROR(NonTerminatingSeries);
DY_ERROR(WindowExhausted);
DY_ERROR(EqualParameters);
DY_ERROR(ZeroParameter);
DY_ERROR(NoCartanSolution);
DY_ERROR(ConfigError);
DY_ERROR(ParseError);

#undef DY_ERROR

}  // namespace dy
