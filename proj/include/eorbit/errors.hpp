#pragma once

#include <stdexcept>
#include <string>

namespace eorbit {

// Every domain error carries a stable name that the CLI prints verbatim on
// the diagnostic stream before exiting with code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define EORBIT_ERROR(Name)                                                  \
    class Name : public Error {                                            \
    public:                                                                 \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}        \
    }

EORBIT_ERROR(InvalidDiagram);
EORBIT_ERROR(RankMismatch);
EORBIT_ERROR(UnsupportedBasis);
EORBIT_ERROR(IndexOutOfRange);
EORBIT_ERROR(GroupTooLarge);
EORBIT_ERROR(NonConvergence);
EORBIT_ERROR(NotStrictlyDominant);
EORBIT_ERROR(NonIntegralMultiplicity);
EORBIT_ERROR(UnsupportedBranch);
EORBIT_ERROR(UnsupportedSeries);
EORBIT_ERROR(RankTooLarge);
EORBIT_ERROR(GridTooLarge);
EORBIT_ERROR(OrbitsNotSeparated);
EORBIT_ERROR(BandLimitExceeded);

#undef EORBIT_ERROR

} // namespace eorbit
