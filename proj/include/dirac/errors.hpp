#ifndef DIRAC_ERRORS_HPP
#define DIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonImaginary : Error {
    explicit NonImaginary(const std::string& what) : Error(what) {}
};

struct DegenerateLattice : Error {
    explicit DegenerateLattice(const std::string& what) : Error(what) {}
};

struct NotInSet : Error {
    explicit NotInSet(const std::string& what) : Error(what) {}
};

struct KeyOutsideSpectralSet : Error {
    explicit KeyOutsideSpectralSet(const std::string& what) : Error(what) {}
};

struct DegeneratePicks : Error {
    explicit DegeneratePicks(const std::string& what) : Error(what) {}
};

struct NotClosedForm : Error {
    explicit NotClosedForm(const std::string& what) : Error(what) {}
};

struct NonPeriodic : Error {
    explicit NonPeriodic(const std::string& what) : Error(what) {}
};

struct DegeneratePoint : Error {
    explicit DegeneratePoint(const std::string& what) : Error(what) {}
};

struct DegenerateSurface : Error {
    explicit DegenerateSurface(const std::string& what) : Error(what) {}
};

struct IOFailure : Error {
    explicit IOFailure(const std::string& what) : Error(what) {}
};

struct NonRectangularInput : Error {
    explicit NonRectangularInput(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct ParseFailure : Error {
    explicit ParseFailure(const std::string& what) : Error(what) {}
};

}  // namespace dirac

#endif
