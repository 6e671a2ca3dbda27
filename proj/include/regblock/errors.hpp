#ifndef REGBLOCK_ERRORS_HPP
#define REGBLOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regblock {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct NotIsolated : Error {
    using Error::Error;
};
struct ZeroDirectionalPolynomial : Error {
    using Error::Error;
};
struct NotInV : Error {
    using Error::Error;
};
struct DegenerateRoots : Error {
    using Error::Error;
};
struct NotCanonicalizable : Error {
    using Error::Error;
};
struct NotQuadratic : Error {
    using Error::Error;
};
struct Unsupported : Error {
    using Error::Error;
};
struct NotHyperbolic : Error {
    using Error::Error;
};
struct NotHomeomorphism : Error {
    using Error::Error;
};
struct RealPoleUnexpected : Error {
    using Error::Error;
};
struct LadderDivergence : Error {
    using Error::Error;
};
struct TruncationTooLow : Error {
    using Error::Error;
};
struct TransversalityLost : Error {
    using Error::Error;
};
struct BlowupEscape : Error {
    using Error::Error;
};
struct IllConditioned : Error {
    using Error::Error;
};
struct Inconclusive : Error {
    using Error::Error;
};

}  // namespace regblock

#endif
