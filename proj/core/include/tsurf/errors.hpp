#ifndef TSURF_ERRORS_HPP
#define TSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsurf {

enum class ErrorKind {
    InvalidIndex,       // bad field or group index (N < 3, m < 3, ...)
    IncompatibleIndex,  // m does not divide N, embeddings across fields, ...
    InvalidAutomorphism,// conjugation exponent not coprime to 2N
    DivisionByZero,
    Domain,             // non-integral input, parity of unobstructed pair, ...
    Precondition,       // odd index to special_pa, det != 1, ...
    Obstruction,        // obstructed (m, n) pair where unobstructed required
    Classification,     // fixed points of a non-hyperbolic element, ...
    UnsupportedReduction,
    Parse,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace tsurf

#endif
