#ifndef FIBMAP_CORE_ERRORS_HPP
#define FIBMAP_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibmap {

// Base class for everything this library throws on purpose. The C API
// layer maps each subclass to a fibmap_status code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct InvalidZeckendorf : Error { using Error::Error; };
struct DigitOutOfRange : Error { using Error::Error; };
struct UnknownLetter : Error { using Error::Error; };
struct NotExtendable : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct ScanCapExceeded : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Raised when an internal consistency assertion fails (e.g. a quotient
// that is provably never an integer turns out to be one).
struct InternalError : Error { using Error::Error; };

}  // namespace fibmap

#endif
