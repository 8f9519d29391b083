#pragma once
#include <stdexcept>
#include <string>

namespace knotconc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-algebra
struct SingularMatrix : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };

// lens recursion
struct BadIndex : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NoSymmetricLabeling : Error { using Error::Error; };

// goeritz forms
struct NotNegativeDefinite : Error { using Error::Error; };
struct BadTwistCount : Error { using Error::Error; };

// obstruction search
struct UnsupportedDeterminant : Error { using Error::Error; };
struct UnsupportedType : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };

// database / reports
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct PresentationUnavailable : Error { using Error::Error; };

} // namespace knotconc
