#pragma once

#include <stdexcept>
#include <string>

namespace ocdna {

/// A decoder's precondition was breached: the received rows are not within
/// the error model's reach of any codeword.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ocdna
