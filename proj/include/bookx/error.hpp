#ifndef BOOKX_ERROR_HPP
#define BOOKX_ERROR_HPP

#include <stdexcept>

namespace bookx {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for requests outside the range where a quantity is known,
/// e.g. a closed form for e_l(n) with l > 4.
class Unsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace bookx

#endif  // BOOKX_ERROR_HPP
