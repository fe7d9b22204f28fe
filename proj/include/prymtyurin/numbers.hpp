#ifndef PRYMTYURIN_NUMBERS_HPP
#define PRYMTYURIN_NUMBERS_HPP

// Exact arithmetic primitives and the error taxonomy shared by every module.
//
// All engine arithmetic is exact: arbitrary-precision integers for orders,
// indices and correspondence coefficients, rationals for class-function
// values and the half-sum formulas.  Nothing in the library ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace prymtyurin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error kinds map one-to-one onto CLI exit codes:
//   Input    -> exit 2 (malformed scenarios, invariant violations in inputs)
//   Resource -> exit 3 (enumeration bound, matrix bound, infeasible structure)
//   Engine   -> exit 3 (mathematically degenerate or inconsistent data)
enum class ErrorKind { Input, Resource, Engine };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& message) {
    throw Error(ErrorKind::Input, message);
}
[[noreturn]] inline void throw_resource(const std::string& message) {
    throw Error(ErrorKind::Resource, message);
}
[[noreturn]] inline void throw_engine(const std::string& message) {
    throw Error(ErrorKind::Engine, message);
}

inline bool is_integral(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

// Converts an exact rational to an integer, failing loudly when the value
// has a nontrivial denominator.  `context` names the quantity in the error.
inline Integer require_integral(const Rational& value, const std::string& context) {
    if (!is_integral(value)) {
        throw_engine(context + ": value " + value.str() + " is not an integer");
    }
    return Integer(boost::multiprecision::numerator(value));
}

inline Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

inline Integer integer_power(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Integer positive_gcd(const Integer& a, const Integer& b) {
    Integer g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Integer(-g) : g;
}

inline std::string decimal(const Integer& value) { return value.str(); }
inline std::string decimal(const Rational& value) { return value.str(); }

} // namespace prymtyurin

#endif
