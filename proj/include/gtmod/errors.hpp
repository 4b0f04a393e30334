#ifndef GTMOD_ERRORS_HPP
#define GTMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtmod
{

/// Malformed or out-of-range input: bad positions, size mismatches, invalid specs.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula hit a vanishing denominator at a critical row with no path attached.
class PoleWithoutPath : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A coefficient that must be regular at the critical point came out with a pole.
class IrregularCoefficient : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace gtmod

#endif
