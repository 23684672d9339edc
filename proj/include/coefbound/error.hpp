#ifndef COEFBOUND_ERROR_HPP
#define COEFBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coefbound
{

// Input outside an operation's domain (bad range, bad order, bad flag value).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Input formally inside the domain but numerically degenerate (zero pivot).
class DegenerateInput : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// (mu, nu) lies in none of the quoted coefficient-functional regions.
class Unclassified : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace coefbound

#endif
