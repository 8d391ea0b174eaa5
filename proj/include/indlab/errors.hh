#pragma once

#include <stdexcept>
#include <string>

namespace indlab
{
    // Argument outside the mathematical domain of an operation (k < 5 for a
    // DLG, empty part list, p outside [0,1], ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Vertex index or jump length outside the host's range.
    class RangeError : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    // Graph too small for the requested construction.
    class SizeError : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A caller broke an operation's precondition on structured input
    // (a prefix that is not on track, a tuple that is not loopy).
    class ContractError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    // Refused because the request would be infeasible at desk scale.
    class ResourceGuardError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class LookupError : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    // A claim that is supposed to hold was observed to fail.
    class VerificationError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
