#pragma once

#include <stdexcept>
#include <string>

namespace rrlab
{
    /// Malformed or out-of-range input: bad vertex ids, unparsable files,
    /// invalid seeds. The CLI maps this to exit status 2.
    class InputError : public std::invalid_argument
    {
    public:
        explicit InputError(const std::string & message) :
            std::invalid_argument(message)
        {
        }
    };

    /// A lemma or theorem was invoked on an instance that does not satisfy
    /// its hypothesis. Kept distinct from InputError so sweeps can count
    /// these as skips rather than as passes or failures.
    class PreconditionError : public std::domain_error
    {
    public:
        explicit PreconditionError(const std::string & message) :
            std::domain_error(message)
        {
        }
    };

    /// Something that a theorem guarantees did not happen. Never expected;
    /// if it fires, the message carries enough data to reproduce.
    class InvariantViolation : public std::logic_error
    {
    public:
        explicit InvariantViolation(const std::string & message) :
            std::logic_error(message)
        {
        }
    };
}
