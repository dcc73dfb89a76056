#pragma once

#include <stdexcept>
#include <string>

namespace fixleads
{

// Base class for every error raised by the library. Callers that only want
// to distinguish "bad input" from "engine defect" catch the two subclasses.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or ill-typed input: unknown identifiers, out-of-domain values,
// oversized spaces, sets drawn from different spaces.
class input_error : public error
{
public:
    using error::error;
};

class space_mismatch : public input_error
{
public:
    space_mismatch() : input_error( "operands belong to different state spaces" ) {}
};

// An internal inconsistency: a fixpoint iteration that did not stabilize, a
// soundness self-check that fired, an oracle disagreement.
class defect : public error
{
public:
    using error::error;
};

} // namespace fixleads
