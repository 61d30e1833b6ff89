#pragma once

#include <stdexcept>
#include <string>

namespace polignac {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's mathematical domain.
class DomainError : public Error {
public:
	using Error::Error;
};

/// A prime table was requested for a limit below 2.
class EmptyTableError : public DomainError {
public:
	using DomainError::DomainError;
};

/// Input for which the result is defined only by convention (e.g. modulus 1).
class DegenerateInputError : public DomainError {
public:
	using DomainError::DomainError;
};

/// A formula was applied outside its hypotheses, e.g. gcd(a, b) != 1.
class HypothesisError : public DomainError {
public:
	using DomainError::DomainError;
};

/// Modulus belongs to a known exceptional set of a construction.
class ExceptionalModulusError : public DomainError {
public:
	using DomainError::DomainError;
};

/// Modulus is not above the threshold a construction needs.
class BelowThresholdError : public DomainError {
public:
	using DomainError::DomainError;
};

/// The family has no periodic residue structure (Mersenne, Fermat).
class UnsupportedFamilyError : public DomainError {
public:
	using DomainError::DomainError;
};

/// A request exceeds a configured cap (memory, exponent, range).
class ResourceError : public Error {
public:
	using Error::Error;
};

/// A construction produced output that failed its independent recheck.
/// Carrying this out of a constructive algorithm means the underlying
/// proof step is wrong for the given input.
class FalsificationError : public Error {
public:
	using Error::Error;
};

} // namespace polignac
