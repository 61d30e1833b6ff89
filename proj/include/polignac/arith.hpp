#pragma once

#include "polignac/caps.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polignac {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt to_big(std::uint64_t v);
/// Throws DomainError when `v` is negative or does not fit in 64 bits.
std::uint64_t to_u64(const BigInt &v);
bool fits_u64(const BigInt &v);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of `a` modulo `m`; DomainError when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);
/// Canonical residue of a signed value modulo m (m >= 1).
std::uint64_t residue(std::int64_t v, std::uint64_t m);

/// Solution y in [0, prod moduli) of y = residues[i] (mod moduli[i]);
/// moduli must be pairwise coprime and their product must fit in 64 bits.
std::uint64_t crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

// ---------------------------------------------------------------------------
// Prime tables
// ---------------------------------------------------------------------------

/// All primes up to `limit`, ascending. Immutable after construction and
/// safe to share between threads.
class PrimeTable {
public:
	PrimeTable() = default;
	PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes);

	std::uint64_t limit() const { return limit_; }
	std::span<const std::uint32_t> primes() const & { return primes_; }
	std::span<const std::uint32_t> primes() const && = delete; // would dangle
	std::size_t size() const { return primes_.size(); }
	std::uint32_t operator[](std::size_t i) const { return primes_[i]; }

	/// Membership for n <= limit(); DomainError above the table.
	bool contains(std::uint64_t n) const;
	/// pi(x) for x <= limit().
	std::size_t pi(std::uint64_t x) const;

private:
	std::uint64_t limit_ = 0;
	std::vector<std::uint32_t> primes_;
};

/// Segmented sieve of Eratosthenes. EmptyTableError for limit < 2,
/// ResourceError above `cap` (or above 2^32 - 1, the storage width).
PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap = Caps{}.sieve);

/// Smallest-prime-factor lookup for every integer up to `limit`.
class SmallestFactorTable {
public:
	explicit SmallestFactorTable(std::uint32_t limit);

	std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
	std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
	/// Distinct prime factors of n (2 <= n <= limit), ascending.
	void distinct_primes(std::uint32_t n, std::vector<std::uint32_t> &out) const;

private:
	std::vector<std::uint32_t> spf_;
};

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
	BigInt prime;
	unsigned exponent = 0;

	bool operator==(const PrimePower &) const = default;
};

/// A positive integer with its full factorization and totient.
class FactoredInteger {
public:
	/// The integer 1.
	FactoredInteger();
	/// Validates that primes are strictly increasing, exponents positive,
	/// and computes value, phi and omega from the factor list.
	explicit FactoredInteger(std::vector<PrimePower> factors);

	const BigInt &value() const { return value_; }
	const std::vector<PrimePower> &factors() const & { return factors_; }
	const std::vector<PrimePower> &factors() const && = delete; // would dangle
	const BigInt &phi() const { return phi_; }
	std::size_t omega() const { return factors_.size(); }

	/// Distinct primes as 64-bit values; DomainError if any prime is wider.
	std::vector<std::uint64_t> primes_u64() const;
	std::uint64_t value_u64() const { return to_u64(value_); }

	std::string to_string() const;

private:
	BigInt value_;
	std::vector<PrimePower> factors_;
	BigInt phi_;
};

/// Trial division by small primes, then Brent-Pollard rho on the cofactor.
FactoredInteger factorize(const BigInt &n);
FactoredInteger factorize(std::uint64_t n);

/// Distinct prime factors of a 64-bit integer, ascending (empty for 1).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

enum class PrimalityMethod { trivial, deterministic_miller_rabin, lucas_lehmer, probable_prime };

struct PrimalityResult {
	bool prime = false;
	bool probabilistic = false;
	PrimalityMethod method = PrimalityMethod::trivial;
};

/// Deterministic Miller-Rabin over the first twelve prime bases.
bool is_prime(std::uint64_t n);
/// Exact below 2^64 and for every 2^e - 1 (Lucas-Lehmer when e is prime,
/// composite otherwise); beyond that 40-round strong probable-prime testing,
/// flagged as probabilistic.
PrimalityResult is_prime(const BigInt &n);

/// Lucas-Lehmer verdict for 2^p - 1; `p` must be prime.
bool lucas_lehmer(std::uint64_t p);

// ---------------------------------------------------------------------------
// Misc multiplicative helpers
// ---------------------------------------------------------------------------

/// Smallest a > 1 coprime to m; the result is asserted prime.
/// DegenerateInputError for m = 1.
std::uint64_t smallest_coprime(const FactoredInteger &m);

/// Product of all primes <= n (1 for n <= 1).
BigInt primorial(std::uint64_t n);

/// Smallest d >= 1 with base^d = 1 (mod p) for an odd prime p.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t p);

} // namespace polignac
