#pragma once

#include <cstdint>

namespace polignac {

/// Resource limits shared by all modules. Every field must be positive.
struct Caps {
	std::uint64_t sieve = 1'000'000'000;      // largest sieve limit
	std::uint64_t brute = 100'000;            // census / generalized totient enumeration
	std::uint64_t harness = 100'000;          // largest n for factorial-mode harnesses
	std::uint64_t scan = 1'000'000;           // exceptional-set scans
	std::uint64_t bound_scan = 10'000'000;    // phi/omega and Robin scans
	std::uint64_t remark10_k = 10'000;        // prime-product inequality checks
	std::uint64_t mersenne_exponent = 3'500;  // Lucas-Lehmer exponent budget
	std::uint64_t coprime_subset = 25;        // exhaustive coprime-subset oracle
	std::uint64_t fermat_index = 6;           // Fermat obstruction index

	void validate() const;
};

/// Defaults overridden by POLIGNAC_*_CAP environment variables
/// (SIEVE, BRUTE, HARNESS, SCAN, BOUND_SCAN, REMARK10_K, MERSENNE_EXPONENT,
/// COPRIME_SUBSET, FERMAT_INDEX). Malformed values throw DomainError.
Caps caps_from_env();

} // namespace polignac
