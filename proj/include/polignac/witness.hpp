#pragma once

#include "polignac/arith.hpp"
#include "polignac/caps.hpp"
#include "polignac/family.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polignac {

enum class WitnessMethod { search, construct_appendix_a, construct_appendix_c };

std::string to_string(WitnessMethod m);

/// A witness x for a family modulo `modulus`: every family value at x lies
/// in Z_n* = {v : 1 <= v < n, gcd(v, n) = 1}. With `factorial_modulus` set
/// the effective modulus is modulus! instead.
struct WitnessReport {
	std::uint64_t modulus = 0;
	bool factorial_modulus = false;
	FunctionFamily family = FunctionFamily::shifted_pair();
	std::optional<std::uint64_t> witness;
	std::vector<BigInt> values;
	WitnessMethod method = WitnessMethod::search;
	bool verified = false;
	/// Largest argument examined (factorial-mode searches).
	std::uint64_t search_bound = 0;
};

/// v < n!, by bit-length comparison with an exact factorial fallback near ties.
bool below_factorial(const BigInt &v, std::uint64_t n);

/// Independent recheck of a report's values with big-integer gcds against
/// n (plain) or primorial(n) together with a v < n! certificate (factorial).
bool verify_witness(const WitnessReport &report);

/// Smallest x (>= family.first_argument()) whose values all lie in Z_n*.
/// Absent when none exists; values must stay below n so the search space is
/// finite.
std::optional<WitnessReport> find_smallest_witness(const FunctionFamily &family, const FactoredInteger &n);
std::optional<WitnessReport> find_smallest_witness(const FunctionFamily &family, std::uint64_t n);

/// Same search over prime factors supplied by the caller; `primes` are the
/// distinct primes of n. Returns the witness argument only.
std::optional<std::uint64_t> smallest_witness_argument(const FunctionFamily &family, std::uint64_t n,
                                                       std::span<const std::uint64_t> primes);

/// All n in [2, limit] without a witness, ascending. ResourceError above `cap`.
std::vector<std::uint64_t> exceptional_set_scan(const FunctionFamily &family, std::uint64_t limit,
                                                unsigned workers = 1, std::uint64_t cap = Caps{}.scan);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Given a with a, 2a + 1 in Z_m* and a prime p > 5 coprime to m, builds
/// x > 1 with x, 2x + 1 in Z_mp* by CRT-lifting a residue b mod p.
std::uint64_t lift_witness_lemma6(std::uint64_t a, std::uint64_t m, std::uint64_t p);

/// Constructive witness for the pair (x, 2x + 1), following the case split
/// on 3 | n, 7 | n and square factors. ExceptionalModulusError for
/// n in {2, 3, 4, 5, 6, 15}.
WitnessReport construct_witness_theorem2(const FactoredInteger &n);

/// Constructive witness for (x, x + 2a) when n > max(120, 8a + 1): picks per
/// prime power a residue avoiding y = 0, -2a, 6a, 4a (mod p) (and y = 1 where
/// room permits), glues them by CRT, then shifts by -6a if y + 2a >= n.
WitnessReport construct_witness_appendix_c(std::uint64_t a, const FactoredInteger &n);

// ---------------------------------------------------------------------------
// Generalized prime counting for 2^x - 1
// ---------------------------------------------------------------------------

struct CoprimeSubsetReport {
	BigInt limit;
	std::uint64_t r = 0; // largest exponent with 2^r - 1 <= limit
	std::uint64_t pi_generalized = 0;
	std::vector<std::uint64_t> witness_set; // exponents q
	std::vector<BigInt> values;              // 2^q - 1
};

/// Largest pairwise-coprime set of values 2^x - 1 (> 1) not exceeding
/// `limit`: pi(r) with r = floor(log2(limit + 1)), witnessed by 2^q - 1 for
/// primes q <= r. DomainError for limit < 2.
CoprimeSubsetReport mersenne_pi_generalized(const BigInt &limit);

/// Exhaustive maximum pairwise-coprime subset of values > 1.
/// ResourceError when more than `cap` values are given.
std::size_t max_coprime_subset_brute(std::span<const BigInt> values, std::uint64_t cap = Caps{}.coprime_subset);

// ---------------------------------------------------------------------------

struct FermatObstruction {
	std::uint64_t k = 0;
	BigInt modulus; // prod_{i <= k} F_i = 2^(2^(k+1)) - 1
	bool verified = false;
};

/// Builds m = F_0 F_1 ... F_k and checks that no Fermat number lies in Z_m*.
FermatObstruction fermat_obstruction(std::uint64_t k, std::uint64_t cap = Caps{}.fermat_index);

} // namespace polignac
