#pragma once

#include "polignac/arith.hpp"
#include "polignac/family.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polignac {

/// Coprime-shift census #{x in Z_n* : gcd(a x + b, n) = 1} evaluated
/// against its multiplicative closed form.
struct CensusReport {
	FactoredInteger modulus;
	LinearForm form;
	BigInt formula_count;
	std::optional<std::uint64_t> brute_count;
	Rational lower_bound; // phi(n) / 2^omega(n)
};

/// Closed form, prime power by prime power:
///   odd p,  p | ab:  p^(e-1) (p-1)      odd p,  p !| ab:  p^(e-1) (p-2)
///   p = 2,  2 | ab:  2^(e-1)             p = 2,  2 !| ab:  0
/// The count for n = 1 is 0 (Z_1* is empty).
/// HypothesisError when gcd(a, b) != 1.
BigInt census_formula(const FactoredInteger &n, LinearForm form);

/// Direct enumeration over x in [1, n). ResourceError above `cap`.
std::uint64_t census_brute(std::uint64_t n, LinearForm form, std::uint64_t cap = Caps{}.brute);

/// Enumeration for several forms sharing one unit table of Z_n.
std::vector<std::uint64_t> census_brute(std::uint64_t n, std::span<const LinearForm> forms,
                                        std::uint64_t cap = Caps{}.brute);

/// Formula count, optional brute count, and the phi(n)/2^omega(n) bound.
/// FalsificationError when formula and enumeration disagree.
CensusReport census_report(const FactoredInteger &n, LinearForm form, bool with_brute,
                           std::uint64_t cap = Caps{}.brute);

/// Generalized totient over one residue period: #{x in [0, n) : gcd(f(x), n) = 1
/// for every f in the family}, 0 for n = 1. UnsupportedFamilyError for Mersenne and Fermat.
std::uint64_t generalized_totient(const FunctionFamily &family, std::uint64_t n,
                                  std::uint64_t cap = Caps{}.brute);

} // namespace polignac
