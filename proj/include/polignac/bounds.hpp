#pragma once

#include "polignac/arith.hpp"
#include "polignac/caps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polignac {

/// c = (prod of primes <= 4a + 1)^(m + 2), with 2^m > a >= 2^(m-1).
BigInt lemma4_constant(std::uint64_t a);

/// max(120, 8a + 1): the threshold of the CRT construction for (x, x + 2a).
std::uint64_t appendix_c_constant(std::uint64_t a);

struct ThresholdReport {
	std::string statement;
	std::uint64_t parameter = 0;
	BigInt paper_constant;
	/// Largest n <= scan_limit violating the conclusion; empty when none does.
	std::optional<std::uint64_t> empirical_threshold;
	std::uint64_t scan_limit = 0;
	/// Whether (paper_constant, scan_limit] was non-empty, so the claim
	/// "conclusion holds for n > c" was actually exercised.
	bool constant_in_range = false;
	/// n > paper_constant within the scan that violate the conclusion.
	std::vector<std::uint64_t> violations_above_constant;
	/// Secondary consequence phi(n) > a for n > c; violators listed.
	std::vector<std::uint64_t> corollary_violations;

	/// True when nothing contradicts the stated constant.
	bool consistent() const { return violations_above_constant.empty() && corollary_violations.empty(); }
};

/// Largest n <= scan_limit with phi(n) / 2^omega(n) <= a, compared with
/// lemma4_constant(a); also checks phi(n) > a for every n in (c, scan_limit].
ThresholdReport phi_over_2omega_scan(std::uint64_t a, std::uint64_t scan_limit, unsigned workers = 1,
                                     const Caps &caps = Caps{});

/// Largest n <= scan_limit where (x, x + 2a) has no witness, compared with
/// appendix_c_constant(a).
ThresholdReport shifted_pair_threshold_scan(std::uint64_t a, std::uint64_t scan_limit, unsigned workers = 1,
                                            const Caps &caps = Caps{});

struct BoundViolation {
	std::uint64_t argument = 0;
	double lhs = 0;
	double rhs = 0;
};

/// pi(r) >= r / ln r for r in [17, r_limit].
std::vector<BoundViolation> rosser_schoenfeld_check(std::uint64_t r_limit, const Caps &caps = Caps{});

/// omega(n) <= ln n / (ln ln n - 1.1714) for n in [26, n_limit].
std::vector<BoundViolation> robin_omega_check(std::uint64_t n_limit, unsigned workers = 1, const Caps &caps = Caps{});

struct PrimeProductReport {
	std::uint64_t k_limit = 0;
	/// k with 2^k p_1 ... p_k <= 2^(p_{k+1}), 3 <= k <= k_limit (lhs, rhs in log2).
	std::vector<BoundViolation> main_violations;
	/// Ties settled with exact integers.
	std::uint64_t exact_comparisons = 0;
	/// p_k with theta(p_k) <= p_k - p_k / (2 ln p_k), 1 <= k <= k_limit
	/// (argument = p_k, lhs = theta, rhs = the bound).
	std::vector<BoundViolation> auxiliary_failures;
	/// Smallest p_k from which the auxiliary inequality holds through k_limit.
	std::optional<std::uint64_t> auxiliary_valid_from;
};

/// DomainError for k_limit < 3, ResourceError above the cap.
PrimeProductReport remark10_check(std::uint64_t k_limit, const Caps &caps = Caps{});

} // namespace polignac
