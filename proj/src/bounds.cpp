#include "polignac/bounds.hpp"

#include "polignac/errors.hpp"
#include "polignac/family.hpp"
#include "polignac/parallel.hpp"
#include "polignac/witness.hpp"

#include <bit>
#include <cmath>

namespace polignac {

namespace {

void check_scan(std::uint64_t limit, std::uint64_t cap, const char *what)
{
	if (limit > cap)
		throw ResourceError(std::string(what) + ": limit " + std::to_string(limit) + " exceeds cap " +
		                    std::to_string(cap));
}

// Upper bound for the n-th prime (n >= 6: n (ln n + ln ln n)).
std::uint64_t nth_prime_bound(std::uint64_t n)
{
	if (n < 6)
		return 15;
	double ln = std::log(static_cast<double>(n));
	return static_cast<std::uint64_t>(static_cast<double>(n) * (ln + std::log(ln))) + 1;
}

struct PhiScanPart {
	std::optional<std::uint64_t> largest;
	std::vector<std::uint64_t> above;
	std::vector<std::uint64_t> corollary;
};

} // namespace

BigInt lemma4_constant(std::uint64_t a)
{
	if (a == 0)
		throw DomainError("lemma4_constant needs a >= 1");
	if (a > (std::uint64_t(1) << 28))
		throw ResourceError("lemma4_constant: a = " + std::to_string(a) + " too large to evaluate");
	unsigned m = static_cast<unsigned>(std::bit_width(a)); // 2^m > a >= 2^(m-1)
	BigInt base = primorial(4 * a + 1), c;
	mpz_pow_ui(c.get_mpz_t(), base.get_mpz_t(), m + 2);
	return c;
}

std::uint64_t appendix_c_constant(std::uint64_t a)
{
	if (a == 0)
		throw DomainError("appendix_c_constant needs a >= 1");
	return std::max<std::uint64_t>(120, 8 * a + 1);
}

ThresholdReport phi_over_2omega_scan(std::uint64_t a, std::uint64_t scan_limit, unsigned workers, const Caps &caps)
{
	if (scan_limit == 0)
		throw DomainError("scan limit must be >= 1");
	check_scan(scan_limit, caps.bound_scan, "phi/2^omega scan");
	ThresholdReport report;
	report.statement = "phi-over-2-omega";
	report.parameter = a;
	report.paper_constant = lemma4_constant(a);
	report.scan_limit = scan_limit;
	report.constant_in_range = report.paper_constant < to_big(scan_limit);
	std::uint64_t c = report.constant_in_range ? to_u64(report.paper_constant) : scan_limit;

	SmallestFactorTable spf(static_cast<std::uint32_t>(std::max<std::uint64_t>(scan_limit, 2)));
	auto parts = parallel_chunks<PhiScanPart>(1, scan_limit, workers, [&](std::uint64_t lo, std::uint64_t hi) {
		PhiScanPart part;
		std::vector<std::uint32_t> ps;
		for (std::uint64_t n = lo; n <= hi; ++n) {
			std::uint64_t phi = n;
			unsigned omega = 0;
			if (n > 1) {
				spf.distinct_primes(static_cast<std::uint32_t>(n), ps);
				for (std::uint32_t p : ps)
					phi = phi / p * (p - 1);
				omega = static_cast<unsigned>(ps.size());
			}
			// phi / 2^omega <= a, compared without division
			bool violates = static_cast<unsigned __int128>(a) << omega >= phi;
			if (violates) {
				part.largest = n;
				if (n > c)
					part.above.push_back(n);
			}
			if (n > c && phi <= a)
				part.corollary.push_back(n);
		}
		return part;
	});
	for (auto &p : parts) {
		if (p.largest)
			report.empirical_threshold = p.largest;
		report.violations_above_constant.insert(report.violations_above_constant.end(), p.above.begin(), p.above.end());
		report.corollary_violations.insert(report.corollary_violations.end(), p.corollary.begin(), p.corollary.end());
	}
	return report;
}

ThresholdReport shifted_pair_threshold_scan(std::uint64_t a, std::uint64_t scan_limit, unsigned workers,
                                            const Caps &caps)
{
	ThresholdReport report;
	report.statement = "shifted-pair-witness";
	report.parameter = a;
	std::uint64_t c = appendix_c_constant(a);
	report.paper_constant = to_big(c);
	report.scan_limit = scan_limit;
	report.constant_in_range = c < scan_limit;
	auto exceptional = exceptional_set_scan(FunctionFamily::shifted_pair(static_cast<std::int64_t>(a)), scan_limit,
	                                        workers, caps.scan);
	if (!exceptional.empty())
		report.empirical_threshold = exceptional.back();
	for (std::uint64_t n : exceptional)
		if (n > c)
			report.violations_above_constant.push_back(n);
	return report;
}

std::vector<BoundViolation> rosser_schoenfeld_check(std::uint64_t r_limit, const Caps &caps)
{
	std::vector<BoundViolation> out;
	if (r_limit < 17)
		return out;
	check_scan(r_limit, caps.sieve, "Rosser-Schoenfeld check");
	auto table = sieve_primes(r_limit, caps.sieve);
	auto primes = table.primes();
	std::size_t idx = 0, pi = 0;
	for (std::uint64_t r = 2; r <= r_limit; ++r) {
		while (idx < primes.size() && primes[idx] <= r) {
			++idx;
			++pi;
		}
		if (r < 17)
			continue;
		long double bound = static_cast<long double>(r) / std::log(static_cast<long double>(r));
		if (static_cast<long double>(pi) < bound)
			out.push_back({r, static_cast<double>(pi), static_cast<double>(bound)});
	}
	return out;
}

std::vector<BoundViolation> robin_omega_check(std::uint64_t n_limit, unsigned workers, const Caps &caps)
{
	if (n_limit < 26)
		return {};
	check_scan(n_limit, caps.bound_scan, "Robin omega check");
	SmallestFactorTable spf(static_cast<std::uint32_t>(n_limit));
	auto parts = parallel_chunks<std::vector<BoundViolation>>(
	    26, n_limit, workers, [&](std::uint64_t lo, std::uint64_t hi) {
		    std::vector<BoundViolation> found;
		    std::vector<std::uint32_t> ps;
		    for (std::uint64_t n = lo; n <= hi; ++n) {
			    spf.distinct_primes(static_cast<std::uint32_t>(n), ps);
			    long double ln = std::log(static_cast<long double>(n));
			    long double bound = ln / (std::log(ln) - 1.1714L);
			    if (static_cast<long double>(ps.size()) > bound)
				    found.push_back({n, static_cast<double>(ps.size()), static_cast<double>(bound)});
		    }
		    return found;
	    });
	return flatten(std::move(parts));
}

PrimeProductReport remark10_check(std::uint64_t k_limit, const Caps &caps)
{
	if (k_limit < 3)
		throw DomainError("remark10_check needs k_limit >= 3");
	check_scan(k_limit, caps.remark10_k, "prime-product check");
	auto table = sieve_primes(nth_prime_bound(k_limit + 1));
	auto primes = table.primes();

	PrimeProductReport report;
	report.k_limit = k_limit;
	long double log2_product = 0; // log2(p_1 ... p_k)
	long double theta = 0;        // ln(p_1 ... p_k)
	std::optional<std::size_t> last_failure;
	for (std::uint64_t k = 1; k <= k_limit; ++k) {
		long double p = primes[k - 1];
		log2_product += std::log2(p);
		theta += std::log(p);

		long double aux = p - p / (2 * std::log(p));
		if (!(theta > aux)) {
			report.auxiliary_failures.push_back({primes[k - 1], static_cast<double>(theta), static_cast<double>(aux)});
			last_failure = k;
		}

		if (k < 3)
			continue;
		long double lhs = static_cast<long double>(k) + log2_product;
		long double rhs = primes[k];
		bool holds = lhs > rhs;
		if (std::fabs(lhs - rhs) < 1e-9L * rhs) {
			// too close for floating point: compare 2^k p_1...p_k with 2^p_{k+1}
			++report.exact_comparisons;
			BigInt left, right;
			mpz_primorial_ui(left.get_mpz_t(), primes[k - 1]);
			mpz_mul_2exp(left.get_mpz_t(), left.get_mpz_t(), k);
			mpz_ui_pow_ui(right.get_mpz_t(), 2, primes[k]);
			holds = left > right;
		}
		if (!holds)
			report.main_violations.push_back({k, static_cast<double>(lhs), static_cast<double>(rhs)});
	}
	if (!last_failure)
		report.auxiliary_valid_from = primes[0];
	else if (*last_failure < k_limit)
		report.auxiliary_valid_from = primes[*last_failure];
	return report;
}

} // namespace polignac
