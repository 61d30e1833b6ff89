#include "polignac/witness.hpp"

#include "polignac/errors.hpp"
#include "polignac/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace polignac {

namespace {

bool coprime_to(std::uint64_t v, std::span<const std::uint64_t> primes)
{
	for (std::uint64_t p : primes)
		if (v % p == 0)
			return false;
	return true;
}

using OrderLookup = std::function<std::uint64_t(std::uint64_t)>;

std::optional<std::uint64_t> search_linear(const FunctionFamily &family, std::uint64_t n,
                                           std::span<const std::uint64_t> primes)
{
	if (n > (std::uint64_t(1) << 62))
		throw DomainError("modulus too large for linear witness search");
	auto sn = static_cast<std::int64_t>(n);
	std::optional<std::int64_t> x_max;
	for (const auto &f : family.forms()) {
		if (f.a <= 0)
			continue;
		// a x + b <= n - 1
		std::int64_t top = sn - 1 - f.b;
		std::int64_t bound = top < 0 ? -1 : top / f.a;
		x_max = x_max ? std::min(*x_max, bound) : bound;
	}
	if (!x_max)
		throw DomainError("linear family has no increasing form, so the witness search is unbounded");
	for (auto x = static_cast<std::int64_t>(family.first_argument()); x <= *x_max; ++x) {
		bool ok = true;
		for (const auto &f : family.forms()) {
			std::int64_t v = f(x);
			if (v < 1 || v >= sn || !coprime_to(static_cast<std::uint64_t>(v), primes)) {
				ok = false;
				break;
			}
		}
		if (ok)
			return static_cast<std::uint64_t>(x);
	}
	return std::nullopt;
}

std::optional<std::uint64_t> search_mersenne(const FunctionFamily &family, std::uint64_t n,
                                             std::span<const std::uint64_t> primes, const OrderLookup &order)
{
	// 2^x - 1 < n  <=>  2^x <= n
	auto x_max = static_cast<std::uint64_t>(std::bit_width(n) - 1);
	std::vector<std::uint64_t> orders;
	for (std::uint64_t q : primes)
		if (q != 2)
			orders.push_back(order(q));
	for (std::uint64_t x = std::max<std::uint64_t>(family.first_argument(), 1); x <= x_max; ++x) {
		// an odd prime q divides 2^x - 1 exactly when ord_q(2) | x
		bool ok = std::none_of(orders.begin(), orders.end(), [&](std::uint64_t d) { return x % d == 0; });
		if (ok)
			return x;
	}
	return std::nullopt;
}

std::optional<std::uint64_t> search_quadratic(const FunctionFamily &family, std::uint64_t n,
                                              std::span<const std::uint64_t> primes)
{
	for (std::uint64_t x = family.first_argument();; ++x) {
		unsigned __int128 v = static_cast<unsigned __int128>(x) * x + 1;
		if (v >= n)
			return std::nullopt;
		if (coprime_to(static_cast<std::uint64_t>(v), primes))
			return x;
	}
}

std::optional<std::uint64_t> search_fermat(const FunctionFamily &family, std::uint64_t n,
                                           std::span<const std::uint64_t> primes)
{
	for (std::uint64_t x = family.first_argument(); x <= 5; ++x) {
		// F_5 = 2^32 + 1 is the last Fermat number below 2^64
		std::uint64_t v = (std::uint64_t(1) << (std::uint64_t(1) << x)) + 1;
		if (v >= n)
			return std::nullopt;
		if (coprime_to(v, primes))
			return x;
	}
	return std::nullopt;
}

std::optional<std::uint64_t> search(const FunctionFamily &family, std::uint64_t n,
                                    std::span<const std::uint64_t> primes, const OrderLookup &order)
{
	if (n == 0)
		throw DomainError("modulus must be positive");
	if (n == 1)
		return std::nullopt; // Z_1* is empty
	switch (family.kind()) {
	case FamilyKind::linear:
	case FamilyKind::shifted_pair:
	case FamilyKind::sophie_germain: return search_linear(family, n, primes);
	case FamilyKind::mersenne: return search_mersenne(family, n, primes, order);
	case FamilyKind::quadratic: return search_quadratic(family, n, primes);
	case FamilyKind::fermat: return search_fermat(family, n, primes);
	}
	return std::nullopt;
}

std::uint64_t default_order(std::uint64_t q) { return multiplicative_order(2, q); }

WitnessReport make_report(const FunctionFamily &family, std::uint64_t n, std::uint64_t x, WitnessMethod method)
{
	WitnessReport report;
	report.modulus = n;
	report.family = family;
	report.witness = x;
	report.values = family.evaluate(x);
	report.method = method;
	report.verified = verify_witness(report);
	return report;
}

[[noreturn]] void falsified(const std::string &what, std::uint64_t n, std::uint64_t x)
{
	throw FalsificationError(what + ": construction output x = " + std::to_string(x) +
	                         " failed verification for n = " + std::to_string(n));
}

bool below_factorial_exact(const BigInt &v, std::uint64_t n)
{
	BigInt f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return v < f;
}

// n = 3 m with m square-free, 3 !| m; `m_primes` ascending.
std::uint64_t sophie_germain_square_free(const std::vector<std::uint64_t> &m_primes)
{
	if (m_primes.size() == 1)
		return 2; // p > 5: 2 and 5 both lie in Z_3p*
	if (m_primes.size() == 2) {
		std::uint64_t p = m_primes[0], q = m_primes[1];
		switch (std::gcd<std::uint64_t>(10, p * q)) {
		case 1: return 2;
		case 2: return q == 11 ? 23 : 5;
		case 5: return q == 17 ? 11 : 8;
		default: return 11; // n = 30
		}
	}
	// peel the largest prime (> 5) and lift a witness for the rest
	std::uint64_t p = m_primes.back();
	std::vector<std::uint64_t> rest(m_primes.begin(), m_primes.end() - 1);
	std::uint64_t y = sophie_germain_square_free(rest);
	std::uint64_t m = 3;
	for (std::uint64_t r : rest)
		m *= r;
	return lift_witness_lemma6(y, m, p);
}

} // namespace

std::string to_string(WitnessMethod m)
{
	switch (m) {
	case WitnessMethod::search: return "search";
	case WitnessMethod::construct_appendix_a: return "construct-appendix-a";
	case WitnessMethod::construct_appendix_c: return "construct-appendix-c";
	}
	return "?";
}

bool below_factorial(const BigInt &v, std::uint64_t n)
{
	if (n <= 20) {
		std::uint64_t f = 1;
		for (std::uint64_t i = 2; i <= n; ++i)
			f *= i;
		return v < to_big(f);
	}
	double log2_fact = std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
	auto bits = static_cast<double>(mpz_sizeinbase(v.get_mpz_t(), 2)); // v < 2^bits
	if (bits + 1.0 + 1e-9 * log2_fact < log2_fact)
		return true;
	return below_factorial_exact(v, n);
}

bool verify_witness(const WitnessReport &report)
{
	if (!report.witness)
		return false;
	std::uint64_t x = *report.witness;
	if (report.family.require_x_gt_1() && x <= 1)
		return false;
	if (report.values != report.family.evaluate(x))
		return false;
	if (report.factorial_modulus) {
		BigInt rad = primorial(report.modulus);
		for (const auto &v : report.values)
			if (v < 1 || gcd(v, rad) != 1 || !below_factorial(v, report.modulus))
				return false;
		return true;
	}
	BigInt n = to_big(report.modulus);
	for (const auto &v : report.values)
		if (v < 1 || v >= n || gcd(v, n) != 1)
			return false;
	return true;
}

std::optional<std::uint64_t> smallest_witness_argument(const FunctionFamily &family, std::uint64_t n,
                                                       std::span<const std::uint64_t> primes)
{
	return search(family, n, primes, default_order);
}

std::optional<WitnessReport> find_smallest_witness(const FunctionFamily &family, const FactoredInteger &n)
{
	std::uint64_t nv = n.value_u64();
	auto primes = n.primes_u64();
	auto x = smallest_witness_argument(family, nv, primes);
	if (!x)
		return std::nullopt;
	auto report = make_report(family, nv, *x, WitnessMethod::search);
	if (!report.verified)
		falsified("smallest-witness search", nv, *x);
	return report;
}

std::optional<WitnessReport> find_smallest_witness(const FunctionFamily &family, std::uint64_t n)
{
	if (n == 0)
		throw DomainError("modulus must be positive");
	return find_smallest_witness(family, factorize(n));
}

std::vector<std::uint64_t> exceptional_set_scan(const FunctionFamily &family, std::uint64_t limit, unsigned workers,
                                                std::uint64_t cap)
{
	if (limit > cap)
		throw ResourceError("exceptional-set scan limit " + std::to_string(limit) + " exceeds cap " +
		                    std::to_string(cap));
	if (limit < 2)
		return {};
	SmallestFactorTable spf(static_cast<std::uint32_t>(limit));

	std::vector<std::uint32_t> orders;
	OrderLookup order = default_order;
	if (family.kind() == FamilyKind::mersenne) {
		orders.assign(limit + 1, 0);
		for (std::uint64_t q = 3; q <= limit; q += 2)
			if (spf.smallest_factor(static_cast<std::uint32_t>(q)) == q)
				orders[q] = static_cast<std::uint32_t>(multiplicative_order(2, q));
		order = [&orders](std::uint64_t q) { return std::uint64_t(orders[q]); };
	}

	auto parts = parallel_chunks<std::vector<std::uint64_t>>(
	    2, limit, workers, [&](std::uint64_t lo, std::uint64_t hi) {
		    std::vector<std::uint64_t> out;
		    std::vector<std::uint32_t> small;
		    std::vector<std::uint64_t> primes;
		    for (std::uint64_t n = lo; n <= hi; ++n) {
			    spf.distinct_primes(static_cast<std::uint32_t>(n), small);
			    primes.assign(small.begin(), small.end());
			    if (!search(family, n, primes, order))
				    out.push_back(n);
		    }
		    return out;
	    });
	return flatten(std::move(parts));
}

// ---------------------------------------------------------------------------

std::uint64_t lift_witness_lemma6(std::uint64_t a, std::uint64_t m, std::uint64_t p)
{
	if (p <= 5 || !is_prime(p))
		throw DomainError("lift needs a prime p > 5, got " + std::to_string(p));
	if (m == 0 || m % p == 0)
		throw DomainError("lift needs gcd(m, p) = 1");
	if (a == 0 || 2 * a + 1 >= m || std::gcd(a, m) != 1 || std::gcd(2 * a + 1, m) != 1)
		throw DomainError("lift needs a, 2a + 1 in Z_m*; a = " + std::to_string(a) + ", m = " + std::to_string(m));
	unsigned __int128 wide = static_cast<unsigned __int128>(m) * p;
	if (wide >> 62)
		throw DomainError("lift modulus m * p too large");
	std::uint64_t mp = m * p;

	std::uint64_t ap = a % p;
	std::uint64_t b = 0;
	for (;; ++b) {
		if (b == p)
			throw FalsificationError("no admissible residue b modulo " + std::to_string(p));
		if (b == ap)
			continue;
		std::uint64_t c = (2 * ap + p - b) % p; // 2a - b
		if (b != 0 && (2 * b + 1) % p != 0 && c != 0 && (2 * c + 1) % p != 0)
			break;
	}
	std::uint64_t l = inverse_mod(m % p, p);
	std::uint64_t d = mul_mod((b + p - ap) % p, l, p); // (b - a) l mod p
	std::uint64_t y = m * d + a;
	std::uint64_t z = m * ((p - d) % p) + a;
	std::uint64_t x = 2 * y + 1 < mp ? y : z;

	if (x <= 1 || 2 * x + 1 >= mp || std::gcd(x, mp) != 1 || std::gcd(2 * x + 1, mp) != 1)
		falsified("residue lift", mp, x);
	return x;
}

WitnessReport construct_witness_theorem2(const FactoredInteger &n)
{
	std::uint64_t nv = n.value_u64();
	if (nv < 2)
		throw DomainError("construction needs n >= 2");
	for (std::uint64_t bad : {2, 3, 4, 5, 6, 15})
		if (nv == bad)
			throw ExceptionalModulusError("n = " + std::to_string(nv) + " has no witness for (x, 2x + 1)");

	std::uint64_t x = 0;
	auto exponent_of = [&](std::uint64_t p) -> unsigned {
		for (const auto &f : n.factors())
			if (f.prime == to_big(p))
				return f.exponent;
		return 0;
	};

	if (nv % 3 == 0) {
		auto square = std::find_if(n.factors().begin(), n.factors().end(),
		                           [](const PrimePower &f) { return f.exponent >= 2; });
		if (square != n.factors().end()) {
			x = nv / to_u64(square->prime) - 1;
		} else {
			std::vector<std::uint64_t> m_primes;
			for (std::uint64_t p : n.primes_u64())
				if (p != 3)
					m_primes.push_back(p);
			x = sophie_germain_square_free(m_primes);
		}
	} else if (nv % 7 != 0) {
		x = 3;
	} else {
		unsigned t = exponent_of(7);
		std::uint64_t m = nv;
		for (unsigned i = 0; i < t; ++i)
			m /= 7;
		if (t >= 2) {
			x = 7 * m - 1;
		} else if (m > 7) {
			x = lift_witness_lemma6(3, m, 7);
		} else {
			switch (m) {
			case 1: x = 2; break;
			case 2: x = 5; break;
			case 4: x = 5; break;
			case 5: x = 11; break;
			default: x = 5; break; // m = 6 cannot occur once 3 !| n
			}
		}
	}

	auto report = make_report(FunctionFamily::sophie_germain(), nv, x, WitnessMethod::construct_appendix_a);
	if (!report.verified)
		falsified("(x, 2x + 1) construction", nv, x);
	return report;
}

WitnessReport construct_witness_appendix_c(std::uint64_t a, const FactoredInteger &n)
{
	if (a == 0)
		throw DomainError("shift parameter a must be positive");
	std::uint64_t nv = n.value_u64();
	if (a > (std::uint64_t(1) << 58) || nv > (std::uint64_t(1) << 62))
		throw DomainError("construction parameters too large");
	std::uint64_t threshold = std::max<std::uint64_t>(120, 8 * a + 1);
	if (nv <= threshold)
		throw BelowThresholdError("n = " + std::to_string(nv) + " is not above max(120, 8a + 1) = " +
		                          std::to_string(threshold));

	std::vector<std::uint64_t> residues, moduli;
	for (const auto &f : n.factors()) {
		std::uint64_t p = to_u64(f.prime);
		std::uint64_t q = 1;
		for (unsigned i = 0; i < f.exponent; ++i)
			q *= p;
		auto sa = static_cast<std::int64_t>(a);
		std::uint64_t forbidden[] = {0, residue(-2 * sa, p), residue(6 * sa, p), residue(4 * sa, p)};
		auto admissible = [&](std::uint64_t y) {
			return std::find(std::begin(forbidden), std::end(forbidden), y % p) == std::end(forbidden);
		};
		std::optional<std::uint64_t> pick;
		for (std::uint64_t y = 2; y < q; ++y)
			if (admissible(y)) {
				pick = y;
				break;
			}
		if (!pick && admissible(1))
			pick = 1;
		if (!pick)
			falsified("per-prime-power residue choice", nv, 0);
		residues.push_back(*pick);
		moduli.push_back(q);
	}
	std::uint64_t y = crt_combine(residues, moduli);
	if (y == 1)
		falsified("residue avoiding 1 mod n", nv, y);
	std::uint64_t x = y + 2 * a < nv ? y : y - 6 * a;

	auto report = make_report(FunctionFamily::shifted_pair(a), nv, x, WitnessMethod::construct_appendix_c);
	if (!report.verified)
		falsified("(x, x + 2a) construction", nv, x);
	return report;
}

// ---------------------------------------------------------------------------

CoprimeSubsetReport mersenne_pi_generalized(const BigInt &limit)
{
	if (limit < 2)
		throw DomainError("generalized pi needs limit >= 2");
	BigInt next = limit + 1;
	std::uint64_t r = mpz_sizeinbase(next.get_mpz_t(), 2) - 1;
	if (r > 1'000'000)
		throw ResourceError("exponent range " + std::to_string(r) + " too large to materialize");
	CoprimeSubsetReport report;
	report.limit = limit;
	report.r = r;
	if (r >= 2) {
		auto table = sieve_primes(r);
		for (std::uint32_t q : table.primes()) {
			BigInt v;
			mpz_ui_pow_ui(v.get_mpz_t(), 2, q);
			report.witness_set.push_back(q);
			report.values.push_back(v - 1);
		}
	}
	report.pi_generalized = report.witness_set.size();
	return report;
}

std::size_t max_coprime_subset_brute(std::span<const BigInt> values, std::uint64_t cap)
{
	if (values.size() > cap || values.size() > 63)
		throw ResourceError("coprime-subset oracle limited to " + std::to_string(std::min<std::uint64_t>(cap, 63)) +
		                    " values, got " + std::to_string(values.size()));
	for (const auto &v : values)
		if (v <= 1)
			throw DomainError("coprime-subset oracle needs values > 1, got " + v.get_str());
	std::vector<BigInt> vs(values.begin(), values.end());
	std::size_t k = vs.size();
	std::vector<std::uint64_t> compatible(k, 0);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			if (i != j && gcd(vs[i], vs[j]) == 1)
				compatible[i] |= std::uint64_t(1) << j;

	std::size_t best = 0;
	// include/exclude recursion over indices; `allowed` holds later indices
	// compatible with everything chosen so far
	std::function<void(std::size_t, std::uint64_t, std::size_t)> grow = [&](std::size_t i, std::uint64_t allowed,
	                                                                        std::size_t size) {
		best = std::max(best, size);
		if (i >= k)
			return;
		std::uint64_t rest = allowed >> i;
		if (size + static_cast<std::size_t>(std::popcount(rest)) <= best)
			return;
		if (allowed & (std::uint64_t(1) << i))
			grow(i + 1, allowed & compatible[i], size + 1);
		grow(i + 1, allowed, size);
	};
	std::uint64_t all = k == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k) - 1;
	grow(0, all, 0);
	return best;
}

FermatObstruction fermat_obstruction(std::uint64_t k, std::uint64_t cap)
{
	if (k > cap)
		throw ResourceError("Fermat index " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
	auto fermat = FunctionFamily::fermat();
	FermatObstruction out;
	out.k = k;
	out.modulus = 1;
	for (std::uint64_t i = 0; i <= k; ++i)
		out.modulus *= fermat.evaluate(i)[0];

	BigInt expected;
	mpz_ui_pow_ui(expected.get_mpz_t(), 2, std::uint64_t(1) << (k + 1));
	expected -= 1;
	if (out.modulus != expected)
		throw FalsificationError("product of F_0..F_k differs from 2^(2^(k+1)) - 1");

	bool ok = true;
	for (std::uint64_t i = 0; i <= k; ++i)
		ok = ok && gcd(fermat.evaluate(i)[0], out.modulus) != 1;
	// F_{k+1} = m + 2, and F_j grows with j
	BigInt next = fermat.evaluate(k + 1)[0];
	ok = ok && next == out.modulus + 2 && next >= out.modulus;
	out.verified = ok;
	return out;
}

} // namespace polignac
