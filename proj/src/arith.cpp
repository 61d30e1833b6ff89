#include "polignac/arith.hpp"

#include "polignac/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace polignac {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint64_t, 12> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t isqrt(std::uint64_t n)
{
	auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
	while (r > 0 && r * r > n)
		--r;
	while ((r + 1) * (r + 1) <= n)
		++r;
	return r;
}

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit)
{
	std::vector<std::uint32_t> out;
	if (limit < 2)
		return out;
	std::vector<char> composite(limit + 1, 0);
	for (std::uint64_t i = 2; i <= limit; ++i) {
		if (composite[i])
			continue;
		out.push_back(static_cast<std::uint32_t>(i));
		for (std::uint64_t j = i * i; j <= limit; j += i)
			composite[j] = 1;
	}
	return out;
}

const std::vector<std::uint32_t> &small_primes()
{
	static const std::vector<std::uint32_t> primes = simple_sieve(1 << 16);
	return primes;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s)
{
	std::uint64_t x = pow_mod(a % n, d, n);
	if (x == 1 || x == n - 1)
		return true;
	for (int r = 1; r < s; ++r) {
		x = mul_mod(x, x, n);
		if (x == n - 1)
			return true;
	}
	return false;
}

std::uint64_t pollard_brent(std::uint64_t n)
{
	if (n % 2 == 0)
		return 2;
	for (std::uint64_t c = 1;; ++c) {
		auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
		std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
		std::uint64_t r = 1;
		constexpr std::uint64_t m = 128;
		do {
			x = y;
			for (std::uint64_t i = 0; i < r; ++i)
				y = f(y);
			std::uint64_t k = 0;
			do {
				ys = y;
				for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
					y = f(y);
					q = mul_mod(q, x > y ? x - y : y - x, n);
				}
				g = std::gcd(q, n);
				k += m;
			} while (k < r && g == 1);
			r *= 2;
		} while (g == 1);
		if (g == n) {
			do {
				ys = f(ys);
				g = std::gcd(x > ys ? x - ys : ys - x, n);
			} while (g == 1);
		}
		if (g != n)
			return g;
	}
}

void factor_u64_rec(std::uint64_t n, std::vector<std::uint64_t> &out)
{
	if (n == 1)
		return;
	if (is_prime(n)) {
		out.push_back(n);
		return;
	}
	std::uint64_t d = pollard_brent(n);
	factor_u64_rec(d, out);
	factor_u64_rec(n / d, out);
}

// Multiset of prime factors of n, unsorted.
std::vector<std::uint64_t> prime_multiset_u64(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (std::uint32_t p : small_primes()) {
		if (p > 1000)
			break;
		if (std::uint64_t(p) * p > n)
			break;
		while (n % p == 0) {
			out.push_back(p);
			n /= p;
		}
	}
	if (n > 1)
		factor_u64_rec(n, out);
	return out;
}

BigInt pollard_brent(const BigInt &n)
{
	if (mpz_even_p(n.get_mpz_t()))
		return 2;
	for (unsigned long c = 1;; ++c) {
		auto f = [&](const BigInt &v) {
			BigInt t = v * v + c;
			mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
			return t;
		};
		BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
		unsigned long r = 1;
		constexpr unsigned long m = 128;
		do {
			x = y;
			for (unsigned long i = 0; i < r; ++i)
				y = f(y);
			unsigned long k = 0;
			do {
				ys = y;
				for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
					y = f(y);
					BigInt diff = abs(x - y);
					q = q * diff % n;
				}
				g = gcd(q, n);
				k += m;
			} while (k < r && g == 1);
			r *= 2;
		} while (g == 1);
		if (g == n) {
			do {
				ys = f(ys);
				g = gcd(abs(x - ys), n);
			} while (g == 1);
		}
		if (g != n)
			return g;
	}
}

void factor_big_rec(const BigInt &n, std::vector<BigInt> &out)
{
	if (n == 1)
		return;
	if (fits_u64(n)) {
		for (std::uint64_t p : prime_multiset_u64(to_u64(n)))
			out.push_back(to_big(p));
		return;
	}
	if (is_prime(n).prime) {
		out.push_back(n);
		return;
	}
	BigInt d = pollard_brent(n);
	factor_big_rec(d, out);
	factor_big_rec(BigInt(n / d), out);
}

std::vector<PrimePower> group(std::vector<BigInt> primes)
{
	std::sort(primes.begin(), primes.end());
	std::vector<PrimePower> out;
	for (auto &p : primes) {
		if (!out.empty() && out.back().prime == p)
			++out.back().exponent;
		else
			out.push_back({p, 1});
	}
	return out;
}

} // namespace

// ---------------------------------------------------------------------------

BigInt to_big(std::uint64_t v)
{
	BigInt out;
	mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
	return out;
}

bool fits_u64(const BigInt &v)
{
	return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt &v)
{
	if (!fits_u64(v))
		throw DomainError("value " + v.get_str() + " does not fit in 64 bits");
	std::uint64_t out = 0;
	mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
	return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
	return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
	if (m == 1)
		return 0;
	std::uint64_t result = 1;
	base %= m;
	while (exp > 0) {
		if (exp & 1)
			result = mul_mod(result, base, m);
		base = mul_mod(base, base, m);
		exp >>= 1;
	}
	return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
	if (m == 1)
		return 0;
	__int128 old_r = a % m, r = m, old_s = 1, s = 0;
	while (r != 0) {
		__int128 q = old_r / r;
		std::tie(old_r, r) = std::pair{r, old_r - q * r};
		std::tie(old_s, s) = std::pair{s, old_s - q * s};
	}
	if (old_r != 1)
		throw DomainError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
	__int128 mm = m;
	return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t residue(std::int64_t v, std::uint64_t m)
{
	if (v >= 0)
		return static_cast<std::uint64_t>(v) % m;
	std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % m; // avoids overflow at INT64_MIN
	return (m - 1 - r) % m;
}

std::uint64_t crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli)
{
	if (residues.size() != moduli.size())
		throw DomainError("crt_combine: residue/modulus count mismatch");
	u128 x = 0, mod = 1;
	for (std::size_t i = 0; i < moduli.size(); ++i) {
		std::uint64_t m = moduli[i];
		if (m == 0)
			throw DomainError("crt_combine: zero modulus");
		std::uint64_t r = residues[i] % m;
		std::uint64_t x_mod_m = static_cast<std::uint64_t>(x % m);
		std::uint64_t inv = inverse_mod(static_cast<std::uint64_t>(mod % m), m);
		std::uint64_t diff = (r + m - x_mod_m) % m;
		std::uint64_t t = mul_mod(diff, inv, m);
		x += mod * t;
		mod *= m;
		if (mod > std::numeric_limits<std::uint64_t>::max())
			throw DomainError("crt_combine: modulus product exceeds 64 bits");
	}
	return static_cast<std::uint64_t>(x);
}

// ---------------------------------------------------------------------------

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes))
{
}

bool PrimeTable::contains(std::uint64_t n) const
{
	if (n > limit_)
		throw DomainError("prime table query " + std::to_string(n) + " above limit " + std::to_string(limit_));
	return n <= std::numeric_limits<std::uint32_t>::max() &&
	       std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

std::size_t PrimeTable::pi(std::uint64_t x) const
{
	if (x > limit_)
		throw DomainError("pi(" + std::to_string(x) + ") above table limit " + std::to_string(limit_));
	auto it = std::upper_bound(primes_.begin(), primes_.end(), x,
	                           [](std::uint64_t v, std::uint32_t p) { return v < p; });
	return static_cast<std::size_t>(it - primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap)
{
	if (limit < 2)
		throw EmptyTableError("sieve limit " + std::to_string(limit) + " has no primes");
	if (limit > cap || limit > std::numeric_limits<std::uint32_t>::max())
		throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));

	auto base = simple_sieve(static_cast<std::uint32_t>(isqrt(limit)));
	std::vector<std::uint32_t> primes;
	primes.reserve(static_cast<std::size_t>(1.1 * limit / std::log(double(limit))) + 16);

	constexpr std::uint64_t segment = 1 << 18;
	std::vector<char> composite(segment);
	std::vector<std::uint64_t> next(base.size());
	for (std::size_t i = 0; i < base.size(); ++i)
		next[i] = std::uint64_t(base[i]) * base[i];

	for (std::uint64_t lo = 2; lo <= limit; lo += segment) {
		std::uint64_t hi = std::min(lo + segment - 1, limit);
		std::fill(composite.begin(), composite.end(), 0);
		for (std::size_t i = 0; i < base.size(); ++i) {
			std::uint64_t p = base[i];
			std::uint64_t j = next[i];
			for (; j <= hi; j += p)
				composite[j - lo] = 1;
			next[i] = j;
		}
		for (std::uint64_t v = lo; v <= hi; ++v)
			if (!composite[v - lo])
				primes.push_back(static_cast<std::uint32_t>(v));
	}
	return PrimeTable(limit, std::move(primes));
}

SmallestFactorTable::SmallestFactorTable(std::uint32_t limit) : spf_(std::size_t(limit) + 1, 0)
{
	std::vector<std::uint32_t> primes;
	for (std::uint64_t i = 2; i <= limit; ++i) {
		if (spf_[i] == 0) {
			spf_[i] = static_cast<std::uint32_t>(i);
			primes.push_back(static_cast<std::uint32_t>(i));
		}
		for (std::uint32_t p : primes) {
			std::uint64_t v = i * p;
			if (p > spf_[i] || v > limit)
				break;
			spf_[v] = p;
		}
	}
}

void SmallestFactorTable::distinct_primes(std::uint32_t n, std::vector<std::uint32_t> &out) const
{
	out.clear();
	while (n > 1) {
		std::uint32_t p = spf_[n];
		out.push_back(p);
		while (n % p == 0)
			n /= p;
	}
}

// ---------------------------------------------------------------------------

FactoredInteger::FactoredInteger() : value_(1), phi_(1) {}

FactoredInteger::FactoredInteger(std::vector<PrimePower> factors)
    : value_(1), factors_(std::move(factors)), phi_(1)
{
	for (std::size_t i = 0; i < factors_.size(); ++i) {
		const auto &f = factors_[i];
		if (f.exponent == 0)
			throw DomainError("factor with zero exponent");
		if (i > 0 && !(factors_[i - 1].prime < f.prime))
			throw DomainError("factor primes must be strictly increasing");
		if (!is_prime(f.prime).prime)
			throw DomainError("factor " + f.prime.get_str() + " is not prime");
		BigInt pe;
		mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
		value_ *= pe;
		phi_ *= pe / f.prime * (f.prime - 1);
	}
}

std::vector<std::uint64_t> FactoredInteger::primes_u64() const
{
	std::vector<std::uint64_t> out;
	out.reserve(factors_.size());
	for (const auto &f : factors_)
		out.push_back(to_u64(f.prime));
	return out;
}

std::string FactoredInteger::to_string() const
{
	if (factors_.empty())
		return "1";
	std::ostringstream os;
	for (std::size_t i = 0; i < factors_.size(); ++i) {
		if (i)
			os << " * ";
		os << factors_[i].prime.get_str();
		if (factors_[i].exponent > 1)
			os << '^' << factors_[i].exponent;
	}
	return os.str();
}

FactoredInteger factorize(const BigInt &n)
{
	if (n < 1)
		throw DomainError("factorize requires n >= 1, got " + n.get_str());
	if (fits_u64(n))
		return factorize(to_u64(n));
	std::vector<BigInt> primes;
	BigInt rest = n;
	for (std::uint32_t p : small_primes()) {
		while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
			primes.emplace_back(p);
			rest /= p;
		}
	}
	factor_big_rec(rest, primes);
	return FactoredInteger(group(std::move(primes)));
}

FactoredInteger factorize(std::uint64_t n)
{
	if (n == 0)
		throw DomainError("factorize requires n >= 1, got 0");
	std::vector<BigInt> primes;
	for (std::uint64_t p : prime_multiset_u64(n))
		primes.push_back(to_big(p));
	return FactoredInteger(group(std::move(primes)));
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
	if (n == 0)
		throw DomainError("distinct_prime_factors of 0");
	auto ps = prime_multiset_u64(n);
	std::sort(ps.begin(), ps.end());
	ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
	return ps;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t p : kMillerRabinBases) {
		if (n == p)
			return true;
		if (n % p == 0)
			return false;
	}
	if (n < 41 * 41)
		return true;
	std::uint64_t d = n - 1;
	int s = std::countr_zero(d);
	d >>= s;
	for (std::uint64_t a : kMillerRabinBases)
		if (!miller_rabin_round(n, a, d, s))
			return false;
	return true;
}

bool lucas_lehmer(std::uint64_t p)
{
	if (!is_prime(p))
		throw DomainError("Lucas-Lehmer exponent " + std::to_string(p) + " is not prime");
	if (p == 2)
		return true;
	BigInt m;
	mpz_ui_pow_ui(m.get_mpz_t(), 2, p);
	m -= 1;
	BigInt s = 4, hi, lo;
	for (std::uint64_t i = 0; i + 2 < p; ++i) {
		s = s * s;
		s -= 2;
		if (sgn(s) < 0)
			s += m;
		// reduce modulo 2^p - 1: fold high bits onto low bits
		while (mpz_sizeinbase(s.get_mpz_t(), 2) > p) {
			mpz_tdiv_q_2exp(hi.get_mpz_t(), s.get_mpz_t(), p);
			mpz_tdiv_r_2exp(lo.get_mpz_t(), s.get_mpz_t(), p);
			s = hi + lo;
		}
		if (s == m)
			s = 0;
	}
	return s == 0;
}

PrimalityResult is_prime(const BigInt &n)
{
	if (n < 2)
		return {false, false, PrimalityMethod::trivial};

	BigInt next = n + 1;
	if (mpz_popcount(next.get_mpz_t()) == 1) {
		std::uint64_t e = mpz_sizeinbase(next.get_mpz_t(), 2) - 1;
		if (is_prime(e))
			return {lucas_lehmer(e), false, PrimalityMethod::lucas_lehmer};
		// 2^d - 1 divides 2^e - 1 for every divisor d of e
		return {false, false, PrimalityMethod::trivial};
	}
	if (fits_u64(n))
		return {is_prime(to_u64(n)), false, PrimalityMethod::deterministic_miller_rabin};
	int verdict = mpz_probab_prime_p(n.get_mpz_t(), 40);
	return {verdict > 0, verdict == 1, PrimalityMethod::probable_prime};
}

// ---------------------------------------------------------------------------

std::uint64_t smallest_coprime(const FactoredInteger &m)
{
	if (m.value() == 1)
		throw DegenerateInputError("smallest_coprime(1): every a > 1 is coprime to 1");
	for (std::uint64_t a = 2;; ++a) {
		bool coprime = true;
		for (const auto &f : m.factors()) {
			if (mpz_cmp_ui(f.prime.get_mpz_t(), a) > 0)
				break;
			if (a % mpz_get_ui(f.prime.get_mpz_t()) == 0) {
				coprime = false;
				break;
			}
		}
		if (!coprime)
			continue;
		if (!is_prime(a))
			throw FalsificationError("smallest integer > 1 coprime to " + m.value().get_str() + " is " +
			                         std::to_string(a) + ", which is not prime");
		return a;
	}
}

BigInt primorial(std::uint64_t n)
{
	BigInt out = 1;
	if (n < 2)
		return out;
	auto table = sieve_primes(n, std::numeric_limits<std::uint32_t>::max());
	for (std::uint32_t p : table.primes())
		out *= p;
	return out;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t p)
{
	if (p == 2 || !is_prime(p))
		throw DomainError("multiplicative_order modulus " + std::to_string(p) + " is not an odd prime");
	if (base % p == 0)
		throw DomainError("multiplicative_order: " + std::to_string(base) + " is not coprime to " +
		                  std::to_string(p));
	std::uint64_t d = p - 1;
	for (std::uint64_t q : distinct_prime_factors(p - 1))
		while (d % q == 0 && pow_mod(base, d / q, p) == 1)
			d /= q;
	return d;
}

} // namespace polignac
