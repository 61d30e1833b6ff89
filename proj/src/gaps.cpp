#include "polignac/gaps.hpp"

#include "polignac/errors.hpp"
#include "polignac/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace polignac {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

double natural_log(const BigInt &x)
{
	long exp = 0;
	double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
	return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string format_real(double v)
{
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

std::uint64_t parse_u64(const std::string &s, const char *what)
{
	std::size_t pos = 0;
	unsigned long long v = 0;
	try {
		v = std::stoull(s, &pos);
	} catch (const std::exception &) {
		pos = std::string::npos;
	}
	if (pos != s.size() || s.empty() || s[0] == '-')
		throw DomainError(std::string("gap CSV: bad ") + what + " '" + s + "'");
	return v;
}

double parse_real(const std::string &s, const char *what)
{
	std::size_t pos = 0;
	double v = 0;
	try {
		v = std::stod(s, &pos);
	} catch (const std::exception &) {
		pos = std::string::npos;
	}
	if (pos != s.size() || s.empty())
		throw DomainError(std::string("gap CSV: bad ") + what + " '" + s + "'");
	return v;
}

void check_limit(std::uint64_t limit, const Caps &caps)
{
	if (limit > caps.sieve)
		throw ResourceError("prime limit " + std::to_string(limit) + " exceeds sieve cap " + std::to_string(caps.sieve));
}

} // namespace

TwinConstant hardy_littlewood_constant(std::uint64_t truncation, std::uint64_t cap)
{
	if (truncation < 3)
		throw DomainError("twin-prime constant truncation must be >= 3");
	auto table = sieve_primes(truncation, cap);
	long double log_product = 0;
	for (std::uint32_t p : table.primes()) {
		if (p == 2)
			continue;
		long double d = static_cast<long double>(p - 1);
		log_product += std::log1p(-1.0L / (d * d));
	}
	TwinConstant out;
	out.truncation = truncation;
	out.value = static_cast<double>(2.0L * std::exp(log_product));
	out.error_bound = out.value / static_cast<double>(truncation - 1);
	return out;
}

double singular_factor(std::uint64_t k)
{
	if (k == 0)
		throw DomainError("half-gap k must be >= 1");
	double f = 1;
	for (std::uint64_t q : distinct_prime_factors(k))
		if (q != 2)
			f *= static_cast<double>(q - 1) / static_cast<double>(q - 2);
	return f;
}

// ---------------------------------------------------------------------------

GapHistogram::GapHistogram(std::uint64_t x_limit, const Caps &caps) : x_limit_(x_limit)
{
	if (x_limit < 2)
		throw DomainError("gap census needs x_limit >= 2");
	check_limit(x_limit, caps);
	auto table = sieve_primes(x_limit, caps.sieve);
	auto primes = table.primes();
	prime_count_ = primes.size();
	auto add = [&](std::uint64_t gap) {
		if (gap >= counts_.size())
			counts_.resize(gap + 1, 0);
		++counts_[gap];
	};
	for (std::size_t i = 1; i < primes.size(); ++i)
		add(primes[i] - primes[i - 1]);
	// the last pair straddles x_limit
	std::uint64_t last = primes.back(), next = last + 1;
	while (!is_prime(next))
		++next;
	add(next - last);
}

std::uint64_t GapHistogram::count(std::uint64_t gap) const
{
	return gap < counts_.size() ? counts_[gap] : 0;
}

std::uint64_t GapHistogram::even_pairs() const
{
	std::uint64_t total = 0;
	for (std::size_t g = 2; g < counts_.size(); g += 2)
		total += counts_[g];
	return total;
}

GapCensusRow GapHistogram::row(std::uint64_t k, double constant) const
{
	if (k == 0)
		throw DomainError("half-gap k must be >= 1");
	GapCensusRow r;
	r.k = k;
	r.x_limit = x_limit_;
	r.empirical = count(2 * k);
	double lx = std::log(static_cast<double>(x_limit_));
	r.predicted = constant * singular_factor(k) * static_cast<double>(x_limit_) / (lx * lx);
	if (r.predicted > 0)
		r.ratio = static_cast<double>(r.empirical) / r.predicted;
	return r;
}

GapCensusRow gap_census(std::uint64_t x_limit, std::uint64_t k, const Caps &caps)
{
	return gap_census_table(x_limit, k, caps).back();
}

std::vector<GapCensusRow> gap_census_table(std::uint64_t x_limit, std::uint64_t k_max, const Caps &caps)
{
	if (k_max == 0)
		throw DomainError("k_max must be >= 1");
	GapHistogram hist(x_limit, caps);
	double c = hardy_littlewood_constant(std::min(kTwinConstantTruncation, caps.sieve), caps.sieve).value;
	std::vector<GapCensusRow> rows;
	rows.reserve(k_max);
	for (std::uint64_t k = 1; k <= k_max; ++k)
		rows.push_back(hist.row(k, c));
	return rows;
}

void write_gap_csv(const std::vector<GapCensusRow> &rows, std::ostream &out)
{
	out << "k,x_limit,empirical,predicted,ratio\n";
	for (const auto &r : rows) {
		out << r.k << ',' << r.x_limit << ',' << r.empirical << ',' << format_real(r.predicted) << ',';
		if (r.ratio)
			out << format_real(*r.ratio);
		out << '\n';
	}
}

std::vector<GapCensusRow> read_gap_csv(std::istream &in)
{
	std::string line;
	if (!std::getline(in, line) || line != "k,x_limit,empirical,predicted,ratio")
		throw DomainError("gap CSV: missing or unexpected header");
	std::vector<GapCensusRow> rows;
	while (std::getline(in, line)) {
		if (line.empty())
			continue;
		std::vector<std::string> cells;
		std::stringstream ss(line);
		std::string cell;
		while (std::getline(ss, cell, ','))
			cells.push_back(cell);
		if (line.back() == ',')
			cells.emplace_back();
		if (cells.size() != 5)
			throw DomainError("gap CSV: expected 5 fields in '" + line + "'");
		GapCensusRow r;
		r.k = parse_u64(cells[0], "k");
		r.x_limit = parse_u64(cells[1], "x_limit");
		r.empirical = parse_u64(cells[2], "empirical");
		r.predicted = parse_real(cells[3], "predicted");
		if (!cells[4].empty())
			r.ratio = parse_real(cells[4], "ratio");
		rows.push_back(r);
	}
	return rows;
}

// ---------------------------------------------------------------------------

std::optional<PrimePair> weakened_polignac_check(std::uint64_t k, const PrimeTable &primes)
{
	if (k == 0)
		throw DomainError("half-gap k must be >= 1");
	for (std::uint32_t q : primes.primes()) {
		std::uint64_t p = q + 2 * k;
		if (p > primes.limit())
			break;
		if (primes.contains(p))
			return PrimePair{p, q};
	}
	return std::nullopt;
}

std::optional<PrimePair> weakened_polignac_check(std::uint64_t k, std::uint64_t prime_limit, const Caps &caps)
{
	check_limit(prime_limit, caps);
	if (prime_limit < 2)
		return std::nullopt;
	return weakened_polignac_check(k, sieve_primes(prime_limit, caps.sieve));
}

std::string SumOrDifference::classification() const
{
	if (sum && difference)
		return "sum-and-difference";
	if (sum)
		return "sum";
	if (difference)
		return "difference";
	return "neither";
}

SumOrDifference sum_or_difference_check(std::uint64_t two_k, const PrimeTable &primes)
{
	if (two_k < 4 || two_k % 2 != 0)
		throw DomainError("sum-or-difference needs an even value >= 4, got " + std::to_string(two_k));
	SumOrDifference out;
	out.two_k = two_k;
	for (std::uint32_t p : primes.primes()) {
		if (2 * std::uint64_t(p) > two_k)
			break;
		std::uint64_t q = two_k - p;
		if (q <= primes.limit() && primes.contains(q)) {
			out.sum = PrimePair{p, q};
			break;
		}
	}
	out.difference = weakened_polignac_check(two_k / 2, primes);
	return out;
}

SumOrDifference sum_or_difference_check(std::uint64_t two_k, std::uint64_t prime_limit, const Caps &caps)
{
	check_limit(prime_limit, caps);
	if (prime_limit < 2) {
		if (two_k < 4 || two_k % 2 != 0)
			throw DomainError("sum-or-difference needs an even value >= 4, got " + std::to_string(two_k));
		return SumOrDifference{two_k, std::nullopt, std::nullopt};
	}
	return sum_or_difference_check(two_k, sieve_primes(prime_limit, caps.sieve));
}

// ---------------------------------------------------------------------------

std::string to_string(MersenneModel m) { return m == MersenneModel::gillies ? "gillies" : "wagstaff"; }

MersenneModel mersenne_model_from_string(const std::string &s)
{
	if (s == "gillies")
		return MersenneModel::gillies;
	if (s == "wagstaff")
		return MersenneModel::wagstaff;
	throw DomainError("unknown Mersenne density model '" + s + "'");
}

MersenneDensity mersenne_density_prediction(const BigInt &x_limit, MersenneModel model, unsigned workers,
                                            const Caps &caps)
{
	if (x_limit < 8)
		throw DomainError("Mersenne density needs x_limit >= 8");
	// 2^p - 1 <= x  <=>  p <= floor(log2(x + 1))
	BigInt next = x_limit + 1;
	std::uint64_t r = mpz_sizeinbase(next.get_mpz_t(), 2) - 1;
	if (r > caps.mersenne_exponent)
		throw ResourceError("Mersenne exponents up to " + std::to_string(r) + " exceed Lucas-Lehmer budget " +
		                    std::to_string(caps.mersenne_exponent));

	auto table = sieve_primes(r);
	auto primes = table.primes();
	auto parts = parallel_chunks<std::vector<std::uint64_t>>(
	    0, primes.size() - 1, workers, [&](std::uint64_t lo, std::uint64_t hi) {
		    std::vector<std::uint64_t> found;
		    for (std::uint64_t i = lo; i <= hi; ++i)
			    if (lucas_lehmer(primes[i]))
				    found.push_back(primes[i]);
		    return found;
	    });

	MersenneDensity out;
	out.model = model;
	out.exponents = flatten(std::move(parts));
	out.actual = out.exponents.size();
	double scale = model == MersenneModel::gillies ? 2.0 / std::log(2.0) : std::exp(kEulerGamma) / std::log(2.0);
	out.predicted = scale * std::log(natural_log(x_limit));
	return out;
}

} // namespace polignac
