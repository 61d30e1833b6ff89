#pragma once

#include "polignac/arith.hpp"
#include "polignac/caps.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polignac {

/// Truncated twin-prime constant 2 prod_{3 <= p <= T} (1 - 1/(p-1)^2).
/// The tail product lies in [1 - 1/(T-1), 1], so the true constant is within
/// `error_bound` below `value`.
struct TwinConstant {
	std::uint64_t truncation = 0;
	double value = 0;
	double error_bound = 0;
};

/// DomainError for truncation < 3, ResourceError above the sieve cap.
TwinConstant hardy_littlewood_constant(std::uint64_t truncation, std::uint64_t cap = Caps{}.sieve);

/// Truncation used when predicting gap counts.
inline constexpr std::uint64_t kTwinConstantTruncation = 1'000'000;

/// prod over odd primes q | k of (q - 1)/(q - 2).
double singular_factor(std::uint64_t k);

struct GapCensusRow {
	std::uint64_t k = 0;
	std::uint64_t x_limit = 0;
	std::uint64_t empirical = 0; // consecutive pairs with p_n <= x_limit and gap 2k
	double predicted = 0;
	std::optional<double> ratio;

	bool operator==(const GapCensusRow &) const = default;
};

/// Consecutive-prime gap counts for p_n <= x_limit (p_{n+1} may exceed it).
class GapHistogram {
public:
	GapHistogram(std::uint64_t x_limit, const Caps &caps = Caps{});

	std::uint64_t x_limit() const { return x_limit_; }
	std::uint64_t prime_count() const { return prime_count_; }
	/// Pairs with gap exactly `gap`.
	std::uint64_t count(std::uint64_t gap) const;
	/// Sum of counts over even gaps.
	std::uint64_t even_pairs() const;

	GapCensusRow row(std::uint64_t k, double constant) const;

private:
	std::uint64_t x_limit_;
	std::uint64_t prime_count_ = 0;
	std::vector<std::uint64_t> counts_; // indexed by gap
};

/// Single row; predicted = C * singular_factor(k) * x / (ln x)^2.
GapCensusRow gap_census(std::uint64_t x_limit, std::uint64_t k, const Caps &caps = Caps{});

/// Rows for k = 1..k_max over one sieve.
std::vector<GapCensusRow> gap_census_table(std::uint64_t x_limit, std::uint64_t k_max, const Caps &caps = Caps{});

/// CSV with header "k,x_limit,empirical,predicted,ratio"; reals in %.6g,
/// an empty ratio when predicted is 0.
void write_gap_csv(const std::vector<GapCensusRow> &rows, std::ostream &out);
std::vector<GapCensusRow> read_gap_csv(std::istream &in);

// ---------------------------------------------------------------------------

struct PrimePair {
	std::uint64_t p = 0;
	std::uint64_t q = 0;

	bool operator==(const PrimePair &) const = default;
};

/// Smallest q with q and q + 2k both prime and <= the table limit, as (q + 2k, q).
std::optional<PrimePair> weakened_polignac_check(std::uint64_t k, const PrimeTable &primes);
std::optional<PrimePair> weakened_polignac_check(std::uint64_t k, std::uint64_t prime_limit,
                                                 const Caps &caps = Caps{});

struct SumOrDifference {
	std::uint64_t two_k = 0;
	std::optional<PrimePair> sum;        // p + q = 2k, p <= q, smallest p
	std::optional<PrimePair> difference; // p - q = 2k, smallest q

	/// "sum-and-difference", "sum", "difference" or "neither".
	std::string classification() const;
};

/// DomainError for odd values or values below 4.
SumOrDifference sum_or_difference_check(std::uint64_t two_k, const PrimeTable &primes);
SumOrDifference sum_or_difference_check(std::uint64_t two_k, std::uint64_t prime_limit, const Caps &caps = Caps{});

// ---------------------------------------------------------------------------

enum class MersenneModel { gillies, wagstaff };

std::string to_string(MersenneModel m);
MersenneModel mersenne_model_from_string(const std::string &s);

struct MersenneDensity {
	MersenneModel model = MersenneModel::gillies;
	double predicted = 0;
	std::uint64_t actual = 0;
	std::vector<std::uint64_t> exponents; // p with 2^p - 1 prime and <= x_limit
};

/// Gillies: (2 / ln 2) ln ln x. Wagstaff: (e^gamma / ln 2) ln ln x.
/// `actual` comes from Lucas-Lehmer runs. DomainError for x < 8,
/// ResourceError when exponents beyond the Lucas-Lehmer budget are needed.
MersenneDensity mersenne_density_prediction(const BigInt &x_limit, MersenneModel model, unsigned workers = 1,
                                            const Caps &caps = Caps{});

} // namespace polignac
