#pragma once

#include "polignac/arith.hpp"
#include "polignac/caps.hpp"
#include "polignac/family.hpp"
#include "polignac/witness.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polignac {

enum class Conjecture { twin, sophie_germain, mersenne, landau };
enum class ModulusMode { factorial, plain };
enum class Verdict { holds, fails, no_witness };

std::string to_string(Conjecture c);
std::string to_string(ModulusMode m);
std::string to_string(Verdict v);
Conjecture conjecture_from_string(const std::string &s);
ModulusMode mode_from_string(const std::string &s);
Verdict verdict_from_string(const std::string &s);

/// Family tested by each conjecture: (x, x + 2), (x, 2x + 1), 2^x - 1, x^2 + 1.
FunctionFamily family_for(Conjecture c);

/// One harness row.
struct ConjectureRecord {
	Conjecture conjecture = Conjecture::twin;
	std::uint64_t n = 0;
	ModulusMode mode = ModulusMode::factorial;
	std::optional<std::uint64_t> x;
	std::vector<BigInt> values;
	std::vector<bool> prime;
	Verdict verdict = Verdict::no_witness;
	std::uint64_t search_bound = 0;

	bool operator==(const ConjectureRecord &) const = default;
};

/// Smallest-witness search modulo n! for one or many n. Coprimality to n!
/// is decided against the primes <= n (the radical of n!), and values are
/// certified below n!. Holds a prime table and the orders of 2 for every
/// odd prime up to `n_max`; immutable and shareable once built.
class FactorialSearch {
public:
	FactorialSearch(std::uint64_t n_max, const Caps &caps = Caps{});

	std::uint64_t n_max() const { return n_max_; }

	/// Initial search bound: ceil(10 n (ln n)^2), at least 16.
	static std::uint64_t initial_bound(std::uint64_t n);

	/// Searches x up to the initial bound, doubling it up to three times
	/// before reporting no witness (report.witness empty, search_bound = the
	/// last bound tried).
	WitnessReport smallest_witness(const FunctionFamily &family, std::uint64_t n) const;

	/// True when v has no prime factor <= n (v >= 1).
	bool free_of_primes_up_to(std::uint64_t v, std::uint64_t n) const;

private:
	std::optional<std::uint64_t> scan(const FunctionFamily &family, std::uint64_t n, std::uint64_t from,
	                                  std::uint64_t to) const;

	std::uint64_t n_max_;
	Caps caps_;
	PrimeTable primes_;
	std::vector<std::uint32_t> order_of_two_; // parallel to primes_, 0 for p = 2
};

/// Smallest witness modulo n! (2 <= n <= harness cap).
WitnessReport factorial_smallest_witness(const FunctionFamily &family, std::uint64_t n, const Caps &caps = Caps{});

/// Record for one n. DomainError when n violates the conjecture's hypothesis
/// (n > 3, or n >= 3 for landau); ResourceError above the harness cap.
ConjectureRecord check_conjecture(Conjecture c, std::uint64_t n, ModulusMode mode, const Caps &caps = Caps{});

struct ScanResult {
	std::vector<ConjectureRecord> records; // ascending n
	std::size_t holds = 0;
	std::size_t fails = 0;
	std::size_t no_witness = 0;
};

/// One record per n in [from, to], computed in parallel and merged in order.
/// A failing record never aborts the scan.
ScanResult scan_conjecture(Conjecture c, std::uint64_t from, std::uint64_t to, ModulusMode mode,
                           unsigned workers = 1, const Caps &caps = Caps{});

// JSONL record schema:
// {"conjecture", "n", "mode", "x" (int or null), "values" (decimal strings),
//  "prime" (bools), "verdict", "search_bound"}
nlohmann::ordered_json to_json(const ConjectureRecord &r);
ConjectureRecord record_from_json(const nlohmann::json &j);

/// Counterexample line: the record plus an "evidence" object with the
/// factorization of every composite value and an independent witness recheck.
nlohmann::ordered_json counterexample_json(const ConjectureRecord &r);

/// Writes every record as one JSON line to `records` and every failing
/// record to `counterexamples` (when non-null).
void write_scan(const ScanResult &scan, std::ostream &records, std::ostream *counterexamples);

} // namespace polignac
