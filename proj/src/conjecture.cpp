#include "polignac/conjecture.hpp"

#include "polignac/errors.hpp"
#include "polignac/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace polignac {

namespace {

void check_hypothesis(Conjecture c, std::uint64_t n)
{
	if (c == Conjecture::landau ? n < 3 : n <= 3)
		throw DomainError(to_string(c) + " harness needs n " + (c == Conjecture::landau ? ">= 3" : "> 3") +
		                  ", got " + std::to_string(n));
}

bool has_identity_form(const FunctionFamily &family)
{
	const auto &forms = family.forms();
	return std::find(forms.begin(), forms.end(), LinearForm{1, 0}) != forms.end();
}

ConjectureRecord make_record(Conjecture c, std::uint64_t n, ModulusMode mode, const std::optional<WitnessReport> &report,
                             std::uint64_t search_bound, const Caps &caps)
{
	ConjectureRecord r;
	r.conjecture = c;
	r.n = n;
	r.mode = mode;
	r.search_bound = search_bound;
	if (!report || !report->witness) {
		r.verdict = Verdict::no_witness;
		return r;
	}
	r.x = report->witness;
	r.values = report->values;
	if (c == Conjecture::mersenne && *r.x > caps.mersenne_exponent)
		throw ResourceError("Mersenne exponent " + std::to_string(*r.x) + " exceeds Lucas-Lehmer budget " +
		                    std::to_string(caps.mersenne_exponent));
	bool all = true;
	for (const auto &v : r.values) {
		bool p = is_prime(v).prime;
		r.prime.push_back(p);
		all = all && p;
	}
	r.verdict = all ? Verdict::holds : Verdict::fails;
	return r;
}

} // namespace

std::string to_string(Conjecture c)
{
	switch (c) {
	case Conjecture::twin: return "twin";
	case Conjecture::sophie_germain: return "sophie-germain";
	case Conjecture::mersenne: return "mersenne";
	case Conjecture::landau: return "landau";
	}
	return "?";
}

std::string to_string(ModulusMode m) { return m == ModulusMode::factorial ? "factorial" : "plain"; }

std::string to_string(Verdict v)
{
	switch (v) {
	case Verdict::holds: return "holds";
	case Verdict::fails: return "fails";
	case Verdict::no_witness: return "no-witness";
	}
	return "?";
}

Conjecture conjecture_from_string(const std::string &s)
{
	for (auto c : {Conjecture::twin, Conjecture::sophie_germain, Conjecture::mersenne, Conjecture::landau})
		if (to_string(c) == s)
			return c;
	throw DomainError("unknown conjecture '" + s + "'");
}

ModulusMode mode_from_string(const std::string &s)
{
	if (s == "factorial")
		return ModulusMode::factorial;
	if (s == "plain")
		return ModulusMode::plain;
	throw DomainError("unknown modulus mode '" + s + "'");
}

Verdict verdict_from_string(const std::string &s)
{
	for (auto v : {Verdict::holds, Verdict::fails, Verdict::no_witness})
		if (to_string(v) == s)
			return v;
	throw DomainError("unknown verdict '" + s + "'");
}

FunctionFamily family_for(Conjecture c)
{
	switch (c) {
	case Conjecture::twin: return FunctionFamily::shifted_pair(1);
	case Conjecture::sophie_germain: return FunctionFamily::sophie_germain();
	case Conjecture::mersenne: return FunctionFamily::mersenne();
	case Conjecture::landau: return FunctionFamily::quadratic();
	}
	throw DomainError("unknown conjecture");
}

// ---------------------------------------------------------------------------

FactorialSearch::FactorialSearch(std::uint64_t n_max, const Caps &caps) : n_max_(n_max), caps_(caps)
{
	if (n_max > caps.harness)
		throw ResourceError("harness n = " + std::to_string(n_max) + " exceeds cap " + std::to_string(caps.harness));
	primes_ = sieve_primes(std::max<std::uint64_t>(n_max, 2));
	order_of_two_.reserve(primes_.size());
	for (std::uint32_t p : primes_.primes())
		order_of_two_.push_back(p == 2 ? 0 : static_cast<std::uint32_t>(multiplicative_order(2, p)));
}

std::uint64_t FactorialSearch::initial_bound(std::uint64_t n)
{
	double ln = std::log(static_cast<double>(std::max<std::uint64_t>(n, 2)));
	auto b = static_cast<std::uint64_t>(std::ceil(10.0 * static_cast<double>(n) * ln * ln));
	return std::max<std::uint64_t>(b, 16);
}

bool FactorialSearch::free_of_primes_up_to(std::uint64_t v, std::uint64_t n) const
{
	if (v == 0)
		return false;
	if (v == 1)
		return true;
	if (v <= n)
		return false;
	// below n^2 a composite has a prime factor <= n
	if (static_cast<unsigned __int128>(n) * n >= v)
		return is_prime(v);
	for (std::uint32_t p : primes_.primes()) {
		if (p > n)
			break;
		if (v % p == 0)
			return false;
		if (std::uint64_t(p) * p > v)
			return true;
	}
	return true;
}

std::optional<std::uint64_t> FactorialSearch::scan(const FunctionFamily &family, std::uint64_t n,
                                                   std::uint64_t from, std::uint64_t to) const
{
	// exact n! when it fits; beyond n = 20 every 64-bit value is below n!
	std::optional<std::uint64_t> factorial;
	if (n <= 20) {
		std::uint64_t f = 1;
		for (std::uint64_t i = 2; i <= n; ++i)
			f *= i;
		factorial = f;
	}
	auto below = [&](std::uint64_t v) { return !factorial || v < *factorial; };
	std::size_t prime_count = primes_.pi(n);

	switch (family.kind()) {
	case FamilyKind::linear:
	case FamilyKind::shifted_pair:
	case FamilyKind::sophie_germain: {
		bool identity = has_identity_form(family);
		for (std::uint64_t x = from; x <= to; ++x) {
			// any x in [2, n] has a prime factor <= n
			if (identity && x >= 2 && x <= n) {
				x = n;
				continue;
			}
			bool ok = true;
			for (const auto &f : family.forms()) {
				std::int64_t v = f(static_cast<std::int64_t>(x));
				if (v < 1 || !below(static_cast<std::uint64_t>(v)) ||
				    !free_of_primes_up_to(static_cast<std::uint64_t>(v), n)) {
					ok = false;
					break;
				}
			}
			if (ok)
				return x;
		}
		return std::nullopt;
	}
	case FamilyKind::mersenne: {
		std::vector<std::uint32_t> orders;
		for (std::size_t i = 0; i < prime_count; ++i)
			if (order_of_two_[i] != 0 && order_of_two_[i] <= to)
				orders.push_back(order_of_two_[i]);
		std::sort(orders.begin(), orders.end());
		orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
		for (std::uint64_t x = std::max<std::uint64_t>(from, 1); x <= to; ++x) {
			if (std::any_of(orders.begin(), orders.end(), [&](std::uint32_t d) { return x % d == 0; }))
				continue;
			if (factorial && (x >= 64 || (std::uint64_t(1) << x) - 1 >= *factorial))
				continue;
			return x;
		}
		return std::nullopt;
	}
	case FamilyKind::quadratic: {
		for (std::uint64_t x = from; x <= to; ++x) {
			if (x >= (std::uint64_t(1) << 31))
				throw ResourceError("quadratic witness search beyond 2^31");
			std::uint64_t v = x * x + 1;
			if (below(v) && free_of_primes_up_to(v, n))
				return x;
		}
		return std::nullopt;
	}
	case FamilyKind::fermat: {
		BigInt rad = primorial(n);
		for (std::uint64_t x = from; x <= std::min<std::uint64_t>(to, 30); ++x) {
			BigInt v = family.evaluate(x)[0];
			if (gcd(v, rad) == 1 && below_factorial(v, n))
				return x;
		}
		return std::nullopt;
	}
	}
	return std::nullopt;
}

WitnessReport FactorialSearch::smallest_witness(const FunctionFamily &family, std::uint64_t n) const
{
	if (n < 2 || n > n_max_)
		throw DomainError("factorial search needs 2 <= n <= " + std::to_string(n_max_) + ", got " + std::to_string(n));
	WitnessReport report;
	report.modulus = n;
	report.factorial_modulus = true;
	report.family = family;
	report.method = WitnessMethod::search;

	std::uint64_t ceiling = family.kind() == FamilyKind::mersenne ? caps_.mersenne_exponent
	                                                              : std::numeric_limits<std::uint64_t>::max() / 4;
	std::uint64_t from = family.first_argument();
	std::uint64_t bound = std::min(initial_bound(n), ceiling);
	for (int attempt = 0; attempt < 4; ++attempt) {
		report.search_bound = bound;
		if (auto x = scan(family, n, from, bound)) {
			report.witness = x;
			report.values = family.evaluate(*x);
			report.verified = verify_witness(report);
			if (!report.verified)
				throw FalsificationError("factorial-mode witness x = " + std::to_string(*x) +
				                         " failed its recheck at n = " + std::to_string(n));
			return report;
		}
		if (bound >= ceiling)
			break;
		from = bound + 1;
		bound = std::min(bound * 2, ceiling);
	}
	return report;
}

WitnessReport factorial_smallest_witness(const FunctionFamily &family, std::uint64_t n, const Caps &caps)
{
	if (n < 2)
		throw DomainError("factorial modulus needs n >= 2");
	return FactorialSearch(n, caps).smallest_witness(family, n);
}

// ---------------------------------------------------------------------------

ConjectureRecord check_conjecture(Conjecture c, std::uint64_t n, ModulusMode mode, const Caps &caps)
{
	check_hypothesis(c, n);
	auto family = family_for(c);
	if (mode == ModulusMode::factorial) {
		auto report = FactorialSearch(n, caps).smallest_witness(family, n);
		return make_record(c, n, mode, report, report.search_bound, caps);
	}
	return make_record(c, n, mode, find_smallest_witness(family, n), n, caps);
}

ScanResult scan_conjecture(Conjecture c, std::uint64_t from, std::uint64_t to, ModulusMode mode, unsigned workers,
                           const Caps &caps)
{
	if (from > to)
		throw DomainError("scan range is empty");
	check_hypothesis(c, from);
	if (to > caps.harness)
		throw ResourceError("scan end " + std::to_string(to) + " exceeds harness cap " + std::to_string(caps.harness));

	auto family = family_for(c);
	std::optional<FactorialSearch> search;
	if (mode == ModulusMode::factorial)
		search.emplace(to, caps);

	auto parts = parallel_chunks<std::vector<ConjectureRecord>>(
	    from, to, workers, [&](std::uint64_t lo, std::uint64_t hi) {
		    std::vector<ConjectureRecord> out;
		    for (std::uint64_t n = lo; n <= hi; ++n) {
			    if (search) {
				    auto report = search->smallest_witness(family, n);
				    out.push_back(make_record(c, n, mode, report, report.search_bound, caps));
			    } else {
				    out.push_back(make_record(c, n, mode, find_smallest_witness(family, n), n, caps));
			    }
		    }
		    return out;
	    });

	ScanResult result;
	result.records = flatten(std::move(parts));
	for (const auto &r : result.records) {
		result.holds += r.verdict == Verdict::holds;
		result.fails += r.verdict == Verdict::fails;
		result.no_witness += r.verdict == Verdict::no_witness;
	}
	return result;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const ConjectureRecord &r)
{
	nlohmann::ordered_json j;
	j["conjecture"] = to_string(r.conjecture);
	j["n"] = r.n;
	j["mode"] = to_string(r.mode);
	j["x"] = r.x ? nlohmann::ordered_json(*r.x) : nlohmann::ordered_json(nullptr);
	j["values"] = nlohmann::ordered_json::array();
	for (const auto &v : r.values)
		j["values"].push_back(v.get_str());
	j["prime"] = nlohmann::ordered_json::array();
	for (bool p : r.prime)
		j["prime"].push_back(p);
	j["verdict"] = to_string(r.verdict);
	j["search_bound"] = r.search_bound;
	return j;
}

ConjectureRecord record_from_json(const nlohmann::json &j)
{
	ConjectureRecord r;
	r.conjecture = conjecture_from_string(j.at("conjecture").get<std::string>());
	r.n = j.at("n").get<std::uint64_t>();
	r.mode = mode_from_string(j.at("mode").get<std::string>());
	if (!j.at("x").is_null())
		r.x = j.at("x").get<std::uint64_t>();
	for (const auto &v : j.at("values"))
		r.values.emplace_back(v.get<std::string>());
	for (const auto &p : j.at("prime"))
		r.prime.push_back(p.get<bool>());
	r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
	r.search_bound = j.at("search_bound").get<std::uint64_t>();
	return r;
}

nlohmann::ordered_json counterexample_json(const ConjectureRecord &r)
{
	auto j = to_json(r);
	nlohmann::ordered_json evidence;
	evidence["factorizations"] = nlohmann::ordered_json::array();
	for (std::size_t i = 0; i < r.values.size(); ++i) {
		if (r.prime[i])
			continue;
		nlohmann::ordered_json f;
		f["value"] = r.values[i].get_str();
		// rho factoring stays practical up to roughly 128-bit values
		if (mpz_sizeinbase(r.values[i].get_mpz_t(), 2) <= 128)
			f["factors"] = factorize(r.values[i]).to_string();
		else
			f["factors"] = nullptr;
		evidence["factorizations"].push_back(f);
	}
	WitnessReport recheck;
	recheck.modulus = r.n;
	recheck.factorial_modulus = r.mode == ModulusMode::factorial;
	recheck.family = family_for(r.conjecture);
	recheck.witness = r.x;
	recheck.values = r.values;
	evidence["witness_verified"] = verify_witness(recheck);
	j["evidence"] = evidence;
	return j;
}

void write_scan(const ScanResult &scan, std::ostream &records, std::ostream *counterexamples)
{
	for (const auto &r : scan.records) {
		records << to_json(r).dump() << '\n';
		if (counterexamples && r.verdict == Verdict::fails)
			*counterexamples << counterexample_json(r).dump() << '\n';
	}
}

} // namespace polignac
