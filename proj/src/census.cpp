#include "polignac/census.hpp"

#include "polignac/errors.hpp"

#include <numeric>

namespace polignac {

namespace {

std::vector<char> unit_table(std::uint64_t n)
{
	std::vector<char> unit(n);
	for (std::uint64_t v = 0; v < n; ++v)
		unit[v] = std::gcd(v, n) == 1;
	return unit;
}

void check_cap(std::uint64_t n, std::uint64_t cap, const char *what)
{
	if (n > cap)
		throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
		                    std::to_string(cap));
}

std::uint64_t count_with_table(const std::vector<char> &unit, std::uint64_t n, LinearForm form)
{
	if (n <= 1)
		return 0;
	std::uint64_t step = residue(form.a, n);
	std::uint64_t v = (step + residue(form.b, n)) % n; // a*1 + b
	std::uint64_t count = 0;
	for (std::uint64_t x = 1; x < n; ++x) {
		count += unit[x] & unit[v];
		v += step;
		if (v >= n)
			v -= n;
	}
	return count;
}

} // namespace

BigInt census_formula(const FactoredInteger &n, LinearForm form)
{
	if (std::gcd(form.a, form.b) != 1)
		throw HypothesisError("census formula needs gcd(a, b) = 1; got a = " + std::to_string(form.a) +
		                      ", b = " + std::to_string(form.b));
	if (n.value() == 1)
		return 0;
	BigInt a(static_cast<long>(form.a)), b(static_cast<long>(form.b));
	BigInt count = 1;
	for (const auto &f : n.factors()) {
		const BigInt &p = f.prime;
		bool divides_ab = mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) || mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t());
		BigInt lead;
		mpz_pow_ui(lead.get_mpz_t(), p.get_mpz_t(), f.exponent - 1);
		if (p == 2)
			count *= divides_ab ? lead : BigInt(0);
		else
			count *= lead * (divides_ab ? p - 1 : p - 2);
	}
	return count;
}

std::uint64_t census_brute(std::uint64_t n, LinearForm form, std::uint64_t cap)
{
	check_cap(n, cap, "census_brute");
	if (n == 0)
		throw DomainError("census_brute requires n >= 1");
	return count_with_table(unit_table(n), n, form);
}

std::vector<std::uint64_t> census_brute(std::uint64_t n, std::span<const LinearForm> forms, std::uint64_t cap)
{
	check_cap(n, cap, "census_brute");
	if (n == 0)
		throw DomainError("census_brute requires n >= 1");
	auto unit = unit_table(n);
	std::vector<std::uint64_t> out;
	out.reserve(forms.size());
	for (const auto &f : forms)
		out.push_back(count_with_table(unit, n, f));
	return out;
}

CensusReport census_report(const FactoredInteger &n, LinearForm form, bool with_brute, std::uint64_t cap)
{
	CensusReport report{n, form, census_formula(n, form), std::nullopt, Rational(n.phi())};
	BigInt two_omega;
	mpz_ui_pow_ui(two_omega.get_mpz_t(), 2, n.omega());
	report.lower_bound = Rational(n.phi(), two_omega);
	report.lower_bound.canonicalize();
	if (with_brute) {
		report.brute_count = census_brute(n.value_u64(), form, cap);
		if (report.formula_count != to_big(*report.brute_count))
			throw FalsificationError("census formula " + report.formula_count.get_str() + " != enumeration " +
			                         std::to_string(*report.brute_count) + " at n = " + n.value().get_str());
	}
	return report;
}

std::uint64_t generalized_totient(const FunctionFamily &family, std::uint64_t n, std::uint64_t cap)
{
	if (!family.is_periodic())
		throw UnsupportedFamilyError(family.name() + " values are not periodic in x modulo n");
	check_cap(n, cap, "generalized_totient");
	if (n == 0)
		throw DomainError("generalized_totient requires n >= 1");
	if (n == 1)
		return 0; // Z_1* is empty
	auto unit = unit_table(n);
	std::uint64_t count = 0;
	for (std::uint64_t x = 0; x < n; ++x) {
		bool all = true;
		for (std::uint64_t v : family.evaluate_mod(x, n))
			all = all && unit[v];
		count += all;
	}
	return count;
}

} // namespace polignac
