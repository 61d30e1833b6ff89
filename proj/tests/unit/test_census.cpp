#include "oracles.hpp"

#include "polignac/census.hpp"
#include "polignac/errors.hpp"
#include "polignac/family.hpp"

#include <doctest.h>

using namespace polignac;

namespace {

BigInt formula(std::uint64_t n, std::int64_t a, std::int64_t b)
{
	return census_formula(factorize(n), LinearForm{a, b});
}

} // namespace

TEST_CASE("census formula examples")
{
	CHECK(formula(5, 1, 2) == 3);
	CHECK(formula(8, 1, 2) == 4);
	CHECK(formula(8, 1, 3) == 0);
	CHECK(formula(9, 1, 3) == 6);
	CHECK(formula(15, 1, 2) == 3);
	CHECK(formula(1, 1, 2) == 0);
	CHECK_THROWS_AS(formula(15, 2, 4), HypothesisError);
	CHECK_THROWS_AS(formula(15, 0, 0), HypothesisError);
}

TEST_CASE("census brute examples")
{
	CHECK(census_brute(15, LinearForm{1, 2}) == 3);
	CHECK(census_brute(5, LinearForm{1, 2}) == 3);
	CHECK(census_brute(1, LinearForm{1, 2}) == 0);
	CHECK(census_brute(1, LinearForm{7, -3}) == 0);
	CHECK_THROWS_AS(census_brute(200'000, LinearForm{1, 2}), ResourceError);
	CHECK_THROWS_AS(census_brute(50, LinearForm{1, 2}, 49), ResourceError);
}

TEST_CASE("census brute agrees with the gcd oracle")
{
	for (std::uint64_t n = 1; n <= 400; ++n)
		for (std::int64_t a : {1, 2, 3, -2, 5})
			for (std::int64_t b : {-7, -1, 0, 1, 2, 6})
				REQUIRE(census_brute(n, LinearForm{a, b}) == oracle::census(n, a, b));

	std::vector<LinearForm> forms{{1, 2}, {3, -1}, {2, 5}};
	auto batch = census_brute(360, forms);
	for (std::size_t i = 0; i < forms.size(); ++i)
		CHECK(batch[i] == census_brute(360, forms[i]));
}

TEST_CASE("census formula agrees with enumeration on random coprime forms")
{
	for (int i = 0; i < 400; ++i) {
		std::uint64_t n = oracle::uniform(1, 5000);
		auto a = static_cast<std::int64_t>(oracle::uniform(1, 40)) * (oracle::uniform(0, 1) ? 1 : -1);
		auto b = static_cast<std::int64_t>(oracle::uniform(0, 80)) - 40;
		if (std::gcd(a, b) != 1)
			continue;
		INFO("n=" << n << " a=" << a << " b=" << b);
		REQUIRE(formula(n, a, b) == oracle::census(n, a, b));
	}
}

TEST_CASE("census formula is multiplicative")
{
	for (int i = 0; i < 300; ++i) {
		std::uint64_t m = oracle::uniform(1, 3000), k = oracle::uniform(1, 3000);
		if (std::gcd(m, k) != 1 || m == 1 || k == 1)
			continue;
		CHECK(formula(m * k, 1, 2) == formula(m, 1, 2) * formula(k, 1, 2));
		CHECK(formula(m * k, 2, 1) == formula(m, 2, 1) * formula(k, 2, 1));
	}
}

TEST_CASE("census lower bound phi / 2^omega when 2 | ab")
{
	for (std::uint64_t n = 2; n <= 3000; ++n) {
		auto f = factorize(n);
		for (std::int64_t a = 1; a <= 5; ++a) {
			auto r = census_report(f, LinearForm{1, 2 * a}, false);
			REQUIRE(Rational(r.formula_count) >= r.lower_bound);
		}
	}
}

TEST_CASE("census report cross-check and lower bound")
{
	auto r = census_report(factorize(std::uint64_t{15}), LinearForm{1, 2}, true);
	CHECK(r.formula_count == 3);
	REQUIRE(r.brute_count);
	CHECK(*r.brute_count == 3);
	CHECK(r.lower_bound == Rational(2));
	auto no_brute = census_report(factorize(std::uint64_t{15}), LinearForm{1, 2}, false);
	CHECK_FALSE(no_brute.brute_count);
}

TEST_CASE("generalized totient")
{
	CHECK(generalized_totient(FunctionFamily::linear({{1, 0}}), 12) == 4);
	CHECK(generalized_totient(FunctionFamily::shifted_pair(1), 15) == 3);
	CHECK(generalized_totient(FunctionFamily::quadratic(), 5) == 3);
	CHECK_THROWS_AS(generalized_totient(FunctionFamily::mersenne(), 15), UnsupportedFamilyError);
	CHECK_THROWS_AS(generalized_totient(FunctionFamily::fermat(), 15), UnsupportedFamilyError);

	// {x} reduces to Euler's totient
	for (std::uint64_t n = 1; n <= 500; ++n)
		REQUIRE(generalized_totient(FunctionFamily::linear({{1, 0}}), n) == oracle::totient(n));
	// {x, x + 2} over a period equals the census count
	for (std::uint64_t n = 2; n <= 500; ++n)
		REQUIRE(generalized_totient(FunctionFamily::shifted_pair(1), n) == census_brute(n, LinearForm{1, 2}));
}
