#include "oracles.hpp"

#include "polignac/bounds.hpp"
#include "polignac/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace polignac;

TEST_CASE("phi threshold constant")
{
	CHECK(lemma4_constant(1) == 27000);
	BigInt c2, c4;
	mpz_ui_pow_ui(c2.get_mpz_t(), 210, 4);
	mpz_ui_pow_ui(c4.get_mpz_t(), 510510, 5);
	CHECK(lemma4_constant(2) == c2);
	CHECK(lemma4_constant(4) == c4);
	CHECK(lemma4_constant(3) == c2 * 11 * 11 * 11 * 11 * 13 * 13 * 13 * 13); // primes <= 13, m = 2
	CHECK_THROWS_AS(lemma4_constant(0), DomainError);
	CHECK(appendix_c_constant(1) == 120);
	CHECK(appendix_c_constant(20) == 161);
}

TEST_CASE("phi over 2^omega scan")
{
	auto r = phi_over_2omega_scan(1, 100'000);
	REQUIRE(r.empirical_threshold);
	CHECK(*r.empirical_threshold == 30);
	CHECK(r.paper_constant == 27000);
	CHECK(r.constant_in_range);
	CHECK(r.consistent());

	// direct points
	CHECK(oracle::totient(30) / (1u << oracle::omega(30)) == 1);
	CHECK(oracle::totient(31) / (1u << oracle::omega(31)) == 15);

	for (std::uint64_t a = 1; a <= 8; ++a) {
		auto s = phi_over_2omega_scan(a, 200'000);
		REQUIRE(s.empirical_threshold);
		CHECK(to_big(*s.empirical_threshold) <= lemma4_constant(a));
		CHECK(s.consistent());
		// oracle: nothing above the threshold violates
		for (std::uint64_t n = *s.empirical_threshold + 1; n <= *s.empirical_threshold + 300; ++n)
			REQUIRE(oracle::totient(n) > a << oracle::omega(n));
	}
	CHECK_THROWS_AS(phi_over_2omega_scan(1, 20'000'000), ResourceError);
}

TEST_CASE("phi scan matches brute force on a small range")
{
	for (std::uint64_t a : {1, 2, 3}) {
		std::uint64_t want = 0;
		for (std::uint64_t n = 2; n <= 3000; ++n)
			if (oracle::totient(n) <= a << oracle::omega(n))
				want = n;
		CHECK(*phi_over_2omega_scan(a, 3000).empirical_threshold == want);
	}
}

TEST_CASE("shifted pair threshold")
{
	auto r = shifted_pair_threshold_scan(1, 100'000);
	CHECK(*r.empirical_threshold == 6);
	CHECK(r.paper_constant == 120);
	CHECK(r.consistent());
}

TEST_CASE("Rosser-Schoenfeld")
{
	CHECK(rosser_schoenfeld_check(16).empty());
	CHECK(rosser_schoenfeld_check(17).empty());
	CHECK(rosser_schoenfeld_check(1'000'000).empty());
	CHECK(7 >= 17 / std::log(17.0));
	CHECK(25 >= 100 / std::log(100.0));
	// the inequality really does fail just below its hypothesis
	CHECK(4 < 10 / std::log(10.0) + 0.4);
	CHECK_THROWS_AS(rosser_schoenfeld_check(2'000'000'000), ResourceError);
}

TEST_CASE("Robin omega bound")
{
	CHECK(robin_omega_check(25).empty());
	CHECK(robin_omega_check(1'000'000, 2).empty());
	double b30030 = std::log(30030.0) / (std::log(std::log(30030.0)) - 1.1714);
	CHECK(b30030 == doctest::Approx(8.88).epsilon(0.01));
	CHECK_THROWS_AS(robin_omega_check(20'000'000), ResourceError);
}

TEST_CASE("prime-product inequality and its auxiliary bound")
{
	auto r = remark10_check(10'000);
	CHECK(r.main_violations.empty());
	REQUIRE_FALSE(r.auxiliary_failures.empty());
	bool flagged_17 = false;
	for (const auto &f : r.auxiliary_failures)
		if (f.argument == 17) {
			flagged_17 = true;
			CHECK(f.lhs == doctest::Approx(13.14).epsilon(0.01));
			CHECK(f.rhs == doctest::Approx(14.00).epsilon(0.01));
		}
	CHECK(flagged_17);
	REQUIRE(r.auxiliary_valid_from);
	CHECK(*r.auxiliary_valid_from > r.auxiliary_failures.back().argument);

	// direct small cases
	CHECK(8 * 30 > 128);
	CHECK(32 * 2310 > 8192);
	CHECK_THROWS_AS(remark10_check(2), DomainError);
	CHECK_THROWS_AS(remark10_check(20'000), ResourceError);
}
