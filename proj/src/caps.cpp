#include "polignac/caps.hpp"

#include "polignac/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace polignac {

namespace {

void override_from_env(std::uint64_t &field, const char *name)
{
	const char *raw = std::getenv(name);
	if (raw == nullptr || *raw == '\0')
		return;
	std::string_view text(raw);
	std::uint64_t value = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
	if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
		throw DomainError(std::string(name) + " must be a positive integer, got '" + raw + "'");
	field = value;
}

} // namespace

void Caps::validate() const
{
	for (std::uint64_t v : {sieve, brute, harness, scan, bound_scan, remark10_k, mersenne_exponent,
	                        coprime_subset, fermat_index})
		if (v == 0)
			throw DomainError("resource caps must be positive");
}

Caps caps_from_env()
{
	Caps caps;
	override_from_env(caps.sieve, "POLIGNAC_SIEVE_CAP");
	override_from_env(caps.brute, "POLIGNAC_BRUTE_CAP");
	override_from_env(caps.harness, "POLIGNAC_HARNESS_CAP");
	override_from_env(caps.scan, "POLIGNAC_SCAN_CAP");
	override_from_env(caps.bound_scan, "POLIGNAC_BOUND_SCAN_CAP");
	override_from_env(caps.remark10_k, "POLIGNAC_REMARK10_K_CAP");
	override_from_env(caps.mersenne_exponent, "POLIGNAC_MERSENNE_EXPONENT_CAP");
	override_from_env(caps.coprime_subset, "POLIGNAC_COPRIME_SUBSET_CAP");
	override_from_env(caps.fermat_index, "POLIGNAC_FERMAT_INDEX_CAP");
	caps.validate();
	return caps;
}

} // namespace polignac
