#include "polignac/family.hpp"

#include "polignac/errors.hpp"

#include <algorithm>

namespace polignac {

std::int64_t LinearForm::operator()(std::int64_t x) const
{
	std::int64_t ax = 0, out = 0;
	if (__builtin_mul_overflow(a, x, &ax) || __builtin_add_overflow(ax, b, &out))
		throw DomainError("linear form overflow at x = " + std::to_string(x));
	return out;
}

FunctionFamily FunctionFamily::shifted_pair(std::uint64_t a)
{
	if (a == 0 || a > (std::uint64_t(1) << 61))
		throw DomainError("shifted-pair parameter must satisfy 1 <= a < 2^61");
	auto shift = static_cast<std::int64_t>(2 * a);
	return FunctionFamily(FamilyKind::shifted_pair, {{1, 0}, {1, shift}}, a, true);
}

FunctionFamily FunctionFamily::sophie_germain()
{
	return FunctionFamily(FamilyKind::sophie_germain, {{1, 0}, {2, 1}}, 0, true);
}

FunctionFamily FunctionFamily::mersenne() { return FunctionFamily(FamilyKind::mersenne, {}, 0, true); }

FunctionFamily FunctionFamily::quadratic() { return FunctionFamily(FamilyKind::quadratic, {}, 0, false); }

FunctionFamily FunctionFamily::fermat() { return FunctionFamily(FamilyKind::fermat, {}, 0, false); }

FunctionFamily FunctionFamily::linear(std::vector<LinearForm> forms, bool require_x_gt_1)
{
	if (forms.empty())
		throw DomainError("linear family needs at least one form");
	for (std::size_t i = 0; i < forms.size(); ++i)
		for (std::size_t j = i + 1; j < forms.size(); ++j)
			if (forms[i] == forms[j])
				throw DomainError("linear family forms must be pairwise distinct");
	return FunctionFamily(FamilyKind::linear, std::move(forms), 0, require_x_gt_1);
}

FunctionFamily FunctionFamily::with_require_x_gt_1(bool v) const
{
	FunctionFamily out = *this;
	out.require_x_gt_1_ = v;
	return out;
}

std::uint64_t FunctionFamily::first_argument() const
{
	if (require_x_gt_1_)
		return 2;
	return kind_ == FamilyKind::fermat ? 0 : 1;
}

std::vector<BigInt> FunctionFamily::evaluate(std::uint64_t x) const
{
	std::vector<BigInt> out;
	switch (kind_) {
	case FamilyKind::linear:
	case FamilyKind::shifted_pair:
	case FamilyKind::sophie_germain:
		for (const auto &f : forms_)
			out.emplace_back(BigInt(static_cast<long>(f.a)) * to_big(x) + static_cast<long>(f.b));
		break;
	case FamilyKind::mersenne: {
		BigInt v;
		mpz_ui_pow_ui(v.get_mpz_t(), 2, x);
		out.push_back(v - 1);
		break;
	}
	case FamilyKind::quadratic: {
		BigInt v = to_big(x);
		out.push_back(v * v + 1);
		break;
	}
	case FamilyKind::fermat: {
		if (x > 40)
			throw ResourceError("Fermat index " + std::to_string(x) + " is too large to evaluate");
		BigInt v;
		mpz_ui_pow_ui(v.get_mpz_t(), 2, std::uint64_t(1) << x);
		out.push_back(v + 1);
		break;
	}
	}
	return out;
}

std::vector<std::uint64_t> FunctionFamily::evaluate_mod(std::uint64_t x, std::uint64_t n) const
{
	std::vector<std::uint64_t> out;
	if (is_linear()) {
		for (const auto &f : forms_) {
			std::uint64_t ax = mul_mod(residue(f.a, n), x % n, n);
			out.push_back((ax + residue(f.b, n)) % n);
		}
	} else if (kind_ == FamilyKind::quadratic) {
		out.push_back((mul_mod(x % n, x % n, n) + 1 % n) % n);
	} else {
		throw UnsupportedFamilyError(name() + " values are not periodic in x modulo n");
	}
	return out;
}

std::string FunctionFamily::name() const
{
	switch (kind_) {
	case FamilyKind::linear: return "linear";
	case FamilyKind::shifted_pair: return "shifted-pair";
	case FamilyKind::sophie_germain: return "sophie-germain";
	case FamilyKind::mersenne: return "mersenne";
	case FamilyKind::quadratic: return "quadratic";
	case FamilyKind::fermat: return "fermat";
	}
	return "?";
}

std::string FunctionFamily::describe() const
{
	switch (kind_) {
	case FamilyKind::mersenne: return "2^x - 1";
	case FamilyKind::quadratic: return "x^2 + 1";
	case FamilyKind::fermat: return "2^(2^x) + 1";
	default: break;
	}
	std::string out;
	for (std::size_t i = 0; i < forms_.size(); ++i) {
		const auto &f = forms_[i];
		if (i)
			out += ", ";
		out += (f.a == 1 ? "" : std::to_string(f.a)) + "x";
		if (f.b > 0)
			out += " + " + std::to_string(f.b);
		else if (f.b < 0)
			out += " - " + std::to_string(-f.b);
	}
	return out;
}

FunctionFamily family_from_name(const std::string &name, std::uint64_t a)
{
	if (name == "shifted-pair" || name == "twin")
		return FunctionFamily::shifted_pair(a);
	if (name == "sophie-germain")
		return FunctionFamily::sophie_germain();
	if (name == "mersenne")
		return FunctionFamily::mersenne();
	if (name == "quadratic" || name == "landau")
		return FunctionFamily::quadratic();
	if (name == "fermat")
		return FunctionFamily::fermat();
	throw DomainError("unknown family '" + name + "'");
}

} // namespace polignac
