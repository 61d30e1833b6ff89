#pragma once

#include "polignac/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polignac {

/// The integer-valued linear form a*x + b.
struct LinearForm {
	std::int64_t a = 1;
	std::int64_t b = 0;

	bool operator==(const LinearForm &) const = default;
	/// a*x + b; DomainError on 64-bit overflow.
	std::int64_t operator()(std::int64_t x) const;
};

enum class FamilyKind { linear, shifted_pair, sophie_germain, mersenne, quadratic, fermat };

/// A finite family of number-theoretic functions evaluated at one argument.
///
///   shifted_pair(a)   x, x + 2a
///   sophie_germain    x, 2x + 1
///   mersenne          2^x - 1
///   quadratic         x^2 + 1
///   fermat            2^(2^x) + 1
///   linear(forms)     a_i x + b_i
///
/// `require_x_gt_1` restricts arguments to x > 1. The defaults follow the
/// statements each family comes from: on for the pairs and Mersenne, off for
/// x^2 + 1 (x = 1 gives 2) and Fermat (x = 0 gives 3).
class FunctionFamily {
public:
	static FunctionFamily shifted_pair(std::uint64_t a = 1);
	static FunctionFamily sophie_germain();
	static FunctionFamily mersenne();
	static FunctionFamily quadratic();
	static FunctionFamily fermat();
	/// DomainError for an empty list or repeated forms.
	static FunctionFamily linear(std::vector<LinearForm> forms, bool require_x_gt_1 = false);

	FamilyKind kind() const { return kind_; }
	/// Shift parameter of shifted_pair (0 for other kinds).
	std::uint64_t shift() const { return shift_; }
	bool require_x_gt_1() const { return require_x_gt_1_; }
	FunctionFamily with_require_x_gt_1(bool v) const;

	/// Linear forms for polynomial-linear kinds (linear, shifted_pair,
	/// sophie_germain); empty otherwise.
	const std::vector<LinearForm> &forms() const { return forms_; }
	bool is_linear() const { return !forms_.empty(); }
	bool is_periodic() const { return kind_ != FamilyKind::mersenne && kind_ != FamilyKind::fermat; }

	/// Smallest admissible argument (2 when x > 1 is required; otherwise 0
	/// for Fermat and 1 for the rest).
	std::uint64_t first_argument() const;

	std::vector<BigInt> evaluate(std::uint64_t x) const;
	/// Values reduced modulo n (periodic kinds only).
	std::vector<std::uint64_t> evaluate_mod(std::uint64_t x, std::uint64_t n) const;

	/// CLI-style name: "shifted-pair", "sophie-germain", "mersenne",
	/// "quadratic", "fermat", "linear".
	std::string name() const;
	std::string describe() const;

private:
	FunctionFamily(FamilyKind kind, std::vector<LinearForm> forms, std::uint64_t shift, bool gt1)
	    : kind_(kind), forms_(std::move(forms)), shift_(shift), require_x_gt_1_(gt1)
	{
	}

	FamilyKind kind_;
	std::vector<LinearForm> forms_;
	std::uint64_t shift_ = 0;
	bool require_x_gt_1_ = true;
};

/// Parses a CLI family name; `a` is the shift for shifted-pair.
FunctionFamily family_from_name(const std::string &name, std::uint64_t a = 1);

} // namespace polignac
