#include "polignac/cli.hpp"

#include "polignac/bounds.hpp"
#include "polignac/census.hpp"
#include "polignac/conjecture.hpp"
#include "polignac/errors.hpp"
#include "polignac/gaps.hpp"
#include "polignac/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <thread>

namespace polignac {

namespace {

using Json = nlohmann::ordered_json;

Json bound_violations_json(const std::vector<BoundViolation> &vs)
{
	Json arr = Json::array();
	for (const auto &v : vs)
		arr.push_back({{"argument", v.argument}, {"lhs", v.lhs}, {"rhs", v.rhs}});
	return arr;
}

Json threshold_json(const ThresholdReport &r)
{
	Json j;
	j["statement"] = r.statement;
	j["parameter"] = r.parameter;
	j["paper_constant"] = r.paper_constant.get_str();
	j["empirical_threshold"] = r.empirical_threshold ? Json(*r.empirical_threshold) : Json(nullptr);
	j["scan_limit"] = r.scan_limit;
	j["constant_in_range"] = r.constant_in_range;
	j["violations_above_constant"] = r.violations_above_constant;
	j["corollary_violations"] = r.corollary_violations;
	j["consistent"] = r.consistent();
	return j;
}

Json witness_json(const WitnessReport &r)
{
	Json j;
	j["family"] = r.family.name();
	if (r.family.kind() == FamilyKind::shifted_pair)
		j["a"] = r.family.shift();
	j["modulus"] = r.modulus;
	j["factorial_modulus"] = r.factorial_modulus;
	j["require_x_gt_1"] = r.family.require_x_gt_1();
	j["method"] = to_string(r.method);
	j["x"] = r.witness ? Json(*r.witness) : Json(nullptr);
	j["values"] = Json::array();
	for (const auto &v : r.values)
		j["values"].push_back(v.get_str());
	j["verified"] = r.verified;
	return j;
}

std::ofstream open_output(const std::string &path)
{
	std::ofstream f(path, std::ios::binary | std::ios::trunc);
	if (!f)
		throw ResourceError("cannot open '" + path + "' for writing");
	return f;
}

void close_output(std::ofstream &f, const std::string &path)
{
	f.close();
	if (!f)
		throw ResourceError("failed writing '" + path + "'");
}

const std::vector<std::string> kFamilies = {"shifted-pair", "sophie-germain", "mersenne", "quadratic", "fermat"};

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Coprime witnesses, census formulas and conjecture scans"};
	app.require_subcommand(1);
	unsigned workers = std::max(1u, std::thread::hardware_concurrency());
	app.add_option("--workers", workers, "Worker threads for range scans")->check(CLI::PositiveNumber);

	// census
	std::uint64_t census_n = 0;
	std::int64_t census_a = 1, census_b = 0;
	bool census_brute_flag = false;
	auto *census = app.add_subcommand("census", "Count x in Z_n* with gcd(ax + b, n) = 1");
	census->add_option("--n", census_n)->required()->check(CLI::PositiveNumber);
	census->add_option("--a", census_a)->required();
	census->add_option("--b", census_b)->required();
	census->add_flag("--brute", census_brute_flag, "Cross-check by enumeration");

	// witness
	std::string witness_family, construct;
	std::uint64_t witness_a = 1, witness_n = 0;
	auto *witness = app.add_subcommand("witness", "Smallest or constructed witness modulo n");
	witness->add_option("--family", witness_family)->required()->check(CLI::IsMember(kFamilies));
	witness->add_option("--a", witness_a, "Shift for shifted-pair")->check(CLI::PositiveNumber);
	witness->add_option("--n", witness_n)->required()->check(CLI::PositiveNumber);
	witness->add_option("--construct", construct)->check(CLI::IsMember({"appendix-a", "appendix-c"}));

	// exceptional
	std::string exceptional_family;
	std::uint64_t exceptional_a = 1, exceptional_limit = 0;
	auto *exceptional = app.add_subcommand("exceptional", "Moduli without a witness");
	exceptional->add_option("--family", exceptional_family)->required()->check(CLI::IsMember(kFamilies));
	exceptional->add_option("--a", exceptional_a, "Shift for shifted-pair")->check(CLI::PositiveNumber);
	exceptional->add_option("--limit", exceptional_limit)->required()->check(CLI::PositiveNumber);

	// conjecture
	std::string which_conjecture, mode = "factorial", conjecture_out;
	std::uint64_t from = 0, to = 0;
	auto *conjecture = app.add_subcommand("conjecture", "Smallest-witness primality scan, JSONL records");
	conjecture->add_option("--which", which_conjecture)
	    ->required()
	    ->check(CLI::IsMember({"twin", "sophie-germain", "mersenne", "landau"}));
	conjecture->add_option("--from", from)->required();
	conjecture->add_option("--to", to)->required();
	conjecture->add_option("--mode", mode)->check(CLI::IsMember({"factorial", "plain"}));
	conjecture->add_option("--out", conjecture_out)->required();

	// gaps
	std::uint64_t gaps_x = 0, k_max = 0;
	std::string gaps_out;
	auto *gaps = app.add_subcommand("gaps", "Consecutive prime gap census, CSV");
	gaps->add_option("--x", gaps_x)->required()->check(CLI::PositiveNumber);
	gaps->add_option("--k-max", k_max)->required()->check(CLI::PositiveNumber);
	gaps->add_option("--out", gaps_out, "CSV path, '-' for stdout")->required();

	// bounds
	std::string which_bound;
	std::uint64_t bound_a = 1, bound_limit = 0;
	auto *bounds = app.add_subcommand("bounds", "Numeric checks of the cited inequalities");
	bounds->add_option("--which", which_bound)
	    ->required()
	    ->check(CLI::IsMember({"lemma4", "rosser", "robin", "remark10", "appendix-c"}));
	bounds->add_option("--a", bound_a)->check(CLI::PositiveNumber);
	bounds->add_option("--limit", bound_limit)->required()->check(CLI::PositiveNumber);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return kExitOk;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << "\n\n" << app.help();
		return kExitUsage;
	}

	try {
		Caps caps = caps_from_env();

		if (*census) {
			auto n = factorize(census_n);
			auto r = census_report(n, LinearForm{census_a, census_b}, census_brute_flag, caps.brute);
			Json j;
			j["n"] = r.modulus.value().get_str();
			j["factorization"] = r.modulus.to_string();
			j["a"] = census_a;
			j["b"] = census_b;
			j["formula_count"] = r.formula_count.get_str();
			j["brute_count"] = r.brute_count ? Json(*r.brute_count) : Json(nullptr);
			j["lower_bound"] = r.lower_bound.get_str();
			out << j.dump(2) << '\n';
			return kExitOk;
		}

		if (*witness) {
			auto family = family_from_name(witness_family, witness_a);
			std::optional<WitnessReport> report;
			if (construct == "appendix-a") {
				if (family.kind() != FamilyKind::sophie_germain)
					throw DomainError("--construct appendix-a applies to the sophie-germain family");
				report = construct_witness_theorem2(factorize(witness_n));
			} else if (construct == "appendix-c") {
				if (family.kind() != FamilyKind::shifted_pair)
					throw DomainError("--construct appendix-c applies to the shifted-pair family");
				report = construct_witness_appendix_c(witness_a, factorize(witness_n));
			} else {
				report = find_smallest_witness(family, witness_n);
			}
			if (!report) {
				WitnessReport none;
				none.modulus = witness_n;
				none.family = family;
				report = none;
			}
			out << witness_json(*report).dump(2) << '\n';
			return kExitOk;
		}

		if (*exceptional) {
			auto family = family_from_name(exceptional_family, exceptional_a);
			out << Json(exceptional_set_scan(family, exceptional_limit, workers, caps.scan)).dump() << '\n';
			return kExitOk;
		}

		if (*conjecture) {
			auto result = scan_conjecture(conjecture_from_string(which_conjecture), from, to, mode_from_string(mode),
			                              workers, caps);
			auto records = open_output(conjecture_out);
			std::string cx_path = conjecture_out + ".counterexamples.jsonl";
			if (result.fails > 0) {
				auto cx = open_output(cx_path);
				write_scan(result, records, &cx);
				close_output(cx, cx_path);
			} else {
				write_scan(result, records, nullptr);
			}
			close_output(records, conjecture_out);
			Json summary;
			summary["conjecture"] = which_conjecture;
			summary["mode"] = mode;
			summary["from"] = from;
			summary["to"] = to;
			summary["records"] = result.records.size();
			summary["holds"] = result.holds;
			summary["fails"] = result.fails;
			summary["no_witness"] = result.no_witness;
			summary["out"] = conjecture_out;
			summary["counterexamples"] = result.fails > 0 ? Json(cx_path) : Json(nullptr);
			out << summary.dump(2) << '\n';
			return result.fails > 0 ? kExitFinding : kExitOk;
		}

		if (*gaps) {
			auto rows = gap_census_table(gaps_x, k_max, caps);
			if (gaps_out == "-") {
				write_gap_csv(rows, out);
			} else {
				auto f = open_output(gaps_out);
				write_gap_csv(rows, f);
				close_output(f, gaps_out);
			}
			return kExitOk;
		}

		if (*bounds) {
			Json j;
			bool finding = false;
			if (which_bound == "lemma4" || which_bound == "appendix-c") {
				auto r = which_bound == "lemma4" ? phi_over_2omega_scan(bound_a, bound_limit, workers, caps)
				                                 : shifted_pair_threshold_scan(bound_a, bound_limit, workers, caps);
				j = threshold_json(r);
				finding = !r.consistent();
			} else if (which_bound == "rosser") {
				auto v = rosser_schoenfeld_check(bound_limit, caps);
				j = {{"check", "rosser"}, {"limit", bound_limit}, {"violations", bound_violations_json(v)}};
				finding = !v.empty();
			} else if (which_bound == "robin") {
				auto v = robin_omega_check(bound_limit, workers, caps);
				j = {{"check", "robin"}, {"limit", bound_limit}, {"violations", bound_violations_json(v)}};
				finding = !v.empty();
			} else {
				auto r = remark10_check(bound_limit, caps);
				j["check"] = "remark10";
				j["k_limit"] = r.k_limit;
				j["main_violations"] = bound_violations_json(r.main_violations);
				j["exact_comparisons"] = r.exact_comparisons;
				j["auxiliary_failures"] = bound_violations_json(r.auxiliary_failures);
				j["auxiliary_valid_from"] = r.auxiliary_valid_from ? Json(*r.auxiliary_valid_from) : Json(nullptr);
				// the auxiliary inequality is known to fail for small p_k; only the
				// main inequality counts as a finding
				finding = !r.main_violations.empty();
			}
			out << j.dump(2) << '\n';
			return finding ? kExitFinding : kExitOk;
		}
	} catch (const ResourceError &e) {
		err << "resource error: " << e.what() << '\n';
		return kExitResource;
	} catch (const FalsificationError &e) {
		err << "falsification: " << e.what() << '\n';
		return kExitFinding;
	} catch (const DomainError &e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	}
	return kExitUsage;
}

} // namespace polignac
