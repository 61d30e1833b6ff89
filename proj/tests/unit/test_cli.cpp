#include "polignac/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace polignac;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	args.insert(args.begin(), "polignac");
	std::vector<const char *> argv;
	for (const auto &a : args)
		argv.push_back(a.c_str());
	std::ostringstream out, err;
	int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name)
{
	auto dir = std::filesystem::temp_directory_path() / "polignac-cli-test";
	std::filesystem::create_directories(dir);
	auto p = dir / name;
	std::filesystem::remove(p);
	std::filesystem::remove(p.string() + ".counterexamples.jsonl");
	return p;
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path &p)
{
	std::ifstream in(p);
	std::vector<nlohmann::json> rows;
	for (std::string line; std::getline(in, line);)
		rows.push_back(nlohmann::json::parse(line));
	return rows;
}

} // namespace

TEST_CASE("census subcommand")
{
	auto r = run({"census", "--n", "15", "--a", "1", "--b", "2", "--brute"});
	REQUIRE(r.code == kExitOk);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j["formula_count"] == "3");
	CHECK(j["brute_count"] == 3);
	CHECK(j["factorization"] == "3 * 5");

	auto big = run({"census", "--n", "1000000007", "--a", "2", "--b", "1"});
	REQUIRE(big.code == kExitOk);
	CHECK(nlohmann::json::parse(big.out)["brute_count"].is_null());
}

TEST_CASE("witness subcommand")
{
	auto r = run({"witness", "--family", "mersenne", "--n", "82677"});
	REQUIRE(r.code == kExitOk);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j["x"] == 11);
	CHECK(j["values"][0] == "2047");

	auto none = run({"witness", "--family", "shifted-pair", "--a", "1", "--n", "6"});
	REQUIRE(none.code == kExitOk);
	CHECK(nlohmann::json::parse(none.out)["x"].is_null());

	auto built = run({"witness", "--family", "sophie-germain", "--n", "66", "--construct", "appendix-a"});
	REQUIRE(built.code == kExitOk);
	CHECK(nlohmann::json::parse(built.out)["x"] == 23);

	CHECK(run({"witness", "--family", "sophie-germain", "--n", "15", "--construct", "appendix-a"}).code == kExitUsage);
	CHECK(run({"witness", "--family", "mersenne", "--n", "66", "--construct", "appendix-c"}).code == kExitUsage);
}

TEST_CASE("exceptional subcommand")
{
	auto r = run({"exceptional", "--family", "sophie-germain", "--limit", "100"});
	REQUIRE(r.code == kExitOk);
	CHECK(nlohmann::json::parse(r.out) == nlohmann::json({2, 3, 4, 5, 6, 15}));
}

TEST_CASE("conjecture subcommand writes JSONL")
{
	auto path = scratch("twin.jsonl");
	auto r = run({"--workers", "2", "conjecture", "--which", "twin", "--from", "4", "--to", "100", "--out", path.string()});
	REQUIRE(r.code == kExitOk);
	auto rows = read_jsonl(path);
	CHECK(rows.size() == 97);
	CHECK(rows.front()["x"] == 5);
	CHECK(rows.front()["mode"] == "factorial");
	CHECK_FALSE(std::filesystem::exists(path.string() + ".counterexamples.jsonl"));

	auto plain = scratch("mersenne.jsonl");
	auto f = run({"conjecture", "--which", "mersenne", "--from", "82677", "--to", "82677", "--mode", "plain", "--out",
	              plain.string()});
	CHECK(f.code == kExitFinding);
	auto cx = read_jsonl(plain.string() + ".counterexamples.jsonl");
	REQUIRE(cx.size() == 1);
	CHECK(cx[0]["evidence"]["factorizations"][0]["factors"] == "23 * 89");
}

TEST_CASE("gaps subcommand")
{
	auto r = run({"gaps", "--x", "100", "--k-max", "3", "--out", "-"});
	REQUIRE(r.code == kExitOk);
	std::istringstream in(r.out);
	std::string header, row;
	std::getline(in, header);
	CHECK(header == "k,x_limit,empirical,predicted,ratio");
	std::getline(in, row);
	CHECK(row.rfind("1,100,8,", 0) == 0);

	auto path = scratch("gaps.csv");
	CHECK(run({"gaps", "--x", "1000", "--k-max", "5", "--out", path.string()}).code == kExitOk);
	CHECK(std::filesystem::file_size(path) > 0);
}

TEST_CASE("bounds subcommand")
{
	auto lemma = run({"bounds", "--which", "lemma4", "--a", "1", "--limit", "100000"});
	REQUIRE(lemma.code == kExitOk);
	CHECK(nlohmann::json::parse(lemma.out)["empirical_threshold"] == 30);

	CHECK(run({"bounds", "--which", "rosser", "--limit", "100000"}).code == kExitOk);
	CHECK(run({"bounds", "--which", "robin", "--limit", "100000"}).code == kExitOk);
	auto r10 = run({"bounds", "--which", "remark10", "--limit", "2000"});
	CHECK(r10.code == kExitOk); // auxiliary failures alone are not a finding
	CHECK_FALSE(nlohmann::json::parse(r10.out)["auxiliary_failures"].empty());
	CHECK(run({"bounds", "--which", "appendix-c", "--a", "2", "--limit", "5000"}).code == kExitOk);
}

TEST_CASE("errors map to exit codes")
{
	CHECK(run({"bogus"}).code == kExitUsage);
	CHECK(run({"census", "--n", "15"}).code == kExitUsage);
	CHECK(run({"witness", "--family", "cubic", "--n", "5"}).code == kExitUsage);
	CHECK(run({"conjecture", "--which", "twin", "--from", "2", "--to", "10", "--out", scratch("x.jsonl").string()}).code
	      == kExitUsage);
	CHECK(run({"gaps", "--x", "100", "--k-max", "2", "--out", "/nonexistent-dir/x.csv"}).code == kExitResource);
	CHECK(run({"bounds", "--which", "remark10", "--limit", "50000"}).code == kExitResource);

	setenv("POLIGNAC_BRUTE_CAP", "10", 1);
	auto capped = run({"census", "--n", "15", "--a", "1", "--b", "2", "--brute"});
	unsetenv("POLIGNAC_BRUTE_CAP");
	CHECK(capped.code == kExitResource);
	CHECK(capped.err.find("resource") != std::string::npos);

	setenv("POLIGNAC_SIEVE_CAP", "zero", 1);
	auto malformed = run({"gaps", "--x", "100", "--k-max", "2", "--out", "-"});
	unsetenv("POLIGNAC_SIEVE_CAP");
	CHECK(malformed.code == kExitUsage);
}
