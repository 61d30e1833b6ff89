#include "polignac/bounds.hpp"
#include "polignac/census.hpp"
#include "polignac/conjecture.hpp"
#include "polignac/errors.hpp"
#include "polignac/gaps.hpp"
#include "polignac/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace polignac;

namespace {

// Python int <-> BigInt through decimal strings; sizes here are modest.
py::int_ to_py(const BigInt &v)
{
	PyObject *o = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
	if (!o)
		throw py::error_already_set();
	return py::reinterpret_steal<py::int_>(o);
}

BigInt from_py(const py::int_ &v)
{
	return BigInt(py::str(v).cast<std::string>());
}

py::list to_py(const std::vector<BigInt> &vs)
{
	py::list out;
	for (const auto &v : vs)
		out.append(to_py(v));
	return out;
}

py::object optional_u64(const std::optional<std::uint64_t> &v)
{
	return v ? py::object(py::int_(*v)) : py::object(py::none());
}

py::dict witness_dict(const WitnessReport &r)
{
	py::dict d;
	d["family"] = r.family.name();
	d["a"] = r.family.shift();
	d["modulus"] = r.modulus;
	d["factorial_modulus"] = r.factorial_modulus;
	d["require_x_gt_1"] = r.family.require_x_gt_1();
	d["method"] = to_string(r.method);
	d["x"] = optional_u64(r.witness);
	d["values"] = to_py(r.values);
	d["verified"] = r.verified;
	if (r.factorial_modulus)
		d["search_bound"] = r.search_bound;
	return d;
}

py::dict record_dict(const ConjectureRecord &r)
{
	py::dict d;
	d["conjecture"] = to_string(r.conjecture);
	d["n"] = r.n;
	d["mode"] = to_string(r.mode);
	d["x"] = optional_u64(r.x);
	d["values"] = to_py(r.values);
	d["prime"] = r.prime;
	d["verdict"] = to_string(r.verdict);
	d["search_bound"] = r.search_bound;
	return d;
}

py::list violations(const std::vector<BoundViolation> &vs)
{
	py::list out;
	for (const auto &v : vs)
		out.append(py::make_tuple(v.argument, v.lhs, v.rhs));
	return out;
}

py::object pair_or_none(const std::optional<PrimePair> &p)
{
	return p ? py::object(py::make_tuple(p->p, p->q)) : py::object(py::none());
}

FunctionFamily family_arg(const std::string &name, std::uint64_t a) { return family_from_name(name, a); }

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Coprime witnesses, census formulas and prime-gap checks";

	auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
	py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
	py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
	py::register_exception<FalsificationError>(m, "FalsificationError", base.ptr());

	// arithmetic
	m.def(
	    "is_prime", [](const py::int_ &n) { return is_prime(from_py(n)).prime; }, py::arg("n"));
	m.def(
	    "factorize",
	    [](const py::int_ &n) {
		    py::list out;
		    auto fn = factorize(from_py(n));
		    for (const auto &f : fn.factors())
			    out.append(py::make_tuple(to_py(f.prime), f.exponent));
		    return out;
	    },
	    py::arg("n"), "Prime factorization as [(p, e), ...].");
	m.def(
	    "primorial", [](std::uint64_t n) { return to_py(primorial(n)); }, py::arg("n"));

	// census
	m.def(
	    "census_formula",
	    [](const py::int_ &n, std::int64_t a, std::int64_t b) {
		    return to_py(census_formula(factorize(from_py(n)), LinearForm{a, b}));
	    },
	    py::arg("n"), py::arg("a"), py::arg("b"));
	m.def(
	    "census_brute",
	    [](std::uint64_t n, std::int64_t a, std::int64_t b) { return census_brute(n, LinearForm{a, b}); },
	    py::arg("n"), py::arg("a"), py::arg("b"));
	m.def(
	    "generalized_totient",
	    [](const std::string &family, std::uint64_t n, std::uint64_t a) {
		    return generalized_totient(family_arg(family, a), n);
	    },
	    py::arg("family"), py::arg("n"), py::arg("a") = 1);

	// witnesses
	m.def(
	    "smallest_witness",
	    [](const std::string &family, std::uint64_t n, std::uint64_t a) -> py::object {
		    auto r = find_smallest_witness(family_arg(family, a), n);
		    return r ? py::object(witness_dict(*r)) : py::object(py::none());
	    },
	    py::arg("family"), py::arg("n"), py::arg("a") = 1);
	m.def(
	    "construct_witness",
	    [](const std::string &method, std::uint64_t n, std::uint64_t a) {
		    if (method == "appendix-a")
			    return witness_dict(construct_witness_theorem2(factorize(n)));
		    if (method == "appendix-c")
			    return witness_dict(construct_witness_appendix_c(a, factorize(n)));
		    throw DomainError("construction must be 'appendix-a' or 'appendix-c'");
	    },
	    py::arg("method"), py::arg("n"), py::arg("a") = 1);
	m.def(
	    "lift_witness", [](std::uint64_t a, std::uint64_t mod, std::uint64_t p) { return lift_witness_lemma6(a, mod, p); },
	    py::arg("a"), py::arg("m"), py::arg("p"));
	m.def(
	    "exceptional_set",
	    [](const std::string &family, std::uint64_t limit, std::uint64_t a, unsigned workers) {
		    auto f = family_arg(family, a);
		    py::gil_scoped_release release;
		    return exceptional_set_scan(f, limit, workers);
	    },
	    py::arg("family"), py::arg("limit"), py::arg("a") = 1, py::arg("workers") = 1);
	m.def(
	    "mersenne_pi_generalized",
	    [](const py::int_ &limit) {
		    auto r = mersenne_pi_generalized(from_py(limit));
		    py::dict d;
		    d["limit"] = to_py(r.limit);
		    d["r"] = r.r;
		    d["pi"] = r.pi_generalized;
		    d["exponents"] = r.witness_set;
		    d["values"] = to_py(r.values);
		    return d;
	    },
	    py::arg("limit"));
	m.def(
	    "max_coprime_subset",
	    [](const std::vector<py::int_> &values) {
		    std::vector<BigInt> vs;
		    for (const auto &v : values)
			    vs.push_back(from_py(v));
		    return max_coprime_subset_brute(vs);
	    },
	    py::arg("values"));
	m.def(
	    "fermat_obstruction",
	    [](std::uint64_t k) {
		    auto r = fermat_obstruction(k);
		    return py::make_tuple(to_py(r.modulus), r.verified);
	    },
	    py::arg("k"));

	// conjecture harness
	m.def(
	    "check_conjecture",
	    [](const std::string &which, std::uint64_t n, const std::string &mode) {
		    return record_dict(check_conjecture(conjecture_from_string(which), n, mode_from_string(mode)));
	    },
	    py::arg("which"), py::arg("n"), py::arg("mode") = "factorial");
	m.def(
	    "scan_conjecture",
	    [](const std::string &which, std::uint64_t from, std::uint64_t to, const std::string &mode, unsigned workers) {
		    auto c = conjecture_from_string(which);
		    auto md = mode_from_string(mode);
		    ScanResult result;
		    {
			    py::gil_scoped_release release;
			    result = scan_conjecture(c, from, to, md, workers);
		    }
		    py::list out;
		    for (const auto &r : result.records)
			    out.append(record_dict(r));
		    return out;
	    },
	    py::arg("which"), py::arg("start"), py::arg("stop"), py::arg("mode") = "factorial", py::arg("workers") = 1);
	m.def(
	    "conjecture_jsonl",
	    [](const std::string &which, std::uint64_t from, std::uint64_t to, const std::string &mode) {
		    auto result = scan_conjecture(conjecture_from_string(which), from, to, mode_from_string(mode));
		    std::ostringstream records;
		    write_scan(result, records, nullptr);
		    return records.str();
	    },
	    py::arg("which"), py::arg("start"), py::arg("stop"), py::arg("mode") = "factorial",
	    "Scan records in the CLI's JSONL format.");

	// gaps
	m.def(
	    "hardy_littlewood_constant",
	    [](std::uint64_t truncation) {
		    auto c = hardy_littlewood_constant(truncation);
		    return py::make_tuple(c.value, c.error_bound);
	    },
	    py::arg("truncation"), "Truncated twin-prime constant and its error bound.");
	m.def(
	    "gap_census",
	    [](std::uint64_t x, std::uint64_t k) {
		    auto r = gap_census(x, k);
		    py::dict d;
		    d["k"] = r.k;
		    d["x_limit"] = r.x_limit;
		    d["empirical"] = r.empirical;
		    d["predicted"] = r.predicted;
		    d["ratio"] = r.ratio ? py::object(py::float_(*r.ratio)) : py::object(py::none());
		    return d;
	    },
	    py::arg("x"), py::arg("k"));
	m.def(
	    "gap_census_csv",
	    [](std::uint64_t x, std::uint64_t k_max) {
		    std::ostringstream out;
		    write_gap_csv(gap_census_table(x, k_max), out);
		    return out.str();
	    },
	    py::arg("x"), py::arg("k_max"));
	m.def(
	    "weakened_polignac_check", [](std::uint64_t k, std::uint64_t limit) { return pair_or_none(weakened_polignac_check(k, limit)); },
	    py::arg("k"), py::arg("prime_limit"));
	m.def(
	    "sum_or_difference_check",
	    [](std::uint64_t two_k, std::uint64_t limit) {
		    auto r = sum_or_difference_check(two_k, limit);
		    py::dict d;
		    d["classification"] = r.classification();
		    d["sum"] = pair_or_none(r.sum);
		    d["difference"] = pair_or_none(r.difference);
		    return d;
	    },
	    py::arg("two_k"), py::arg("prime_limit"));
	m.def(
	    "mersenne_density_prediction",
	    [](const py::int_ &x, const std::string &model) {
		    auto r = mersenne_density_prediction(from_py(x), mersenne_model_from_string(model));
		    py::dict d;
		    d["model"] = to_string(r.model);
		    d["predicted"] = r.predicted;
		    d["actual"] = r.actual;
		    d["exponents"] = r.exponents;
		    return d;
	    },
	    py::arg("x"), py::arg("model") = "gillies");

	// bounds
	m.def(
	    "lemma4_constant", [](std::uint64_t a) { return to_py(lemma4_constant(a)); }, py::arg("a"));
	m.def(
	    "phi_over_2omega_scan",
	    [](std::uint64_t a, std::uint64_t limit) {
		    auto r = phi_over_2omega_scan(a, limit);
		    py::dict d;
		    d["paper_constant"] = to_py(r.paper_constant);
		    d["empirical_threshold"] = optional_u64(r.empirical_threshold);
		    d["scan_limit"] = r.scan_limit;
		    d["consistent"] = r.consistent();
		    return d;
	    },
	    py::arg("a"), py::arg("limit"));
	m.def(
	    "rosser_schoenfeld_check", [](std::uint64_t limit) { return violations(rosser_schoenfeld_check(limit)); },
	    py::arg("limit"));
	m.def(
	    "robin_omega_check", [](std::uint64_t limit) { return violations(robin_omega_check(limit)); }, py::arg("limit"));
	m.def(
	    "remark10_check",
	    [](std::uint64_t k_limit) {
		    auto r = remark10_check(k_limit);
		    py::dict d;
		    d["main_violations"] = violations(r.main_violations);
		    d["auxiliary_failures"] = violations(r.auxiliary_failures);
		    d["auxiliary_valid_from"] = optional_u64(r.auxiliary_valid_from);
		    return d;
	    },
	    py::arg("k_limit"));
}
