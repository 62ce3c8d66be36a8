#include "syzlab/config.hpp"
#include "syzlab/ext.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace syzlab;
namespace fs = std::filesystem;

namespace {

struct CliArgs
{
	std::optional<std::string> config_path;
	std::optional<std::string> family;
	std::optional<int64_t> n, m, p;
	std::optional<std::string> q, beta, field;
	std::optional<int64_t> max_degree;
	std::optional<int64_t> assoc_samples;
	std::optional<int64_t> rng_seed;
	bool oracle = false;
	std::string out = ".";
};

void add_common_options(CLI::App* cmd, CliArgs& a)
{
	cmd->add_option("--config", a.config_path, "JSON config file");
	cmd->add_option("--family", a.family, "algebra family: qci, a5, custom");
	cmd->add_option("-n", a.n, "first exponent (qci)");
	cmd->add_option("-m", a.m, "second exponent (qci)");
	cmd->add_option("-q", a.q, "commutation scalar (qci)");
	cmd->add_option("-p", a.p, "characteristic parameter (a5)");
	cmd->add_option("--beta", a.beta, "deformation scalar (a5)");
	cmd->add_option("--field", a.field,
	                "coefficient field: Q or F<prime>, e.g. F5");
	cmd->add_option("-R,--max-degree", a.max_degree,
	                "resolve up to this homological degree");
	cmd->add_option("--out", a.out, "output directory (default .)");
	cmd->add_option("--assoc-samples", a.assoc_samples,
	                "associativity sample count for large algebras");
	cmd->add_option("--seed", a.rng_seed, "random seed for sampled checks");
	cmd->add_flag("--oracle", a.oracle,
	              "cross-check differentials against the syzygy oracle");
}

nlohmann::json field_json(const std::string& s)
{
	if (s == "Q")
		return {{"kind", "Q"}};
	if (s.size() >= 2 && s[0] == 'F')
	{
		int64_t p = 0;
		for (size_t i = 1; i < s.size(); ++i)
		{
			if (s[i] < '0' || s[i] > '9')
				throw ConfigError("bad field name: " + s);
			p = p * 10 + (s[i] - '0');
		}
		return {{"kind", "Fp"}, {"p", p}};
	}
	throw ConfigError("bad field name: " + s + " (use Q or F<prime>)");
}

/* File config plus flag overrides, merged into one JSON object and pushed
 * through the same validator as pure-file configs. */
RunConfig assemble_config(const CliArgs& a)
{
	nlohmann::json j = nlohmann::json::object();
	if (a.config_path)
	{
		std::ifstream in(*a.config_path);
		if (!in)
			throw ConfigError("cannot open config file: " + *a.config_path);
		try
		{
			in >> j;
		}
		catch (const nlohmann::json::exception& e)
		{
			throw ConfigError("config is not valid JSON: " +
			                  std::string(e.what()));
		}
		if (!j.is_object())
			throw ConfigError("config root must be a JSON object");
	}
	if (a.family)
		j["family"] = *a.family;
	if (!j.contains("family"))
		j["family"] = "qci";
	std::string fam =
	    j["family"].is_string() ? j["family"].get<std::string>() : "";
	if (!j.contains("params"))
		j["params"] = nlohmann::json::object();
	auto& jp = j["params"];
	if (fam == "custom")
	{
		if (a.n || a.m || a.q || a.p || a.beta)
			throw ConfigError(
			    "custom family takes parameters from the config file only");
	}
	else if (fam == "a5")
	{
		if (a.p)
			jp["p"] = *a.p;
		else if (!jp.contains("p"))
			jp["p"] = 3;
		if (a.beta)
			jp["beta"] = *a.beta;
	}
	else
	{
		if (a.n)
			jp["n"] = *a.n;
		else if (!jp.contains("n"))
			jp["n"] = 2;
		if (a.m)
			jp["m"] = *a.m;
		else if (!jp.contains("m"))
			jp["m"] = 2;
		if (a.q)
			jp["q"] = *a.q;
	}
	if (a.field)
		j["field"] = field_json(*a.field);
	else if (!j.contains("field"))
	{
		if (fam == "a5")
			j["field"] = {{"kind", "Fp"}, {"p", jp["p"]}};
		else
			j["field"] = {{"kind", "Q"}};
	}
	if (a.max_degree)
		j["max_degree"] = *a.max_degree;
	if (!j.contains("checks"))
		j["checks"] = nlohmann::json::object();
	if (a.oracle)
		j["checks"]["oracle"] = true;
	if (a.assoc_samples)
		j["checks"]["assoc_samples"] = *a.assoc_samples;
	if (a.rng_seed)
		j["checks"]["seed"] = *a.rng_seed;
	if (j["checks"].empty())
		j.erase("checks");
	return parse_run_config(j);
}

nlohmann::ordered_json checks_json(const CheckList& cl)
{
	auto arr = nlohmann::ordered_json::array();
	for (const auto& it : cl.items)
	{
		nlohmann::ordered_json o;
		o["name"] = it.name;
		o["pass"] = it.pass;
		o["expected"] = it.expected;
		o["computed"] = it.computed;
		o["note"] = it.note;
		arr.push_back(std::move(o));
	}
	return arr;
}

void write_text_file(const fs::path& path, const std::string& text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw std::runtime_error("cannot write " + path.string());
	out << text;
}

void write_report(const fs::path& dir, nlohmann::ordered_json& report,
                  const CheckList& checks)
{
	report["checks"] = checks_json(checks);
	report["pass"] = checks.all_pass();
	write_text_file(dir / "report.json", report.dump(2) + "\n");
}

int print_summary(const std::string& cmd, const CheckList& checks)
{
	size_t bad = 0;
	for (const auto& it : checks.items)
		if (!it.pass)
		{
			++bad;
			std::cout << "FAIL  " << it.name << "  expected "
			          << it.expected << "  computed " << it.computed;
			if (!it.note.empty())
				std::cout << "  (" << it.note << ")";
			std::cout << "\n";
		}
	std::cout << cmd << ": " << (checks.items.size() - bad) << "/"
	          << checks.items.size() << " checks passed\n";
	return bad == 0 ? 0 : 1;
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double, std::milli>(
	           std::chrono::steady_clock::now() - t0)
	    .count();
}

template <class F>
std::string render_class(const F& f, const std::vector<typename F::Elem>& c)
{
	std::string out;
	for (size_t m = 0; m < c.size(); ++m)
	{
		if (f.is_zero(c[m]))
			continue;
		if (!out.empty())
			out += " + ";
		out += f.str(c[m]) + "*phi" + std::to_string(m);
	}
	return out.empty() ? "0" : out;
}

/* One product phi_i^s phi_j^t compared against an expected class. */
template <class F>
void check_product(CheckList& cl, const F& f, const ProductTable<F>& tab,
                   size_t i, size_t j,
                   const std::vector<typename F::Elem>& want,
                   const std::string& name)
{
	std::vector<typename F::Elem> got(tab.s + tab.t + 1);
	for (size_t m = 0; m <= tab.s + tab.t; ++m)
		got[m] = tab.at(i, j, m);
	bool ok = true;
	for (size_t m = 0; m <= tab.s + tab.t; ++m)
		if (!f.eq(got[m], want[m]))
			ok = false;
	cl.add(name, ok, render_class(f, want), render_class(f, got));
}

/* Closed form of the H^1 x H^1 table for the two-exponent family:
 * phi0^2 survives only when n = 2, phi1*phi0 = phi1, phi0*phi1 = -q phi1,
 * phi1^2 survives only when m = 2. */
template <class F>
void qci_degree1_checks(CheckList& cl, Resolution<F>& res,
                        const RunConfig& cfg)
{
	const F& f = res.algebra().field();
	auto q = f.parse(cfg.q);
	auto tab = product_table(res, 1, 1);
	auto cls = [&](size_t m, typename F::Elem coeff) {
		std::vector<typename F::Elem> v(3, typename F::Elem{});
		v[m] = coeff;
		return v;
	};
	std::vector<typename F::Elem> zero(3, typename F::Elem{});
	check_product(cl, f, tab, 0, 0,
	              cfg.n == 2 ? cls(0, f.one()) : zero,
	              "H1 product phi0*phi0");
	check_product(cl, f, tab, 1, 0, cls(1, f.one()),
	              "H1 product phi1*phi0");
	check_product(cl, f, tab, 0, 1, cls(1, f.neg(q)),
	              "H1 product phi0*phi1");
	check_product(cl, f, tab, 1, 1,
	              cfg.m == 2 ? cls(2, f.one()) : zero,
	              "H1 product phi1*phi1");
}

template <class F>
int cmd_verify(const F& f, const RunConfig& cfg, const fs::path& dir)
{
	auto t0 = std::chrono::steady_clock::now();
	nlohmann::ordered_json report;
	report["command"] = "verify";
	report["config"] = config_echo(cfg);
	CheckList checks;
	try
	{
		auto inst = build_instance(f, cfg);
		std::cout << "algebra dimension " << inst.alg.dim() << " ("
		          << ms_since(t0) << " ms)\n";
		checks.extend(check_seed_assumptions(inst.alg, inst.seed));
		checks.extend(check_seed_identities(inst.alg, inst.seed));
		if (cfg.family == "a5")
		{
			auto bin = a5_binomial_check(cfg.p);
			for (const auto& e : bin.entries)
				checks.add("binomial coefficient c_" + std::to_string(e.r) +
				               " vanishes mod p",
				           e.divisible, "0 mod " + std::to_string(cfg.p),
				           e.value.str());
		}
	}
	catch (const ConfigError&)
	{
		throw;
	}
	catch (const std::runtime_error& e)
	{
		checks.add("seed construction", false, "seed data built", "error",
		           e.what());
	}
	write_report(dir, report, checks);
	std::cout << "verify finished in " << ms_since(t0) << " ms\n";
	return print_summary("verify", checks);
}

template <class F>
int cmd_resolve(const F& f, const RunConfig& cfg, const fs::path& dir)
{
	auto t0 = std::chrono::steady_clock::now();
	nlohmann::ordered_json report;
	report["command"] = "resolve";
	report["config"] = config_echo(cfg);
	CheckList checks;
	std::vector<std::pair<std::string, std::string>> dumps;
	try
	{
		auto inst = build_instance(f, cfg);
		checks.extend(check_seed_assumptions(inst.alg, inst.seed));
		checks.extend(check_seed_identities(inst.alg, inst.seed));
		Resolution<F> res(inst.alg, inst.seed, cfg.max_degree);
		std::cout << "algebra dimension " << inst.alg.dim()
		          << ", differentials to degree " << cfg.max_degree << " ("
		          << ms_since(t0) << " ms)\n";
		checks.extend(verify_complex(res));
		checks.extend(verify_exactness(res));
		for (size_t r = 1; r <= cfg.max_degree; ++r)
			if (res.slice(r).verified_image_dim)
				std::cout << "  dim of syzygy module at degree " << r
				          << " = " << *res.slice(r).verified_image_dim
				          << "\n";
		if (cfg.oracle)
			for (size_t r = 2; r <= std::min<size_t>(cfg.max_degree, 6);
			     ++r)
				checks.extend(compare_with_oracle(res, r));
		for (size_t r = 1; r <= cfg.max_degree; ++r)
		{
			std::ostringstream os;
			write_matrix_tsv(os, inst.alg, r, res.d(r));
			dumps.emplace_back("d_" + std::to_string(r) + ".tsv", os.str());
		}
	}
	catch (const ConfigError&)
	{
		throw;
	}
	catch (const std::runtime_error& e)
	{
		checks.add("resolution construction", false, "resolution built",
		           "error", e.what());
	}
	for (const auto& [name, text] : dumps)
		write_text_file(dir / name, text);
	write_report(dir, report, checks);
	std::cout << "resolve finished in " << ms_since(t0) << " ms\n";
	return print_summary("resolve", checks);
}

template <class F>
int cmd_ext(const F& f, const RunConfig& cfg, const fs::path& dir)
{
	auto t0 = std::chrono::steady_clock::now();
	nlohmann::ordered_json report;
	report["command"] = "ext";
	report["config"] = config_echo(cfg);
	CheckList checks;
	std::vector<std::pair<std::string, std::string>> dumps;
	nlohmann::ordered_json products;
	try
	{
		auto inst = build_instance(f, cfg);
		checks.extend(check_seed_assumptions(inst.alg, inst.seed));
		checks.extend(check_seed_identities(inst.alg, inst.seed));
		Resolution<F> res(inst.alg, inst.seed, cfg.max_degree);
		checks.extend(verify_complex(res));
		checks.extend(verify_exactness(res));
		std::cout << "algebra dimension " << inst.alg.dim()
		          << ", resolution to degree " << cfg.max_degree << " ("
		          << ms_since(t0) << " ms)\n";

		size_t R = cfg.max_degree;
		for (size_t s = 1; s + 1 <= R; ++s)
			for (size_t t = 1; s + t <= R; ++t)
			{
				auto tab = product_table(res, s, t);
				std::ostringstream os;
				write_products_tsv(os, f, tab);
				std::string key =
				    std::to_string(s) + "_" + std::to_string(t);
				dumps.emplace_back("products_" + key + ".tsv", os.str());
				auto entries = nlohmann::ordered_json::array();
				for (size_t i = 0; i <= s; ++i)
					for (size_t j = 0; j <= t; ++j)
						for (size_t m = 0; m <= s + t; ++m)
							if (!f.is_zero(tab.at(i, j, m)))
							{
								nlohmann::ordered_json e;
								e["i"] = i + 1;
								e["j"] = j + 1;
								e["m"] = m + 1;
								e["c"] = f.str(tab.at(i, j, m));
								entries.push_back(std::move(e));
							}
				products[key] = std::move(entries);
			}
		std::cout << "product tables done (" << ms_since(t0) << " ms)\n";

		if (cfg.family == "qci" && R >= 2)
			qci_degree1_checks(checks, res, cfg);
		if (cfg.family == "a5" && R >= 4)
		{
			const auto& f2 = f;
			auto tab = product_table(res, 2, 2);
			auto cls = [&](size_t m) {
				std::vector<typename F::Elem> v(5, typename F::Elem{});
				v[m] = f2.one();
				return v;
			};
			check_product(checks, f2, tab, 1, 0, cls(1),
			              "H2 product phi1*phi0");
			check_product(checks, f2, tab, 1, 2, cls(3),
			              "H2 product phi1*phi2");
			checks.extend(verify_even_commutativity(res, R));
		}

		auto fg = verify_finite_generation(res, R);
		checks.add("cohomology generated in degrees 1 and 2 up to degree " +
		               std::to_string(R),
		           fg.pass(), "surjective products",
		           fg.pass() ? "surjective products" : "rank deficit");
		nlohmann::ordered_json fj;
		fj["max_degree"] = R;
		auto fentries = nlohmann::ordered_json::array();
		for (const auto& e : fg.entries)
		{
			nlohmann::ordered_json o;
			o["t"] = e.t;
			o["rank_deg1"] = e.rank_deg1;
			o["need_deg1"] = e.need_deg1;
			o["rank_deg2"] = e.rank_deg2;
			o["need_deg2"] = e.need_deg2;
			fentries.push_back(std::move(o));
		}
		fj["entries"] = std::move(fentries);
		fj["checks"] = checks_json(fg.checks);
		fj["pass"] = fg.pass();
		dumps.emplace_back("fingen.json", fj.dump(2) + "\n");
	}
	catch (const ConfigError&)
	{
		throw;
	}
	catch (const std::runtime_error& e)
	{
		checks.add("cohomology computation", false, "tables built", "error",
		           e.what());
	}
	for (const auto& [name, text] : dumps)
		write_text_file(dir / name, text);
	report["products"] = std::move(products);
	write_report(dir, report, checks);
	std::cout << "ext finished in " << ms_since(t0) << " ms\n";
	return print_summary("ext", checks);
}

int cmd_binomial(int64_t p, const fs::path& dir)
{
	nlohmann::ordered_json report;
	report["command"] = "binomial-check";
	report["p"] = p;
	CheckList checks;
	auto bin = a5_binomial_check(p);
	for (const auto& e : bin.entries)
		checks.add("binomial coefficient c_" + std::to_string(e.r) +
		               " vanishes mod p",
		           e.divisible, "0 mod " + std::to_string(p),
		           e.value.str());
	write_report(dir, report, checks);
	return print_summary("binomial-check", checks);
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"exact projective resolutions and cohomology products for "
	             "two-generator local algebras"};
	app.require_subcommand(1);

	CliArgs va, ra, ea;
	auto* verify = app.add_subcommand(
	    "verify", "check the defining seed identities of the algebra");
	add_common_options(verify, va);
	auto* resolve = app.add_subcommand(
	    "resolve", "build and verify the projective resolution");
	add_common_options(resolve, ra);
	auto* ext = app.add_subcommand(
	    "ext", "compute cohomology product tables and generation data");
	add_common_options(ext, ea);

	int64_t bin_p = 0;
	std::string bin_out = ".";
	auto* binom = app.add_subcommand(
	    "binomial-check",
	    "verify the binomial coefficient identities behind the degree "
	    "recursion");
	binom->add_option("-p", bin_p, "odd prime")->required();
	binom->add_option("--out", bin_out, "output directory (default .)");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError& e)
	{
		app.exit(e);
		return 2;
	}

	try
	{
		if (binom->parsed())
		{
			fs::create_directories(bin_out);
			return cmd_binomial(bin_p, bin_out);
		}
		const CliArgs& a = verify->parsed() ? va
		                   : resolve->parsed() ? ra
		                                       : ea;
		RunConfig cfg = assemble_config(a);
		fs::path dir(a.out);
		fs::create_directories(dir);
		return with_field(cfg.field, [&](auto& f) {
			if (verify->parsed())
				return cmd_verify(f, cfg, dir);
			if (resolve->parsed())
				return cmd_resolve(f, cfg, dir);
			return cmd_ext(f, cfg, dir);
		});
	}
	catch (const ConfigError& e)
	{
		std::cerr << "config error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
