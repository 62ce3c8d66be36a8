#pragma once

#include "syzlab/encode.hpp"
#include "syzlab/seeds.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <set>

namespace syzlab {

enum class FieldKind
{
	Fp,
	Rational
};

struct FieldSpec
{
	FieldKind kind = FieldKind::Fp;
	int64_t p = 2;
};

/* User-supplied algebra: rewrite rules plus the seed vectors, everything in
 * the element text syntax of encode.hpp. rho may be omitted and solved for. */
struct CustomSpec
{
	std::vector<std::string> alphabet;
	std::vector<int64_t> weights; // empty = all 1
	size_t dim = 0;
	std::vector<std::pair<std::string, std::string>> rules; // lhs word, rhs
	std::optional<std::array<std::string, 2>> generators;
	std::array<std::string, 2> sigma, psi, theta;
	std::optional<std::array<std::string, 4>> rho;
};

/*
 * One engine run: which algebra, over which field, how far to resolve and
 * which optional checks to enable. Scalar parameters arrive as strings and
 * are parsed by the chosen field, so "2/3" is legal over Q.
 */
struct RunConfig
{
	std::string family = "qci"; // "qci", "a5" or "custom"
	int64_t n = 2, m = 2;       // qci exponent parameters
	std::string q = "1";        // qci commutation scalar
	int64_t p = 3;              // a5 characteristic parameter
	std::string beta = "1";     // a5 deformation scalar
	std::optional<CustomSpec> custom;
	FieldSpec field;
	size_t max_degree = 4;
	bool oracle = false;
	size_t assoc_samples = 100000;
	uint64_t assoc_seed = 0x5eeded;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                const std::set<std::string>& allowed,
                                const std::string& where)
{
	for (auto it = j.begin(); it != j.end(); ++it)
		if (!allowed.count(it.key()))
			throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

inline int64_t require_int(const nlohmann::json& j, const std::string& key)
{
	if (!j.contains(key) || !j[key].is_number_integer())
		throw ConfigError("\"" + key + "\" must be an integer");
	return j[key].get<int64_t>();
}

inline std::string scalar_string(const nlohmann::json& v,
                                 const std::string& key)
{
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_number_integer())
		return std::to_string(v.get<int64_t>());
	throw ConfigError("\"" + key + "\" must be a string or an integer");
}

inline std::string require_str(const nlohmann::json& j,
                               const std::string& key)
{
	if (!j.contains(key) || !j[key].is_string())
		throw ConfigError("\"" + key + "\" must be a string");
	return j[key].get<std::string>();
}

template <size_t K>
std::array<std::string, K> str_array(const nlohmann::json& j,
                                     const std::string& key)
{
	if (!j.is_array() || j.size() != K)
		throw ConfigError("\"" + key + "\" must be an array of " +
		                  std::to_string(K) + " strings");
	std::array<std::string, K> out;
	for (size_t i = 0; i < K; ++i)
	{
		if (!j[i].is_string())
			throw ConfigError("\"" + key + "\" must be an array of " +
			                  std::to_string(K) + " strings");
		out[i] = j[i].get<std::string>();
	}
	return out;
}

inline CustomSpec parse_custom_spec(const nlohmann::json& jp)
{
	reject_unknown_keys(jp,
	                    {"alphabet", "weights", "dim", "rules", "generators",
	                     "seed"},
	                    "params");
	CustomSpec cs;
	if (!jp.contains("alphabet") || !jp["alphabet"].is_array() ||
	    jp["alphabet"].empty())
		throw ConfigError("custom \"alphabet\" must be a nonempty array of "
		                  "letter names");
	for (const auto& a : jp["alphabet"])
	{
		if (!a.is_string() || a.get<std::string>().empty())
			throw ConfigError("alphabet entries must be nonempty strings");
		cs.alphabet.push_back(a.get<std::string>());
	}
	if (jp.contains("weights"))
	{
		if (!jp["weights"].is_array() ||
		    jp["weights"].size() != cs.alphabet.size())
			throw ConfigError("\"weights\" must list one integer per "
			                  "letter");
		for (const auto& w : jp["weights"])
		{
			if (!w.is_number_integer() || w.get<int64_t>() < 1)
				throw ConfigError("letter weights must be positive "
				                  "integers");
			cs.weights.push_back(w.get<int64_t>());
		}
	}
	int64_t d = require_int(jp, "dim");
	if (d < 1)
		throw ConfigError("custom \"dim\" must be a positive dimension "
		                  "bound");
	cs.dim = size_t(d);
	if (!jp.contains("rules") || !jp["rules"].is_array() ||
	    jp["rules"].empty())
		throw ConfigError("custom \"rules\" must be a nonempty array");
	for (const auto& r : jp["rules"])
	{
		if (!r.is_object())
			throw ConfigError("each rule must be an object with \"lhs\" "
			                  "and \"rhs\"");
		reject_unknown_keys(r, {"lhs", "rhs"}, "rule");
		cs.rules.emplace_back(require_str(r, "lhs"), require_str(r, "rhs"));
	}
	if (jp.contains("generators"))
		cs.generators = str_array<2>(jp["generators"], "generators");
	if (!jp.contains("seed") || !jp["seed"].is_object())
		throw ConfigError("custom \"seed\" object is required");
	const auto& js = jp["seed"];
	reject_unknown_keys(js, {"sigma", "psi", "theta", "rho"}, "seed");
	for (const char* key : {"sigma", "psi", "theta"})
		if (!js.contains(key))
			throw ConfigError("custom seed needs \"" + std::string(key) +
			                  "\"");
	cs.sigma = str_array<2>(js["sigma"], "sigma");
	cs.psi = str_array<2>(js["psi"], "psi");
	cs.theta = str_array<2>(js["theta"], "theta");
	if (js.contains("rho"))
		cs.rho = str_array<4>(js["rho"], "rho");
	return cs;
}

} // namespace detail

inline RunConfig parse_run_config(const nlohmann::json& j)
{
	using detail::require_int;
	using detail::scalar_string;
	if (!j.is_object())
		throw ConfigError("config root must be a JSON object");
	detail::reject_unknown_keys(
	    j, {"family", "params", "field", "max_degree", "checks"}, "config");
	RunConfig cfg;
	if (!j.contains("family") || !j["family"].is_string())
		throw ConfigError("\"family\" must be \"qci\", \"a5\" or "
		                  "\"custom\"");
	cfg.family = j["family"].get<std::string>();
	if (cfg.family != "qci" && cfg.family != "a5" && cfg.family != "custom")
		throw ConfigError("unknown family \"" + cfg.family + "\"");

	if (!j.contains("field") || !j["field"].is_object())
		throw ConfigError("\"field\" object is required");
	const auto& jf = j["field"];
	detail::reject_unknown_keys(jf, {"kind", "p"}, "field");
	if (!jf.contains("kind") || !jf["kind"].is_string())
		throw ConfigError("field \"kind\" must be \"Fp\" or \"Q\"");
	std::string kind = jf["kind"].get<std::string>();
	if (kind == "Fp")
	{
		cfg.field.kind = FieldKind::Fp;
		cfg.field.p = require_int(jf, "p");
		if (!is_prime(cfg.field.p))
			throw ConfigError("field characteristic must be prime");
	}
	else if (kind == "Q")
	{
		cfg.field.kind = FieldKind::Rational;
		if (jf.contains("p"))
			throw ConfigError("field of kind \"Q\" takes no \"p\"");
	}
	else
		throw ConfigError("field \"kind\" must be \"Fp\" or \"Q\"");

	if (!j.contains("params") || !j["params"].is_object())
		throw ConfigError("\"params\" object is required");
	const auto& jp = j["params"];
	if (cfg.family == "qci")
	{
		detail::reject_unknown_keys(jp, {"n", "m", "q"}, "params");
		cfg.n = require_int(jp, "n");
		cfg.m = require_int(jp, "m");
		if (cfg.n < 2 || cfg.m < 2)
			throw ConfigError("qci needs n >= 2 and m >= 2");
		cfg.q = jp.contains("q") ? scalar_string(jp["q"], "q") : "1";
	}
	else if (cfg.family == "a5")
	{
		detail::reject_unknown_keys(jp, {"p", "beta"}, "params");
		cfg.p = require_int(jp, "p");
		if (cfg.p < 3 || !is_prime(cfg.p))
			throw ConfigError("a5 needs an odd prime p");
		if (cfg.field.kind != FieldKind::Fp || cfg.field.p != cfg.p)
			throw ConfigError("a5 needs a field of characteristic p");
		cfg.beta = jp.contains("beta") ? scalar_string(jp["beta"], "beta")
		                               : "1";
	}
	else
		cfg.custom = detail::parse_custom_spec(jp);

	if (j.contains("max_degree"))
	{
		int64_t r = require_int(j, "max_degree");
		if (r < 1 || r > 64)
			throw ConfigError("max_degree must be between 1 and 64");
		cfg.max_degree = size_t(r);
	}
	if (j.contains("checks"))
	{
		const auto& jc = j["checks"];
		if (!jc.is_object())
			throw ConfigError("\"checks\" must be an object");
		detail::reject_unknown_keys(
		    jc, {"oracle", "assoc_samples", "seed"}, "checks");
		if (jc.contains("oracle"))
		{
			if (!jc["oracle"].is_boolean())
				throw ConfigError("checks \"oracle\" must be a boolean");
			cfg.oracle = jc["oracle"].get<bool>();
		}
		if (jc.contains("assoc_samples"))
			cfg.assoc_samples = size_t(require_int(jc, "assoc_samples"));
		if (jc.contains("seed"))
			cfg.assoc_seed = uint64_t(require_int(jc, "seed"));
	}
	return cfg;
}

inline RunConfig load_run_config(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError("cannot open config file: " + path);
	nlohmann::json j;
	try
	{
		in >> j;
	}
	catch (const nlohmann::json::exception& e)
	{
		throw ConfigError("config is not valid JSON: " +
		                  std::string(e.what()));
	}
	return parse_run_config(j);
}

/* Canonical echo of the effective configuration, key order fixed so that
 * reports are byte-identical across runs. */
inline nlohmann::ordered_json config_echo(const RunConfig& cfg)
{
	nlohmann::ordered_json out;
	out["family"] = cfg.family;
	nlohmann::ordered_json params;
	if (cfg.family == "qci")
	{
		params["n"] = cfg.n;
		params["m"] = cfg.m;
		params["q"] = cfg.q;
	}
	else if (cfg.family == "a5")
	{
		params["p"] = cfg.p;
		params["beta"] = cfg.beta;
	}
	else
	{
		const CustomSpec& cs = *cfg.custom;
		params["alphabet"] = cs.alphabet;
		if (!cs.weights.empty())
			params["weights"] = cs.weights;
		params["dim"] = cs.dim;
		nlohmann::ordered_json rules = nlohmann::ordered_json::array();
		for (const auto& [lhs, rhs] : cs.rules)
			rules.push_back({{"lhs", lhs}, {"rhs", rhs}});
		params["rules"] = rules;
		if (cs.generators)
			params["generators"] = *cs.generators;
		nlohmann::ordered_json seed;
		seed["sigma"] = cs.sigma;
		seed["psi"] = cs.psi;
		seed["theta"] = cs.theta;
		if (cs.rho)
			seed["rho"] = *cs.rho;
		params["seed"] = seed;
	}
	out["params"] = params;
	nlohmann::ordered_json field;
	field["kind"] = cfg.field.kind == FieldKind::Fp ? "Fp" : "Q";
	if (cfg.field.kind == FieldKind::Fp)
		field["p"] = cfg.field.p;
	out["field"] = field;
	out["max_degree"] = cfg.max_degree;
	nlohmann::ordered_json checks;
	checks["oracle"] = cfg.oracle;
	checks["assoc_samples"] = cfg.assoc_samples;
	checks["seed"] = cfg.assoc_seed;
	out["checks"] = checks;
	return out;
}

template <class Fn> decltype(auto) with_field(const FieldSpec& fs, Fn&& fn)
{
	if (fs.kind == FieldKind::Fp)
	{
		Fp f(fs.p);
		return fn(f);
	}
	RationalField f;
	return fn(f);
}

template <class F> struct Instance
{
	FiniteDimAlgebra<F> alg;
	SeedData<F> seed;
};

/* Algebra plus verified seed tuple for the configured family. */
template <class F>
Instance<F> build_instance(const F& f, const RunConfig& cfg)
{
	BuildOptions opt;
	opt.assoc_samples = cfg.assoc_samples;
	opt.assoc_seed = cfg.assoc_seed;
	if (cfg.family == "qci")
	{
		auto q = f.parse(cfg.q);
		auto alg = qci_algebra(f, cfg.n, cfg.m, q, opt);
		auto seed = qci_seed(alg, cfg.n, cfg.m, q);
		return {std::move(alg), std::move(seed)};
	}
	if (cfg.family == "a5")
	{
		auto beta = f.parse(cfg.beta);
		auto alg = a5_algebra(f, cfg.p, beta, opt);
		auto seed = a5_seed(alg, cfg.p, beta);
		return {std::move(alg), std::move(seed)};
	}
	if (cfg.family == "custom")
	{
		const CustomSpec& cs = *cfg.custom;
		std::vector<Rule<F>> rules;
		for (const auto& [lhs, rhs] : cs.rules)
			rules.push_back({parse_word(cs.alphabet, lhs),
			                 parse_ncpoly(f, cs.alphabet, rhs)});
		RewriteSystem<F> rsys(f, cs.alphabet, std::move(rules), cs.weights);
		std::optional<std::pair<NCPoly<F>, NCPoly<F>>> gens;
		if (cs.generators)
			gens = std::make_pair(
			    parse_ncpoly(f, cs.alphabet, (*cs.generators)[0]),
			    parse_ncpoly(f, cs.alphabet, (*cs.generators)[1]));
		opt.dim_bound = cs.dim;
		auto alg = build_algebra(rsys, std::move(gens), opt);

		auto vec2 = [&](const std::array<std::string, 2>& s) {
			ModuleVector<F> v = module_zero(alg, 2);
			v.comp[0] = parse_element(alg, s[0]);
			v.comp[1] = parse_element(alg, s[1]);
			return v;
		};
		auto sigma = vec2(cs.sigma);
		auto psi = vec2(cs.psi);
		auto theta = vec2(cs.theta);
		if (cs.rho)
		{
			SeedData<F> seed;
			seed.sigma = std::move(sigma);
			seed.psi = std::move(psi);
			seed.theta = std::move(theta);
			for (size_t i = 0; i < 4; ++i)
				seed.rho[i] = parse_element(alg, (*cs.rho)[i]);
			compute_omega_c(alg, seed);
			return {std::move(alg), std::move(seed)};
		}
		auto sol = solve_rho(alg, sigma, psi, theta);
		return {std::move(alg), std::move(sol.samples.front())};
	}
	throw ConfigError("unknown family \"" + cfg.family + "\"");
}

} // namespace syzlab
