#pragma once

#include "syzlab/algebra.hpp"
#include "syzlab/report.hpp"

#include <array>

namespace syzlab {

struct SeedError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
/* The degree-3 chain equations g*v + rho*psi = 0 have no solution. */
struct RhoChainError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
/* Chain solutions exist but none satisfies the socle pairing conditions. */
struct RhoSocleError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/*
 * Seed of the resolution: the three minimal relations sigma, psi, theta,
 * the four chain elements rho_1..rho_4, the socle pairing value omega and
 * the scaling constant c. omega and c are always computed from the pairing
 * equations, never taken on faith.
 */
template <class F> struct SeedData
{
	ModuleVector<F> sigma, psi, theta;
	std::array<Element<F>, 4> rho;
	Element<F> omega;
	typename F::Elem c;
};

// ---- preset rewriting systems ----

/*
 * Two-generator algebra k<x,y>/(x^n, y^m, xy - q yx), q != 0.
 * Normal form: x before y, basis {x^i y^j}.
 */
template <class F>
RewriteSystem<F> make_qci_system(const F& f, int64_t n, int64_t m,
                                 const typename F::Elem& q)
{
	if (n < 2 || m < 2)
		throw ConfigError("exponents must be at least 2");
	if (f.is_zero(q))
		throw ConfigError("commutation parameter q must be nonzero");
	const int x = 0, y = 1;
	std::vector<Rule<F>> rules;
	rules.push_back(
	    {word_of({y, x}),
	     NCPoly<F>::monomial(word_of({x, y}), f.inv(q))});
	rules.push_back({word_pow(x, n), {}});
	rules.push_back({word_pow(y, m), {}});
	return RewriteSystem<F>(f, {"x", "y"}, std::move(rules));
}

/*
 * Three-letter presentation of the char-p algebra on z, y with central
 * a = yz - zy and relations y^p = 0, a^p = 0, z^p = beta a - a^{p-1} y.
 * Normal form: a before y before z, basis {a^i y^j z^k}.
 */
template <class F>
RewriteSystem<F> make_a5_system(const F& f, int64_t p,
                                const typename F::Elem& beta)
{
	if (f.characteristic() != p || p < 3)
		throw ConfigError("this family needs a prime field of the same "
		                  "characteristic p >= 3");
	if (f.is_zero(beta))
		throw ConfigError("parameter beta must be nonzero");
	const int a = 0, y = 1, z = 2;
	std::vector<Rule<F>> rules;
	NCPoly<F> zy;
	zy.add_term(f, word_of({y, z}), f.one());
	zy.add_term(f, word_of({a}), f.neg(f.one()));
	rules.push_back({word_of({z, y}), std::move(zy)});
	rules.push_back(
	    {word_of({z, a}), NCPoly<F>::monomial(word_of({a, z}), f.one())});
	rules.push_back(
	    {word_of({y, a}), NCPoly<F>::monomial(word_of({a, y}), f.one())});
	rules.push_back({word_pow(y, p), {}});
	rules.push_back({word_pow(a, p), {}});
	NCPoly<F> zp;
	zp.add_term(f, word_of({a}), beta);
	zp.add_term(f, word_pow(a, p - 1) + word_of({y}), f.neg(f.one()));
	rules.push_back({word_pow(z, p), std::move(zp)});
	return RewriteSystem<F>(f, {"a", "y", "z"}, std::move(rules));
}

template <class F>
FiniteDimAlgebra<F> qci_algebra(const F& f, int64_t n, int64_t m,
                                const typename F::Elem& q,
                                BuildOptions opt = {})
{
	opt.dim_bound = size_t(n * m);
	return build_algebra(make_qci_system(f, n, m, q), {}, opt);
}

template <class F>
FiniteDimAlgebra<F> a5_algebra(const F& f, int64_t p,
                               const typename F::Elem& beta,
                               BuildOptions opt = {})
{
	opt.dim_bound = size_t(p) * size_t(p) * size_t(p);
	const int y = 1, z = 2;
	// z plays the role of the first radical generator
	std::optional<std::pair<NCPoly<F>, NCPoly<F>>> gens = std::make_pair(
	    NCPoly<F>::monomial(word_of({z}), f.one()),
	    NCPoly<F>::monomial(word_of({y}), f.one()));
	return build_algebra(make_a5_system(f, p, beta), gens, opt);
}

// ---- omega and c from the socle pairing ----

template <class F>
bool in_socle(const FiniteDimAlgebra<F>& alg, const Element<F>& v)
{
	// two-sided: annihilated by the radical generators on both sides
	for (size_t g = 0; g < 2; ++g)
		if (!alg.is_zero(alg.mul(alg.gen(g), v)) ||
		    !alg.is_zero(alg.mul(v, alg.gen(g))))
			return false;
	return true;
}

template <class F>
Element<F> pair_first(const FiniteDimAlgebra<F>& alg, const ModuleVector<F>& v,
                      const Element<F>& r1, const Element<F>& r2)
{
	return alg.add(alg.mul(v.comp[0], r1), alg.mul(v.comp[1], r2));
}

/*
 * omega := theta_1 rho_1 + theta_2 rho_2 (must be nonzero in the socle),
 * c from omega + c (sigma_1 rho_3 + sigma_2 rho_4) = 0 (must be nonzero).
 * This is the combination that makes row 3 of d_4 a relation, so it is the
 * scalar the differentials and the product formulas are built from;
 * equivalently sigma_1 rho_3 + sigma_2 rho_4 = (-1/c) omega.
 */
template <class F>
void compute_omega_c(const FiniteDimAlgebra<F>& alg, SeedData<F>& seed)
{
	const F& f = alg.field();
	Element<F> omega = pair_first(alg, seed.theta, seed.rho[0], seed.rho[1]);
	Element<F> v = pair_first(alg, seed.sigma, seed.rho[2], seed.rho[3]);
	if (alg.is_zero(omega) || !in_socle(alg, omega))
		throw SeedError("theta-rho pairing is not a nonzero socle element");
	if (alg.is_zero(v) || !in_socle(alg, v))
		throw SeedError("sigma-rho pairing is not a nonzero socle element");
	size_t idx = 0;
	while (f.is_zero(v.c[idx]))
		++idx;
	typename F::Elem c = f.neg(f.div(omega.c[idx], v.c[idx]));
	if (!(omega == alg.scale(f.neg(c), v)))
		throw SeedError("sigma-rho pairing is not proportional to omega");
	seed.omega = std::move(omega);
	seed.c = c;
}

// ---- preset seeds ----

template <class F>
SeedData<F> qci_seed(const FiniteDimAlgebra<F>& alg, int64_t n, int64_t m,
                     const typename F::Elem& q)
{
	const F& f = alg.field();
	const int x = 0, y = 1;
	auto mono = [&](const Word& w, typename F::Elem c) {
		return alg.from_ncpoly(NCPoly<F>::monomial(w, c));
	};
	SeedData<F> s;
	s.sigma = ModuleVector<F>{{mono(word_pow(x, n - 1), f.one()),
	                           alg.zero_element()}};
	s.psi = ModuleVector<F>{{mono(word_of({y}), f.neg(q)),
	                         mono(word_of({x}), f.one())}};
	s.theta = ModuleVector<F>{{alg.zero_element(),
	                           mono(word_pow(y, m - 1), f.one())}};
	s.rho[0] = alg.zero_element();
	s.rho[1] = mono(word_pow(x, n - 1), f.inv(f.pow(q, uint64_t(n))));
	s.rho[2] = mono(word_pow(y, m - 1), f.neg(f.pow(q, uint64_t(m - 1))));
	s.rho[3] = alg.zero_element();
	compute_omega_c(alg, s);
	return s;
}

template <class F>
SeedData<F> a5_seed(const FiniteDimAlgebra<F>& alg, int64_t p,
                    const typename F::Elem& beta)
{
	const F& f = alg.field();
	const int a = 0, y = 1, z = 2;
	auto mono = [&](const Word& w, typename F::Elem c) {
		return alg.from_ncpoly(NCPoly<F>::monomial(w, c));
	};
	auto z_elem = mono(word_of({z}), f.one());
	auto z_top = alg.pow(z_elem, uint64_t(p) * uint64_t(p) - 1);
	typename F::Elem bi = f.inv(beta);
	SeedData<F> s;
	s.sigma = ModuleVector<F>{{z_top, alg.zero_element()}};
	s.psi = ModuleVector<F>{
	    {alg.add(mono(word_pow(z, p - 1), f.one()), mono(word_of({y}), f.neg(beta))),
	     alg.add(mono(word_pow(a, p - 1), f.one()), mono(word_of({z}), beta))}};
	s.theta = ModuleVector<F>{{alg.zero_element(),
	                           mono(word_pow(y, p - 1), f.one())}};
	s.rho[0] = alg.zero_element();
	s.rho[1] = alg.scale(bi, z_top);
	auto rho3 = mono(word_pow(y, p - 1), f.neg(bi));
	rho3 = alg.add(rho3, mono(word_pow(y, p - 2) + word_pow(z, p - 1),
	                          f.neg(f.mul(bi, bi))));
	rho3 = alg.add(rho3,
	               mono(word_pow(a, p - 1) + word_pow(y, p - 2) + word_pow(z, p - 2),
	                    f.mul(bi, f.mul(bi, bi))));
	s.rho[2] = std::move(rho3);
	s.rho[3] = alg.zero_element();
	compute_omega_c(alg, s);
	return s;
}

// ---- seed checks ----

/*
 * Four clauses: psi components independent modulo J^2; sigma, psi, theta are
 * relations; each is minimal (nonzero modulo J*Omega^2); sigma and theta
 * are independent modulo the submodule generated by psi.
 */
template <class F>
CheckList check_seed_assumptions(const FiniteDimAlgebra<F>& alg,
                                 const SeedData<F>& seed)
{
	size_t n = alg.dim();
	CheckList out;

	EchelonSpace<F> modj2(alg.field(), n);
	size_t j2dim = 0;
	if (alg.radical_length() >= 2)
	{
		for (const auto& row : alg.radical_layer(2).basis())
			modj2.insert(row);
		j2dim = alg.radical_layer(2).dim();
	}
	modj2.insert(seed.psi.comp[0].c);
	modj2.insert(seed.psi.comp[1].c);
	out.add("psi components independent modulo J^2", modj2.dim() == j2dim + 2,
	        std::to_string(j2dim + 2), std::to_string(modj2.dim()));

	ModuleVector<F> d1row{{alg.gen_x(), alg.gen_y()}};
	auto is_relation = [&](const ModuleVector<F>& v) {
		return alg.is_zero(alg.add(alg.mul(v.comp[0], alg.gen_x()),
		                           alg.mul(v.comp[1], alg.gen_y())));
	};
	bool rel = is_relation(seed.sigma) && is_relation(seed.psi) &&
	           is_relation(seed.theta);
	out.add("sigma, psi, theta are relations", rel, "v1 x + v2 y = 0");

	auto omega2 = kernel_of_right_action(alg, d1row);
	std::vector<std::vector<typename F::Elem>> flat;
	for (const auto& v : omega2)
		flat.push_back(module_flatten(v));
	auto jomega2 = submodule_radical(alg, flat, 2);
	bool minimal = !jomega2.contains(module_flatten(seed.sigma)) &&
	               !jomega2.contains(module_flatten(seed.psi)) &&
	               !jomega2.contains(module_flatten(seed.theta));
	out.add("sigma, psi, theta are minimal relations", minimal,
	        "nonzero modulo J * Omega^2");

	auto span_psi = left_span(alg, {seed.psi}, 2);
	size_t psidim = span_psi.dim();
	span_psi.insert(module_flatten(seed.sigma));
	span_psi.insert(module_flatten(seed.theta));
	out.add("sigma, theta independent modulo the psi submodule",
	        psidim == n - 1 && span_psi.dim() == n + 1,
	        "dims " + std::to_string(n - 1) + " and " + std::to_string(n + 1),
	        "dims " + std::to_string(psidim) + " and " +
	            std::to_string(span_psi.dim()));
	return out;
}

/*
 * The 17 scalar identities the resolution is built from, plus the combined
 * c-equation: three relation identities, eight chain identities, six socle
 * pairing identities.
 */
template <class F>
CheckList check_seed_identities(const FiniteDimAlgebra<F>& alg,
                                const SeedData<F>& seed)
{
	const F& f = alg.field();
	CheckList out;
	const Element<F>&x = alg.gen_x(), &y = alg.gen_y();
	auto zero = [&](const std::string& name, const Element<F>& v) {
		out.add(name, alg.is_zero(v), "0");
	};

	auto rel = [&](const char* nm, const ModuleVector<F>& v) {
		zero(std::string(nm) + "1 x + " + nm + "2 y",
		     alg.add(alg.mul(v.comp[0], x), alg.mul(v.comp[1], y)));
	};
	rel("sigma", seed.sigma);
	rel("psi", seed.psi);
	rel("theta", seed.theta);

	auto chain = [&](const char* gname, const Element<F>& g,
	                 const char* vname, const ModuleVector<F>& v,
	                 const char* rname, const Element<F>& rho) {
		for (size_t j = 0; j < 2; ++j)
			zero(std::string(gname) + " " + vname + std::to_string(j + 1) +
			         " + " + rname + " psi" + std::to_string(j + 1),
			     alg.add(alg.mul(g, v.comp[j]),
			             alg.mul(rho, seed.psi.comp[j])));
	};
	chain("x", x, "sigma", seed.sigma, "rho1", seed.rho[0]);
	chain("y", y, "sigma", seed.sigma, "rho2", seed.rho[1]);
	chain("x", x, "theta", seed.theta, "rho3", seed.rho[2]);
	chain("y", y, "theta", seed.theta, "rho4", seed.rho[3]);

	zero("sigma1 rho1 + sigma2 rho2",
	     pair_first(alg, seed.sigma, seed.rho[0], seed.rho[1]));
	zero("psi1 rho1 + psi2 rho2",
	     pair_first(alg, seed.psi, seed.rho[0], seed.rho[1]));
	auto tp = pair_first(alg, seed.theta, seed.rho[0], seed.rho[1]);
	out.add("theta1 rho1 + theta2 rho2 = omega, nonzero in the socle",
	        tp == seed.omega && !alg.is_zero(seed.omega) &&
	            in_socle(alg, seed.omega),
	        "omega");
	auto sp = pair_first(alg, seed.sigma, seed.rho[2], seed.rho[3]);
	out.add("sigma1 rho3 + sigma2 rho4 = (-1/c) omega, c nonzero",
	        !f.is_zero(seed.c) &&
	            sp == alg.scale(f.neg(f.inv(seed.c)), seed.omega),
	        "(-1/c) omega", "", "c = " + f.str(seed.c));
	zero("psi1 rho3 + psi2 rho4",
	     pair_first(alg, seed.psi, seed.rho[2], seed.rho[3]));
	zero("theta1 rho3 + theta2 rho4",
	     pair_first(alg, seed.theta, seed.rho[2], seed.rho[3]));

	zero("theta1 rho1 + theta2 rho2 + c (sigma1 rho3 + sigma2 rho4)",
	     alg.add(tp, alg.scale(seed.c, sp)));
	return out;
}

// ---- rho solving ----

template <class F> struct RhoSolution
{
	std::array<Element<F>, 4> particular;
	std::vector<Element<F>> kernel; // of rho -> rho * psi
	std::vector<SeedData<F>> samples;
};

template <class F>
bool rho_space_contains(const FiniteDimAlgebra<F>& alg,
                        const RhoSolution<F>& sol,
                        const std::array<Element<F>, 4>& rho)
{
	EchelonSpace<F> k(alg.field(), alg.dim());
	for (const auto& v : sol.kernel)
		k.insert(v.c);
	for (size_t i = 0; i < 4; ++i)
		if (!k.contains(alg.sub(rho[i], sol.particular[i]).c))
			return false;
	return true;
}

template <class F>
std::vector<typename F::Elem> scalar_stream(const F& f, size_t count)
{
	std::vector<typename F::Elem> out;
	int64_t p = f.characteristic();
	if (p > 0)
	{
		for (int64_t v = 0; v < p && out.size() < count; ++v)
			out.push_back(f.from_int(v));
	}
	else
	{
		out.push_back(f.zero());
		for (int64_t v = 1; out.size() < count; ++v)
		{
			out.push_back(f.from_int(v));
			if (out.size() < count)
				out.push_back(f.from_int(-v));
		}
	}
	return out;
}

/*
 * Solves the four chain equations x sigma + rho1 psi = 0, y sigma + rho2 psi
 * = 0, x theta + rho3 psi = 0, y theta + rho4 psi = 0, then checks the socle
 * pairing conditions. The translation kernel annihilates every pairing value
 * (J kills the socle), so all solutions share the same omega and c; the
 * sample list enumerates kernel translates over a deterministic scalar
 * stream, capped.
 */
template <class F>
RhoSolution<F> solve_rho(const FiniteDimAlgebra<F>& alg,
                         const ModuleVector<F>& sigma,
                         const ModuleVector<F>& psi,
                         const ModuleVector<F>& theta, size_t cap = 16)
{
	const F& f = alg.field();
	LambdaMatrix<F> d(1, 2, alg.zero_element());
	d.at(0, 0) = psi.comp[0];
	d.at(0, 1) = psi.comp[1];
	RowFactorSolver<F> solver(alg, d);

	RhoSolution<F> sol;
	const Element<F>* gs[4] = {&alg.gen_x(), &alg.gen_y(), &alg.gen_x(),
	                           &alg.gen_y()};
	const ModuleVector<F>* vs[4] = {&sigma, &sigma, &theta, &theta};
	for (size_t i = 0; i < 4; ++i)
	{
		ModuleVector<F> t = module_zero(alg, 2);
		for (size_t j = 0; j < 2; ++j)
			t.comp[j] = alg.scale(f.neg(f.one()),
			                      alg.mul(*gs[i], vs[i]->comp[j]));
		auto u = solver.solve(t);
		if (!u)
			throw RhoChainError("chain equation " + std::to_string(i + 1) +
			                    " has no solution");
		sol.particular[i] = u->comp[0];
	}
	for (const auto& v : solver.kernel())
		sol.kernel.push_back(v.comp[0]);

	SeedData<F> base;
	base.sigma = sigma;
	base.psi = psi;
	base.theta = theta;
	base.rho = sol.particular;
	try
	{
		compute_omega_c(alg, base);
	}
	catch (const SeedError& e)
	{
		throw RhoSocleError(std::string("socle pairing fails on the chain "
		                                "solution space: ") +
		                    e.what());
	}
	if (!alg.is_zero(pair_first(alg, sigma, base.rho[0], base.rho[1])) ||
	    !alg.is_zero(pair_first(alg, psi, base.rho[0], base.rho[1])) ||
	    !alg.is_zero(pair_first(alg, psi, base.rho[2], base.rho[3])) ||
	    !alg.is_zero(pair_first(alg, theta, base.rho[2], base.rho[3])))
		throw RhoSocleError("a pairing that must vanish is nonzero on the "
		                    "chain solution space");

	if (sol.kernel.size() != 1)
	{
		sol.samples.push_back(base);
		return sol;
	}
	auto ts = scalar_stream(f, cap);
	const Element<F>& kappa = sol.kernel[0];
	for (const auto& t1 : ts)
		for (const auto& t2 : ts)
			for (const auto& t3 : ts)
				for (const auto& t4 : ts)
				{
					if (sol.samples.size() >= cap)
						return sol;
					SeedData<F> s = base;
					const typename F::Elem* t[4] = {&t1, &t2, &t3, &t4};
					for (size_t i = 0; i < 4; ++i)
						s.rho[i] =
						    alg.add(s.rho[i], alg.scale(*t[i], kappa));
					sol.samples.push_back(std::move(s));
				}
	return sol;
}

// ---- binomial divisibility check ----

struct BinomialEntry
{
	int64_t r;
	BigInt value;
	bool divisible;
};

struct BinomialReport
{
	int64_t p = 0;
	std::vector<BinomialEntry> entries;

	bool pass() const
	{
		for (const auto& e : entries)
			if (!e.divisible)
				return false;
		return true;
	}
};

BigInt big_factorial(int64_t n);
BigInt big_binomial(int64_t n, int64_t k);

/*
 * c_r = -r! C(p-2,r) C(p-1,r) + (r+1)! C(p-1,r+1)^2 for 0 <= r <= p-2;
 * every c_r must vanish mod p. Exact integer arithmetic.
 */
BinomialReport a5_binomial_check(int64_t p);

} // namespace syzlab
