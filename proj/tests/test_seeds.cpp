#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzlab/seeds.hpp"

using namespace syzlab;

namespace {

template <class F>
Element<F> mono(const FiniteDimAlgebra<F>& alg, const Word& w,
                const typename F::Elem& c)
{
	return alg.from_ncpoly(NCPoly<F>::monomial(w, c));
}

template <class F>
void check_preset_passes(const FiniteDimAlgebra<F>& alg,
                         const SeedData<F>& seed)
{
	auto cl = check_seed_assumptions(alg, seed);
	cl.extend(check_seed_identities(alg, seed));
	CHECK(cl.items.size() == 22);
	for (const auto& it : cl.items)
	{
		INFO(it.name, ": expected ", it.expected, ", computed ",
		     it.computed);
		CHECK(it.pass);
	}
}

} // namespace

TEST_CASE("q = 1 presets pass every seed check over four fields")
{
	const std::pair<int64_t, int64_t> shapes[] = {{2, 2}, {2, 3}, {3, 3}};
	for (auto [n, m] : shapes)
	{
		for (int64_t p : {2, 3, 5})
		{
			Fp f(p);
			auto alg = qci_algebra(f, n, m, f.one());
			check_preset_passes(alg, qci_seed(alg, n, m, f.one()));
		}
		RationalField fq;
		auto alg = qci_algebra(fq, n, m, fq.one());
		check_preset_passes(alg, qci_seed(alg, n, m, fq.one()));
	}
}

TEST_CASE("deformed presets pass every seed check")
{
	for (int64_t p : {3, 5})
		for (int64_t b : {1, 2})
		{
			Fp f(p);
			auto beta = f.from_int(b);
			auto alg = a5_algebra(f, p, beta);
			auto seed = a5_seed(alg, p, beta);
			check_preset_passes(alg, seed);
			CHECK(seed.c == f.one());
			// omega = beta^{p-2} a^{p-1} y^{p-1} z^{p-1}
			Word w = word_pow(0, size_t(p - 1)) +
			         word_pow(1, size_t(p - 1)) +
			         word_pow(2, size_t(p - 1));
			CHECK(seed.omega ==
			      mono(alg, w, f.pow(beta, uint64_t(p - 2))));
		}
}

TEST_CASE("power collapse z^{p^2-1} = beta^{p-1} a^{p-1} z^{p-1}")
{
	for (int64_t p : {3, 5})
	{
		Fp f(p);
		auto beta = f.from_int(2);
		auto alg = a5_algebra(f, p, beta);
		auto z = alg.gen_x();
		auto lhs = alg.pow(z, uint64_t(p * p - 1));
		Word w = word_pow(0, size_t(p - 1)) + word_pow(2, size_t(p - 1));
		CHECK(lhs == mono(alg, w, f.pow(beta, uint64_t(p - 1))));
		// the seed's first relation starts from exactly this power
		auto seed = a5_seed(alg, p, beta);
		CHECK(seed.sigma.comp[0] == lhs);
		CHECK(alg.is_zero(seed.sigma.comp[1]));
		CHECK(alg.is_zero(seed.theta.comp[0]));
		CHECK(seed.theta.comp[1] ==
		      alg.pow(alg.gen_y(), uint64_t(p - 1)));
	}
}

TEST_CASE("commutation scalar pairings, frozen values for q = 2")
{
	// over F_7: c = q^{-nm} = 2^{-4} = 4^{-1}... = inv(16 mod 7 = 2) = 4
	Fp f7(7);
	auto q7 = f7.from_int(2);
	auto alg7 = qci_algebra(f7, 2, 2, q7);
	auto s7 = qci_seed(alg7, 2, 2, q7);
	CHECK(s7.c == f7.inv(f7.pow(q7, 4)));
	CHECK(s7.c == 4);

	// over Q: c = 1/16, and the inverse ratio -sigma.rho34 / omega = 16
	RationalField fq;
	auto q = fq.from_int(2);
	auto alg = qci_algebra(fq, 2, 2, q);
	auto s = qci_seed(alg, 2, 2, q);
	CHECK(fq.str(s.c) == "1/16");
	auto sp = pair_first(alg, s.sigma, s.rho[2], s.rho[3]);
	CHECK(sp == alg.scale(fq.neg(fq.pow(q, 4)), s.omega));

	// the q != 1 algebra still satisfies all 22 seed checks
	check_preset_passes(alg, s);
	check_preset_passes(alg7, s7);

	// omega = theta1 rho1 + theta2 rho2 = q^{-n} y^{m-1} x^{n-1}
	Fp f5(5);
	auto q5 = f5.from_int(2);
	auto a23 = qci_algebra(f5, 2, 3, q5);
	auto s23 = qci_seed(a23, 2, 3, q5);
	CHECK(s23.omega ==
	      mono(a23, word_pow(1, 2) + word_pow(0, 1), f5.inv(f5.pow(q5, 2))));
	// sigma1 rho3 + sigma2 rho4 = -q^{m-1} x^{n-1} y^{m-1}
	auto sp23 = pair_first(a23, s23.sigma, s23.rho[2], s23.rho[3]);
	CHECK(sp23 == mono(a23, word_pow(0, 1) + word_pow(1, 2),
	                   f5.neg(f5.pow(q5, 2))));
	CHECK(s23.c == f5.inv(f5.pow(q5, 6)));
}

TEST_CASE("preset chain elements, frozen for the smallest shape")
{
	Fp f(5);
	auto q = f.from_int(3);
	auto alg = qci_algebra(f, 2, 2, q);
	auto s = qci_seed(alg, 2, 2, q);
	CHECK(alg.is_zero(s.rho[0]));
	CHECK(alg.is_zero(s.rho[3]));
	// rho2 = q^{-n} x^{n-1}, rho3 = -q^{m-1} y^{m-1}
	CHECK(s.rho[1] == mono(alg, word_pow(0, 1), f.inv(f.pow(q, 2))));
	CHECK(s.rho[2] == mono(alg, word_pow(1, 1), f.neg(q)));
	// psi = (-q y, x)
	CHECK(s.psi.comp[0] == alg.scale(f.neg(q), alg.gen_y()));
	CHECK(s.psi.comp[1] == alg.gen_x());
}

TEST_CASE("chain solver covers the preset and fixes omega and c")
{
	Fp f(5);
	auto q = f.from_int(2);
	auto alg = qci_algebra(f, 2, 3, q);
	auto preset = qci_seed(alg, 2, 3, q);
	auto sol = solve_rho(alg, preset.sigma, preset.psi, preset.theta);

	CHECK(rho_space_contains(alg, sol, preset.rho));
	REQUIRE(!sol.samples.empty());
	for (const auto& s : sol.samples)
	{
		auto cl = check_seed_identities(alg, s);
		for (const auto& it : cl.items)
		{
			INFO(it.name);
			CHECK(it.pass);
		}
		// the pairing values are blind to the solution choice
		CHECK(s.omega == preset.omega);
		CHECK(s.c == preset.c);
	}
}

TEST_CASE("unsolvable chain equations are reported as such")
{
	Fp f(5);
	auto alg = qci_algebra(f, 2, 3, f.one());
	auto preset = qci_seed(alg, 2, 3, f.one());

	// with psi = 0 nothing can cancel y sigma
	ModuleVector<Fp> zero2 = module_zero(alg, 2);
	CHECK_THROWS_AS(
	    solve_rho(alg, preset.sigma, zero2, preset.theta),
	    RhoChainError);

	// solvable chains but a degenerate pairing: omega would be zero
	CHECK_THROWS_AS(solve_rho(alg, zero2, preset.psi, zero2),
	                RhoSocleError);
}

TEST_CASE("degenerate seed triples fail the assumption checks")
{
	Fp f(3);
	auto alg = qci_algebra(f, 2, 2, f.one());
	auto seed = qci_seed(alg, 2, 2, f.one());

	auto broken = seed;
	broken.theta = seed.psi;
	auto cl = check_seed_assumptions(alg, broken);
	CHECK_FALSE(cl.all_pass());
	auto* item = cl.find("sigma, theta independent modulo the psi submodule");
	REQUIRE(item != nullptr);
	CHECK_FALSE(item->pass);

	// non-relation vector trips the relation clause
	auto broken2 = seed;
	broken2.sigma.comp[0] = alg.unit_element();
	auto cl2 = check_seed_assumptions(alg, broken2);
	auto* rel = cl2.find("sigma, psi, theta are relations");
	REQUIRE(rel != nullptr);
	CHECK_FALSE(rel->pass);
}

TEST_CASE("binomial divisibility, frozen values and prime sweep")
{
	auto rep3 = a5_binomial_check(3);
	REQUIRE(rep3.entries.size() == 2);
	CHECK(rep3.entries[0].value == 3);
	CHECK(rep3.entries[1].value == 0);
	CHECK(rep3.pass());

	for (int64_t p : {3, 5, 7, 11})
	{
		auto rep = a5_binomial_check(p);
		CHECK(rep.entries.size() == size_t(p - 1));
		CHECK(rep.pass());
		for (const auto& e : rep.entries)
			CHECK(e.value % p == 0);
	}

	CHECK_THROWS_AS(a5_binomial_check(4), ConfigError);
	CHECK_THROWS_AS(a5_binomial_check(2), ConfigError);
}

TEST_CASE("parameter validation rejects degenerate input")
{
	Fp f5(5);
	CHECK_THROWS_AS(qci_algebra(f5, 2, 2, f5.zero()), ConfigError);
	CHECK_THROWS_AS(qci_algebra(f5, 1, 2, f5.one()), ConfigError);
	CHECK_THROWS_AS(a5_algebra(f5, 5, f5.zero()), ConfigError);
	// characteristic must match the parameter p
	CHECK_THROWS_AS(a5_algebra(f5, 3, f5.one()), ConfigError);
	RationalField fq;
	CHECK_THROWS_AS(a5_algebra(fq, 3, fq.one()), ConfigError);
	CHECK_THROWS_AS(a5_algebra(f5, 4, f5.one()), ConfigError);
}
