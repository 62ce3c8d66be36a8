#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzlab/resolution.hpp"

using namespace syzlab;

namespace {

template <class F>
void require_all(const CheckList& cl)
{
	for (const auto& it : cl.items)
	{
		INFO(it.name, ": expected ", it.expected, ", computed ",
		     it.computed, " ", it.note);
		CHECK(it.pass);
	}
}

} // namespace

TEST_CASE("low differentials match their defining data entry by entry")
{
	Fp f(5);
	auto q = f.from_int(2);
	auto alg = qci_algebra(f, 2, 3, q);
	auto seed = qci_seed(alg, 2, 3, q);
	Resolution<Fp> res(alg, seed, 4);

	const auto& d1 = res.d(1);
	CHECK(d1.rows == 2);
	CHECK(d1.cols == 1);
	CHECK(d1.at(0, 0) == alg.gen_x());
	CHECK(d1.at(1, 0) == alg.gen_y());

	const auto& d2 = res.d(2);
	CHECK(d2.rows == 3);
	CHECK(d2.cols == 2);
	for (size_t j = 0; j < 2; ++j)
	{
		CHECK(d2.at(0, j) == seed.sigma.comp[j]);
		CHECK(d2.at(1, j) == seed.psi.comp[j]);
		CHECK(d2.at(2, j) == seed.theta.comp[j]);
	}

	// d_3: top-left copy of d_1, rho column, x/y corner; t = 2 so the
	// rho_1, rho_2 pair carries c^0
	const auto& d3 = res.d(3);
	CHECK(d3.rows == 4);
	CHECK(d3.cols == 3);
	CHECK(d3.at(0, 0) == alg.gen_x());
	CHECK(d3.at(1, 0) == alg.gen_y());
	CHECK(d3.at(0, 1) == seed.rho[0]);
	CHECK(d3.at(1, 1) == seed.rho[1]);
	CHECK(d3.at(2, 1) == seed.rho[2]);
	CHECK(d3.at(3, 1) == seed.rho[3]);
	CHECK(d3.at(2, 2) == alg.gen_x());
	CHECK(d3.at(3, 2) == alg.gen_y());
	CHECK(alg.is_zero(d3.at(0, 2)));
	CHECK(alg.is_zero(d3.at(2, 0)));

	// d_4: top-left copy of d_2, then c^1 sigma | psi | theta
	const auto& d4 = res.d(4);
	CHECK(d4.rows == 5);
	CHECK(d4.cols == 4);
	for (size_t i = 0; i < 3; ++i)
		for (size_t j = 0; j < 2; ++j)
			CHECK(d4.at(i, j) == d2.at(i, j));
	for (size_t j = 0; j < 2; ++j)
	{
		CHECK(d4.at(2, 2 + j) == alg.scale(seed.c, seed.sigma.comp[j]));
		CHECK(d4.at(3, 2 + j) == seed.psi.comp[j]);
		CHECK(d4.at(4, 2 + j) == seed.theta.comp[j]);
	}
	CHECK(alg.is_zero(d4.at(0, 2)));
	CHECK(alg.is_zero(d4.at(4, 0)));
}

TEST_CASE("higher degrees repeat the pattern with growing c powers")
{
	Fp f(7);
	auto q = f.from_int(2);
	auto alg = qci_algebra(f, 2, 2, q);
	auto seed = qci_seed(alg, 2, 2, q);
	CHECK(seed.c != f.one()); // the scalings below are real
	Resolution<Fp> res(alg, seed, 8);

	// top-left block of d_r is d_{r-2}
	for (size_t r = 3; r <= 8; ++r)
	{
		const auto& d = res.d(r);
		const auto& prev = res.d(r - 2);
		for (size_t i = 0; i < prev.rows; ++i)
			for (size_t j = 0; j < prev.cols; ++j)
				CHECK(d.at(i, j) == prev.at(i, j));
	}

	// d_7 (t = 4): rho_1, rho_2 scaled by c^2
	const auto& d7 = res.d(7);
	auto c2 = f.pow(seed.c, 2);
	CHECK(d7.at(4, 5) == alg.scale(c2, seed.rho[0]));
	CHECK(d7.at(5, 5) == alg.scale(c2, seed.rho[1]));
	CHECK(d7.at(6, 5) == seed.rho[2]);
	CHECK(d7.at(7, 5) == seed.rho[3]);
	CHECK(d7.at(6, 6) == alg.gen_x());
	CHECK(d7.at(7, 6) == alg.gen_y());

	// d_8 (t = 4): sigma scaled by c^3
	const auto& d8 = res.d(8);
	auto c3 = f.pow(seed.c, 3);
	for (size_t j = 0; j < 2; ++j)
	{
		CHECK(d8.at(6, 6 + j) == alg.scale(c3, seed.sigma.comp[j]));
		CHECK(d8.at(7, 6 + j) == seed.psi.comp[j]);
		CHECK(d8.at(8, 6 + j) == seed.theta.comp[j]);
	}

	require_all<Fp>(verify_complex(res));
	require_all<Fp>(verify_exactness(res));
}

TEST_CASE("image dimension targets alternate around multiples of dim")
{
	CHECK(expected_image_dim(4, 1) == 3);
	CHECK(expected_image_dim(4, 2) == 5);
	CHECK(expected_image_dim(4, 3) == 7);
	CHECK(expected_image_dim(4, 12) == 25);
	CHECK(expected_image_dim(27, 1) == 26);
	CHECK(expected_image_dim(27, 2) == 28);
	CHECK(expected_image_dim(27, 8) == 109);
}

TEST_CASE("dimension ladder over twelve degrees, smallest algebra")
{
	Fp f(2);
	auto alg = qci_algebra(f, 2, 2, f.one());
	Resolution<Fp> res(alg, qci_seed(alg, 2, 2, f.one()), 12);
	require_all<Fp>(verify_complex(res));
	auto ex = verify_exactness(res);
	require_all<Fp>(ex);
	const size_t want[12] = {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25};
	for (size_t r = 1; r <= 12; ++r)
	{
		REQUIRE(res.slice(r).verified_image_dim.has_value());
		CHECK(*res.slice(r).verified_image_dim == want[r - 1]);
	}
}

TEST_CASE("dimension ladder for the deformed family")
{
	Fp f(3);
	for (int64_t b : {1, 2})
	{
		auto beta = f.from_int(b);
		auto alg = a5_algebra(f, 3, beta);
		Resolution<Fp> res(alg, a5_seed(alg, 3, beta), 8);
		require_all<Fp>(verify_complex(res));
		auto ex = verify_exactness(res);
		require_all<Fp>(ex);
		const size_t want[8] = {26, 28, 53, 55, 80, 82, 107, 109};
		for (size_t r = 1; r <= 8; ++r)
			CHECK(*res.slice(r).verified_image_dim == want[r - 1]);
	}
}

TEST_CASE("every entry lies in the radical and rows are minimal generators")
{
	RationalField f;
	auto alg = qci_algebra(f, 2, 3, f.one());
	Resolution<RationalField> res(alg, qci_seed(alg, 2, 3, f.one()), 6);
	for (size_t r = 1; r <= 6; ++r)
	{
		const auto& d = res.d(r);
		for (size_t i = 0; i < d.rows; ++i)
			for (size_t j = 0; j < d.cols; ++j)
				CHECK(alg.radical_degree(d.at(i, j)) >= 1);
		// no row is a Lambda-combination of the others: dropping any
		// one row shrinks the span
		std::vector<ModuleVector<RationalField>> rows;
		for (size_t i = 0; i <= r; ++i)
			rows.push_back(res.row(r, i));
		auto full = left_span(alg, rows, r);
		for (size_t skip = 0; skip <= r; ++skip)
		{
			std::vector<ModuleVector<RationalField>> sub;
			for (size_t i = 0; i <= r; ++i)
				if (i != skip)
					sub.push_back(rows[i]);
			CHECK(left_span(alg, sub, r).dim() < full.dim());
		}
	}
}

TEST_CASE("syzygy oracle agrees with the closed form in low degrees")
{
	Fp f2(2);
	auto a1 = qci_algebra(f2, 2, 2, f2.one());
	Resolution<Fp> r1(a1, qci_seed(a1, 2, 2, f2.one()), 4);
	for (size_t r = 2; r <= 4; ++r)
		require_all<Fp>(compare_with_oracle(r1, r));

	RationalField fq;
	auto a2 = qci_algebra(fq, 2, 3, fq.one());
	Resolution<RationalField> r2(a2, qci_seed(a2, 2, 3, fq.one()), 4);
	for (size_t r = 2; r <= 4; ++r)
		require_all<RationalField>(compare_with_oracle(r2, r));

	Fp f3(3);
	auto a3 = a5_algebra(f3, 3, f3.one());
	Resolution<Fp> r3(a3, a5_seed(a3, 3, f3.one()), 3);
	for (size_t r = 2; r <= 3; ++r)
		require_all<Fp>(compare_with_oracle(r3, r));

	CHECK_THROWS_AS(compare_with_oracle(r1, 1), std::invalid_argument);
}

TEST_CASE("a corrupted seed is caught by the complex and oracle checks")
{
	Fp f(3);
	auto alg = qci_algebra(f, 2, 2, f.one());
	auto seed = qci_seed(alg, 2, 2, f.one());
	seed.rho[2] = alg.add(seed.rho[2], alg.gen_y());
	Resolution<Fp> res(alg, seed, 3);

	auto cl = verify_complex(res);
	auto* item = cl.find("d_3 d_2 = 0");
	REQUIRE(item != nullptr);
	CHECK_FALSE(item->pass);
	CHECK(item->computed.find("nonzero at") == 0);

	auto oc = compare_with_oracle(res, 3);
	CHECK_FALSE(oc.all_pass());
}

TEST_CASE("generic syzygy of the unit row is empty")
{
	Fp f(5);
	auto alg = qci_algebra(f, 2, 2, f.one());
	std::vector<ModuleVector<Fp>> gens;
	gens.push_back(module_zero(alg, 1));
	gens[0].comp[0] = alg.unit_element();
	CHECK(generic_syzygy(alg, gens).empty());
}

TEST_CASE("degree-one truncation still verifies")
{
	Fp f(2);
	auto alg = qci_algebra(f, 2, 2, f.one());
	Resolution<Fp> res(alg, qci_seed(alg, 2, 2, f.one()), 1);
	CHECK(res.max_degree() == 1);
	CHECK(verify_complex(res).items.empty());
	auto ex = verify_exactness(res);
	CHECK(ex.items.size() == 1);
	require_all<Fp>(ex);
	CHECK_THROWS_AS(res.d(2), std::out_of_range);
}

TEST_CASE("build_d reproduces the in-place differential")
{
	Fp f(5);
	auto q = f.from_int(2);
	auto alg = qci_algebra(f, 2, 2, q);
	auto seed = qci_seed(alg, 2, 2, q);
	Resolution<Fp> res(alg, seed, 5);
	auto d5 = build_d(alg, seed, 5);
	const auto& want = res.d(5);
	REQUIRE(d5.rows == want.rows);
	REQUIRE(d5.cols == want.cols);
	for (size_t i = 0; i < d5.rows; ++i)
		for (size_t j = 0; j < d5.cols; ++j)
			CHECK(d5.at(i, j) == want.at(i, j));
}
