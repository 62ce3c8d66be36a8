#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzlab/linalg.hpp"

#include <random>

using namespace syzlab;

TEST_CASE("F_p arithmetic on small residues")
{
	Fp f(7);
	CHECK(f.characteristic() == 7);
	CHECK(f.add(5, 4) == 2);
	CHECK(f.sub(2, 5) == 4);
	CHECK(f.mul(3, 5) == 1);
	CHECK(f.neg(0) == 0);
	CHECK(f.neg(3) == 4);
	CHECK(f.from_int(-1) == 6);
	CHECK(f.from_int(700) == 0);
	CHECK(f.pow(3, 6) == 1); // Fermat
	CHECK(f.pow(0, 0) == 1);
	for (int64_t a = 1; a < 7; ++a)
		CHECK(f.mul(a, f.inv(a)) == 1);
	CHECK(f.parse("12") == 5);
	CHECK(f.parse("-2") == 5);
	CHECK(f.parse("3/4") == f.div(3, 4));
	CHECK_THROWS_AS(f.inv(0), std::domain_error);
	CHECK_THROWS_AS(f.parse("2x"), ConfigError);
	CHECK_THROWS_AS(Fp(6), ConfigError);
	CHECK_THROWS_AS(Fp(1), ConfigError);
}

TEST_CASE("rational arithmetic is exact")
{
	RationalField f;
	CHECK(f.characteristic() == 0);
	auto a = f.parse("3/4");
	auto b = f.parse("-2/3");
	CHECK(f.str(f.add(a, b)) == "1/12");
	CHECK(f.str(f.mul(a, b)) == "-1/2");
	CHECK(f.str(f.div(a, b)) == "-9/8");
	CHECK(f.str(f.sub(a, a)) == "0");
	CHECK(f.eq(f.parse("2/4"), f.parse("1/2")));
	CHECK(f.is_zero(f.zero()));
	CHECK(f.str(f.pow(f.parse("1/2"), 10)) == "1/1024");
	CHECK(f.str(f.neg(f.one())) == "-1");
	CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("echelon solve and kernel, frozen small example over F_5")
{
	Fp f(5);
	DenseMatrix<Fp> m(2, 2, 0);
	m.at(0, 0) = 1;
	m.at(0, 1) = 2;
	m.at(1, 0) = 2;
	m.at(1, 1) = 4;
	Echelon<Fp> e(f, m);
	CHECK(e.rank() == 1);

	auto k = e.kernel_basis();
	REQUIRE(k.size() == 1);
	// second row is twice the first, kernel spanned by (3, 1)
	CHECK(k[0] == std::vector<int64_t>{3, 1});

	auto x = e.solve({1, 2});
	REQUIRE(x.has_value());
	CHECK(*x == std::vector<int64_t>{1, 0});

	CHECK_FALSE(e.solve({1, 0}).has_value());
	CHECK_FALSE(e.solve({0, 1}).has_value());
}

TEST_CASE("rank-nullity on random matrices over F_3 and Q")
{
	std::mt19937_64 rng(42);
	Fp f3(3);
	RationalField fq;
	for (int trial = 0; trial < 40; ++trial)
	{
		size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
		DenseMatrix<Fp> m(r, c, 0);
		DenseMatrix<RationalField> mq(r, c, BigRational(0));
		for (size_t i = 0; i < r; ++i)
			for (size_t j = 0; j < c; ++j)
			{
				int64_t v = int64_t(rng() % 7) - 3;
				m.at(i, j) = f3.from_int(v);
				mq.at(i, j) = fq.from_int(v);
			}
		CHECK(rank(f3, m) + kernel_basis(f3, m).size() == c);
		CHECK(rank(fq, mq) + kernel_basis(fq, mq).size() == c);

		// every kernel vector really is annihilated
		for (const auto& v : kernel_basis(f3, m))
			for (size_t i = 0; i < r; ++i)
			{
				int64_t acc = 0;
				for (size_t j = 0; j < c; ++j)
					acc = f3.add(acc, f3.mul(m.at(i, j), v[j]));
				CHECK(acc == 0);
			}
	}
}

TEST_CASE("solve returns a vector satisfying the system")
{
	std::mt19937_64 rng(7);
	Fp f(11);
	for (int trial = 0; trial < 40; ++trial)
	{
		size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
		DenseMatrix<Fp> m(r, c, 0);
		for (auto& v : m.a)
			v = f.from_int(int64_t(rng() % 11));
		std::vector<int64_t> x0(c);
		for (auto& v : x0)
			v = f.from_int(int64_t(rng() % 11));
		std::vector<int64_t> t(r, 0);
		for (size_t i = 0; i < r; ++i)
			for (size_t j = 0; j < c; ++j)
				t[i] = f.add(t[i], f.mul(m.at(i, j), x0[j]));
		auto x = solve_one(f, m, t);
		REQUIRE(x.has_value());
		for (size_t i = 0; i < r; ++i)
		{
			int64_t acc = 0;
			for (size_t j = 0; j < c; ++j)
				acc = f.add(acc, f.mul(m.at(i, j), (*x)[j]));
			CHECK(acc == t[i]);
		}
	}
}

TEST_CASE("echelon space canonical form is insertion-order independent")
{
	Fp f(5);
	std::vector<std::vector<int64_t>> vecs = {
	    {1, 2, 3, 4}, {0, 1, 1, 0}, {2, 4, 1, 3}, {1, 3, 4, 4}};
	EchelonSpace<Fp> a(f, 4), b(f, 4);
	for (const auto& v : vecs)
		a.insert(v);
	for (auto it = vecs.rbegin(); it != vecs.rend(); ++it)
		b.insert(*it);
	CHECK(a.dim() == b.dim());
	CHECK(a.same_space(b));
	CHECK(a.basis() == b.basis()); // canonical, not merely equal as spaces

	// scaled copies change nothing
	EchelonSpace<Fp> c(f, 4);
	for (const auto& v : vecs)
	{
		std::vector<int64_t> w(4);
		for (size_t i = 0; i < 4; ++i)
			w[i] = f.mul(3, v[i]);
		c.insert(w);
	}
	CHECK(a.same_space(c));

	CHECK(a.contains({1, 2, 3, 4}));
	EchelonSpace<Fp> small(f, 4);
	small.insert({1, 0, 0, 0});
	CHECK_FALSE(a.same_space(small));
	CHECK_FALSE(small.contains({0, 1, 0, 0}));
	CHECK_FALSE(small.insert({2, 0, 0, 0}));
	CHECK(small.dim() == 1);
}

TEST_CASE("echelon space over Q with non-integer pivots")
{
	RationalField f;
	EchelonSpace<RationalField> s(f, 3);
	CHECK(s.insert({f.parse("1/2"), f.parse("1/3"), f.zero()}));
	CHECK(s.insert({f.zero(), f.parse("2"), f.parse("5")}));
	CHECK_FALSE(s.insert({f.parse("3/2"), f.parse("3"), f.parse("5")}));
	CHECK(s.dim() == 2);
	CHECK(s.contains({f.one(), f.parse("2/3"), f.zero()}));
}
