#include "syzlab/seeds.hpp"

namespace syzlab {

BigInt big_factorial(int64_t n)
{
	BigInt r = 1;
	for (int64_t i = 2; i <= n; ++i)
		r *= i;
	return r;
}

BigInt big_binomial(int64_t n, int64_t k)
{
	if (k < 0 || k > n)
		return 0;
	BigInt r = 1;
	for (int64_t i = 0; i < k; ++i)
	{
		r *= (n - i);
		r /= (i + 1);
	}
	return r;
}

BinomialReport a5_binomial_check(int64_t p)
{
	if (!is_prime(p) || p < 3)
		throw ConfigError("binomial check needs a prime p >= 3");
	BinomialReport rep;
	rep.p = p;
	for (int64_t r = 0; r <= p - 2; ++r)
	{
		BigInt c = -big_factorial(r) * big_binomial(p - 2, r) *
		               big_binomial(p - 1, r) +
		           big_factorial(r + 1) * big_binomial(p - 1, r + 1) *
		               big_binomial(p - 1, r + 1);
		rep.entries.push_back({r, c, c % p == 0});
	}
	return rep;
}

} // namespace syzlab
