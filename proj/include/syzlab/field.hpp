#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace syzlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct ConfigError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

inline bool is_prime(int64_t n)
{
	if (n < 2)
		return false;
	for (int64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

/* Prime field F_p. Elements are canonical residues in [0, p). */
class Fp
{
  public:
	using Elem = int64_t;

	explicit Fp(int64_t p) : p_(p)
	{
		if (!is_prime(p))
			throw ConfigError("field modulus must be prime, got " +
			                  std::to_string(p));
	}

	int64_t characteristic() const { return p_; }
	Elem zero() const { return 0; }
	Elem one() const { return 1 % p_; }

	Elem from_int(int64_t n) const
	{
		int64_t r = n % p_;
		return r < 0 ? r + p_ : r;
	}

	Elem add(Elem a, Elem b) const
	{
		Elem r = a + b;
		return r >= p_ ? r - p_ : r;
	}
	Elem sub(Elem a, Elem b) const
	{
		Elem r = a - b;
		return r < 0 ? r + p_ : r;
	}
	Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
	Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

	Elem inv(Elem a) const
	{
		if (a == 0)
			throw std::domain_error("division by zero in F_p");
		// extended euclid
		int64_t t = 0, nt = 1, r = p_, nr = a;
		while (nr != 0)
		{
			int64_t q = r / nr;
			int64_t tmp = t - q * nt;
			t = nt;
			nt = tmp;
			tmp = r - q * nr;
			r = nr;
			nr = tmp;
		}
		return t < 0 ? t + p_ : t;
	}
	Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

	Elem pow(Elem a, uint64_t e) const
	{
		Elem r = one(), base = a;
		while (e)
		{
			if (e & 1)
				r = mul(r, base);
			base = mul(base, base);
			e >>= 1;
		}
		return r;
	}

	bool is_zero(Elem a) const { return a == 0; }
	bool eq(Elem a, Elem b) const { return a == b; }

	std::string str(Elem a) const { return std::to_string(a); }

	// accepts "n" or "n/d", reduced mod p
	Elem parse(const std::string& s) const
	{
		auto slash = s.find('/');
		if (slash == std::string::npos)
			return from_int(parse_int(s));
		Elem num = from_int(parse_int(s.substr(0, slash)));
		Elem den = from_int(parse_int(s.substr(slash + 1)));
		return div(num, den);
	}

	bool operator==(const Fp& o) const { return p_ == o.p_; }

  private:
	static int64_t parse_int(const std::string& s)
	{
		size_t pos = 0;
		int64_t v = std::stoll(s, &pos);
		if (pos != s.size())
			throw ConfigError("bad integer literal: " + s);
		return v;
	}

	int64_t p_;
};

/* Exact rationals with arbitrary-precision integers. */
class RationalField
{
  public:
	using Elem = BigRational;

	int64_t characteristic() const { return 0; }
	Elem zero() const { return 0; }
	Elem one() const { return 1; }
	Elem from_int(int64_t n) const { return n; }

	Elem add(const Elem& a, const Elem& b) const { return a + b; }
	Elem sub(const Elem& a, const Elem& b) const { return a - b; }
	Elem neg(const Elem& a) const { return -a; }
	Elem mul(const Elem& a, const Elem& b) const { return a * b; }

	Elem inv(const Elem& a) const
	{
		if (a == 0)
			throw std::domain_error("division by zero in Q");
		return 1 / a;
	}
	Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

	Elem pow(const Elem& a, uint64_t e) const
	{
		Elem r = 1, base = a;
		while (e)
		{
			if (e & 1)
				r *= base;
			base *= base;
			e >>= 1;
		}
		return r;
	}

	bool is_zero(const Elem& a) const { return a == 0; }
	bool eq(const Elem& a, const Elem& b) const { return a == b; }

	std::string str(const Elem& a) const { return a.str(); }

	Elem parse(const std::string& s) const
	{
		try
		{
			return Elem(s);
		}
		catch (const std::exception&)
		{
			throw ConfigError("bad rational literal: " + s);
		}
	}

	bool operator==(const RationalField&) const { return true; }

  private:
	const Elem& inv_guard(const Elem& b) const
	{
		if (b == 0)
			throw std::domain_error("division by zero in Q");
		return b;
	}
};

} // namespace syzlab
