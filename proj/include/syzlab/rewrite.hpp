#pragma once

#include "syzlab/field.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzlab {

/* A word in the free algebra; each char is a generator index. */
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters)
{
	Word w;
	for (int g : letters)
		w.push_back(static_cast<char>(g));
	return w;
}

inline Word word_pow(int letter, size_t e)
{
	return Word(e, static_cast<char>(letter));
}

/* Canonical term order: length first, then lex by generator index. */
struct WordLess
{
	bool operator()(const Word& a, const Word& b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

struct StepLimitError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct BadRuleError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct AssociativityError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/* Finite k-linear combination of words; no zero coefficients stored. */
template <class F> struct NCPoly
{
	using Elem = typename F::Elem;

	std::map<Word, Elem, WordLess> terms;

	bool is_zero() const { return terms.empty(); }

	void add_term(const F& f, const Word& w, const Elem& c)
	{
		if (f.is_zero(c))
			return;
		auto it = terms.find(w);
		if (it == terms.end())
		{
			terms.emplace(w, c);
			return;
		}
		it->second = f.add(it->second, c);
		if (f.is_zero(it->second))
			terms.erase(it);
	}

	void add(const F& f, const NCPoly& other, const Elem& scale)
	{
		for (const auto& [w, c] : other.terms)
			add_term(f, w, f.mul(c, scale));
	}

	static NCPoly monomial(const Word& w, const Elem& c)
	{
		NCPoly p;
		if (!(c == Elem{}))
			p.terms.emplace(w, c);
		return p;
	}

	bool operator==(const NCPoly& other) const { return terms == other.terms; }
};

template <class F> struct Rule
{
	Word lhs;
	NCPoly<F> rhs;
};

/*
 * String rewriting over a free algebra on a small alphabet. Rules must be
 * strictly decreasing in weighted-degree-then-lex order, which makes
 * exhaustive reduction terminate; a step budget guards against blowup.
 * Reduction strategy: leftmost match position, first declared rule there.
 */
template <class F> class RewriteSystem
{
  public:
	using Elem = typename F::Elem;

	RewriteSystem(const F& field, std::vector<std::string> alphabet,
	              std::vector<Rule<F>> rules,
	              std::vector<int64_t> weights = {},
	              size_t step_budget = 1000000)
	    : f_(field), alphabet_(std::move(alphabet)), rules_(std::move(rules)),
	      weights_(std::move(weights)), step_budget_(step_budget)
	{
		if (weights_.empty())
			weights_.assign(alphabet_.size(), 1);
		if (weights_.size() != alphabet_.size())
			throw BadRuleError("weight count does not match alphabet");
		for (const auto& r : rules_)
		{
			if (r.lhs.empty())
				throw BadRuleError("empty rule left side");
			check_letters(r.lhs);
			for (const auto& [w, c] : r.rhs.terms)
			{
				check_letters(w);
				if (!order_less(w, r.lhs))
					throw BadRuleError(
					    "rule does not decrease the termination order: " +
					    word_str(r.lhs) + " -> " + word_str(w));
			}
		}
	}

	const F& field() const { return f_; }
	const std::vector<std::string>& alphabet() const { return alphabet_; }
	const std::vector<Rule<F>>& rules() const { return rules_; }
	size_t step_budget() const { return step_budget_; }

	int letter_index(const std::string& name) const
	{
		for (size_t i = 0; i < alphabet_.size(); ++i)
			if (alphabet_[i] == name)
				return static_cast<int>(i);
		return -1;
	}

	// leftmost reducible position and the first rule matching there
	bool find_match(const Word& w, size_t& pos, size_t& rule) const
	{
		for (pos = 0; pos < w.size(); ++pos)
			for (rule = 0; rule < rules_.size(); ++rule)
			{
				const Word& l = rules_[rule].lhs;
				if (l.size() <= w.size() - pos &&
				    w.compare(pos, l.size(), l) == 0)
					return true;
			}
		return false;
	}

	bool is_irreducible(const Word& w) const
	{
		size_t pos, rule;
		return !find_match(w, pos, rule);
	}

	NCPoly<F> normal_form(const NCPoly<F>& p) const
	{
		size_t budget = step_budget_;
		NCPoly<F> out;
		std::vector<std::pair<Word, Elem>> work(p.terms.begin(), p.terms.end());
		while (!work.empty())
		{
			auto [w, c] = std::move(work.back());
			work.pop_back();
			size_t pos, rule;
			if (!find_match(w, pos, rule))
			{
				out.add_term(f_, w, c);
				continue;
			}
			if (budget == 0)
				throw StepLimitError("rewrite step budget exhausted");
			--budget;
			const Rule<F>& r = rules_[rule];
			for (const auto& [m, rc] : r.rhs.terms)
			{
				Word nw = w.substr(0, pos) + m + w.substr(pos + r.lhs.size());
				work.emplace_back(std::move(nw), f_.mul(c, rc));
			}
		}
		return out;
	}

	NCPoly<F> normal_form_word(const Word& w) const
	{
		return normal_form(NCPoly<F>::monomial(w, f_.one()));
	}

	std::string word_str(const Word& w) const
	{
		if (w.empty())
			return "1";
		std::string s;
		for (size_t i = 0; i < w.size();)
		{
			size_t j = i;
			while (j < w.size() && w[j] == w[i])
				++j;
			if (!s.empty())
				s += ' ';
			s += alphabet_[static_cast<size_t>(w[i])] + "^" +
			     std::to_string(j - i);
			i = j;
		}
		return s;
	}

  private:
	void check_letters(const Word& w) const
	{
		for (char ch : w)
			if (static_cast<size_t>(ch) >= alphabet_.size())
				throw BadRuleError("rule uses letter outside alphabet");
	}

	int64_t weight(const Word& w) const
	{
		int64_t s = 0;
		for (char ch : w)
			s += weights_[static_cast<size_t>(ch)];
		return s;
	}

	bool order_less(const Word& a, const Word& b) const
	{
		int64_t wa = weight(a), wb = weight(b);
		if (wa != wb)
			return wa < wb;
		return a < b;
	}

	F f_;
	std::vector<std::string> alphabet_;
	std::vector<Rule<F>> rules_;
	std::vector<int64_t> weights_;
	size_t step_budget_;
};

} // namespace syzlab
