#pragma once

#include "syzlab/ext.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace syzlab {

/*
 * Text form of algebra elements: terms "coeff*monomial" joined by " + ",
 * monomials in run-length product notation ("x^2 y^1"), the empty word as
 * "1", the zero element as "0". Coefficients use the field's own syntax
 * (canonical residues over F_p, "n/d" over Q). Deterministic because basis
 * indices follow the fixed length-then-lex enumeration.
 */
template <class F>
std::string format_element(const FiniteDimAlgebra<F>& alg,
                           const Element<F>& e)
{
	const F& f = alg.field();
	const auto& rs = alg.rewrite_system();
	std::string out;
	for (size_t i = 0; i < alg.dim(); ++i)
	{
		if (f.is_zero(e.c[i]))
			continue;
		if (!out.empty())
			out += " + ";
		out += f.str(e.c[i]) + "*" + rs.word_str(alg.basis_word(i));
	}
	return out.empty() ? "0" : out;
}

/* "x^2 y" over alphabet {x,y} -> word; "1" is the empty word. */
inline Word parse_word(const std::vector<std::string>& alphabet,
                       const std::string& s)
{
	Word w;
	std::istringstream in(s);
	std::string tok;
	while (in >> tok)
	{
		if (tok == "1")
			continue;
		size_t caret = tok.find('^');
		std::string name =
		    caret == std::string::npos ? tok : tok.substr(0, caret);
		long e = 1;
		if (caret != std::string::npos)
		{
			try
			{
				e = std::stol(tok.substr(caret + 1));
			}
			catch (const std::exception&)
			{
				throw ConfigError("malformed exponent in token: " + tok);
			}
		}
		auto it = std::find(alphabet.begin(), alphabet.end(), name);
		if (it == alphabet.end() || e < 0)
			throw ConfigError("malformed monomial token: " + tok);
		for (long k = 0; k < e; ++k)
			w.push_back(char(it - alphabet.begin()));
	}
	return w;
}

/* "coeff*monomial" terms joined by " + "; "0" is the zero polynomial. */
template <class F>
NCPoly<F> parse_ncpoly(const F& f, const std::vector<std::string>& alphabet,
                       const std::string& s)
{
	NCPoly<F> poly;
	if (s == "0")
		return poly;
	size_t pos = 0;
	while (pos < s.size())
	{
		size_t stop = s.find(" + ", pos);
		std::string term =
		    s.substr(pos, stop == std::string::npos ? stop : stop - pos);
		pos = stop == std::string::npos ? s.size() : stop + 3;
		size_t star = term.find('*');
		if (star == std::string::npos)
			poly.add_term(f, parse_word(alphabet, term), f.one());
		else
			poly.add_term(f, parse_word(alphabet, term.substr(star + 1)),
			              f.parse(term.substr(0, star)));
	}
	return poly;
}

/* Inverse of format_element; accepts any product of letters, not only
 * irreducible words, and reduces through the rewrite system. */
template <class F>
Element<F> parse_element(const FiniteDimAlgebra<F>& alg, const std::string& s)
{
	const auto& rs = alg.rewrite_system();
	return alg.from_ncpoly(parse_ncpoly(alg.field(), rs.alphabet(), s));
}

/*
 * Differential dump: one header line, then the nonzero entries in row-major
 * order as "i<TAB>j<TAB>element" with 1-indexed positions.
 */
template <class F>
void write_matrix_tsv(std::ostream& os, const FiniteDimAlgebra<F>& alg,
                      size_t degree, const LambdaMatrix<F>& d)
{
	os << "# degree " << degree << " rows " << d.rows << " cols " << d.cols
	   << "\n";
	for (size_t i = 0; i < d.rows; ++i)
		for (size_t j = 0; j < d.cols; ++j)
			if (!alg.is_zero(d.at(i, j)))
				os << i + 1 << "\t" << j + 1 << "\t"
				   << format_element(alg, d.at(i, j)) << "\n";
}

/*
 * Product table dump: nonzero structure constants of H^s x H^t -> H^{s+t}
 * as "i<TAB>j<TAB>m<TAB>coefficient", 1-indexed, lexicographic in (i,j,m).
 */
template <class F>
void write_products_tsv(std::ostream& os, const F& f,
                        const ProductTable<F>& tab)
{
	os << "# product " << tab.s << " " << tab.t << "\n";
	for (size_t i = 0; i <= tab.s; ++i)
		for (size_t j = 0; j <= tab.t; ++j)
			for (size_t m = 0; m <= tab.s + tab.t; ++m)
				if (!f.is_zero(tab.at(i, j, m)))
					os << i + 1 << "\t" << j + 1 << "\t" << m + 1 << "\t"
					   << f.str(tab.at(i, j, m)) << "\n";
}

} // namespace syzlab
