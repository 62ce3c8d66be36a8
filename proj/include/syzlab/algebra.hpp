#pragma once

#include "syzlab/linalg.hpp"
#include "syzlab/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <utility>

namespace syzlab {

struct LocalAlgebraError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

inline constexpr size_t kInfiniteDegree = std::numeric_limits<size_t>::max();

/* Coefficient vector over the monomial basis of a FiniteDimAlgebra. */
template <class F> struct Element
{
	std::vector<typename F::Elem> c;

	bool operator==(const Element& o) const { return c == o.c; }
};

/* Row vector with entries in the algebra; an element of Lambda^r. */
template <class F> struct ModuleVector
{
	std::vector<Element<F>> comp;

	size_t r() const { return comp.size(); }
	bool operator==(const ModuleVector& o) const { return comp == o.comp; }
};

/* Rectangular matrix over the algebra, acting on row vectors from the right. */
template <class F> struct LambdaMatrix
{
	size_t rows = 0, cols = 0;
	std::vector<Element<F>> e;

	LambdaMatrix() = default;
	LambdaMatrix(size_t r, size_t c, const Element<F>& fill)
	    : rows(r), cols(c), e(r * c, fill)
	{
	}

	Element<F>& at(size_t r, size_t c) { return e[r * cols + c]; }
	const Element<F>& at(size_t r, size_t c) const { return e[r * cols + c]; }
};

struct BuildOptions
{
	std::optional<size_t> dim_bound;
	size_t assoc_all_limit = 10000000; // all triples when N^3 <= this
	size_t assoc_samples = 100000;     // random triples otherwise
	uint64_t assoc_seed = 0x5eeded;
};

/*
 * Finite-dimensional algebra presented by a terminating rewriting system,
 * with its multiplication table, two designated radical generators x and y,
 * the radical filtration J ⊇ J^2 ⊇ ... computed as spans, and the socle.
 * Immutable once built. Basis index 0 is the identity.
 */
template <class F> class FiniteDimAlgebra
{
  public:
	using Elem = typename F::Elem;
	using SparseVec = std::vector<std::pair<uint32_t, Elem>>;

	FiniteDimAlgebra(RewriteSystem<F> rsys,
	                 std::optional<std::pair<NCPoly<F>, NCPoly<F>>> gens,
	                 const BuildOptions& opt)
	    : f_(rsys.field()), rsys_(std::move(rsys))
	{
		enumerate_basis(opt);
		build_table(opt);
		check_identity();
		check_associativity(opt);
		set_generators(gens);
		build_radical();
		build_socle();
	}

	const F& field() const { return f_; }
	const RewriteSystem<F>& rewrite_system() const { return rsys_; }
	size_t dim() const { return basis_.size(); }
	const std::vector<Word>& basis() const { return basis_; }
	const Word& basis_word(size_t i) const { return basis_[i]; }
	bool sorted_basis() const { return sorted_basis_; }

	const SparseVec& table(size_t u, size_t v) const
	{
		return table_[u * dim() + v];
	}

	const Element<F>& gen_x() const { return gen_[0]; }
	const Element<F>& gen_y() const { return gen_[1]; }
	const Element<F>& gen(size_t i) const { return gen_[i]; }

	size_t radical_length() const { return radical_.size(); }
	const EchelonSpace<F>& radical_layer(size_t m) const
	{
		return radical_[m - 1]; // J^m, 1 <= m <= radical_length
	}
	size_t monomial_radical_degree(size_t i) const { return mono_rdeg_[i]; }
	size_t socle_dim() const { return socle_dim_; }
	const Element<F>& socle_gen() const { return socle_gen_; }

	// ---- element construction ----

	Element<F> zero_element() const
	{
		return Element<F>{std::vector<Elem>(dim(), f_.zero())};
	}
	Element<F> unit_element() const { return monomial_element(0); }
	Element<F> monomial_element(size_t i) const
	{
		auto e = zero_element();
		e.c[i] = f_.one();
		return e;
	}

	std::optional<size_t> basis_index(const Word& w) const
	{
		auto it = index_.find(w);
		if (it == index_.end())
			return std::nullopt;
		return it->second;
	}

	Element<F> from_ncpoly(const NCPoly<F>& p) const
	{
		auto nf = rsys_.normal_form(p);
		auto e = zero_element();
		for (const auto& [w, c] : nf.terms)
		{
			auto idx = basis_index(w);
			if (!idx)
				throw DimensionMismatchError(
				    "irreducible word outside the enumerated basis: " +
				    rsys_.word_str(w));
			e.c[*idx] = f_.add(e.c[*idx], c);
		}
		return e;
	}

	// ---- element arithmetic ----

	bool is_zero(const Element<F>& a) const
	{
		for (const Elem& c : a.c)
			if (!f_.is_zero(c))
				return false;
		return true;
	}

	Element<F> add(const Element<F>& a, const Element<F>& b) const
	{
		auto e = a;
		for (size_t i = 0; i < dim(); ++i)
			e.c[i] = f_.add(e.c[i], b.c[i]);
		return e;
	}
	Element<F> sub(const Element<F>& a, const Element<F>& b) const
	{
		auto e = a;
		for (size_t i = 0; i < dim(); ++i)
			e.c[i] = f_.sub(e.c[i], b.c[i]);
		return e;
	}
	Element<F> scale(const Elem& s, const Element<F>& a) const
	{
		auto e = a;
		for (size_t i = 0; i < dim(); ++i)
			e.c[i] = f_.mul(s, e.c[i]);
		return e;
	}

	Element<F> mul(const Element<F>& a, const Element<F>& b) const
	{
		auto e = zero_element();
		for (size_t i = 0; i < dim(); ++i)
		{
			if (f_.is_zero(a.c[i]))
				continue;
			for (size_t j = 0; j < dim(); ++j)
			{
				if (f_.is_zero(b.c[j]))
					continue;
				Elem s = f_.mul(a.c[i], b.c[j]);
				for (const auto& [m, t] : table(i, j))
					e.c[m] = f_.add(e.c[m], f_.mul(s, t));
			}
		}
		return e;
	}

	Element<F> pow(const Element<F>& a, uint64_t k) const
	{
		Element<F> r = unit_element(), base = a;
		while (k)
		{
			if (k & 1)
				r = mul(r, base);
			base = mul(base, base);
			k >>= 1;
		}
		return r;
	}

	// largest m with a in J^m; 0 if the unit coefficient is nonzero,
	// kInfiniteDegree if a = 0
	size_t radical_degree(const Element<F>& a) const
	{
		if (is_zero(a))
			return kInfiniteDegree;
		size_t m = 0;
		while (m < radical_.size() && radical_[m].contains(a.c))
			++m;
		return m;
	}

  private:
	void enumerate_basis(const BuildOptions& opt)
	{
		size_t count_cap =
		    opt.dim_bound ? *opt.dim_bound : size_t(1000000);
		// prefixes of irreducible words are irreducible, so a declared
		// dimension bound B caps basis word length at B-1
		size_t len_cap = opt.dim_bound ? *opt.dim_bound : size_t(0);
		std::vector<Word> level{Word()};
		basis_.clear();
		while (!level.empty())
		{
			for (const Word& w : level)
			{
				if (basis_.size() >= count_cap + 1 ||
				    (len_cap && w.size() > len_cap - 1))
					throw DimensionMismatchError(
					    "basis enumeration exceeded the declared bound");
				basis_.push_back(w);
			}
			std::vector<Word> next;
			for (const Word& w : level)
				for (size_t g = 0; g < rsys_.alphabet().size(); ++g)
				{
					Word cand = w + static_cast<char>(g);
					if (suffix_irreducible(cand))
						next.push_back(std::move(cand));
				}
			level = std::move(next);
		}
		if (opt.dim_bound && basis_.size() != *opt.dim_bound)
			throw DimensionMismatchError(
			    "basis has dimension " + std::to_string(basis_.size()) +
			    ", declared " + std::to_string(*opt.dim_bound));
		for (size_t i = 0; i < basis_.size(); ++i)
			index_.emplace(basis_[i], static_cast<uint32_t>(i));
		sorted_basis_ = true;
		for (const Word& w : basis_)
			if (!std::is_sorted(w.begin(), w.end()))
				sorted_basis_ = false;
	}

	// cand = irreducible word + one letter: only suffix matches possible
	bool suffix_irreducible(const Word& cand) const
	{
		for (const auto& r : rsys_.rules())
		{
			const Word& l = r.lhs;
			if (l.size() <= cand.size() &&
			    cand.compare(cand.size() - l.size(), l.size(), l) == 0)
				return false;
		}
		return true;
	}

	void build_table(const BuildOptions&)
	{
		size_t n = dim();
		table_.assign(n * n, {});
		std::map<Word, SparseVec, WordLess> memo;
		size_t budget = rsys_.step_budget() * std::max<size_t>(n, 1);
		std::vector<Elem> acc(n, f_.zero());
		for (size_t u = 0; u < n; ++u)
			for (size_t v = 0; v < n; ++v)
				table_[u * n + v] =
				    reduce_cached(basis_[u] + basis_[v], memo, budget, acc);
	}

	const SparseVec& reduce_cached(const Word& w,
	                               std::map<Word, SparseVec, WordLess>& memo,
	                               size_t& budget,
	                               std::vector<Elem>& acc) const
	{
		auto it = memo.find(w);
		if (it != memo.end())
			return it->second;
		size_t pos, rule;
		SparseVec out;
		if (!rsys_.find_match(w, pos, rule))
		{
			auto idx = basis_index(w);
			if (!idx)
				throw DimensionMismatchError(
				    "irreducible word outside the enumerated basis: " +
				    rsys_.word_str(w));
			out.emplace_back(static_cast<uint32_t>(*idx), f_.one());
		}
		else
		{
			if (budget == 0)
				throw StepLimitError("rewrite step budget exhausted");
			--budget;
			const Rule<F>& r = rsys_.rules()[rule];
			// recurse first: nested calls share acc but leave it zeroed
			std::vector<std::pair<const SparseVec*, Elem>> parts;
			for (const auto& [m, rc] : r.rhs.terms)
			{
				Word nw = w.substr(0, pos) + m + w.substr(pos + r.lhs.size());
				parts.emplace_back(&reduce_cached(nw, memo, budget, acc), rc);
			}
			std::vector<uint32_t> touched;
			for (const auto& [sub, rc] : parts)
				for (const auto& [b, c] : *sub)
				{
					if (f_.is_zero(acc[b]))
						touched.push_back(b);
					acc[b] = f_.add(acc[b], f_.mul(rc, c));
				}
			std::sort(touched.begin(), touched.end());
			for (uint32_t b : touched)
			{
				if (!f_.is_zero(acc[b]))
					out.emplace_back(b, acc[b]);
				acc[b] = f_.zero();
			}
		}
		return memo.emplace(w, std::move(out)).first->second;
	}

	void check_identity() const
	{
		size_t n = dim();
		for (size_t v = 0; v < n; ++v)
		{
			const SparseVec& l = table_[0 * n + v];
			const SparseVec& r = table_[v * n + 0];
			bool ok = l.size() == 1 && l[0].first == v &&
			          f_.eq(l[0].second, f_.one()) && r.size() == 1 &&
			          r[0].first == v && f_.eq(r[0].second, f_.one());
			if (!ok)
				throw AssociativityError("identity does not act as identity");
		}
	}

	void check_associativity(const BuildOptions& opt) const
	{
		size_t n = dim();
		std::vector<Elem> lhs(n, f_.zero()), rhs(n, f_.zero());
		std::vector<uint32_t> tl, tr;
		auto check_triple = [&](size_t u, size_t w, size_t v) {
			const SparseVec& uw = table_[u * n + w];
			const SparseVec& wv = table_[w * n + v];
			for (const auto& [m, c] : uw)
				for (const auto& [b, d] : table_[m * n + v])
				{
					if (f_.is_zero(lhs[b]))
						tl.push_back(b);
					lhs[b] = f_.add(lhs[b], f_.mul(c, d));
				}
			for (const auto& [m, c] : wv)
				for (const auto& [b, d] : table_[u * n + m])
				{
					if (f_.is_zero(rhs[b]))
						tr.push_back(b);
					rhs[b] = f_.add(rhs[b], f_.mul(c, d));
				}
			bool ok = true;
			for (uint32_t b : tl)
				if (!f_.eq(lhs[b], rhs[b]))
					ok = false;
			for (uint32_t b : tr)
				if (!f_.eq(lhs[b], rhs[b]))
					ok = false;
			for (uint32_t b : tl)
				lhs[b] = f_.zero();
			for (uint32_t b : tr)
				rhs[b] = f_.zero();
			tl.clear();
			tr.clear();
			if (!ok)
				throw AssociativityError(
				    "associativity fails on basis triple (" +
				    std::to_string(u) + "," + std::to_string(w) + "," +
				    std::to_string(v) + ")");
		};
		double n3 = double(n) * double(n) * double(n);
		if (n3 <= double(opt.assoc_all_limit))
		{
			for (size_t u = 0; u < n; ++u)
				for (size_t w = 0; w < n; ++w)
					for (size_t v = 0; v < n; ++v)
						check_triple(u, w, v);
		}
		else
		{
			std::mt19937_64 rng(opt.assoc_seed);
			std::uniform_int_distribution<size_t> pick(0, n - 1);
			for (size_t s = 0; s < opt.assoc_samples; ++s)
				check_triple(pick(rng), pick(rng), pick(rng));
		}
	}

	void set_generators(
	    const std::optional<std::pair<NCPoly<F>, NCPoly<F>>>& gens)
	{
		if (gens)
		{
			gen_[0] = from_ncpoly(gens->first);
			gen_[1] = from_ncpoly(gens->second);
		}
		else
		{
			if (rsys_.alphabet().size() < 2)
				throw ConfigError("two radical generators required");
			gen_[0] = from_ncpoly(
			    NCPoly<F>::monomial(word_of({0}), f_.one()));
			gen_[1] = from_ncpoly(
			    NCPoly<F>::monomial(word_of({1}), f_.one()));
		}
		for (const auto& g : gen_)
			if (!f_.is_zero(g.c[0]))
				throw LocalAlgebraError("designated generator has a unit part");
	}

	Element<F> left_mul_by(size_t gi, const std::vector<Elem>& v) const
	{
		Element<F> ge{v};
		return mul(gen_[gi], ge);
	}

	void build_radical()
	{
		size_t n = dim();
		EchelonSpace<F> j1(f_, n);
		for (size_t b = 1; b < n; ++b)
		{
			std::vector<Elem> e(n, f_.zero());
			e[b] = f_.one();
			j1.insert(std::move(e));
		}
		radical_.clear();
		radical_.push_back(std::move(j1));
		while (radical_.back().dim() > 0)
		{
			const EchelonSpace<F>& prev = radical_.back();
			EchelonSpace<F> next(f_, n);
			for (const auto& u : prev.basis())
				for (size_t g = 0; g < 2; ++g)
					next.insert(left_mul_by(g, u).c);
			if (next.dim() >= prev.dim())
				throw LocalAlgebraError(
				    "radical filtration does not vanish; not a local algebra");
			if (next.dim() == 0)
				break;
			radical_.push_back(std::move(next));
		}
		mono_rdeg_.assign(n, 0);
		for (size_t b = 0; b < n; ++b)
		{
			std::vector<Elem> e(n, f_.zero());
			e[b] = f_.one();
			size_t m = 0;
			while (m < radical_.size() && radical_[m].contains(e))
				++m;
			mono_rdeg_[b] = m;
		}
	}

	void build_socle()
	{
		size_t n = dim();
		// left socle: {v : x v = 0 and y v = 0}
		DenseMatrix<F> m(2 * n, n, f_.zero());
		for (size_t b = 0; b < n; ++b)
		{
			std::vector<Elem> eb(n, f_.zero());
			eb[b] = f_.one();
			for (size_t g = 0; g < 2; ++g)
			{
				auto img = left_mul_by(g, eb);
				for (size_t row = 0; row < n; ++row)
					m.at(g * n + row, b) = img.c[row];
			}
		}
		auto ker = kernel_basis(f_, m);
		socle_dim_ = ker.size();
		if (socle_dim_ == 1)
		{
			EchelonSpace<F> sp(f_, n);
			sp.insert(ker[0]);
			socle_gen_ = Element<F>{sp.basis()[0]};
		}
		else
			socle_gen_ = zero_element();
	}

	F f_;
	RewriteSystem<F> rsys_;
	std::vector<Word> basis_;
	std::map<Word, uint32_t, WordLess> index_;
	std::vector<SparseVec> table_;
	Element<F> gen_[2];
	std::vector<EchelonSpace<F>> radical_;
	std::vector<size_t> mono_rdeg_;
	size_t socle_dim_ = 0;
	Element<F> socle_gen_;
	bool sorted_basis_ = false;
};

template <class F>
FiniteDimAlgebra<F>
build_algebra(const RewriteSystem<F>& rsys,
              std::optional<std::pair<NCPoly<F>, NCPoly<F>>> gens = {},
              const BuildOptions& opt = {})
{
	return FiniteDimAlgebra<F>(rsys, std::move(gens), opt);
}

// ---- module-level operations ----

template <class F>
ModuleVector<F> module_zero(const FiniteDimAlgebra<F>& alg, size_t r)
{
	return ModuleVector<F>{std::vector<Element<F>>(r, alg.zero_element())};
}

template <class F>
bool module_is_zero(const FiniteDimAlgebra<F>& alg, const ModuleVector<F>& v)
{
	for (const auto& e : v.comp)
		if (!alg.is_zero(e))
			return false;
	return true;
}

template <class F>
ModuleVector<F> module_add(const FiniteDimAlgebra<F>& alg,
                           const ModuleVector<F>& a, const ModuleVector<F>& b)
{
	assert(a.r() == b.r());
	auto out = a;
	for (size_t i = 0; i < a.r(); ++i)
		out.comp[i] = alg.add(a.comp[i], b.comp[i]);
	return out;
}

template <class F>
ModuleVector<F> module_left_mul(const FiniteDimAlgebra<F>& alg,
                                const Element<F>& a, const ModuleVector<F>& v)
{
	auto out = v;
	for (size_t i = 0; i < v.r(); ++i)
		out.comp[i] = alg.mul(a, v.comp[i]);
	return out;
}

template <class F>
std::vector<typename F::Elem> module_flatten(const ModuleVector<F>& v)
{
	std::vector<typename F::Elem> out;
	for (const auto& e : v.comp)
		out.insert(out.end(), e.c.begin(), e.c.end());
	return out;
}

template <class F>
ModuleVector<F> module_unflatten(const FiniteDimAlgebra<F>& alg,
                                 const std::vector<typename F::Elem>& flat,
                                 size_t r)
{
	assert(flat.size() == r * alg.dim());
	auto out = module_zero(alg, r);
	for (size_t i = 0; i < r; ++i)
		std::copy(flat.begin() + i * alg.dim(),
		          flat.begin() + (i + 1) * alg.dim(), out.comp[i].c.begin());
	return out;
}

template <class F>
ModuleVector<F> row_times_matrix(const FiniteDimAlgebra<F>& alg,
                                 const ModuleVector<F>& u,
                                 const LambdaMatrix<F>& d)
{
	assert(u.r() == d.rows);
	auto out = module_zero(alg, d.cols);
	for (size_t j = 0; j < d.cols; ++j)
		for (size_t i = 0; i < d.rows; ++i)
			out.comp[j] = alg.add(out.comp[j], alg.mul(u.comp[i], d.at(i, j)));
	return out;
}

template <class F>
LambdaMatrix<F> matrix_mul(const FiniteDimAlgebra<F>& alg,
                           const LambdaMatrix<F>& a, const LambdaMatrix<F>& b)
{
	assert(a.cols == b.rows);
	LambdaMatrix<F> out(a.rows, b.cols, alg.zero_element());
	for (size_t i = 0; i < a.rows; ++i)
		for (size_t k = 0; k < a.cols; ++k)
		{
			if (alg.is_zero(a.at(i, k)))
				continue;
			for (size_t j = 0; j < b.cols; ++j)
				out.at(i, j) =
				    alg.add(out.at(i, j), alg.mul(a.at(i, k), b.at(k, j)));
		}
	return out;
}

template <class F>
ModuleVector<F> matrix_row(const FiniteDimAlgebra<F>& alg,
                           const LambdaMatrix<F>& d, size_t i)
{
	ModuleVector<F> out = module_zero(alg, d.cols);
	for (size_t j = 0; j < d.cols; ++j)
		out.comp[j] = d.at(i, j);
	return out;
}

/*
 * Canonical basis of the left submodule of Lambda^r generated by the given
 * vectors: close the k-span under left multiplication by the two designated
 * generators (every monomial is a word in them), return the reduced echelon
 * basis of the resulting subspace of k^{rN}.
 */
template <class F>
EchelonSpace<F> left_span(const FiniteDimAlgebra<F>& alg,
                          const std::vector<ModuleVector<F>>& gens, size_t r)
{
	EchelonSpace<F> space(alg.field(), r * alg.dim());
	std::vector<ModuleVector<F>> work;
	for (const auto& g : gens)
	{
		assert(g.r() == r);
		if (space.insert(module_flatten(g)))
			work.push_back(g);
	}
	while (!work.empty())
	{
		ModuleVector<F> v = std::move(work.back());
		work.pop_back();
		for (size_t g = 0; g < 2; ++g)
		{
			auto img = module_left_mul(alg, alg.gen(g), v);
			if (space.insert(module_flatten(img)))
				work.push_back(std::move(img));
		}
	}
	return space;
}

/* J*M for a submodule M given by a k-basis: span{x u, y u}. */
template <class F>
EchelonSpace<F>
submodule_radical(const FiniteDimAlgebra<F>& alg,
                  const std::vector<std::vector<typename F::Elem>>& mbasis,
                  size_t r)
{
	EchelonSpace<F> space(alg.field(), r * alg.dim());
	for (const auto& flat : mbasis)
	{
		auto v = module_unflatten(alg, flat, r);
		for (size_t g = 0; g < 2; ++g)
			space.insert(module_flatten(module_left_mul(alg, alg.gen(g), v)));
	}
	return space;
}

/*
 * k-linearization of u -> u*D for D an s x r matrix: an (rN) x (sN) matrix
 * over k acting on concatenated coefficient vectors.
 */
template <class F>
DenseMatrix<F> linearize_row_map(const FiniteDimAlgebra<F>& alg,
                                 const LambdaMatrix<F>& d)
{
	size_t n = alg.dim(), s = d.rows, r = d.cols;
	const F& f = alg.field();
	DenseMatrix<F> m(r * n, s * n, f.zero());
	for (size_t i = 0; i < s; ++i)
		for (size_t j = 0; j < r; ++j)
		{
			const Element<F>& g = d.at(i, j);
			if (alg.is_zero(g))
				continue;
			// column (i,b) block row j: coefficients of b*g
			for (size_t b = 0; b < n; ++b)
			{
				for (size_t gj = 0; gj < n; ++gj)
				{
					if (f.is_zero(g.c[gj]))
						continue;
					for (const auto& [mm, t] : alg.table(b, gj))
						m.at(j * n + mm, i * n + b) =
						    f.add(m.at(j * n + mm, i * n + b),
						          f.mul(g.c[gj], t));
				}
			}
		}
	return m;
}

/* Factored solver for u*D = t with a fixed matrix D and many targets. */
template <class F> class RowFactorSolver
{
  public:
	RowFactorSolver(const FiniteDimAlgebra<F>& alg, const LambdaMatrix<F>& d)
	    : alg_(alg), s_(d.rows), r_(d.cols),
	      ech_(alg.field(), linearize_row_map(alg, d))
	{
	}

	std::optional<ModuleVector<F>> solve(const ModuleVector<F>& t) const
	{
		assert(t.r() == r_);
		auto x = ech_.solve(module_flatten(t));
		if (!x)
			return std::nullopt;
		return module_unflatten(alg_, *x, s_);
	}

	std::vector<ModuleVector<F>> kernel() const
	{
		std::vector<ModuleVector<F>> out;
		for (auto& v : ech_.kernel_basis())
			out.push_back(module_unflatten(alg_, v, s_));
		return out;
	}

	size_t domain_rank() const { return ech_.rank(); }

  private:
	const FiniteDimAlgebra<F>& alg_;
	size_t s_, r_;
	Echelon<F> ech_;
};

template <class F>
std::optional<ModuleVector<F>> solve_right_factor(const FiniteDimAlgebra<F>& alg,
                                                  const LambdaMatrix<F>& d,
                                                  const ModuleVector<F>& t)
{
	return RowFactorSolver<F>(alg, d).solve(t);
}

/* Basis of {u in Lambda^s : u*D = 0}. */
template <class F>
std::vector<ModuleVector<F>> kernel_of_row_map(const FiniteDimAlgebra<F>& alg,
                                               const LambdaMatrix<F>& d)
{
	return RowFactorSolver<F>(alg, d).kernel();
}

/* Kernel of (a_1..a_r) -> sum a_i g_i as a map Lambda^r -> Lambda. */
template <class F>
std::vector<ModuleVector<F>>
kernel_of_right_action(const FiniteDimAlgebra<F>& alg, const ModuleVector<F>& g)
{
	LambdaMatrix<F> d(g.r(), 1, alg.zero_element());
	for (size_t i = 0; i < g.r(); ++i)
		d.at(i, 0) = g.comp[i];
	return kernel_of_row_map(alg, d);
}

/*
 * Residues in k = Lambda/J of a solution u of u*D = t, where the rows of D
 * minimally generate the submodule containing t. The residues are the unit
 * coefficients of the components; minimality makes them independent of the
 * particular solution.
 */
template <class F>
std::optional<std::vector<typename F::Elem>>
express_in_minimal_generators(const FiniteDimAlgebra<F>& alg,
                              const LambdaMatrix<F>& d,
                              const ModuleVector<F>& t)
{
	auto u = solve_right_factor(alg, d, t);
	if (!u)
		return std::nullopt;
	std::vector<typename F::Elem> res;
	for (const auto& e : u->comp)
		res.push_back(e.c[0]);
	return res;
}

template <class F>
std::optional<std::vector<typename F::Elem>>
express_in_minimal_generators(const FiniteDimAlgebra<F>&,
                              const RowFactorSolver<F>& solver,
                              const ModuleVector<F>& t)
{
	auto u = solver.solve(t);
	if (!u)
		return std::nullopt;
	std::vector<typename F::Elem> res;
	for (const auto& e : u->comp)
		res.push_back(e.c[0]);
	return res;
}

// ---- interchange identity checker for the a-y-z family ----

template <class F> struct InterchangeMismatch
{
	size_t b, c;
};

template <class F> struct InterchangeReport
{
	std::vector<InterchangeMismatch<F>> mismatches;
	size_t checked = 0;

	bool pass() const { return mismatches.empty(); }
};

/*
 * Verifies y^b z^c = sum_r r! C(b,r) C(c,r) a^r z^{c-r} y^{b-r} for all
 * 0 <= b,c < p, each summand reduced to basis form by the engine.
 */
template <class F>
InterchangeReport<F> verify_interchange_identity(const FiniteDimAlgebra<F>& alg,
                                                 int64_t p)
{
	const F& f = alg.field();
	const auto& rs = alg.rewrite_system();
	int la = rs.letter_index("a"), ly = rs.letter_index("y"),
	    lz = rs.letter_index("z");
	if (la < 0 || ly < 0 || lz < 0)
		throw ConfigError("interchange identity needs alphabet {a,y,z}");
	InterchangeReport<F> rep;
	for (int64_t b = 0; b < p; ++b)
		for (int64_t c = 0; c < p; ++c)
		{
			auto lhs = alg.mul(
			    alg.from_ncpoly(NCPoly<F>::monomial(word_pow(ly, b), f.one())),
			    alg.from_ncpoly(NCPoly<F>::monomial(word_pow(lz, c), f.one())));
			auto rhs = alg.zero_element();
			for (int64_t r = 0; r <= std::min(b, c); ++r)
			{
				int64_t coeff = 1;
				for (int64_t i = 1; i <= r; ++i)
					coeff *= i; // r!
				int64_t binb = 1, binc = 1;
				for (int64_t i = 0; i < r; ++i)
				{
					binb = binb * (b - i) / (i + 1);
					binc = binc * (c - i) / (i + 1);
				}
				Word w = word_pow(la, r) + word_pow(lz, c - r) +
				         word_pow(ly, b - r);
				auto term = alg.from_ncpoly(NCPoly<F>::monomial(
				    w, f.from_int(coeff * binb * binc)));
				rhs = alg.add(rhs, term);
			}
			++rep.checked;
			if (!(lhs == rhs))
				rep.mismatches.push_back({size_t(b), size_t(c)});
		}
	return rep;
}

} // namespace syzlab
