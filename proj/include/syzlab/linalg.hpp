#pragma once

#include "syzlab/field.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace syzlab {

template <class F> struct DenseMatrix
{
	using Elem = typename F::Elem;

	size_t rows = 0, cols = 0;
	std::vector<Elem> a;

	DenseMatrix() = default;
	DenseMatrix(size_t r, size_t c, Elem fill) : rows(r), cols(c), a(r * c, fill) {}

	Elem& at(size_t r, size_t c) { return a[r * cols + c]; }
	const Elem& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

/*
 * Row reduction of M to reduced echelon form with a replayable op log.
 * Pivots: columns left to right, topmost available row. Factor once,
 * then solve M x = t for many right-hand sides, or read off the kernel.
 * Solutions set all free variables to zero.
 */
template <class F> class Echelon
{
  public:
	using Elem = typename F::Elem;

	Echelon(const F& field, DenseMatrix<F> m) : f_(field), r_(std::move(m))
	{
		size_t row = 0;
		pivot_col_.clear();
		for (size_t col = 0; col < r_.cols && row < r_.rows; ++col)
		{
			size_t pr = row;
			while (pr < r_.rows && f_.is_zero(r_.at(pr, col)))
				++pr;
			if (pr == r_.rows)
				continue;
			if (pr != row)
			{
				ops_.push_back({OpSwap, pr, row, f_.zero()});
				for (size_t c = col; c < r_.cols; ++c)
					std::swap(r_.at(pr, c), r_.at(row, c));
			}
			if (!f_.eq(r_.at(row, col), f_.one()))
			{
				Elem s = f_.inv(r_.at(row, col));
				ops_.push_back({OpScale, row, row, s});
				for (size_t c = col; c < r_.cols; ++c)
					r_.at(row, c) = f_.mul(r_.at(row, c), s);
			}
			for (size_t rr = 0; rr < r_.rows; ++rr)
			{
				if (rr == row || f_.is_zero(r_.at(rr, col)))
					continue;
				Elem factor = f_.neg(r_.at(rr, col));
				ops_.push_back({OpAddMul, row, rr, factor});
				for (size_t c = col; c < r_.cols; ++c)
					r_.at(rr, c) = f_.add(r_.at(rr, c), f_.mul(factor, r_.at(row, c)));
			}
			pivot_col_.push_back(col);
			++row;
		}
	}

	size_t rank() const { return pivot_col_.size(); }
	size_t rows() const { return r_.rows; }
	size_t cols() const { return r_.cols; }
	const std::vector<size_t>& pivot_cols() const { return pivot_col_; }

	// basis of {v : M v = 0}, one vector per free column, ascending
	std::vector<std::vector<Elem>> kernel_basis() const
	{
		std::vector<bool> is_pivot(r_.cols, false);
		for (size_t c : pivot_col_)
			is_pivot[c] = true;
		std::vector<std::vector<Elem>> basis;
		for (size_t fc = 0; fc < r_.cols; ++fc)
		{
			if (is_pivot[fc])
				continue;
			std::vector<Elem> v(r_.cols, f_.zero());
			v[fc] = f_.one();
			for (size_t i = 0; i < pivot_col_.size(); ++i)
				v[pivot_col_[i]] = f_.neg(r_.at(i, fc));
			basis.push_back(std::move(v));
		}
		return basis;
	}

	// least solution of M x = t in the free-vars-zero sense
	std::optional<std::vector<Elem>> solve(const std::vector<Elem>& t) const
	{
		assert(t.size() == r_.rows);
		std::vector<Elem> b = t;
		for (const Op& op : ops_)
		{
			switch (op.kind)
			{
			case OpSwap:
				std::swap(b[op.src], b[op.dst]);
				break;
			case OpScale:
				b[op.src] = f_.mul(b[op.src], op.factor);
				break;
			case OpAddMul:
				b[op.dst] = f_.add(b[op.dst], f_.mul(op.factor, b[op.src]));
				break;
			}
		}
		for (size_t i = pivot_col_.size(); i < r_.rows; ++i)
			if (!f_.is_zero(b[i]))
				return std::nullopt;
		std::vector<Elem> x(r_.cols, f_.zero());
		for (size_t i = 0; i < pivot_col_.size(); ++i)
			x[pivot_col_[i]] = b[i];
		return x;
	}

  private:
	enum OpKind
	{
		OpSwap,
		OpScale,
		OpAddMul
	};
	struct Op
	{
		OpKind kind;
		size_t src, dst;
		Elem factor;
	};

	F f_;
	DenseMatrix<F> r_;
	std::vector<size_t> pivot_col_;
	std::vector<Op> ops_;
};

template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field,
                                                        const DenseMatrix<F>& m)
{
	return Echelon<F>(field, m).kernel_basis();
}

template <class F> size_t rank(const F& field, const DenseMatrix<F>& m)
{
	return Echelon<F>(field, m).rank();
}

template <class F>
std::optional<std::vector<typename F::Elem>>
solve_one(const F& field, const DenseMatrix<F>& m,
          const std::vector<typename F::Elem>& t)
{
	return Echelon<F>(field, m).solve(t);
}

/*
 * Incremental reduced-echelon subspace of k^n. Insertion keeps the stored
 * rows in canonical reduced form, so the final basis depends only on the
 * spanned subspace, not on insertion order.
 */
template <class F> class EchelonSpace
{
  public:
	using Elem = typename F::Elem;

	EchelonSpace(const F& field, size_t ambient) : f_(field), n_(ambient) {}

	size_t dim() const { return rows_.size(); }
	size_t ambient() const { return n_; }
	const std::vector<std::vector<Elem>>& basis() const { return rows_; }

	// residual of v after reduction against the stored rows
	std::vector<Elem> reduce(std::vector<Elem> v) const
	{
		assert(v.size() == n_);
		for (size_t i = 0; i < rows_.size(); ++i)
		{
			const Elem& c = v[pivots_[i]];
			if (f_.is_zero(c))
				continue;
			Elem factor = f_.neg(c);
			axpy(v, factor, rows_[i]);
		}
		return v;
	}

	bool contains(const std::vector<Elem>& v) const
	{
		auto r = reduce(v);
		for (const Elem& c : r)
			if (!f_.is_zero(c))
				return false;
		return true;
	}

	// returns true if v enlarged the space
	bool insert(std::vector<Elem> v)
	{
		v = reduce(std::move(v));
		size_t lead = n_;
		for (size_t i = 0; i < n_; ++i)
			if (!f_.is_zero(v[i]))
			{
				lead = i;
				break;
			}
		if (lead == n_)
			return false;
		Elem s = f_.inv(v[lead]);
		for (Elem& c : v)
			c = f_.mul(c, s);
		for (size_t i = 0; i < rows_.size(); ++i)
		{
			const Elem& c = rows_[i][lead];
			if (!f_.is_zero(c))
				axpy(rows_[i], f_.neg(c), v);
		}
		size_t pos = 0;
		while (pos < pivots_.size() && pivots_[pos] < lead)
			++pos;
		rows_.insert(rows_.begin() + pos, std::move(v));
		pivots_.insert(pivots_.begin() + pos, lead);
		return true;
	}

	bool same_space(const EchelonSpace& other) const
	{
		if (dim() != other.dim() || n_ != other.n_)
			return false;
		for (const auto& r : rows_)
			if (!other.contains(r))
				return false;
		return true;
	}

  private:
	void axpy(std::vector<Elem>& dst, const Elem& factor,
	          const std::vector<Elem>& src) const
	{
		for (size_t i = 0; i < n_; ++i)
			dst[i] = f_.add(dst[i], f_.mul(factor, src[i]));
	}

	F f_;
	size_t n_;
	std::vector<std::vector<Elem>> rows_;
	std::vector<size_t> pivots_;
};

} // namespace syzlab
