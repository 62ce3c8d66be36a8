#pragma once

#include "syzlab/report.hpp"
#include "syzlab/seeds.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace syzlab {

template <class F> struct ResolutionSlice
{
	size_t degree = 0;
	LambdaMatrix<F> d; // (degree+1) x degree, rows generate the syzygy
	std::optional<size_t> verified_image_dim;
};

/*
 * Minimal projective resolution of the trivial module: P_r = Lambda^{r+1},
 * differentials d_r act on row vectors from the right. d_1 = (x y)^T, d_2
 * has rows sigma, psi, theta; higher degrees extend the previous matrix by
 * a two-column block carrying rho (odd) or a c-power of sigma (even) and a
 * fixed 2x2 corner. Also owns the solver and chain-lift caches used by the
 * cohomology product routines.
 */
template <class F> class Resolution
{
  public:
	using Elem = typename F::Elem;

	Resolution(const FiniteDimAlgebra<F>& alg, SeedData<F> seed, size_t rmax)
	    : alg_(alg), seed_(std::move(seed))
	{
		extend(rmax);
	}

	const FiniteDimAlgebra<F>& algebra() const { return alg_; }
	const SeedData<F>& seed() const { return seed_; }
	size_t max_degree() const { return slices_.size(); }

	void extend(size_t rmax)
	{
		while (slices_.size() < rmax)
			slices_.push_back(make_slice(slices_.size() + 1));
	}

	const LambdaMatrix<F>& d(size_t r) const
	{
		if (r < 1 || r > slices_.size())
			throw std::out_of_range("differential degree out of range");
		return slices_[r - 1].d;
	}

	ResolutionSlice<F>& slice(size_t r) { return slices_[r - 1]; }
	const ResolutionSlice<F>& slice(size_t r) const { return slices_[r - 1]; }

	// generator row f_i^r, 0-indexed i in 0..r
	ModuleVector<F> row(size_t r, size_t i) const
	{
		return matrix_row(alg_, d(r), i);
	}

	// factored solver for u * d_r = t, shared by lifting and expression
	const RowFactorSolver<F>& row_solver(size_t r)
	{
		auto it = solvers_.find(r);
		if (it == solvers_.end())
			it = solvers_
			         .emplace(r, std::make_unique<RowFactorSolver<F>>(alg_,
			                                                          d(r)))
			         .first;
		return *it->second;
	}

	std::map<std::pair<size_t, size_t>, std::vector<LambdaMatrix<F>>>& lifts()
	{
		return lifts_;
	}
	std::map<std::tuple<size_t, size_t, size_t>,
	         std::vector<std::vector<Elem>>>&
	product_blocks()
	{
		return blocks_;
	}

  private:
	ResolutionSlice<F> make_slice(size_t r)
	{
		const F& f = alg_.field();
		ResolutionSlice<F> s;
		s.degree = r;
		if (r == 1)
		{
			s.d = LambdaMatrix<F>(2, 1, alg_.zero_element());
			s.d.at(0, 0) = alg_.gen_x();
			s.d.at(1, 0) = alg_.gen_y();
			return s;
		}
		if (r == 2)
		{
			s.d = LambdaMatrix<F>(3, 2, alg_.zero_element());
			const ModuleVector<F>* rows[3] = {&seed_.sigma, &seed_.psi,
			                                  &seed_.theta};
			for (size_t i = 0; i < 3; ++i)
				for (size_t j = 0; j < 2; ++j)
					s.d.at(i, j) = rows[i]->comp[j];
			return s;
		}
		const LambdaMatrix<F>& prev = slices_[r - 3].d; // d_{r-2}
		s.d = LambdaMatrix<F>(r + 1, r, alg_.zero_element());
		for (size_t i = 0; i + 2 < r + 1; ++i)
			for (size_t j = 0; j + 2 < r; ++j)
				s.d.at(i, j) = prev.at(i, j);
		if (r % 2 == 1)
		{
			size_t t = (r + 1) / 2;
			Elem ct = f.pow(seed_.c, uint64_t(t - 2));
			s.d.at(r - 3, r - 2) = alg_.scale(ct, seed_.rho[0]);
			s.d.at(r - 2, r - 2) = alg_.scale(ct, seed_.rho[1]);
			s.d.at(r - 1, r - 2) = seed_.rho[2];
			s.d.at(r - 1, r - 1) = alg_.gen_x();
			s.d.at(r, r - 2) = seed_.rho[3];
			s.d.at(r, r - 1) = alg_.gen_y();
		}
		else
		{
			size_t t = r / 2;
			Elem ct = f.pow(seed_.c, uint64_t(t - 1));
			s.d.at(r - 2, r - 2) = alg_.scale(ct, seed_.sigma.comp[0]);
			s.d.at(r - 2, r - 1) = alg_.scale(ct, seed_.sigma.comp[1]);
			s.d.at(r - 1, r - 2) = seed_.psi.comp[0];
			s.d.at(r - 1, r - 1) = seed_.psi.comp[1];
			s.d.at(r, r - 2) = seed_.theta.comp[0];
			s.d.at(r, r - 1) = seed_.theta.comp[1];
		}
		return s;
	}

	const FiniteDimAlgebra<F>& alg_;
	SeedData<F> seed_;
	std::vector<ResolutionSlice<F>> slices_;
	std::map<size_t, std::unique_ptr<RowFactorSolver<F>>> solvers_;
	std::map<std::pair<size_t, size_t>, std::vector<LambdaMatrix<F>>> lifts_;
	std::map<std::tuple<size_t, size_t, size_t>,
	         std::vector<std::vector<Elem>>>
	    blocks_;
};

/* Builds d_r alone (recomputing lower degrees as needed). */
template <class F>
LambdaMatrix<F> build_d(const FiniteDimAlgebra<F>& alg, const SeedData<F>& seed,
                        size_t r)
{
	Resolution<F> res(alg, seed, r);
	return res.d(r);
}

inline size_t expected_image_dim(size_t n, size_t r)
{
	return r % 2 == 0 ? (r / 2) * n + 1 : ((r + 1) / 2) * n - 1;
}

/* d_{r+1} * d_r = 0 for all built degrees, exact entries. */
template <class F> CheckList verify_complex(Resolution<F>& res)
{
	const auto& alg = res.algebra();
	CheckList out;
	for (size_t r = 1; r + 1 <= res.max_degree(); ++r)
	{
		auto prod = matrix_mul(alg, res.d(r + 1), res.d(r));
		std::string bad;
		for (size_t i = 0; i < prod.rows; ++i)
			for (size_t j = 0; j < prod.cols; ++j)
				if (!alg.is_zero(prod.at(i, j)))
					bad += " (" + std::to_string(i) + "," +
					       std::to_string(j) + ")";
		out.add("d_" + std::to_string(r + 1) + " d_" + std::to_string(r) +
		            " = 0",
		        bad.empty(), "zero matrix",
		        bad.empty() ? "zero matrix" : "nonzero at" + bad);
	}
	return out;
}

/*
 * Image dimensions match tN+1 / tN-1 and equal the kernel dimension of the
 * next map down, certifying exactness degree by degree.
 */
template <class F> CheckList verify_exactness(Resolution<F>& res)
{
	const auto& alg = res.algebra();
	size_t n = alg.dim();
	CheckList out;
	for (size_t r = 1; r <= res.max_degree(); ++r)
	{
		std::vector<ModuleVector<F>> rows;
		for (size_t i = 0; i <= r; ++i)
			rows.push_back(res.row(r, i));
		auto span = left_span(alg, rows, r);
		size_t want = expected_image_dim(n, r);
		res.slice(r).verified_image_dim = span.dim();
		out.add("image dimension of d_" + std::to_string(r),
		        span.dim() == want, std::to_string(want),
		        std::to_string(span.dim()));
		if (r >= 2)
		{
			// kernel of u -> u d_{r-1} on Lambda^r
			size_t kdim = r * n - res.row_solver(r - 1).domain_rank();
			bool rows_in_kernel = true;
			for (const auto& u : rows)
				if (!module_is_zero(alg,
				                    row_times_matrix(alg, u, res.d(r - 1))))
					rows_in_kernel = false;
			out.add("image of d_" + std::to_string(r) +
			            " equals kernel of d_" + std::to_string(r - 1),
			        kdim == span.dim() && rows_in_kernel,
			        std::to_string(span.dim()), std::to_string(kdim),
			        rows_in_kernel ? "" : "a generator row leaves the kernel");
		}
	}
	return out;
}

/*
 * Syzygy oracle independent of the closed-form differentials: kernel of
 * (a_1..a_s) -> sum a_i g_i, reduced to a minimal generating set (a lift of
 * a basis of K/JK, greedy over the deterministic kernel basis).
 */
template <class F>
std::vector<ModuleVector<F>> generic_syzygy(const FiniteDimAlgebra<F>& alg,
                                            const std::vector<ModuleVector<F>>& gens)
{
	size_t s = gens.size();
	size_t r = gens.empty() ? 0 : gens[0].r();
	LambdaMatrix<F> d(s, r, alg.zero_element());
	for (size_t i = 0; i < s; ++i)
		for (size_t j = 0; j < r; ++j)
			d.at(i, j) = gens[i].comp[j];
	auto kernel = kernel_of_row_map(alg, d);
	std::vector<std::vector<typename F::Elem>> flat;
	for (const auto& v : kernel)
		flat.push_back(module_flatten(v));
	auto space = submodule_radical(alg, flat, s);
	std::vector<ModuleVector<F>> minimal;
	for (const auto& v : kernel)
		if (space.insert(module_flatten(v)))
			minimal.push_back(v);
	return minimal;
}

/*
 * The rows of d_r and the oracle's minimal generators for the syzygies of
 * d_{r-1} must generate the same submodule with the same generator count.
 */
template <class F> CheckList compare_with_oracle(Resolution<F>& res, size_t r)
{
	const auto& alg = res.algebra();
	if (r < 2)
		throw std::invalid_argument("oracle comparison needs degree >= 2");
	CheckList out;
	std::vector<ModuleVector<F>> prev_rows;
	for (size_t i = 0; i + 1 <= r; ++i)
		prev_rows.push_back(res.row(r - 1, i));
	auto oracle = generic_syzygy(alg, prev_rows);
	out.add("oracle minimal generator count at degree " + std::to_string(r),
	        oracle.size() == r + 1, std::to_string(r + 1),
	        std::to_string(oracle.size()));
	std::vector<ModuleVector<F>> rows;
	for (size_t i = 0; i <= r; ++i)
		rows.push_back(res.row(r, i));
	auto a = left_span(alg, rows, r);
	auto b = left_span(alg, oracle, r);
	out.add("oracle submodule matches d_" + std::to_string(r) +
	            " row submodule",
	        a.same_space(b), std::to_string(a.dim()), std::to_string(b.dim()));
	return out;
}

} // namespace syzlab
