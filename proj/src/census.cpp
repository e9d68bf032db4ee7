#include "balnum/census.hpp"

#include "balnum/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <set>
#include <stdexcept>

namespace balnum {

const char* to_string(PrimitivePrimeClass c) {
	switch (c) {
		case PrimitivePrimeClass::DividesIndex: return "divides-index";
		case PrimitivePrimeClass::PlusOne: return "plus-one";
		case PrimitivePrimeClass::MinusOne: return "minus-one";
		case PrimitivePrimeClass::Other: return "other";
	}
	return "?";
}

const char* to_string(RowStatus s) {
	return s == RowStatus::Complete ? "complete" : "partial";
}

bool is_squarefree_u64(std::uint64_t n) {
	if (n == 0) return false;
	for (std::uint64_t p = 2; p * p <= n; ++p) {
		if (n % p) continue;
		n /= p;
		if (n % p == 0) return false;
	}
	return true;
}

namespace {

// B_m factored through its cyclotomic parts: each part is much smaller than
// B_m, so the budget goes a lot further. Incomplete parts leave the row
// incomplete with their unfactored cofactors multiplied together.
Factorization factor_balancing(std::uint64_t m, const FactorBudget& budget,
                               FactorCache* cache) {
	Factorization result;
	result.value = balancing(m);
	std::map<mpz_class, unsigned> merged;
	mpz_class cofactor = 1;
	for (std::uint64_t d : divisors(m)) {
		if (d < 2) continue;
		mpz_class part = balancing_cyclotomic_part(d).value;
		Factorization f = factor(part, budget, cache);
		for (const auto& [p, e] : f.factors) merged[p] += e;
		cofactor *= f.cofactor;
	}
	result.factors.assign(merged.begin(), merged.end());
	result.cofactor = cofactor;
	result.complete = (cofactor == 1);
	if (result.rebuilt() != result.value)
		throw std::logic_error("factor_balancing: parts do not multiply back to B_m");
	return result;
}

PrimitivePrimeClass classify_mod(const mpz_class& p, std::uint64_t m) {
	mpz_class rem = p % m;
	if (rem == 1) return PrimitivePrimeClass::PlusOne;
	if (rem == m - 1) return PrimitivePrimeClass::MinusOne;
	return PrimitivePrimeClass::Other;
}

}  // namespace

CensusRow census_row(std::uint64_t n, std::uint64_t r, const FactorBudget& budget,
                     FactorCache* cache) {
	if (n < 2) throw std::invalid_argument("census_row: n must be > 1");
	if (r < 2) throw std::invalid_argument("census_row: r must be >= 2");
	if (!is_squarefree_u64(n))
		throw std::invalid_argument("census_row: n must be square-free");
	CensusRow row;
	row.n = n;
	row.r = r;
	row.nr = n * r;
	row.phi_nr = balancing_cyclotomic_part(row.nr).value;
	row.b_nr_factorization = factor_balancing(row.nr, budget, cache);
	if (!row.b_nr_factorization.complete) {
		row.status = RowStatus::PartialFactorization;
		return row;
	}
	auto split = squarefree_powerful_split(row.b_nr_factorization);
	row.x_nr = split.x_part;
	row.y_nr = split.y_part;
	mpz_gcd(row.x_prime.get_mpz_t(), row.x_nr.get_mpz_t(), row.phi_nr.get_mpz_t());
	mpz_gcd(row.y_prime.get_mpz_t(), row.y_nr.get_mpz_t(), row.phi_nr.get_mpz_t());
	if (row.x_prime * row.y_prime != row.phi_nr)
		throw std::logic_error("census_row: X'*Y' != Phi_nr");
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), row.x_prime.get_mpz_t(), row.y_prime.get_mpz_t());
	if (g != 1) throw std::logic_error("census_row: gcd(X', Y') != 1");
	row.in_T = row.x_prime > row.nr;
	row.dichotomy_holds = (row.x_prime == row.phi_nr) || (row.y_prime == row.phi_nr);
	row.status = RowStatus::Complete;

	// Constructed primes: prime divisors of X' coprime to nr.
	for (const auto& [p, e] : row.b_nr_factorization.factors) {
		if (e != 1) continue;  // only X_nr primes
		if (mpz_divisible_p(row.x_prime.get_mpz_t(), p.get_mpz_t()) == 0) continue;
		if (mpz_class(row.nr) % p == 0) continue;
		auto rec = balancing_wieferich_test(p);
		mpz_class index = rec.jacobi_sign > 0 ? mpz_class(p - 1) : mpz_class(p + 1);
		if (index % row.nr != 0)
			throw std::logic_error("census_row: nr does not divide p - (8/p)");
		row.constructed_primes.push_back({p, classify_mod(p, row.nr), rec.classification});
	}
	return row;
}

ConstructionResult construct_primes(std::uint64_t n_max, std::uint64_t r,
                                    const FactorBudget& budget, FactorCache* cache) {
	if (r < 2) throw std::invalid_argument("construct_primes: r must be >= 2");
	ConstructionResult result;
	std::set<mpz_class> seen;
	for (std::uint64_t n = 2; n <= n_max; ++n) {
		if (!is_squarefree_u64(n)) continue;
		CensusRow row = census_row(n, r, budget, cache);
		if (row.status != RowStatus::Complete) {
			++result.incomplete_rows;
			result.rows.push_back(std::move(row));
			continue;
		}
		if (row.in_T) {
			for (const auto& cp : row.constructed_primes) {
				if (cp.classification != WieferichClass::BalancingNonWieferich)
					throw std::logic_error("construct_primes: certified prime is Wieferich");
				if (!seen.insert(cp.p).second)
					result.distinctness_collisions.push_back(cp.p);
				result.primes.push_back({cp.p, n, row.nr, cp.class_mod_nr, row.x_prime});
			}
		}
		result.rows.push_back(std::move(row));
	}
	return result;
}

DensityReport t_density(std::uint64_t x, std::uint64_t r, const FactorBudget& budget,
                        FactorCache* cache) {
	if (x < 2) throw std::invalid_argument("t_density: x must be >= 2");
	DensityReport report;
	report.x = x;
	report.r = r;
	RationalInterval cr = c_of_r(r);
	// Membership in R uses the exact comparison phi(nr) > (2 c(r)/3) nr with
	// the upper end of the c(r) enclosure (conservative: undercounts R).
	mpq_class two_thirds_cr_hi = 2 * cr.hi / 3;
	for (std::uint64_t n = 2; n <= x; ++n) {
		if (!is_squarefree_u64(n)) continue;
		++report.total_rows;
		CensusRow row = census_row(n, r, budget, cache);
		if (row.status != RowStatus::Complete)
			++report.undetermined;
		else if (row.in_T)
			++report.in_T;
		else
			++report.not_in_T;
		if (mpq_class(euler_phi(n * r)) > two_thirds_cr_hi * mpq_class(n * r))
			++report.in_R;
	}
	return report;
}

RationalInterval c_of_r(std::uint64_t r, std::uint64_t prime_cutoff) {
	if (r < 1) throw std::invalid_argument("c_of_r: r must be >= 1");
	// Past the cutoff every factor is the generic (1 - 1/p^2), provided the
	// cutoff clears the primes of r; those tail factors multiply to
	// (1/zeta(2)) / prod_{p <= P} (1 - 1/p^2), and zeta(2) is enclosed by
	// partial sums: sum_{n <= N} 1/n^2 + (1/(N+1), 1/N).
	if (prime_cutoff < r) prime_cutoff = r;
	if (prime_cutoff < 2) prime_cutoff = 2;
	mpq_class product = 1, generic_product = 1;
	for (std::uint64_t p : primes_in(2, prime_cutoff)) {
		std::uint64_t g = std::gcd(p, r);
		mpz_class p2 = mpz_class(p) * p;
		product *= mpq_class(p2 - g, p2);
		generic_product *= mpq_class(p2 - 1, p2);
	}
	constexpr unsigned long kZetaTerms = 2000;
	mpq_class zeta_partial = 0;
	for (unsigned long n = 1; n <= kZetaTerms; ++n)
		zeta_partial += mpq_class(1, mpz_class(n) * n);
	mpq_class zeta_lo = zeta_partial + mpq_class(1, kZetaTerms + 1);
	mpq_class zeta_hi = zeta_partial + mpq_class(1, kZetaTerms);
	mpq_class tail_lo = 1 / (zeta_hi * generic_product);
	mpq_class tail_hi = 1 / (zeta_lo * generic_product);
	if (tail_hi > 1) tail_hi = 1;
	RationalInterval interval{product * tail_lo, product * tail_hi};
	interval.lo.canonicalize();
	interval.hi.canonicalize();
	return interval;
}

ResidualReport phi_sum_residual(std::uint64_t x, std::uint64_t r) {
	if (x < 2) throw std::invalid_argument("phi_sum_residual: x must be >= 2");
	ResidualReport report;
	report.x = x;
	report.r = r;
	report.c_r = c_of_r(r);
	double cr_lo = report.c_r.lo.get_d();
	double cr_hi = report.c_r.hi.get_d();

	// phi(nr)/(nr) = prod_{p | nr} (1 - 1/p); the prime set of nr is the
	// primes of n joined with those of r. Smallest-prime-factor sieve over n.
	std::vector<std::uint32_t> spf(x + 1, 0);
	for (std::uint64_t i = 2; i <= x; ++i) {
		if (spf[i]) continue;
		for (std::uint64_t j = i; j <= x; j += i)
			if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
	}
	std::vector<std::uint64_t> r_primes;
	{
		std::uint64_t rr = r;
		for (std::uint64_t p = 2; p * p <= rr; ++p)
			if (rr % p == 0) {
				r_primes.push_back(p);
				while (rr % p == 0) rr /= p;
			}
		if (rr > 1) r_primes.push_back(rr);
	}

	std::vector<std::uint64_t> checkpoints;
	for (std::uint64_t t = 10; t < x; t *= 10) checkpoints.push_back(t);
	checkpoints.push_back(x);
	std::size_t next_cp = 0;

	// Kahan-compensated summation; each term is exact to ~1e-16 relative.
	double sum = 0.0, comp = 0.0;
	for (std::uint64_t n = 1; n <= x; ++n) {
		double term = 1.0;
		std::uint64_t m = n;
		std::uint64_t seen_primes[16];
		int seen_count = 0;
		while (m > 1) {
			std::uint64_t p = spf[m];
			term *= 1.0 - 1.0 / static_cast<double>(p);
			seen_primes[seen_count++] = p;
			while (m % p == 0) m /= p;
		}
		for (std::uint64_t p : r_primes) {
			bool already = false;
			for (int i = 0; i < seen_count; ++i)
				if (seen_primes[i] == p) already = true;
			if (!already) term *= 1.0 - 1.0 / static_cast<double>(p);
		}
		double y = term - comp;
		double t2 = sum + y;
		comp = (t2 - sum) - y;
		sum = t2;
		while (next_cp < checkpoints.size() && n == checkpoints[next_cp]) {
			double t = static_cast<double>(n);
			double lg = std::log(t);
			double res_a = (sum - cr_lo * t) / lg;
			double res_b = (sum - cr_hi * t) / lg;
			ResidualPoint point{n, sum, std::min(res_a, res_b), std::max(res_a, res_b)};
			report.max_abs_residual = std::max(
			    report.max_abs_residual,
			    std::max(std::fabs(point.residual_lo), std::fabs(point.residual_hi)));
			report.points.push_back(point);
			++next_cp;
		}
	}
	return report;
}

bool tau_membership(const mpz_class& n, std::uint64_t M, const FactorBudget& budget,
                    FactorCache* cache) {
	if (n < 2) throw std::invalid_argument("tau_membership: n must be >= 2");
	Factorization f = factor(n, budget, cache);
	if (!f.complete)
		throw IncompleteFactorization("tau_membership: budget exhausted on " + n.get_str());
	for (const auto& [p, e] : f.factors)
		if (e > 1) return false;
	return f.factors.size() == M + 1;
}

mpq_class delta_M(std::uint64_t M) {
	mpq_class product = 1;
	std::uint64_t count = 0;
	for (std::uint64_t p = 2; count < M + 1; ++p) {
		bool prime = p >= 2;
		for (std::uint64_t q = 2; q * q <= p; ++q)
			if (p % q == 0) prime = false;
		if (!prime) continue;
		product *= mpq_class(p - 1, p);
		++count;
	}
	product.canonicalize();
	return product;
}

L9Report verify_l9_trend(std::uint64_t M, std::uint64_t r, std::uint64_t n_cap,
                         const FactorBudget& budget, FactorCache* cache) {
	if (r < 2) throw std::invalid_argument("verify_l9_trend: r must be >= 2");
	L9Report report;
	report.M = M;
	report.r = r;
	for (std::uint64_t n = 2; n <= n_cap; ++n) {
		if (!is_squarefree_u64(n)) continue;
		if (!tau_membership(mpz_class(n), M, budget, cache)) continue;
		CensusRow row = census_row(n, r, budget, cache);
		if (row.status != RowStatus::Complete) {
			++report.incomplete_rows;
			continue;
		}
		mpq_class ratio(row.x_prime, mpz_class(row.nr));
		ratio.canonicalize();
		if (ratio <= 1) report.last_failure = n;
		report.points.push_back({n, ratio});
	}
	for (const auto& point : report.points)
		if (point.n > report.last_failure && point.ratio <= 1)
			report.eventually_exceeds = false;
	return report;
}

Theorem41Report verify_theorem41_ratio(std::uint64_t n, std::uint64_t r,
                                       const mpq_class& eps, const FactorBudget& budget,
                                       FactorCache* cache) {
	if (eps <= 0) throw std::invalid_argument("verify_theorem41_ratio: eps must be > 0");
	CensusRow row = census_row(n, r, budget, cache);
	if (row.status != RowStatus::Complete)
		throw IncompleteFactorization("verify_theorem41_ratio: row incomplete");
	Theorem41Report report;
	report.n = n;
	report.r = r;
	report.eps = eps;
	report.product = row.x_prime * row.y_prime;
	report.x_prime = row.x_prime;
	std::uint64_t phi_n = euler_phi(n), phi_r = euler_phi(r);
	mpz_class base = balancing(phi_r);
	mpz_pow_ui(report.bound_full.get_mpz_t(), base.get_mpz_t(),
	           2 * static_cast<unsigned long>(phi_n));
	report.product_exceeds = report.product > report.bound_full;
	// X' vs B^{2(phi(n)-eps)} with eps = u/v: compare X'^v against
	// B^{2(v*phi(n)-u)}; a non-positive exponent makes the bound <= 1.
	mpz_class u = eps.get_num(), v = eps.get_den();
	mpz_class exponent = 2 * (v * phi_n - u);
	if (exponent <= 0) {
		report.x_prime_exceeds = row.x_prime >= 1;
	} else {
		if (!v.fits_ulong_p() || !exponent.fits_ulong_p())
			throw std::invalid_argument("verify_theorem41_ratio: eps denominator too large");
		mpz_class lhs, rhs;
		mpz_pow_ui(lhs.get_mpz_t(), row.x_prime.get_mpz_t(), v.get_ui());
		mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
		report.x_prime_exceeds = lhs > rhs;
	}
	return report;
}

double measure_powerful_part(const CensusRow& row) {
	if (row.status != RowStatus::Complete)
		throw IncompleteFactorization("measure_powerful_part: row incomplete");
	if (row.y_nr == 1) return 0.0;
	signed long ey, eb;
	double my = mpz_get_d_2exp(&ey, row.y_nr.get_mpz_t());
	double mb = mpz_get_d_2exp(&eb, row.b_nr_factorization.value.get_mpz_t());
	double log_y = std::log(my) + ey * std::log(2.0);
	double log_b = std::log(mb) + eb * std::log(2.0);
	return log_y / log_b;
}

LowerBoundReport lower_bound_census(const mpz_class& x, std::uint64_t r,
                                    std::uint64_t n_max, const FactorBudget& budget,
                                    FactorCache* cache) {
	if (x < 3) throw std::invalid_argument("lower_bound_census: x must be >= 3");
	LowerBoundReport report;
	report.r = r;
	ConstructionResult construction = construct_primes(n_max, r, budget, cache);
	for (const auto& cp : construction.primes) {
		auto rec = balancing_wieferich_test(cp.p);
		mpz_class index = rec.jacobi_sign > 0 ? mpz_class(cp.p - 1) : mpz_class(cp.p + 1);
		if (rec.classification != WieferichClass::BalancingNonWieferich ||
		    index % cp.nr != 0 || mpz_class(cp.nr) % cp.p == 0)
			report.congruences_ok = false;
	}
	std::uint64_t prev = 0;
	for (mpz_class cp_x = 3; cp_x <= x; cp_x *= 2) {
		std::uint64_t count = 0;
		for (const auto& cp : construction.primes)
			if (cp.x_prime <= cp_x) ++count;
		if (count < prev) report.monotone = false;
		prev = count;
		report.points.push_back({cp_x, count});
	}
	return report;
}

}  // namespace balnum
