#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "balnum/cyclotomic.hpp"
#include "balnum/factorize.hpp"
#include "balnum/residue.hpp"

namespace balnum {

enum class RowStatus { Complete, PartialFactorization };

struct ConstructedPrime {
	mpz_class p;
	PrimitivePrimeClass class_mod_nr;  // residue of p mod nr
	WieferichClass classification;
};

// One (n, r) record of the X'/Y' gcd construction. All gcds are over
// rational integers against the normalized cyclotomic part.
struct CensusRow {
	std::uint64_t n = 0;
	std::uint64_t r = 0;
	std::uint64_t nr = 0;
	mpz_class phi_nr;            // cyclotomic part of B_nr
	Factorization b_nr_factorization;
	mpz_class x_nr, y_nr;        // square-free / powerful split (Complete only)
	mpz_class x_prime, y_prime;  // gcds with phi_nr (Complete only)
	bool in_T = false;           // X'_nr > nr
	bool dichotomy_holds = false;  // X' == phi_nr or Y' == phi_nr (logged)
	std::vector<ConstructedPrime> constructed_primes;
	RowStatus status = RowStatus::PartialFactorization;
};

bool is_squarefree_u64(std::uint64_t n);

// Computes one census row; n must be square-free and > 1. When the
// factorization of B_nr completes under budget the row carries the split,
// both gcds, and the verified identity X'*Y' = phi_nr.
CensusRow census_row(std::uint64_t n, std::uint64_t r, const FactorBudget& budget,
                     FactorCache* cache = nullptr);

struct CertifiedPrime {
	mpz_class p;
	std::uint64_t n;  // the row it came from
	std::uint64_t nr;
	PrimitivePrimeClass class_mod_nr;
	mpz_class x_prime;  // X'_nr of the source row
};

struct ConstructionResult {
	std::vector<CertifiedPrime> primes;
	std::vector<mpz_class> distinctness_collisions;  // loud falsification candidates
	std::uint64_t incomplete_rows = 0;
	std::vector<CensusRow> rows;
};

// The constructive step: for each square-free 1 < n <= n_max with a complete
// row and in_T, certifies every prime p | X'_nr with p not dividing nr:
// balancing non-Wieferich, nr | p - (8/p), congruence class recorded.
ConstructionResult construct_primes(std::uint64_t n_max, std::uint64_t r,
                                    const FactorBudget& budget,
                                    FactorCache* cache = nullptr);

struct DensityReport {
	std::uint64_t x = 0;
	std::uint64_t r = 0;
	std::uint64_t total_rows = 0;
	std::uint64_t in_T = 0;
	std::uint64_t not_in_T = 0;
	std::uint64_t undetermined = 0;  // incomplete factorizations
	std::uint64_t in_R = 0;          // phi(nr) > (2 c(r)/3) nr, exact comparison
};

DensityReport t_density(std::uint64_t x, std::uint64_t r, const FactorBudget& budget,
                        FactorCache* cache = nullptr);

struct RationalInterval {
	mpq_class lo, hi;
	bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
};

// Truncated Euler product for c(r) = prod_p (1 - gcd(p, r)/p^2) with a
// rigorous rational tail enclosure; the returned interval contains c(r).
RationalInterval c_of_r(std::uint64_t r, std::uint64_t prime_cutoff = 10000);

struct ResidualPoint {
	std::uint64_t t;
	double s;         // S(t) = sum_{n<=t} phi(nr)/(nr), compensated summation
	double residual_lo, residual_hi;  // (S(t) - c(r) t)/log t over the c(r) interval
};

struct ResidualReport {
	std::uint64_t x = 0;
	std::uint64_t r = 0;
	RationalInterval c_r;
	std::vector<ResidualPoint> points;
	double max_abs_residual = 0.0;
};

// Partial sums of phi(nr)/(nr) at power-of-ten checkpoints up to x.
ResidualReport phi_sum_residual(std::uint64_t x, std::uint64_t r);

bool tau_membership(const mpz_class& n, std::uint64_t M, const FactorBudget& budget,
                    FactorCache* cache = nullptr);
mpq_class delta_M(std::uint64_t M);

struct L9Point {
	std::uint64_t n;
	mpq_class ratio;  // X'_nr / nr
};

struct L9Report {
	std::uint64_t M = 0, r = 0;
	std::vector<L9Point> points;       // complete rows with n in tau_M
	std::uint64_t incomplete_rows = 0;
	std::uint64_t last_failure = 0;    // largest n with ratio <= 1 (0 if none)
	bool eventually_exceeds = true;    // ratio > 1 for all n past last_failure
};

L9Report verify_l9_trend(std::uint64_t M, std::uint64_t r, std::uint64_t n_cap,
                         const FactorBudget& budget, FactorCache* cache = nullptr);

struct Theorem41Report {
	std::uint64_t n = 0, r = 0;
	mpz_class product;          // X' * Y'
	mpz_class bound_full;       // B_{phi(r)}^{2 phi(n)}
	bool product_exceeds = false;
	mpq_class eps;
	mpz_class x_prime;
	// X' > B_{phi(r)}^{2(phi(n)-eps)}, compared exactly by clearing the
	// rational exponent: X'^v vs B^{2(v phi(n) - u)} for eps = u/v.
	bool x_prime_exceeds = false;
};

// Ordered-pair outcomes for the Theorem's inequalities; purely observational.
Theorem41Report verify_theorem41_ratio(std::uint64_t n, std::uint64_t r,
                                       const mpq_class& eps, const FactorBudget& budget,
                                       FactorCache* cache = nullptr);

// log Y_nr / log B_nr for a complete row; the empirical exponent of the
// powerful part. Returns 0 when Y_nr = 1.
double measure_powerful_part(const CensusRow& row);

struct GrowthPoint {
	mpz_class x_checkpoint;
	std::uint64_t certified_count;
};

struct LowerBoundReport {
	std::uint64_t r = 0;
	std::vector<GrowthPoint> points;  // counts of certified primes with X'_nr <= x
	bool monotone = true;
	bool congruences_ok = true;
};

// Counts certified primes from rows with X'_nr <= x at doubling checkpoints.
LowerBoundReport lower_bound_census(const mpz_class& x, std::uint64_t r,
                                    std::uint64_t n_max, const FactorBudget& budget,
                                    FactorCache* cache = nullptr);

const char* to_string(PrimitivePrimeClass c);
const char* to_string(RowStatus s);

}  // namespace balnum
