#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <vector>

#include "balnum/factorize.hpp"

namespace balnum {

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

// Sieved phi/mu/smallest-prime-factor tables, shared read-only.
struct TotientTable {
	explicit TotientTable(std::uint32_t limit);
	std::uint32_t limit;
	std::vector<std::uint32_t> phi;
	std::vector<std::int8_t> mu;
	std::vector<std::uint32_t> spf;
};

// Exact Phi_m(b) for |b| > 1 via the X^m - 1 recursion over proper divisors.
mpz_class cyclotomic_poly_eval(std::uint64_t m, const mpz_class& b);

// The rational-integer cyclotomic part of B_m: prod_{d|m} B_d^{mu(m/d)},
// always a positive integer dividing B_m. Equals the field value
// Phi_m(alpha/beta) up to a unit power of alpha.
struct CyclotomicPart {
	std::uint64_t m;
	mpz_class value;
};
CyclotomicPart balancing_cyclotomic_part(std::uint64_t m);

struct PropRmReport {
	bool ok = true;
	std::uint64_t m = 0, b = 0;   // first violating pair, when !ok
	mpz_class bad_prime;
	std::uint64_t skipped_incomplete = 0;  // (m, b) pairs not fully factored
};

// Brute-force check of: p | Phi_m(b) implies p | m or p == 1 (mod m).
PropRmReport verify_prop_rm(std::uint64_t m_max, std::uint64_t b_max,
                            const FactorBudget& budget, FactorCache* cache = nullptr);

enum class PrimitivePrimeClass { DividesIndex, PlusOne, MinusOne, Other };

struct PrimitiveClassification {
	std::uint64_t m;
	std::map<mpz_class, PrimitivePrimeClass> classes;
	bool complete;  // false when the factor budget ran out
};

// Factors the cyclotomic part of B_m and classifies each prime divisor p by
// its residue mod m; for p not dividing m also checks m | p - (8/p).
PrimitiveClassification classify_primitive_primes(std::uint64_t m,
                                                  const FactorBudget& budget,
                                                  FactorCache* cache = nullptr);

struct LemmaRgReport {
	mpq_class min_ratio;          // min over m of |Phi_m(b)| / |b|^phi(m)
	std::uint64_t argmin = 0;
};

// Empirical lower bound for the constant in |Phi_m(b)| >= C |b|^phi(m),
// as an exact rational over 2 <= m <= m_max.
LemmaRgReport verify_lemma_rg(std::uint64_t m_max, const mpz_class& b);

}  // namespace balnum
