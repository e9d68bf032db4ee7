#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <utility>

namespace balnum {

// Balancing sequence B_n (B_0=0, B_1=1, B_{n+1}=6B_n-B_{n-1}) together with
// its companion C_n (C_0=1, C_1=3, same recurrence). The pair carries
// alpha^n = C_n + 2*sqrt(2)*B_n exactly, with C_n^2 - 8*B_n^2 = 1.
struct BalancingPair {
	std::uint64_t n;
	mpz_class b;
	mpz_class c;
};

struct ModularBalancingPair {
	std::uint64_t n;
	mpz_class modulus;
	mpz_class b_mod;
	mpz_class c_mod;
};

// Exact (B_n, C_n) in O(log n) big-integer multiplications.
BalancingPair balancing_pair(std::uint64_t n);

mpz_class balancing(std::uint64_t n);
mpz_class lucas_balancing(std::uint64_t n);

// (B_n mod m, C_n mod m), m >= 2, O(log n) modular multiplications.
ModularBalancingPair balancing_mod(std::uint64_t n, const mpz_class& m);

// Same with an arbitrary-precision index (needed when the index is p +- 1
// for a multi-word prime p).
std::pair<mpz_class, mpz_class> balancing_mod_z(const mpz_class& n,
                                                const mpz_class& m);

// Fast kernel for word-sized moduli m < 2^32 squared, i.e. m <= ~4.2e9 is NOT
// supported; requirement is m < 2^32 so products fit in __int128 comfortably.
// Used by the Wieferich searches where m = p^2 with p < 2^31.
std::pair<std::uint64_t, std::uint64_t> balancing_mod_u64(std::uint64_t n,
                                                          std::uint64_t m);

// true iff 8*N^2+1 is a perfect square, N >= 1.
bool is_balancing(const mpz_class& N);

struct GrowthBoundsReport {
	bool ok;
	std::uint64_t first_violation;  // meaningful only when !ok
};

// Checks alpha^{n-1} < B_n < alpha^n for all 2 <= n <= n_max with exact
// integer arithmetic: the upper bound is C_n > 0, the lower bound reduces to
// B_n > C_{n-1} and (B_n - C_{n-1})^2 > 8*B_{n-1}^2.
GrowthBoundsReport verify_growth_bounds(std::uint64_t n_max);

}  // namespace balnum
