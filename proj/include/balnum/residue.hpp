#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <optional>
#include <vector>

namespace balnum {

enum class WieferichClass { BalancingWieferich, BalancingNonWieferich };

struct WieferichRecord {
	std::uint64_t p;
	int jacobi_sign;      // (8/p) in {-1, +1}
	mpz_class residue;    // B_{p-(8/p)} mod p^2, in [0, p^2)
	WieferichClass classification;
};

struct PeriodRecord {
	mpz_class m;
	std::uint64_t l;
};

// Jacobi symbol (a/n) for odd n >= 1. Throws on even n.
int jacobi(std::int64_t a, std::uint64_t n);
int jacobi(const mpz_class& a, const mpz_class& n);

// 2^{p-1} == 1 (mod p^2)? p must be an odd prime (caller's contract).
bool classic_wieferich_test(std::uint64_t p);

// Computes (8/p) and B_{p-(8/p)} mod p^2. Throws if the unconditional
// first-power divisibility B_{p-(8/p)} == 0 (mod p) fails, which would mean
// an arithmetic bug, not a mathematical surprise.
WieferichRecord balancing_wieferich_test(std::uint64_t p);

struct WieferichRecordZ {
	mpz_class p;
	int jacobi_sign;
	mpz_class residue;
	WieferichClass classification;
};

// Arbitrary-precision variant for primes beyond word size.
WieferichRecordZ balancing_wieferich_test(const mpz_class& p);

// Least l <= cap with B_l == 0 and B_{l+1} == 1 (mod m), by iterating the
// recurrence mod m. nullopt if no period <= cap.
std::optional<PeriodRecord> period(const mpz_class& m, std::uint64_t cap);

// Segmented sieve of [lo, hi]; calls f(p) for each prime in ascending order.
void prime_range(std::uint64_t lo, std::uint64_t hi,
                 const std::function<void(std::uint64_t)>& f);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace balnum
