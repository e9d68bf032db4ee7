#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace balnum {

struct IncompleteFactorization : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Factorization {
	mpz_class value;
	std::vector<std::pair<mpz_class, unsigned>> factors;  // sorted by prime
	mpz_class cofactor = 1;   // unfactored remainder
	bool complete = false;    // cofactor == 1

	mpz_class rebuilt() const;  // cofactor * prod p^e
};

struct FactorBudget {
	std::uint64_t trial_bound = 100000;
	std::uint64_t rho_iterations = 2000000;  // per composite, across c values
};

// Persistent line-oriented factor cache. Entries are re-verified on load
// (primality of each listed prime, product identity); corrupt or failing
// lines are dropped. Thread-safe: concurrent lookups, serialized appends.
class FactorCache {
public:
	FactorCache() = default;
	explicit FactorCache(std::string path);  // loads existing entries

	bool lookup(const mpz_class& n, Factorization& out) const;
	void store(const Factorization& f);  // appends to the backing file if any

	std::size_t size() const;
	std::size_t rejected_on_load() const { return rejected_; }

private:
	mutable std::mutex mutex_;
	std::map<mpz_class, Factorization> entries_;
	std::string path_;
	std::size_t rejected_ = 0;
};

// Trial division then deterministic Brent-rho under budget. Incompleteness is
// a state (complete=false, cofactor>1), never an error.
Factorization factor(const mpz_class& n, const FactorBudget& budget = {},
                     FactorCache* cache = nullptr);

bool is_prime(const mpz_class& n);

struct SquarefreePowerfulSplit {
	mpz_class value;
	mpz_class x_part;  // product of primes with exponent 1
	mpz_class y_part;  // product of prime powers with exponent >= 2
};

// Requires f.complete; an undetected square factor would corrupt x_part.
SquarefreePowerfulSplit squarefree_powerful_split(const Factorization& f);

struct WitnessReport {
	std::uint64_t n;
	std::vector<mpz_class> witnesses;       // odd primes of X_n, all non-Wieferich
	std::vector<mpz_class> falsifications;  // Wieferich hits (re-verified)
	bool ok() const { return falsifications.empty(); }
};

// For each odd prime p | x_part(B_n), checks B_{p-(8/p)} != 0 (mod p^2).
WitnessReport non_wieferich_witness_check(std::uint64_t n, const Factorization& f);

// rad(abc) for coprime a + b = c. Throws IncompleteFactorization when the
// budget runs out before the radical is known.
mpz_class radical(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                  const FactorBudget& budget = {}, FactorCache* cache = nullptr);

// log c / log rad(abc).
double abc_quality(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                   const FactorBudget& budget = {}, FactorCache* cache = nullptr);

}  // namespace balnum
