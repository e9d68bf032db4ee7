#include "balnum/sequence.hpp"

#include <stdexcept>

namespace balnum {

namespace {

// One doubling step: (B_k, C_k) -> (B_2k, C_2k).
//   B_2k = 2*B_k*C_k
//   C_2k = 2*C_k^2 - 1
// One advance step: (B_k, C_k) -> (B_{k+1}, C_{k+1}).
//   B_{k+1} = 3*B_k + C_k
//   C_{k+1} = 8*B_k + 3*C_k
void double_step(mpz_class& b, mpz_class& c) {
	mpz_class b2 = 2 * b * c;
	mpz_class c2 = 2 * c * c - 1;
	b = std::move(b2);
	c = std::move(c2);
}

void advance_step(mpz_class& b, mpz_class& c) {
	mpz_class b1 = 3 * b + c;
	mpz_class c1 = 8 * b + 3 * c;
	b = std::move(b1);
	c = std::move(c1);
}

}  // namespace

BalancingPair balancing_pair(std::uint64_t n) {
	mpz_class b = 0, c = 1;
	if (n == 0) return {n, b, c};
	int bits = 64 - __builtin_clzll(n);
	for (int i = bits - 1; i >= 0; --i) {
		double_step(b, c);
		if ((n >> i) & 1) advance_step(b, c);
	}
	return {n, b, c};
}

mpz_class balancing(std::uint64_t n) { return balancing_pair(n).b; }

mpz_class lucas_balancing(std::uint64_t n) { return balancing_pair(n).c; }

ModularBalancingPair balancing_mod(std::uint64_t n, const mpz_class& m) {
	if (m < 2) throw std::invalid_argument("balancing_mod: modulus must be >= 2");
	mpz_class b = 0, c = 1 % m;
	if (n > 0) {
		int bits = 64 - __builtin_clzll(n);
		mpz_class t;
		for (int i = bits - 1; i >= 0; --i) {
			t = 2 * b * c % m;
			c = (2 * c * c - 1) % m;
			if (c < 0) c += m;
			b = std::move(t);
			if ((n >> i) & 1) {
				t = (3 * b + c) % m;
				c = (8 * b + 3 * c) % m;
				b = std::move(t);
			}
		}
	}
	return {n, m, b, c};
}

std::pair<mpz_class, mpz_class> balancing_mod_z(const mpz_class& n,
                                                const mpz_class& m) {
	if (m < 2) throw std::invalid_argument("balancing_mod_z: modulus must be >= 2");
	if (n < 0) throw std::invalid_argument("balancing_mod_z: index must be >= 0");
	mpz_class b = 0, c = 1 % m;
	if (n > 0) {
		std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
		mpz_class t;
		for (std::size_t i = bits; i-- > 0;) {
			t = 2 * b * c % m;
			c = (2 * c * c - 1) % m;
			if (c < 0) c += m;
			b = std::move(t);
			if (mpz_tstbit(n.get_mpz_t(), i)) {
				t = (3 * b + c) % m;
				c = (8 * b + 3 * c) % m;
				b = std::move(t);
			}
		}
	}
	return {b, c};
}

std::pair<std::uint64_t, std::uint64_t> balancing_mod_u64(std::uint64_t n,
                                                          std::uint64_t m) {
	if (m < 2) throw std::invalid_argument("balancing_mod_u64: modulus must be >= 2");
	using u128 = unsigned __int128;
	auto mulmod = [m](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
		return static_cast<std::uint64_t>(u128(x) * y % m);
	};
	std::uint64_t b = 0, c = 1 % m;
	if (n > 0) {
		int bits = 64 - __builtin_clzll(n);
		for (int i = bits - 1; i >= 0; --i) {
			std::uint64_t b2 = mulmod(2 % m, mulmod(b, c));
			std::uint64_t c2 = mulmod(2 % m, mulmod(c, c));
			c2 = (c2 == 0) ? m - 1 : c2 - 1;
			b = b2;
			c = c2;
			if ((n >> i) & 1) {
				std::uint64_t b1 = (u128(3) * b + c) % m;
				std::uint64_t c1 = (u128(8) * b + u128(3) * c) % m;
				b = b1;
				c = c1;
			}
		}
	}
	return {b, c};
}

bool is_balancing(const mpz_class& N) {
	if (N < 1) throw std::invalid_argument("is_balancing: N must be >= 1");
	mpz_class t = 8 * N * N + 1;
	return mpz_perfect_square_p(t.get_mpz_t()) != 0;
}

GrowthBoundsReport verify_growth_bounds(std::uint64_t n_max) {
	if (n_max < 2) throw std::invalid_argument("verify_growth_bounds: n_max must be >= 2");
	// Iterate the recurrence, tracking (B_{n-1}, C_{n-1}, B_n, C_n).
	mpz_class b_prev = 1, c_prev = 3;  // n-1 = 1
	mpz_class b = 6, c = 17;           // n = 2
	for (std::uint64_t n = 2; n <= n_max; ++n) {
		// alpha^n = C_n + 2*sqrt(2)*B_n > B_n since C_n >= 1 and B_n >= 0.
		// alpha^{n-1} < B_n  <=>  B_n - C_{n-1} > 2*sqrt(2)*B_{n-1}
		//                    <=>  B_n > C_{n-1} and (B_n - C_{n-1})^2 > 8*B_{n-1}^2.
		if (!(b > c_prev)) return {false, n};
		mpz_class d = b - c_prev;
		if (!(d * d > 8 * b_prev * b_prev)) return {false, n};
		mpz_class b_next = 6 * b - b_prev;
		mpz_class c_next = 6 * c - c_prev;
		b_prev = std::move(b);
		c_prev = std::move(c);
		b = std::move(b_next);
		c = std::move(c_next);
	}
	return {true, 0};
}

}  // namespace balnum
