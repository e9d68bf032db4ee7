#include <doctest.h>

#include "balnum/sequence.hpp"

#include <random>
#include <vector>

using namespace balnum;

namespace {

// Naive recurrence oracle: B_0..B_n by direct iteration.
std::vector<mpz_class> naive_balancing(std::uint64_t n_max) {
	std::vector<mpz_class> b(n_max + 1);
	if (n_max >= 1) b[1] = 1;
	for (std::uint64_t n = 2; n <= n_max; ++n) b[n] = 6 * b[n - 1] - b[n - 2];
	return b;
}

std::vector<mpz_class> naive_lucas_balancing(std::uint64_t n_max) {
	std::vector<mpz_class> c(n_max + 1);
	c[0] = 1;
	if (n_max >= 1) c[1] = 3;
	for (std::uint64_t n = 2; n <= n_max; ++n) c[n] = 6 * c[n - 1] - c[n - 2];
	return c;
}

std::uint64_t naive_balancing_mod(std::uint64_t n, std::uint64_t m) {
	std::uint64_t prev = 0, cur = 1 % m;
	if (n == 0) return 0;
	for (std::uint64_t i = 1; i < n; ++i) {
		// 6*cur <= 6e9 fits in u64 for m <= 1e9
		std::uint64_t next = (6 * cur % m + m - prev) % m;
		prev = cur;
		cur = next;
	}
	return cur;
}

}  // namespace

TEST_CASE("balancing base values") {
	CHECK(balancing(0) == 0);
	CHECK(balancing(1) == 1);
	CHECK(balancing(4) == 204);
	CHECK(balancing(6) == 6930);
	CHECK(lucas_balancing(0) == 1);
	CHECK(lucas_balancing(2) == 17);
	CHECK(lucas_balancing(6) == 19601);
}

TEST_CASE("fast doubling agrees with the naive recurrence") {
	auto oracle = naive_balancing(5000);
	for (std::uint64_t n = 0; n <= 5000; ++n)
		REQUIRE(balancing(n) == oracle[n]);
}

TEST_CASE("pell identity c^2 - 8 b^2 = 1") {
	auto b = naive_balancing(2000);
	auto c = naive_lucas_balancing(2000);
	for (std::uint64_t n = 0; n <= 2000; ++n)
		REQUIRE(c[n] * c[n] - 8 * b[n] * b[n] == 1);
}

TEST_CASE("index addition formulas") {
	auto b = naive_balancing(400);
	auto c = naive_lucas_balancing(400);
	for (std::uint64_t m = 0; m <= 200; ++m)
		for (std::uint64_t n = 0; n <= 200; ++n) {
			REQUIRE(b[m + n] == b[m] * c[n] + c[m] * b[n]);
			REQUIRE(c[m + n] == c[m] * c[n] + 8 * b[m] * b[n]);
		}
}

TEST_CASE("divisibility: m | n implies B_m | B_n") {
	auto b = naive_balancing(300);
	for (std::uint64_t m = 1; m <= 300; ++m)
		for (std::uint64_t n = m; n <= 300; n += m)
			REQUIRE(b[n] % b[m] == 0);
}

TEST_CASE("balancing_mod examples") {
	auto r = balancing_mod(6, 7);
	CHECK(r.b_mod == 0);
	CHECK(r.c_mod == 1);
	auto z = balancing_mod(0, 97);
	CHECK(z.b_mod == 0);
	CHECK(z.c_mod == 1);
	// 13 is balancing Wieferich with (8/13) = -1, so 169 | B_14.
	auto w = balancing_mod(14, 169);
	CHECK(w.b_mod == 0);
}

TEST_CASE("balancing_mod vs naive mod iteration, random pairs") {
	std::mt19937_64 rng(12345);
	for (int i = 0; i < 1000; ++i) {
		std::uint64_t n = rng() % 1000000;
		std::uint64_t m = 2 + rng() % (1000000000 - 2);
		auto fast = balancing_mod(n, m);
		REQUIRE(fast.b_mod == naive_balancing_mod(n, m));
	}
}

TEST_CASE("balancing_mod_u64 matches the mpz path") {
	std::mt19937_64 rng(777);
	for (int i = 0; i < 200; ++i) {
		std::uint64_t n = rng() % 10000000;
		std::uint64_t m = 2 + rng() % ((std::uint64_t(1) << 62) - 2);
		auto fast = balancing_mod_u64(n, m);
		auto ref = balancing_mod(n, m);
		REQUIRE(mpz_class(static_cast<unsigned long>(fast.first)) == ref.b_mod);
		REQUIRE(mpz_class(static_cast<unsigned long>(fast.second)) == ref.c_mod);
	}
}

TEST_CASE("balancing_mod_z big index matches u64 index") {
	mpz_class m("987654321987");
	for (std::uint64_t n : {std::uint64_t(0), std::uint64_t(1), std::uint64_t(12345),
	                        std::uint64_t(999999)}) {
		auto a = balancing_mod(n, m);
		auto b = balancing_mod_z(mpz_class(static_cast<unsigned long>(n)), m);
		REQUIRE(a.b_mod == b.first);
		REQUIRE(a.c_mod == b.second);
	}
}

TEST_CASE("is_balancing") {
	CHECK(is_balancing(6));
	CHECK(is_balancing(35));
	CHECK_FALSE(is_balancing(5));
	CHECK(is_balancing(1));
	CHECK_FALSE(is_balancing(2));
	CHECK_THROWS_AS(is_balancing(0), std::invalid_argument);
}

TEST_CASE("growth bounds hold exactly") {
	CHECK(verify_growth_bounds(2).ok);
	CHECK(verify_growth_bounds(500).ok);
	CHECK_THROWS_AS(verify_growth_bounds(1), std::invalid_argument);
}
