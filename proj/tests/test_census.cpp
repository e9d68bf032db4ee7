#include <doctest.h>

#include "balnum/census.hpp"
#include "balnum/report.hpp"

#include <sstream>

using namespace balnum;

TEST_CASE("census row (2, 2), the hand-verified example") {
	auto row = census_row(2, 2, FactorBudget{});
	REQUIRE(row.status == RowStatus::Complete);
	CHECK(row.nr == 4);
	CHECK(row.phi_nr == 34);
	CHECK(row.b_nr_factorization.value == 204);
	CHECK(row.x_nr == 51);
	CHECK(row.y_nr == 4);
	CHECK(row.x_prime == 17);
	CHECK(row.y_prime == 2);
	CHECK(row.in_T);
	CHECK_FALSE(row.dichotomy_holds);  // neither gcd equals 34
	REQUIRE(row.constructed_primes.size() == 1);
	CHECK(row.constructed_primes[0].p == 17);
	CHECK(row.constructed_primes[0].class_mod_nr == PrimitivePrimeClass::PlusOne);
}

TEST_CASE("census row (3, 2)") {
	auto row = census_row(3, 2, FactorBudget{});
	REQUIRE(row.status == RowStatus::Complete);
	CHECK(row.nr == 6);
	CHECK(row.phi_nr == 33);
	CHECK(row.x_nr == 770);
	CHECK(row.y_nr == 9);
	CHECK(row.x_prime == 11);
	CHECK(row.y_prime == 3);
	CHECK(row.in_T);
	REQUIRE(row.constructed_primes.size() == 1);
	CHECK(row.constructed_primes[0].p == 11);
	CHECK(row.constructed_primes[0].class_mod_nr == PrimitivePrimeClass::MinusOne);
}

TEST_CASE("census rejects non-square-free n") {
	CHECK_THROWS_AS(census_row(4, 2, FactorBudget{}), std::invalid_argument);
	CHECK_THROWS_AS(census_row(1, 2, FactorBudget{}), std::invalid_argument);
}

TEST_CASE("constructed primes are pairwise distinct, r = 2, n <= 10") {
	auto result = construct_primes(10, 2, FactorBudget{});
	CHECK(result.distinctness_collisions.empty());
	CHECK(!result.primes.empty());
	for (const auto& cp : result.primes) {
		CHECK(mpz_class(cp.nr) % cp.p != 0);
	}
}

TEST_CASE("c(r) intervals") {
	auto c1 = c_of_r(1);
	// 6/pi^2 = 0.6079271...
	mpq_class lo(60792, 100000), hi(60793, 100000);
	CHECK(c1.lo < hi);
	CHECK(c1.hi > lo);
	CHECK(c1.lo < c1.hi);

	auto c2 = c_of_r(2);
	// 4/pi^2 = 0.4052847...
	CHECK(c2.lo.get_d() < 0.405285);
	CHECK(c2.hi.get_d() > 0.405284);

	for (std::uint64_t r = 1; r <= 100; ++r) CHECK(c_of_r(r, 1000).lo > 0);
}

TEST_CASE("phi sum residual") {
	auto rep = phi_sum_residual(10000, 2);
	CHECK(rep.points.size() == 4);  // 10, 100, 1000, 10000
	CHECK(rep.max_abs_residual < 10.0);
	// first term: S covers n=1 giving phi(r)/r = 1/2 for r=2
	auto tiny = phi_sum_residual(2, 2);
	REQUIRE(!tiny.points.empty());

	// r = 1 reduces to the classical sum ~ (6/pi^2) x
	auto classical = phi_sum_residual(100000, 1);
	double s = classical.points.back().s;
	CHECK(s / 100000.0 == doctest::Approx(0.607927).epsilon(1e-4));
}

TEST_CASE("tau membership and delta") {
	CHECK(tau_membership(6, 1, FactorBudget{}));
	CHECK_FALSE(tau_membership(12, 1, FactorBudget{}));
	CHECK_FALSE(tau_membership(6, 0, FactorBudget{}));
	CHECK(tau_membership(7, 0, FactorBudget{}));
	CHECK(delta_M(1) == mpq_class(1, 3));
	CHECK(delta_M(0) == mpq_class(1, 2));
}

TEST_CASE("t_density partition sanity") {
	auto rep = t_density(12, 2, FactorBudget{});
	CHECK(rep.in_T + rep.not_in_T + rep.undetermined == rep.total_rows);
	CHECK(rep.total_rows == 7);  // square-free n in (1, 12]: 2,3,5,6,7,10,11
	CHECK(rep.x == 12);
}

TEST_CASE("l9 trend for primes (M = 0)") {
	auto rep = verify_l9_trend(0, 2, 20, FactorBudget{});
	CHECK(!rep.points.empty());
	CHECK(rep.eventually_exceeds);
	// (n, r) = (2, 2): X'_4 = 17 > 4
	CHECK(rep.points.front().n == 2);
	CHECK(rep.points.front().ratio == mpq_class(17, 4));
}

TEST_CASE("theorem 4.1 ordered comparisons") {
	// (n, r) = (2, 3): X'Y' = Phi_6 = 33 vs B_phi(3)^{2 phi(2)} = B_2^2 = 36
	auto rep = verify_theorem41_ratio(2, 3, mpq_class(1, 2), FactorBudget{});
	CHECK(rep.product == 33);
	CHECK(rep.bound_full == 36);
	CHECK_FALSE(rep.product_exceeds);

	// eps = phi(n) makes the right side 1
	auto trivial = verify_theorem41_ratio(2, 3, mpq_class(1), FactorBudget{});
	CHECK(trivial.x_prime_exceeds);
}

TEST_CASE("powerful part measurement") {
	auto row22 = census_row(2, 2, FactorBudget{});
	CHECK(measure_powerful_part(row22) == doctest::Approx(0.2607).epsilon(1e-3));
	auto row32 = census_row(3, 2, FactorBudget{});
	CHECK(measure_powerful_part(row32) == doctest::Approx(0.2484).epsilon(1e-3));
}

TEST_CASE("lower bound census monotone with valid congruences") {
	auto rep = lower_bound_census(mpz_class(1000000), 2, 12, FactorBudget{});
	CHECK(rep.monotone);
	CHECK(rep.congruences_ok);
	CHECK(!rep.points.empty());
	CHECK(rep.points.back().certified_count > 0);
}

TEST_CASE("census reports are deterministic and carry the schema header") {
	auto result = construct_primes(6, 2, FactorBudget{});
	std::ostringstream a, b;
	write_census_csv(a, result.rows);
	write_census_csv(b, result.rows);
	CHECK(a.str() == b.str());
	CHECK(a.str().find("schema_version=1") != std::string::npos);
	CHECK(a.str().find("17") != std::string::npos);
	std::ostringstream j;
	write_census_json(j, result.rows);
	CHECK(j.str().find("\"schema_version\": \"1\"") != std::string::npos);
}
