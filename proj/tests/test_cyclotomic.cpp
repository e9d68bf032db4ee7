#include <doctest.h>

#include "balnum/cyclotomic.hpp"
#include "balnum/sequence.hpp"

using namespace balnum;

TEST_CASE("divisors") {
	CHECK(divisors(1) == std::vector<std::uint64_t>{1});
	CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
	CHECK(divisors(35) == std::vector<std::uint64_t>{1, 5, 7, 35});
}

TEST_CASE("euler phi and mobius") {
	CHECK(euler_phi(12) == 4);
	CHECK(euler_phi(1) == 1);
	CHECK(mobius(6) == 1);
	CHECK(mobius(4) == 0);
	CHECK(mobius(30) == -1);
}

TEST_CASE("phi(nr) >= phi(n) phi(r), exhaustive to 100") {
	for (std::uint64_t n = 1; n <= 100; ++n)
		for (std::uint64_t r = 1; r <= 100; ++r)
			REQUIRE(euler_phi(n * r) >= euler_phi(n) * euler_phi(r));
}

TEST_CASE("totient table matches the single-value functions") {
	TotientTable table(2000);
	for (std::uint32_t n = 1; n <= 2000; ++n) {
		REQUIRE(table.phi[n] == euler_phi(n));
		REQUIRE(table.mu[n] == mobius(n));
	}
}

TEST_CASE("cyclotomic polynomial values") {
	CHECK(cyclotomic_poly_eval(1, 2) == 1);
	CHECK(cyclotomic_poly_eval(6, 2) == 3);
	CHECK(cyclotomic_poly_eval(4, 3) == 10);
	CHECK(cyclotomic_poly_eval(2, 2) == 3);
	CHECK(cyclotomic_poly_eval(12, 2) == 13);  // x^4 - x^2 + 1 at 2
}

TEST_CASE("cyclotomic value magnitude stays within the degree bounds") {
	for (std::uint64_t b = 3; b <= 5; ++b) {
		for (std::uint64_t m = 2; m <= 40; ++m) {
			mpz_class value = abs(cyclotomic_poly_eval(m, mpz_class(b)));
			mpz_class lo, hi;
			mpz_ui_pow_ui(lo.get_mpz_t(), b - 1, euler_phi(m));
			mpz_ui_pow_ui(hi.get_mpz_t(), b + 1, euler_phi(m));
			REQUIRE(value >= lo);
			REQUIRE(value <= hi);
		}
	}
}

TEST_CASE("balancing cyclotomic part examples") {
	CHECK(balancing_cyclotomic_part(2).value == 6);
	CHECK(balancing_cyclotomic_part(4).value == 34);
	CHECK(balancing_cyclotomic_part(6).value == 33);
	CHECK_THROWS_AS(balancing_cyclotomic_part(1), std::invalid_argument);
}

TEST_CASE("product of cyclotomic parts reconstructs B_n") {
	for (std::uint64_t n = 2; n <= 100; ++n) {
		mpz_class prod = 1;
		for (std::uint64_t d : divisors(n))
			if (d >= 2) prod *= balancing_cyclotomic_part(d).value;
		REQUIRE(prod == balancing(n));
	}
}

TEST_CASE("moebius inversion consistency at primes and prime squares") {
	for (std::uint64_t p : {std::uint64_t(2), std::uint64_t(3), std::uint64_t(5),
	                        std::uint64_t(7), std::uint64_t(11)}) {
		CHECK(balancing_cyclotomic_part(p).value == balancing(p));
		CHECK(balancing_cyclotomic_part(p * p).value == balancing(p * p) / balancing(p));
	}
}

TEST_CASE("proposition rm brute force, small range") {
	FactorBudget budget;
	auto report = verify_prop_rm(12, 6, budget);
	CHECK(report.ok);
	CHECK(report.skipped_incomplete == 0);
	CHECK_THROWS_AS(verify_prop_rm(1, 5, budget), std::invalid_argument);
}

TEST_CASE("primitive prime classification examples") {
	FactorBudget budget;
	auto m4 = classify_primitive_primes(4, budget);
	REQUIRE(m4.complete);
	CHECK(m4.classes.at(2) == PrimitivePrimeClass::DividesIndex);
	CHECK(m4.classes.at(17) == PrimitivePrimeClass::PlusOne);
	auto m6 = classify_primitive_primes(6, budget);
	REQUIRE(m6.complete);
	CHECK(m6.classes.at(3) == PrimitivePrimeClass::DividesIndex);
	CHECK(m6.classes.at(11) == PrimitivePrimeClass::MinusOne);
	auto m5 = classify_primitive_primes(5, budget);
	REQUIRE(m5.complete);
	CHECK(m5.classes.at(29) == PrimitivePrimeClass::MinusOne);
	CHECK(m5.classes.at(41) == PrimitivePrimeClass::PlusOne);
}

TEST_CASE("primitive primes satisfy m | p - (8/p) up to m = 60") {
	// classify_primitive_primes throws if the rank-of-apparition congruence
	// fails; incomplete factorizations only shrink the checked set.
	FactorBudget budget;
	budget.rho_iterations = 200000;
	for (std::uint64_t m = 2; m <= 60; ++m)
		CHECK_NOTHROW(classify_primitive_primes(m, budget));
}

TEST_CASE("lemma rg minimum ratio") {
	auto report = verify_lemma_rg(20, mpz_class(2));
	CHECK(report.min_ratio > 0);
	// Phi_2(2)/2 = 3/2 is one of the sampled ratios
	auto direct = mpq_class(cyclotomic_poly_eval(2, 2), 2);
	CHECK(direct == mpq_class(3, 2));
	CHECK(report.min_ratio <= direct);
}
