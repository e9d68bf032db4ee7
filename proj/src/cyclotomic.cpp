#include "balnum/cyclotomic.hpp"

#include "balnum/residue.hpp"
#include "balnum/sequence.hpp"

#include <stdexcept>

namespace balnum {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
	if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
	std::vector<std::uint64_t> small, large;
	for (std::uint64_t d = 1; d * d <= n; ++d) {
		if (n % d) continue;
		small.push_back(d);
		if (d != n / d) large.push_back(n / d);
	}
	small.insert(small.end(), large.rbegin(), large.rend());
	return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
	if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
	std::uint64_t result = n;
	for (std::uint64_t p = 2; p * p <= n; ++p) {
		if (n % p) continue;
		result -= result / p;
		while (n % p == 0) n /= p;
	}
	if (n > 1) result -= result / n;
	return result;
}

int mobius(std::uint64_t n) {
	if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
	int sign = 1;
	for (std::uint64_t p = 2; p * p <= n; ++p) {
		if (n % p) continue;
		n /= p;
		if (n % p == 0) return 0;
		sign = -sign;
	}
	if (n > 1) sign = -sign;
	return sign;
}

TotientTable::TotientTable(std::uint32_t limit_) : limit(limit_) {
	phi.resize(limit + 1);
	mu.assign(limit + 1, 0);
	spf.assign(limit + 1, 0);
	for (std::uint32_t i = 0; i <= limit; ++i) phi[i] = i;
	if (limit >= 1) mu[1] = 1;
	for (std::uint32_t i = 2; i <= limit; ++i) {
		if (spf[i]) continue;
		for (std::uint64_t j = i; j <= limit; j += i) {
			if (!spf[j]) spf[j] = i;
			phi[j] -= phi[j] / i;
		}
	}
	for (std::uint32_t i = 2; i <= limit; ++i) {
		std::uint32_t m = i;
		int sign = 1;
		bool squarefree = true;
		while (m > 1) {
			std::uint32_t p = spf[m];
			m /= p;
			if (m % p == 0) {
				squarefree = false;
				break;
			}
			sign = -sign;
		}
		mu[i] = squarefree ? static_cast<std::int8_t>(sign) : 0;
	}
}

mpz_class cyclotomic_poly_eval(std::uint64_t m, const mpz_class& b) {
	if (m < 1) throw std::invalid_argument("cyclotomic_poly_eval: m must be >= 1");
	if (abs(b) <= 1) throw std::invalid_argument("cyclotomic_poly_eval: need |b| > 1");
	// Phi_d(b) for d | m, ascending, each from the X^m - 1 recursion.
	std::map<std::uint64_t, mpz_class> memo;
	for (std::uint64_t d : divisors(m)) {
		mpz_class num;
		mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), d);
		num -= 1;
		for (std::uint64_t e : divisors(d)) {
			if (e == d) continue;
			mpz_class q, r;
			mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
			            memo.at(e).get_mpz_t());
			if (r != 0)
				throw std::logic_error("cyclotomic_poly_eval: non-exact division");
			num = std::move(q);
		}
		memo[d] = std::move(num);
	}
	return memo.at(m);
}

CyclotomicPart balancing_cyclotomic_part(std::uint64_t m) {
	if (m < 2) throw std::invalid_argument("balancing_cyclotomic_part: m must be >= 2");
	mpz_class numerator = 1, denominator = 1;
	for (std::uint64_t d : divisors(m)) {
		int mu_md = mobius(m / d);
		if (mu_md == 0) continue;
		mpz_class bd = balancing(d);
		if (mu_md > 0)
			numerator *= bd;
		else
			denominator *= bd;
	}
	mpz_class q, r;
	mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
	            denominator.get_mpz_t());
	if (r != 0 || q <= 0)
		throw std::logic_error("balancing_cyclotomic_part: non-exact division");
	mpz_class bm = balancing(m);
	if (bm % q != 0)
		throw std::logic_error("balancing_cyclotomic_part: value does not divide B_m");
	return {m, q};
}

PropRmReport verify_prop_rm(std::uint64_t m_max, std::uint64_t b_max,
                            const FactorBudget& budget, FactorCache* cache) {
	if (m_max < 2 || b_max < 2)
		throw std::invalid_argument("verify_prop_rm: need m_max, b_max >= 2");
	PropRmReport report;
	for (std::uint64_t m = 2; m <= m_max; ++m) {
		for (std::uint64_t b = 2; b <= b_max; ++b) {
			mpz_class value = cyclotomic_poly_eval(m, mpz_class(b));
			if (value < 0) value = -value;
			if (value <= 1) continue;
			Factorization f = factor(value, budget, cache);
			if (!f.complete) {
				++report.skipped_incomplete;
				continue;
			}
			for (const auto& [p, e] : f.factors) {
				bool divides_index = (p <= m) && mpz_class(m) % p == 0;
				bool one_mod_m = (p % m) == 1;
				if (!divides_index && !one_mod_m) {
					report.ok = false;
					report.m = m;
					report.b = b;
					report.bad_prime = p;
					return report;
				}
			}
		}
	}
	return report;
}

PrimitiveClassification classify_primitive_primes(std::uint64_t m,
                                                  const FactorBudget& budget,
                                                  FactorCache* cache) {
	auto part = balancing_cyclotomic_part(m);
	Factorization f = factor(part.value, budget, cache);
	PrimitiveClassification result;
	result.m = m;
	result.complete = f.complete;
	for (const auto& [p, e] : f.factors) {
		PrimitivePrimeClass cls;
		if (mpz_class(m) % p == 0 && p <= m) {
			cls = PrimitivePrimeClass::DividesIndex;
		} else {
			mpz_class rem = p % m;
			if (rem == 1)
				cls = PrimitivePrimeClass::PlusOne;
			else if (rem == m - 1)
				cls = PrimitivePrimeClass::MinusOne;
			else
				cls = PrimitivePrimeClass::Other;
			// Rank-of-apparition check: m | p - (8/p) for primitive primes.
			if (p > 2) {
				int sign = jacobi(mpz_class(8), p);
				mpz_class idx = sign > 0 ? mpz_class(p - 1) : mpz_class(p + 1);
				if (idx % m != 0)
					throw std::logic_error(
					    "classify_primitive_primes: m does not divide p - (8/p)");
			}
		}
		result.classes[p] = cls;
	}
	return result;
}

LemmaRgReport verify_lemma_rg(std::uint64_t m_max, const mpz_class& b) {
	if (m_max < 2) throw std::invalid_argument("verify_lemma_rg: m_max must be >= 2");
	if (abs(b) <= 1) throw std::invalid_argument("verify_lemma_rg: need |b| > 1");
	LemmaRgReport report;
	mpz_class abs_b = abs(b);
	bool first = true;
	for (std::uint64_t m = 2; m <= m_max; ++m) {
		mpz_class value = abs(cyclotomic_poly_eval(m, b));
		mpz_class denom;
		mpz_pow_ui(denom.get_mpz_t(), abs_b.get_mpz_t(), euler_phi(m));
		mpq_class ratio(value, denom);
		ratio.canonicalize();
		if (first || ratio < report.min_ratio) {
			report.min_ratio = ratio;
			report.argmin = m;
			first = false;
		}
	}
	if (!(report.min_ratio > 0))
		throw std::logic_error("verify_lemma_rg: vanishing ratio");
	return report;
}

}  // namespace balnum
