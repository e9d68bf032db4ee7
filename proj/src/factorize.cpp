#include "balnum/factorize.hpp"

#include "balnum/residue.hpp"
#include "balnum/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace balnum {

mpz_class Factorization::rebuilt() const {
	mpz_class prod = cofactor;
	mpz_class pe;
	for (const auto& [p, e] : factors) {
		mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
		prod *= pe;
	}
	return prod;
}

bool is_prime(const mpz_class& n) {
	// BPSW + Miller-Rabin rounds; deterministic for a given n.
	return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Brent's cycle-finding rho with polynomial x^2 + c. The c sequence and all
// starting points are fixed, so results are reproducible.
mpz_class rho_brent(const mpz_class& n, std::uint64_t max_iterations) {
	std::uint64_t iterations = 0;  // total across all polynomial choices
	for (unsigned long c = 1; c <= 16 && iterations < max_iterations; ++c) {
		mpz_class y = 2, ys, q = 1, x, d = 1;
		std::uint64_t r = 1;
		constexpr std::uint64_t kBatch = 128;
		while (d == 1 && iterations < max_iterations) {
			x = y;
			for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
			std::uint64_t k = 0;
			while (k < r && d == 1) {
				ys = y;
				std::uint64_t lim = std::min(kBatch, r - k);
				for (std::uint64_t i = 0; i < lim; ++i) {
					y = (y * y + c) % n;
					q = q * abs(x - y) % n;
				}
				iterations += lim;
				mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
				k += lim;
				if (iterations >= max_iterations) break;
			}
			r *= 2;
		}
		if (d == n) {
			// Backtrack one step at a time from ys.
			d = 1;
			for (std::uint64_t i = 0; d == 1 && i < max_iterations; ++i) {
				ys = (ys * ys + c) % n;
				mpz_class diff = abs(x - ys);
				mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
			}
		}
		if (d != 1 && d != n) return d;
	}
	return 1;  // budget exhausted
}

void factor_into(const mpz_class& n, const FactorBudget& budget,
                 std::map<mpz_class, unsigned>& out, mpz_class& cofactor) {
	if (n == 1) return;
	if (is_prime(n)) {
		++out[n];
		return;
	}
	mpz_class d = rho_brent(n, budget.rho_iterations);
	if (d == 1) {
		cofactor *= n;
		return;
	}
	factor_into(d, budget, out, cofactor);
	factor_into(n / d, budget, out, cofactor);
}

}  // namespace

Factorization factor(const mpz_class& n, const FactorBudget& budget,
                     FactorCache* cache) {
	if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
	Factorization f;
	f.value = n;
	if (n == 1) {
		f.complete = true;
		return f;
	}
	if (cache && cache->lookup(n, f)) return f;

	std::map<mpz_class, unsigned> found;
	mpz_class rest = n;
	// Trial division: 2, 3, then 6k+-1.
	for (std::uint64_t p = 2; p <= budget.trial_bound && rest > 1;
	     p = (p == 2) ? 3 : (p == 3 ? 5 : (p % 6 == 5 ? p + 2 : p + 4))) {
		if (mpz_class(p) * p > rest) break;
		while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
			++found[mpz_class(p)];
			rest /= p;
		}
	}
	if (rest > 1) {
		if (mpz_class(budget.trial_bound) * budget.trial_bound >= rest) {
			// Remainder below the trial square is prime.
			++found[rest];
		} else {
			mpz_class cof = 1;
			factor_into(rest, budget, found, cof);
			f.cofactor = cof;
		}
	}
	f.factors.assign(found.begin(), found.end());
	f.complete = (f.cofactor == 1);
	if (cache && f.complete) cache->store(f);
	return f;
}

FactorCache::FactorCache(std::string path) : path_(std::move(path)) {
	std::ifstream in(path_);
	if (!in) return;
	std::string line;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		std::istringstream is(line);
		Factorization f;
		std::string value_str, tok;
		if (!(is >> value_str)) {
			++rejected_;
			continue;
		}
		bool bad = false;
		if (mpz_set_str(f.value.get_mpz_t(), value_str.c_str(), 10) != 0 || f.value < 1)
			bad = true;
		while (!bad && is >> tok) {
			auto caret = tok.find('^');
			std::string p_str = caret == std::string::npos ? tok : tok.substr(0, caret);
			unsigned e = 1;
			if (caret != std::string::npos) {
				try {
					e = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
				} catch (...) {
					bad = true;
					break;
				}
			}
			mpz_class p;
			if (mpz_set_str(p.get_mpz_t(), p_str.c_str(), 10) != 0 || e == 0) {
				bad = true;
				break;
			}
			f.factors.emplace_back(p, e);
		}
		// Re-verify: sorted primes, primality, product identity.
		if (!bad) {
			for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
				if (!(f.factors[i].first < f.factors[i + 1].first)) bad = true;
			for (const auto& [p, e] : f.factors)
				if (!is_prime(p)) bad = true;
			f.cofactor = 1;
			f.complete = true;
			if (f.rebuilt() != f.value) bad = true;
		}
		if (bad) {
			++rejected_;
			continue;
		}
		entries_[f.value] = std::move(f);
	}
}

bool FactorCache::lookup(const mpz_class& n, Factorization& out) const {
	std::lock_guard lock(mutex_);
	auto it = entries_.find(n);
	if (it == entries_.end()) return false;
	out = it->second;
	return true;
}

void FactorCache::store(const Factorization& f) {
	if (!f.complete) return;
	std::lock_guard lock(mutex_);
	if (entries_.count(f.value)) return;
	entries_[f.value] = f;
	if (path_.empty()) return;
	std::ofstream out(path_, std::ios::app);
	if (!out) return;  // cache is an accelerator; failure to persist is benign
	out << f.value.get_str();
	for (const auto& [p, e] : f.factors) {
		out << ' ' << p.get_str();
		if (e > 1) out << '^' << e;
	}
	out << '\n';
}

std::size_t FactorCache::size() const {
	std::lock_guard lock(mutex_);
	return entries_.size();
}

SquarefreePowerfulSplit squarefree_powerful_split(const Factorization& f) {
	if (!f.complete)
		throw IncompleteFactorization(
		    "squarefree_powerful_split: factorization incomplete for " +
		    f.value.get_str());
	SquarefreePowerfulSplit s;
	s.value = f.value;
	s.x_part = 1;
	s.y_part = 1;
	mpz_class pe;
	for (const auto& [p, e] : f.factors) {
		if (e == 1) {
			s.x_part *= p;
		} else {
			mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
			s.y_part *= pe;
		}
	}
	return s;
}

WitnessReport non_wieferich_witness_check(std::uint64_t n, const Factorization& f) {
	WitnessReport report;
	report.n = n;
	if (!f.complete)
		throw IncompleteFactorization(
		    "witness check: factorization incomplete for " + f.value.get_str());
	for (const auto& [p, e] : f.factors) {
		if (e != 1 || p == 2) continue;
		auto rec = balancing_wieferich_test(p);
		if (rec.classification == WieferichClass::BalancingNonWieferich) {
			report.witnesses.push_back(p);
		} else {
			// Falsification candidate: recompute the residue by naive
			// recurrence iteration before reporting (independent route).
			mpz_class p2 = p * p;
			mpz_class index = rec.jacobi_sign > 0 ? mpz_class(p - 1) : mpz_class(p + 1);
			mpz_class cur;
			if (index.fits_ulong_p() && index < 100000000) {
				mpz_class prev = 0;
				cur = 1;
				for (unsigned long i = 1; i < index.get_ui(); ++i) {
					mpz_class next = (6 * cur - prev) % p2;
					if (next < 0) next += p2;
					prev = cur;
					cur = next;
				}
			} else {
				cur = balancing_mod_z(index, p2).first;
			}
			if (cur == 0)
				report.falsifications.push_back(p);
			else
				report.witnesses.push_back(p);
		}
	}
	return report;
}

mpz_class radical(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                  const FactorBudget& budget, FactorCache* cache) {
	if (a + b != c) throw std::invalid_argument("radical: need a + b = c");
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	if (g != 1) throw std::invalid_argument("radical: need gcd(a, b) = 1");
	mpz_class rad = 1;
	for (const mpz_class* v : {&a, &b, &c}) {
		Factorization f = factor(*v, budget, cache);
		if (!f.complete)
			throw IncompleteFactorization("radical: budget exhausted on " + v->get_str());
		for (const auto& [p, e] : f.factors)
			if (mpz_divisible_p(rad.get_mpz_t(), p.get_mpz_t()) == 0) rad *= p;
	}
	return rad;
}

double abc_quality(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                   const FactorBudget& budget, FactorCache* cache) {
	mpz_class rad = radical(a, b, c, budget, cache);
	// log via mpz -> double exponent decomposition keeps precision for
	// operands far beyond double range.
	signed long exp_c, exp_r;
	double mc = mpz_get_d_2exp(&exp_c, c.get_mpz_t());
	double mr = mpz_get_d_2exp(&exp_r, rad.get_mpz_t());
	double log_c = std::log(mc) + exp_c * std::log(2.0);
	double log_r = std::log(mr) + exp_r * std::log(2.0);
	return log_c / log_r;
}

}  // namespace balnum
