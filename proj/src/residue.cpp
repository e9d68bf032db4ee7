#include "balnum/residue.hpp"

#include "balnum/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace balnum {

int jacobi(std::int64_t a, std::uint64_t n) {
	if (n == 0 || n % 2 == 0)
		throw std::invalid_argument("jacobi: n must be odd and positive");
	// Binary algorithm via quadratic reciprocity.
	std::uint64_t aa;
	int sign = 1;
	if (a < 0) {
		aa = static_cast<std::uint64_t>(-a) % n;
		if (n % 4 == 3) sign = -sign;  // (-1/n)
	} else {
		aa = static_cast<std::uint64_t>(a) % n;
	}
	while (aa != 0) {
		while (aa % 2 == 0) {
			aa /= 2;
			std::uint64_t m8 = n % 8;
			if (m8 == 3 || m8 == 5) sign = -sign;  // (2/n)
		}
		std::swap(aa, n);
		if (aa % 4 == 3 && n % 4 == 3) sign = -sign;
		aa %= n;
	}
	return n == 1 ? sign : 0;
}

int jacobi(const mpz_class& a, const mpz_class& n) {
	if (n <= 0 || mpz_even_p(n.get_mpz_t()))
		throw std::invalid_argument("jacobi: n must be odd and positive");
	return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool classic_wieferich_test(std::uint64_t p) {
	if (p < 3 || p % 2 == 0)
		throw std::invalid_argument("classic_wieferich_test: p must be an odd prime");
	using u128 = unsigned __int128;
	if (p < (std::uint64_t(1) << 32)) {
		std::uint64_t m = p * p;
		std::uint64_t result = 1, base = 2 % m, e = p - 1;
		while (e) {
			if (e & 1) result = static_cast<std::uint64_t>(u128(result) * base % m);
			base = static_cast<std::uint64_t>(u128(base) * base % m);
			e >>= 1;
		}
		return result == 1;
	}
	mpz_class m = mpz_class(p) * p, r;
	mpz_class two = 2, e = mpz_class(p) - 1;
	mpz_powm(r.get_mpz_t(), two.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
	return r == 1;
}

WieferichRecord balancing_wieferich_test(std::uint64_t p) {
	if (p < 3 || p % 2 == 0)
		throw std::invalid_argument("balancing_wieferich_test: p must be an odd prime");
	int sign = jacobi(8, p);
	std::uint64_t index = sign > 0 ? p - 1 : p + 1;
	mpz_class residue;
	if (p < (std::uint64_t(1) << 31)) {
		std::uint64_t m = p * p;
		residue = mpz_class(static_cast<unsigned long>(balancing_mod_u64(index, m).first));
	} else {
		mpz_class m = mpz_class(p) * p;
		residue = balancing_mod(index, m).b_mod;
	}
	if (residue % p != 0)
		throw std::logic_error("balancing_wieferich_test: B_{p-(8/p)} not divisible by p");
	return {p, sign, residue,
	        residue == 0 ? WieferichClass::BalancingWieferich
	                     : WieferichClass::BalancingNonWieferich};
}

WieferichRecordZ balancing_wieferich_test(const mpz_class& p) {
	if (p < 3 || mpz_even_p(p.get_mpz_t()))
		throw std::invalid_argument("balancing_wieferich_test: p must be an odd prime");
	int sign = jacobi(mpz_class(8), p);
	mpz_class index = sign > 0 ? mpz_class(p - 1) : mpz_class(p + 1);
	mpz_class p2 = p * p;
	mpz_class residue = balancing_mod_z(index, p2).first;
	if (residue % p != 0)
		throw std::logic_error("balancing_wieferich_test: B_{p-(8/p)} not divisible by p");
	return {p, sign, residue,
	        residue == 0 ? WieferichClass::BalancingWieferich
	                     : WieferichClass::BalancingNonWieferich};
}

std::optional<PeriodRecord> period(const mpz_class& m, std::uint64_t cap) {
	if (m < 2) throw std::invalid_argument("period: m must be >= 2");
	mpz_class prev = 0, cur = 1 % m;  // (B_l, B_{l+1}) starting at l = 0
	for (std::uint64_t l = 1; l <= cap; ++l) {
		mpz_class next = (6 * cur - prev) % m;
		if (next < 0) next += m;
		prev = cur;
		cur = next;
		// now (prev, cur) = (B_l, B_{l+1})
		if (prev == 0 && cur == 1 % m) return PeriodRecord{m, l};
	}
	return std::nullopt;
}

void prime_range(std::uint64_t lo, std::uint64_t hi,
                 const std::function<void(std::uint64_t)>& f) {
	if (lo < 2) lo = 2;
	if (lo > hi) return;
	// Base primes up to sqrt(hi).
	std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
	std::vector<char> small(root + 1, 1);
	std::vector<std::uint64_t> base;
	for (std::uint64_t i = 2; i <= root; ++i) {
		if (!small[i]) continue;
		base.push_back(i);
		for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
	}
	constexpr std::uint64_t kSegment = 1 << 18;
	std::vector<char> seg;
	for (std::uint64_t s = lo; s <= hi; s += kSegment) {
		std::uint64_t e = std::min(hi, s + kSegment - 1);
		seg.assign(e - s + 1, 1);
		for (std::uint64_t p : base) {
			if (p * p > e) break;
			std::uint64_t start = std::max(p * p, (s + p - 1) / p * p);
			for (std::uint64_t j = start; j <= e; j += p) seg[j - s] = 0;
		}
		for (std::uint64_t v = s; v <= e; ++v)
			if (seg[v - s] && v >= 2) f(v);
	}
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
	std::vector<std::uint64_t> out;
	prime_range(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
	return out;
}

}  // namespace balnum
