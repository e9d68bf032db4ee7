#include <CLI11.hpp>

#include "balnum/census.hpp"
#include "balnum/cyclotomic.hpp"
#include "balnum/factorize.hpp"
#include "balnum/report.hpp"
#include "balnum/search.hpp"
#include "balnum/sequence.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

namespace {

// Exit codes: 0 ok, 2 invariant/assertion failure, 3 I/O or checkpoint error,
// 4 factor budget exhausted under --strict.
constexpr int kExitOk = 0;
constexpr int kExitAssertion = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

std::unique_ptr<balnum::FactorCache> open_cache(const std::string& flag_dir) {
	std::string dir = flag_dir;
	if (dir.empty()) {
		const char* env = std::getenv("BALNUM_CACHE_DIR");
		if (env) dir = env;
	}
	if (dir.empty()) return std::make_unique<balnum::FactorCache>();
	return std::make_unique<balnum::FactorCache>(dir + "/factors.txt");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
	if (path.empty()) return std::cout;
	file.open(path, std::ios::trunc);
	if (!file) throw std::ios_base::failure("cannot open output file: " + path);
	return file;
}

int run_search(const balnum::SearchConfig& config, const std::string& output,
               const std::string& format, bool classic) {
	balnum::SearchResult result = classic ? balnum::search_classic_wieferich(config)
	                                      : balnum::search_balancing_wieferich(config);
	std::ofstream file;
	std::ostream& os = open_output(file, output);
	if (format == "json")
		balnum::write_search_json(os, result, config);
	else
		balnum::write_search_csv(os, result, config);
	return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t n_max, std::uint64_t m_max,
               std::uint64_t b_max, std::uint64_t r, balnum::FactorBudget budget,
               balnum::FactorCache* cache) {
	using namespace balnum;
	bool all = suite == "all";
	int status = kExitOk;

	if (all || suite == "growth") {
		auto rep = verify_growth_bounds(n_max ? n_max : 500);
		std::cout << "growth: " << (rep.ok ? "pass" : "FAIL") << '\n';
		if (!rep.ok) status = kExitAssertion;
	}
	if (all || suite == "prop-rm") {
		auto rep = verify_prop_rm(m_max ? m_max : 40, b_max ? b_max : 12, budget, cache);
		std::cout << "prop-rm: " << (rep.ok ? "pass" : "FAIL")
		          << " (skipped incomplete: " << rep.skipped_incomplete << ")\n";
		if (!rep.ok) status = kExitAssertion;
	}
	if (all || suite == "lemma-rg") {
		auto rep = verify_lemma_rg(m_max ? m_max : 20, mpz_class(2));
		std::cout << "lemma-rg: min ratio " << rep.min_ratio.get_d() << " at m="
		          << rep.argmin << (rep.min_ratio > 0 ? " pass" : " FAIL") << '\n';
		if (!(rep.min_ratio > 0)) status = kExitAssertion;
	}
	if (all || suite == "product") {
		bool ok = true;
		std::uint64_t cap = n_max ? n_max : 300;
		for (std::uint64_t n = 2; n <= cap && ok; ++n) {
			mpz_class prod = 1;
			for (std::uint64_t d : divisors(n))
				if (d >= 2) prod *= balancing_cyclotomic_part(d).value;
			ok = (prod == balancing(n));
		}
		std::cout << "product: " << (ok ? "pass" : "FAIL") << '\n';
		if (!ok) status = kExitAssertion;
	}
	if (all || suite == "ef" || suite == "l8") {
		// Eq (ef) is asserted inside census_row; l8 is the pairwise gcd check.
		bool ok = true;
		std::uint64_t incomplete = 0;
		std::uint64_t cap = n_max ? n_max : 25;
		for (std::uint64_t rr : {std::uint64_t(2), std::uint64_t(3), std::uint64_t(5)}) {
			std::vector<mpz_class> xprimes;
			for (std::uint64_t n = 2; n <= cap; ++n) {
				if (!is_squarefree_u64(n)) continue;
				CensusRow row = census_row(n, rr, budget, cache);
				if (row.status != RowStatus::Complete) {
					++incomplete;
					continue;
				}
				for (const auto& other : xprimes) {
					mpz_class g;
					mpz_gcd(g.get_mpz_t(), other.get_mpz_t(), row.x_prime.get_mpz_t());
					if (g != 1) ok = false;
				}
				xprimes.push_back(row.x_prime);
			}
		}
		std::cout << "ef+l8: " << (ok ? "pass" : "FAIL")
		          << " (incomplete rows: " << incomplete << ")\n";
		if (!ok) status = kExitAssertion;
	}
	if (all || suite == "lim") {
		for (std::uint64_t rr : {std::uint64_t(2), std::uint64_t(3), std::uint64_t(6)}) {
			auto rep = phi_sum_residual(1000000, rr);
			std::cout << "lim r=" << rr << ": max |residual| = " << rep.max_abs_residual
			          << '\n';
		}
		auto c1 = c_of_r(1);
		mpq_class zeta2_inv_lo(60792, 100000), zeta2_inv_hi(60793, 100000);
		bool ok = c1.lo < zeta2_inv_hi && c1.hi > zeta2_inv_lo;
		std::cout << "lim c(1): [" << c1.lo.get_d() << ", " << c1.hi.get_d() << "] "
		          << (ok ? "pass" : "FAIL") << '\n';
		if (!ok) status = kExitAssertion;
	}
	if (all || suite == "bn") {
		bool ok = true;
		std::uint64_t incomplete = 0;
		std::uint64_t cap = n_max ? n_max : 40;
		for (std::uint64_t n = 2; n <= cap; ++n) {
			Factorization f = factor(balancing(n), budget, cache);
			if (!f.complete) {
				++incomplete;
				continue;
			}
			auto rep = non_wieferich_witness_check(n, f);
			if (!rep.ok()) ok = false;
		}
		std::cout << "bn: " << (ok ? "pass" : "FAIL")
		          << " (incomplete: " << incomplete << ")\n";
		if (!ok) status = kExitAssertion;
	}
	if (all || suite == "ec") {
		// Observational: powerful-part exponent per row; never fails.
		std::uint64_t cap = n_max ? n_max : 15;
		for (std::uint64_t n = 2; n <= cap; ++n) {
			if (!is_squarefree_u64(n)) continue;
			CensusRow row = census_row(n, r ? r : 2, budget, cache);
			if (row.status != RowStatus::Complete) continue;
			std::cout << "ec n=" << n << " nr=" << row.nr
			          << " exponent=" << measure_powerful_part(row) << '\n';
		}
	}
	return status;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"balancing-number Wieferich searches, censuses, and verification"};
	app.require_subcommand(1);

	std::uint64_t x_limit = 1000;
	std::uint64_t r = 1;
	std::uint64_t residue_class = 0;
	std::uint64_t segment_size = 1 << 16;
	unsigned workers = 1;
	std::string checkpoint, output, format = "csv", cache_dir;
	balnum::FactorBudget budget;
	bool strict = false;

	auto add_common = [&](CLI::App* sub) {
		sub->add_option("--output", output, "output file (default stdout)");
		sub->add_option("--format", format, "csv or json")
		    ->check(CLI::IsMember({"csv", "json"}));
		sub->add_option("--cache-dir", cache_dir,
		                "factor cache directory (or BALNUM_CACHE_DIR)");
	};

	auto* bw = app.add_subcommand("bwieferich", "search balancing Wieferich primes");
	bw->add_option("--max", x_limit, "upper bound for p")->required();
	bw->add_option("--r", r, "progression modulus");
	bw->add_option("--class", residue_class, "residue class mod r");
	bw->add_option("--segment-size", segment_size, "sieve segment width");
	bw->add_option("--workers", workers, "worker threads");
	bw->add_option("--checkpoint", checkpoint, "checkpoint file for resume");
	add_common(bw);

	auto* cw = app.add_subcommand("wieferich", "search classic base-2 Wieferich primes");
	cw->add_option("--max", x_limit, "upper bound for p")->required();
	cw->add_option("--r", r, "progression modulus");
	cw->add_option("--class", residue_class, "residue class mod r");
	cw->add_option("--segment-size", segment_size, "sieve segment width");
	cw->add_option("--workers", workers, "worker threads");
	cw->add_option("--checkpoint", checkpoint, "checkpoint file for resume");
	add_common(cw);

	std::uint64_t n_max = 10;
	auto* census = app.add_subcommand("census", "X'/Y' census over square-free n");
	census->add_option("--r", r, "fixed modulus r >= 2")->required();
	census->add_option("--n-max", n_max, "largest n")->required();
	census->add_option("--rho-budget", budget.rho_iterations, "rho iterations per value");
	census->add_flag("--strict", strict, "nonzero exit if any row is incomplete");
	add_common(census);

	std::string suite = "all";
	std::uint64_t m_max = 0, b_max = 0, v_nmax = 0, v_r = 0;
	auto* verify = app.add_subcommand("verify", "run a verification suite");
	verify->add_option("--suite", suite,
	                   "growth|prop-rm|lemma-rg|product|ef|l8|lim|bn|ec|all")
	    ->check(CLI::IsMember(
	        {"growth", "prop-rm", "lemma-rg", "product", "ef", "l8", "lim", "bn", "ec", "all"}));
	verify->add_option("--n-max", v_nmax, "bound for n-indexed suites");
	verify->add_option("--m-max", m_max, "bound for m-indexed suites");
	verify->add_option("--b-max", b_max, "bound for bases");
	verify->add_option("--r", v_r, "modulus for census-backed suites");
	verify->add_option("--rho-budget", budget.rho_iterations, "rho iterations per value");
	add_common(verify);

	CLI11_PARSE(app, argc, argv);

	try {
		auto cache = open_cache(cache_dir);
		if (bw->parsed() || cw->parsed()) {
			balnum::SearchConfig config{x_limit, r, residue_class, segment_size,
			                            workers, checkpoint};
			return run_search(config, output, format, cw->parsed());
		}
		if (census->parsed()) {
			if (r < 2) {
				std::cerr << "census: r must be >= 2\n";
				return kExitAssertion;
			}
			auto result = balnum::construct_primes(n_max, r, budget, cache.get());
			if (!result.distinctness_collisions.empty()) {
				std::cerr << "FALSIFICATION CANDIDATE: duplicate constructed primes:";
				for (const auto& p : result.distinctness_collisions)
					std::cerr << ' ' << p.get_str();
				std::cerr << '\n';
				return kExitAssertion;
			}
			std::ofstream file;
			std::ostream& os = open_output(file, output);
			if (format == "json")
				balnum::write_census_json(os, result.rows);
			else
				balnum::write_census_csv(os, result.rows);
			if (strict && result.incomplete_rows > 0) return kExitBudget;
			return kExitOk;
		}
		if (verify->parsed())
			return cmd_verify(suite, v_nmax, m_max, b_max, v_r, budget, cache.get());
	} catch (const balnum::CheckpointError& e) {
		std::cerr << "checkpoint error: " << e.what() << '\n';
		return kExitIo;
	} catch (const std::ios_base::failure& e) {
		std::cerr << "i/o error: " << e.what() << '\n';
		return kExitIo;
	} catch (const std::logic_error& e) {
		std::cerr << "invariant failure: " << e.what() << '\n';
		return kExitAssertion;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return kExitAssertion;
	}
	return kExitOk;
}
