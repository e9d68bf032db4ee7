#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace balnum {

struct CheckpointError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct SearchConfig {
	std::uint64_t x_limit = 0;
	std::uint64_t r = 1;              // arithmetic progression modulus
	std::uint64_t residue_class = 0;  // p == residue_class (mod r)
	std::uint64_t segment_size = 1 << 16;
	unsigned workers = 1;
	std::string checkpoint_path;      // empty disables checkpointing
};

struct SearchResult {
	std::vector<std::uint64_t> hits;       // Wieferich primes found, ascending
	std::uint64_t non_wieferich_count = 0;
	std::uint64_t examined = 0;            // primes matching the class filter
	std::uint64_t resumed_segments = 0;    // segments restored from checkpoint
};

// Classifies every odd prime p <= x_limit with p == residue_class (mod r).
// Deterministic result independent of worker count; resumable through the
// checkpoint file (one line per completed segment, byte-stable).
SearchResult search_balancing_wieferich(const SearchConfig& config);

// Same machinery for the classic base-2 test 2^{p-1} == 1 (mod p^2).
SearchResult search_classic_wieferich(const SearchConfig& config);

}  // namespace balnum
