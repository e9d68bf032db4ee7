#include "balnum/search.hpp"

#include "balnum/residue.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace balnum {

namespace {

struct SegmentResult {
	std::uint64_t lo = 0, hi = 0;
	std::uint64_t examined = 0;
	std::uint64_t non_wieferich = 0;
	std::vector<std::uint64_t> hits;
};

std::string format_segment(const SegmentResult& s) {
	std::ostringstream os;
	os << "seg " << s.lo << ' ' << s.hi << ' ' << s.examined << ' '
	   << s.non_wieferich << ' ';
	if (s.hits.empty()) {
		os << '-';
	} else {
		for (std::size_t i = 0; i < s.hits.size(); ++i) {
			if (i) os << ',';
			os << s.hits[i];
		}
	}
	os << '\n';
	return os.str();
}

// Parses one checkpoint line; throws CheckpointError on malformed input.
SegmentResult parse_segment(const std::string& line) {
	std::istringstream is(line);
	std::string tag, hits_field;
	SegmentResult s;
	if (!(is >> tag >> s.lo >> s.hi >> s.examined >> s.non_wieferich >> hits_field) ||
	    tag != "seg" || s.lo > s.hi)
		throw CheckpointError("corrupt checkpoint line: " + line);
	std::string rest;
	if (is >> rest) throw CheckpointError("corrupt checkpoint line: " + line);
	if (hits_field != "-") {
		std::istringstream hs(hits_field);
		std::string tok;
		while (std::getline(hs, tok, ',')) {
			if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
				throw CheckpointError("corrupt checkpoint hits: " + line);
			s.hits.push_back(std::stoull(tok));
		}
	}
	std::uint64_t w = s.hits.size();
	if (s.non_wieferich + w != s.examined)
		throw CheckpointError("inconsistent checkpoint counts: " + line);
	return s;
}

std::map<std::uint64_t, SegmentResult> load_checkpoint(const std::string& path) {
	std::map<std::uint64_t, SegmentResult> done;
	std::ifstream in(path);
	if (!in) return done;
	std::string line;
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		SegmentResult s = parse_segment(line);
		done[s.lo] = std::move(s);
	}
	return done;
}

template <typename TestFn>
SearchResult run_search(const SearchConfig& config, TestFn&& is_wieferich) {
	if (config.x_limit < 3)
		throw std::invalid_argument("search: x_limit must be >= 3");
	if (config.r < 1 || config.residue_class >= config.r)
		throw std::invalid_argument("search: need 0 <= residue_class < r");

	// Segment boundaries are a pure function of the config, so a resumed run
	// sees the identical layout.
	std::vector<std::pair<std::uint64_t, std::uint64_t>> segments;
	for (std::uint64_t lo = 3; lo <= config.x_limit; lo += config.segment_size)
		segments.emplace_back(lo, std::min(config.x_limit, lo + config.segment_size - 1));

	std::map<std::uint64_t, SegmentResult> done;
	if (!config.checkpoint_path.empty())
		done = load_checkpoint(config.checkpoint_path);

	std::vector<SegmentResult> results(segments.size());
	std::vector<char> restored(segments.size(), 0);
	std::uint64_t resumed = 0;
	for (std::size_t i = 0; i < segments.size(); ++i) {
		auto it = done.find(segments[i].first);
		if (it != done.end() && it->second.hi == segments[i].second) {
			results[i] = it->second;
			restored[i] = 1;
			++resumed;
		}
	}

	// Completed segments are appended immediately (flushed under a mutex) so a
	// killed run resumes without recomputing them; the file is rewritten in
	// canonical segment order once the sweep finishes.
	std::mutex append_mutex;
	std::ofstream append_stream;
	if (!config.checkpoint_path.empty()) {
		append_stream.open(config.checkpoint_path, std::ios::app);
		if (!append_stream)
			throw CheckpointError("cannot open checkpoint: " + config.checkpoint_path);
	}

	auto process = [&](std::size_t i) {
		auto [lo, hi] = segments[i];
		SegmentResult s;
		s.lo = lo;
		s.hi = hi;
		prime_range(lo, hi, [&](std::uint64_t p) {
			if (p == 2) return;
			if (p % config.r != config.residue_class) return;
			++s.examined;
			if (is_wieferich(p))
				s.hits.push_back(p);
			else
				++s.non_wieferich;
		});
		if (append_stream.is_open()) {
			std::lock_guard lock(append_mutex);
			append_stream << format_segment(s) << std::flush;
		}
		results[i] = std::move(s);
	};

	unsigned workers = std::max(1u, config.workers);
	if (workers == 1) {
		for (std::size_t i = 0; i < segments.size(); ++i)
			if (!restored[i]) process(i);
	} else {
		std::atomic<std::size_t> next{0};
		std::vector<std::thread> pool;
		for (unsigned w = 0; w < workers; ++w) {
			pool.emplace_back([&] {
				for (;;) {
					std::size_t i = next.fetch_add(1);
					if (i >= segments.size()) return;
					if (!restored[i]) process(i);
				}
			});
		}
		for (auto& t : pool) t.join();
	}

	// Rewrite the checkpoint in segment order so the file is byte-stable.
	if (!config.checkpoint_path.empty()) {
		append_stream.close();
		std::string tmp = config.checkpoint_path + ".tmp";
		{
			std::ofstream out(tmp, std::ios::trunc);
			if (!out) throw CheckpointError("cannot write checkpoint: " + tmp);
			for (const auto& s : results) out << format_segment(s);
		}
		if (std::rename(tmp.c_str(), config.checkpoint_path.c_str()) != 0)
			throw CheckpointError("cannot replace checkpoint: " + config.checkpoint_path);
	}

	SearchResult merged;
	merged.resumed_segments = resumed;
	for (const auto& s : results) {
		merged.examined += s.examined;
		merged.non_wieferich_count += s.non_wieferich;
		merged.hits.insert(merged.hits.end(), s.hits.begin(), s.hits.end());
	}
	std::sort(merged.hits.begin(), merged.hits.end());
	return merged;
}

}  // namespace

SearchResult search_balancing_wieferich(const SearchConfig& config) {
	return run_search(config, [](std::uint64_t p) {
		return balancing_wieferich_test(p).classification ==
		       WieferichClass::BalancingWieferich;
	});
}

SearchResult search_classic_wieferich(const SearchConfig& config) {
	return run_search(config, [](std::uint64_t p) { return classic_wieferich_test(p); });
}

}  // namespace balnum
