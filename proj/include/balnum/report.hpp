#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "balnum/census.hpp"
#include "balnum/search.hpp"

namespace balnum {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "balnum 0.1.0";

// CSV columns (frozen): n,r,nr,phi_nr,x_nr,y_nr,x_prime,y_prime,in_T,status,primes
// where primes is a semicolon-joined list of p:class:wieferich entries.
void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows);
void write_census_json(std::ostream& os, const std::vector<CensusRow>& rows);

void write_search_csv(std::ostream& os, const SearchResult& result,
                      const SearchConfig& config);
void write_search_json(std::ostream& os, const SearchResult& result,
                       const SearchConfig& config);

std::string csv_quote(const std::string& field);

}  // namespace balnum
