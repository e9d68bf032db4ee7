#include "balnum/report.hpp"

#include <json.hpp>

#include <sstream>

namespace balnum {

namespace {

std::string primes_field(const CensusRow& row) {
	std::ostringstream os;
	for (std::size_t i = 0; i < row.constructed_primes.size(); ++i) {
		const auto& cp = row.constructed_primes[i];
		if (i) os << ';';
		os << cp.p.get_str() << ':' << to_string(cp.class_mod_nr) << ':'
		   << (cp.classification == WieferichClass::BalancingNonWieferich
		           ? "non-wieferich"
		           : "wieferich");
	}
	return os.str();
}

nlohmann::json row_to_json(const CensusRow& row) {
	nlohmann::json j;
	j["n"] = row.n;
	j["r"] = row.r;
	j["nr"] = row.nr;
	j["phi_nr"] = row.phi_nr.get_str();
	j["status"] = to_string(row.status);
	if (row.status == RowStatus::Complete) {
		j["x_nr"] = row.x_nr.get_str();
		j["y_nr"] = row.y_nr.get_str();
		j["x_prime"] = row.x_prime.get_str();
		j["y_prime"] = row.y_prime.get_str();
		j["in_T"] = row.in_T;
		nlohmann::json primes = nlohmann::json::array();
		for (const auto& cp : row.constructed_primes) {
			primes.push_back({{"p", cp.p.get_str()},
			                  {"class", to_string(cp.class_mod_nr)},
			                  {"wieferich",
			                   cp.classification == WieferichClass::BalancingWieferich}});
		}
		j["primes"] = primes;
	}
	return j;
}

}  // namespace

std::string csv_quote(const std::string& field) {
	bool needs = field.find_first_of(",\"\n") != std::string::npos;
	if (!needs) return field;
	std::string out = "\"";
	for (char c : field) {
		if (c == '"') out += '"';
		out += c;
	}
	out += '"';
	return out;
}

void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
	os << "# " << kToolVersion << " schema_version=" << kSchemaVersion << '\n';
	os << "n,r,nr,phi_nr,x_nr,y_nr,x_prime,y_prime,in_T,status,primes\n";
	for (const auto& row : rows) {
		os << row.n << ',' << row.r << ',' << row.nr << ',' << row.phi_nr.get_str();
		if (row.status == RowStatus::Complete) {
			os << ',' << row.x_nr.get_str() << ',' << row.y_nr.get_str() << ','
			   << row.x_prime.get_str() << ',' << row.y_prime.get_str() << ','
			   << (row.in_T ? "true" : "false");
		} else {
			os << ",,,,,";
		}
		os << ',' << to_string(row.status) << ',' << csv_quote(primes_field(row))
		   << '\n';
	}
}

void write_census_json(std::ostream& os, const std::vector<CensusRow>& rows) {
	nlohmann::json j;
	j["schema_version"] = kSchemaVersion;
	j["tool"] = kToolVersion;
	j["rows"] = nlohmann::json::array();
	for (const auto& row : rows) j["rows"].push_back(row_to_json(row));
	os << j.dump(2) << '\n';
}

void write_search_csv(std::ostream& os, const SearchResult& result,
                      const SearchConfig& config) {
	os << "# " << kToolVersion << " schema_version=" << kSchemaVersion << '\n';
	os << "x_limit,r,residue_class,examined,non_wieferich,hits\n";
	os << config.x_limit << ',' << config.r << ',' << config.residue_class << ','
	   << result.examined << ',' << result.non_wieferich_count << ',';
	std::ostringstream hits;
	for (std::size_t i = 0; i < result.hits.size(); ++i) {
		if (i) hits << ';';
		hits << result.hits[i];
	}
	os << csv_quote(hits.str()) << '\n';
}

void write_search_json(std::ostream& os, const SearchResult& result,
                       const SearchConfig& config) {
	nlohmann::json j;
	j["schema_version"] = kSchemaVersion;
	j["tool"] = kToolVersion;
	j["x_limit"] = config.x_limit;
	j["r"] = config.r;
	j["residue_class"] = config.residue_class;
	j["examined"] = result.examined;
	j["non_wieferich"] = result.non_wieferich_count;
	j["hits"] = result.hits;
	os << j.dump(2) << '\n';
}

}  // namespace balnum
