#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagcones/fieldflags.hpp"
#include "flagcones/polyhedra.hpp"
#include "flagcones/search.hpp"

namespace flagcones::io {

using nlohmann::json;

// tower types serialize as plain integer arrays, e.g. [3,2,2]
json tower_to_json(const arith::TowerType& t);
arith::TowerType tower_from_json(const json& j);

json group_spec_to_json(const abelian::GroupSpec& s);
abelian::GroupSpec group_spec_from_json(const json& j);

// {"n":6,"table":[...]} with the upper triangle row-major by i then j >= i
json flag_type_to_json(const flags::FlagType& t);
flags::FlagType flag_type_from_json(const json& j);

// {"group":{...},"sequence":[[coords],...]}
json flag_to_json(const flags::Flag& f);
flags::Flag flag_from_json(const json& j);

json hrep_to_json(const poly::ConeHRep& h);
poly::ConeHRep hrep_from_json(const json& j);

// rationals as canonical "num/den" strings
json point_to_json(const poly::RationalVector& x);
poly::RationalVector point_from_json(const json& j);

json corners_to_json(const flags::FlagType& t);
json witness_to_json(const poly::WitnessCertificate& c);
json escape_to_json(const poly::EscapeResult& r, const flags::FlagType& T,
                    const std::vector<flags::FlagType>& excluded);
json catalog_to_json(const search::Catalog& c);
json minimal_to_json(const std::vector<flags::FlagType>& minimal);
json report_to_json(const search::Report& r);
json field_spec_to_json(const fields::FieldSpec& s);
fields::FieldSpec field_spec_from_json(const json& j);

// long-run checkpointing: `path` holds the JSON list of completed prefix IDs,
// `path`.types.json the partial catalog accumulated so far
void save_checkpoint(const std::string& path, const std::set<std::int64_t>& completed,
                     const std::map<std::string, std::map<int, std::vector<int>>>& entries,
                     const std::vector<abelian::GroupSpec>& groups, int n);
void load_checkpoint(const std::string& path, std::set<std::int64_t>& completed,
                     std::map<std::string, std::map<int, std::vector<int>>>& entries,
                     const std::vector<abelian::GroupSpec>& groups, int n);

std::string dump_sorted(const json& j);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace flagcones::io
