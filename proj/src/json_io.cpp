#include "flagcones/json_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace flagcones::io {

json tower_to_json(const arith::TowerType& t) { return json(t.parts()); }

arith::TowerType tower_from_json(const json& j) {
    return arith::TowerType(j.get<std::vector<int>>());
}

json group_spec_to_json(const abelian::GroupSpec& s) {
    return json{{"cyclic_orders", s.cyclic_orders}};
}

abelian::GroupSpec group_spec_from_json(const json& j) {
    return abelian::GroupSpec{j.at("cyclic_orders").get<std::vector<int>>()};
}

json flag_type_to_json(const flags::FlagType& t) {
    std::vector<int> table(t.upper_triangle().begin(), t.upper_triangle().end());
    return json{{"n", t.degree()}, {"table", table}};
}

flags::FlagType flag_type_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    auto table = j.at("table").get<std::vector<int>>();
    std::vector<std::int16_t> tri(table.begin(), table.end());
    flags::FlagType t(n, std::move(tri));
    // reject tables that are not actually flag types
    std::vector<std::vector<int>> full(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) full[a][b] = t.at(a, b);
    if (!flags::validate_flag_type(full))
        throw std::invalid_argument("flag_type_from_json: table violates the flag-type conditions");
    return t;
}

json flag_to_json(const flags::Flag& f) {
    json seq = json::array();
    for (int i = 0; i < f.degree(); ++i) seq.push_back(f.group()->coords(f.sequence()[i]));
    return json{{"group", group_spec_to_json(f.group()->spec())}, {"sequence", seq}};
}

flags::Flag flag_from_json(const json& j) {
    auto g = abelian::Group::make(group_spec_from_json(j.at("group")));
    std::vector<int> seq;
    for (const auto& coords : j.at("sequence"))
        seq.push_back(g->index_of(coords.get<std::vector<int>>()));
    return flags::Flag(g, std::move(seq));
}

json hrep_to_json(const poly::ConeHRep& h) { return json{{"dim", h.dim}, {"ineqs", h.ineqs}}; }

poly::ConeHRep hrep_from_json(const json& j) {
    poly::ConeHRep h;
    h.dim = j.at("dim").get<int>();
    h.ineqs = j.at("ineqs").get<std::vector<std::vector<std::int64_t>>>();
    return h;
}

json point_to_json(const poly::RationalVector& x) {
    json out = json::array();
    for (const auto& v : x) out.push_back(v.to_string());
    return out;
}

poly::RationalVector point_from_json(const json& j) {
    poly::RationalVector x;
    for (const auto& v : j) {
        if (v.is_number_integer()) x.push_back(Rational(v.get<std::int64_t>()));
        else x.push_back(Rational::from_string(v.get<std::string>()));
    }
    return x;
}

json corners_to_json(const flags::FlagType& t) {
    json cs = json::array();
    for (auto [i, j] : flags::corners(t)) cs.push_back(json::array({i, j}));
    return json{{"n", t.degree()}, {"corners", cs}};
}

json witness_to_json(const poly::WitnessCertificate& c) {
    json facets = json::array();
    for (const auto& f : c.facets)
        facets.push_back(json{{"i", f.i}, {"j", f.j}, {"k", f.k}, {"margin", f.margin.to_string()}});
    json exclusions = json::array();
    for (const auto& e : c.exclusions)
        exclusions.push_back(json{{"tower", tower_to_json(e.tower)},
                                  {"i", e.i},
                                  {"j", e.j},
                                  {"k", e.k},
                                  {"margin", e.margin.to_string()}});
    return json{{"kind", poly::witness_kind_name(c.kind)},
                {"primes", c.primes},
                {"n", c.flag.degree()},
                {"flag", flag_to_json(c.flag)},
                {"flag_type", flag_type_to_json(c.flag_type)},
                {"point", point_to_json(c.point)},
                {"facets", facets},
                {"exclusions", exclusions}};
}

json escape_to_json(const poly::EscapeResult& r, const flags::FlagType& T,
                    const std::vector<flags::FlagType>& excluded) {
    json out;
    out["n"] = T.degree();
    out["excluded"] = json::array();
    for (const auto& e : excluded) out["excluded"].push_back(flag_type_to_json(e));
    out["explored"] = r.explored;
    out["feasible"] = r.point.has_value();
    if (r.point) {
        out["point"] = point_to_json(*r.point);
        json chosen = json::array();
        for (const auto& c : r.chosen) chosen.push_back(json{{"i", c[0]}, {"j", c[1]}, {"k", c[2]}});
        out["chosen"] = chosen;
    } else {
        out["exhausted"] = true;
    }
    return out;
}

json catalog_to_json(const search::Catalog& c) {
    json groups = json::array();
    for (const auto& g : c.groups) groups.push_back(group_spec_to_json(g));
    json entries = json::array();
    for (const auto& e : c.entries) {
        json wits = json::object();
        for (const auto& [gi, seq] : e.witnesses) wits[std::to_string(gi)] = seq;
        entries.push_back(json{{"type", flag_type_to_json(e.type)}, {"witnesses", wits}});
    }
    return json{{"degree", c.degree}, {"groups", groups}, {"entries", entries}};
}

json minimal_to_json(const std::vector<flags::FlagType>& minimal) {
    json arr = json::array();
    for (const auto& t : minimal) arr.push_back(flag_type_to_json(t));
    return json{{"count", minimal.size()}, {"minimal", arr}};
}

json report_to_json(const search::Report& r) {
    return json{{"name", r.name}, {"passed", r.passed}, {"lines", r.lines}};
}

json field_spec_to_json(const fields::FieldSpec& s) {
    return json{{"p", s.p}, {"n", s.n}, {"modulus", s.modulus}};
}

fields::FieldSpec field_spec_from_json(const json& j) {
    return fields::FieldSpec{j.at("p").get<int>(), j.at("n").get<int>(),
                             j.at("modulus").get<std::vector<int>>()};
}

namespace {

std::vector<int> key_to_table(const std::string& key) {
    std::vector<std::int16_t> tri(key.size() / sizeof(std::int16_t));
    std::memcpy(tri.data(), key.data(), key.size());
    return std::vector<int>(tri.begin(), tri.end());
}

std::string table_to_key(const std::vector<int>& table) {
    std::vector<std::int16_t> tri(table.begin(), table.end());
    return std::string(reinterpret_cast<const char*>(tri.data()), tri.size() * sizeof(std::int16_t));
}

}  // namespace

void save_checkpoint(const std::string& path, const std::set<std::int64_t>& completed,
                     const std::map<std::string, std::map<int, std::vector<int>>>& entries,
                     const std::vector<abelian::GroupSpec>& groups, int n) {
    json ids = json::array();
    for (auto id : completed) ids.push_back(id);
    write_json_file(path, ids);
    json ents = json::array();
    for (const auto& [key, wits] : entries) {
        json w = json::object();
        for (const auto& [gi, seq] : wits) w[std::to_string(gi)] = seq;
        ents.push_back(json{{"table", key_to_table(key)}, {"witnesses", w}});
    }
    json gs = json::array();
    for (const auto& g : groups) gs.push_back(group_spec_to_json(g));
    write_json_file(path + ".types.json", json{{"degree", n}, {"groups", gs}, {"entries", ents}});
}

void load_checkpoint(const std::string& path, std::set<std::int64_t>& completed,
                     std::map<std::string, std::map<int, std::vector<int>>>& entries,
                     const std::vector<abelian::GroupSpec>& groups, int n) {
    std::ifstream in(path);
    if (!in.good()) return;  // fresh run
    json ids = json::parse(in);
    for (const auto& id : ids) completed.insert(id.get<std::int64_t>());
    json data = read_json_file(path + ".types.json");
    if (data.at("degree").get<int>() != n)
        throw std::invalid_argument("checkpoint degree does not match the requested run");
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (!(group_spec_from_json(data.at("groups")[gi]) == groups[gi]))
            throw std::invalid_argument("checkpoint group list does not match");
    }
    for (const auto& e : data.at("entries")) {
        auto key = table_to_key(e.at("table").get<std::vector<int>>());
        auto& wits = entries[key];
        for (const auto& [gi, seq] : e.at("witnesses").items())
            wits[std::stoi(gi)] = seq.get<std::vector<int>>();
    }
}

std::string dump_sorted(const json& j) { return j.dump(2); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path + ".tmp");
    if (!out.good()) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
    out.close();
    std::rename((path + ".tmp").c_str(), path.c_str());
}

}  // namespace flagcones::io
