// flagcones: flag types of finite abelian groups and field extensions, their
// cones, witness constructions, and exhaustive verification at small degree.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagcones/json_io.hpp"

using namespace flagcones;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) std::cout << io::dump_sorted(j) << "\n";
    else io::write_json_file(out_path, j);
}

int print_report(const search::Report& rep, const std::string& out_path) {
    std::printf("%-28s %s\n", rep.name.c_str(), rep.passed ? "PASS" : "FAIL");
    for (const auto& line : rep.lines) std::printf("    %s\n", line.c_str());
    if (!out_path.empty()) io::write_json_file(out_path, io::report_to_json(rep));
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag types of abelian groups, their cones P_T, and the classification checks"};
    app.require_subcommand(1);

    std::string tower_csv, flag_path, type_path, exclude_csv, point_path, out_path, checkpoint;
    std::string primes_csv;
    int n = 0, prime = 2, threads = 0;
    std::int64_t samples = 0, budget = 100000;
    std::uint64_t seed = 0;
    bool long_run = false;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out_path, "write JSON here"); };

    auto* towertype = app.add_subcommand("towertype", "flag type T(tower) of a tower type");
    towertype->add_option("--tower", tower_csv, "comma-separated parts, e.g. 2,3")->required();
    add_out(towertype);

    auto* flagtype = app.add_subcommand("flagtype", "flag type of a flag (JSON file)");
    flagtype->add_option("--flag", flag_path)->required();
    add_out(flagtype);

    auto* cornersc = app.add_subcommand("corners", "corners of a flag type");
    cornersc->add_option("--type", type_path)->required();
    add_out(cornersc);

    auto* hrepc = app.add_subcommand("hrep", "H-representation of the cone P_T");
    hrepc->add_option("--type", type_path)->required();
    add_out(hrepc);

    auto* minimal = app.add_subcommand("minimal", "minimal realizable flag types of degree n");
    minimal->add_option("--n", n)->required();
    minimal->add_flag("--long-run", long_run, "allow the n = 12 search");
    minimal->add_option("--threads", threads);
    minimal->add_option("--checkpoint", checkpoint, "resume file for the long run");
    add_out(minimal);

    auto* verify = app.add_subcommand("verify", "run a verification harness");
    std::string what;
    verify->add_option("what", what,
                       "classification|corners|realizability|tower-minimality|prop12|kneser|bsz")
        ->required();
    verify->add_option("--n", n);
    verify->add_option("--tower", tower_csv);
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples);
    verify->add_flag("--long-run", long_run);
    verify->add_option("--threads", threads);
    verify->add_option("--checkpoint", checkpoint);
    add_out(verify);

    auto* witness = app.add_subcommand("witness", "explicit counterexample certificate");
    std::string kind;
    witness->add_option("kind", kind, "p2q|pqr|fourp")->required();
    witness->add_option("--primes", primes_csv, "e.g. 3,5")->required();
    add_out(witness);

    auto* escape = app.add_subcommand("escape", "point of P_T outside the excluded cones");
    escape->add_option("--type", type_path)->required();
    escape->add_option("--exclude", exclude_csv, "comma-separated flag-type JSON files")->required();
    escape->add_option("--budget", budget);
    add_out(escape);

    auto* lift = app.add_subcommand("lift", "lift a point of P_T to degree m*p");
    lift->add_option("--point", point_path)->required();
    lift->add_option("--type", type_path)->required();
    lift->add_option("--prime", prime)->required();
    add_out(lift);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*towertype) {
            emit(io::flag_type_to_json(flags::tower_flag_type(arith::TowerType(parse_int_list(tower_csv)))),
                 out_path);
            return 0;
        }
        if (*flagtype) {
            emit(io::flag_type_to_json(flags::flag_type_of(io::flag_from_json(io::read_json_file(flag_path)))),
                 out_path);
            return 0;
        }
        if (*cornersc) {
            emit(io::corners_to_json(io::flag_type_from_json(io::read_json_file(type_path))), out_path);
            return 0;
        }
        if (*hrepc) {
            emit(io::hrep_to_json(poly::h_rep(io::flag_type_from_json(io::read_json_file(type_path)))),
                 out_path);
            return 0;
        }
        if (*minimal) {
            search::SearchOptions opts;
            opts.threads = threads;
            opts.long_run = long_run;
            opts.checkpoint = checkpoint;
            auto catalog = search::realizable_types(n, opts);
            emit(io::minimal_to_json(search::minimal_types(catalog)), out_path);
            return 0;
        }
        if (*verify) {
            search::SearchOptions opts;
            opts.threads = threads;
            opts.long_run = long_run;
            opts.checkpoint = checkpoint;
            if (what == "classification") return print_report(search::verify_classification(n, opts), out_path);
            if (what == "corners")
                return print_report(
                    search::verify_corner_bound(n, static_cast<int>(samples), seed), out_path);
            if (what == "realizability") return print_report(search::verify_realizability(n), out_path);
            if (what == "tower-minimality") {
                if (!tower_csv.empty())
                    return print_report(
                        search::verify_tower_minimality(arith::TowerType(parse_int_list(tower_csv))),
                        out_path);
                // all covered tower types of degree n
                int rc = 0;
                for (const auto& t : arith::tower_types_of_degree(n)) {
                    if (n == 8 && t.parts() == std::vector<int>{8}) continue;
                    rc |= print_report(search::verify_tower_minimality(t), out_path);
                }
                return rc;
            }
            if (what == "prop12") return print_report(search::verify_prop12_lists(), out_path);
            if (what == "kneser")
                return print_report(search::verify_kneser(samples > 0 ? samples : 10000, seed,
                                                          n > 0 ? n : 36),
                                    out_path);
            if (what == "bsz")
                return print_report(search::verify_bsz(samples > 0 ? samples : 1000, seed), out_path);
            std::cerr << "unknown verify target: " << what << "\n";
            return 2;
        }
        if (*witness) {
            poly::WitnessKind wk;
            if (kind == "p2q") wk = poly::WitnessKind::p2q;
            else if (kind == "pqr") wk = poly::WitnessKind::pqr;
            else if (kind == "fourp") wk = poly::WitnessKind::fourp;
            else {
                std::cerr << "unknown witness kind: " << kind << "\n";
                return 2;
            }
            std::vector<std::int64_t> primes;
            for (int v : parse_int_list(primes_csv)) primes.push_back(v);
            emit(io::witness_to_json(poly::counterexample_witness(wk, primes)), out_path);
            return 0;
        }
        if (*escape) {
            auto T = io::flag_type_from_json(io::read_json_file(type_path));
            std::vector<flags::FlagType> excluded;
            std::string cur;
            for (char c : exclude_csv + ",") {
                if (c == ',') {
                    if (!cur.empty()) excluded.push_back(io::flag_type_from_json(io::read_json_file(cur)));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            poly::EscapeOptions eopts;
            eopts.budget = budget;
            auto res = poly::escape_point(T, excluded, eopts);
            emit(io::escape_to_json(res, T, excluded), out_path);
            return res.point ? 0 : 1;
        }
        if (*lift) {
            auto T = io::flag_type_from_json(io::read_json_file(type_path));
            auto x = io::point_from_json(io::read_json_file(point_path));
            auto lifted = poly::lift_point(x, T, prime);
            emit(json{{"m", T.degree()},
                      {"p", prime},
                      {"epsilon", lifted.epsilon.to_string()},
                      {"point", io::point_to_json(lifted.point)}},
                 out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
