// Python bindings for the flagcones core: tower types, flag types, cones,
// witnesses, and the verification harnesses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagcones/json_io.hpp"

namespace py = pybind11;
using namespace flagcones;

namespace {

arith::TowerType tower(const std::vector<int>& parts) { return arith::TowerType(parts); }

poly::RationalVector parse_point(const std::vector<std::string>& xs) {
    poly::RationalVector out;
    for (const auto& s : xs) out.push_back(Rational::from_string(s));
    return out;
}

std::vector<std::string> dump_point(const poly::RationalVector& x) {
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(v.to_string());
    return out;
}

search::SearchOptions opts_of(int threads, bool long_run) {
    search::SearchOptions o;
    o.threads = threads;
    o.long_run = long_run;
    return o;
}

}  // namespace

PYBIND11_MODULE(pyflagcones, m) {
    m.doc() = "flag types of finite abelian groups and field extensions, and their cones";

    py::class_<flags::FlagType>(m, "FlagType")
        .def_property_readonly("n", &flags::FlagType::degree)
        .def("at", &flags::FlagType::at, py::arg("i"), py::arg("j"))
        .def("table", [](const flags::FlagType& t) {
            return std::vector<int>(t.upper_triangle().begin(), t.upper_triangle().end());
        })
        .def("__eq__", [](const flags::FlagType& a, const flags::FlagType& b) { return a == b; })
        .def("__repr__", [](const flags::FlagType& t) {
            return "FlagType(n=" + std::to_string(t.degree()) + ")";
        });

    // mixed radix
    m.def("digits", [](std::int64_t i, const std::vector<int>& parts) {
        return arith::digits(i, tower(parts)).values;
    });
    m.def("value", [](const std::vector<int>& ds, const std::vector<int>& parts) {
        return arith::value(arith::Digits{ds, tower(parts)});
    });
    m.def("overflows", [](std::int64_t i, std::int64_t j, const std::vector<int>& parts) {
        return arith::overflows(i, j, tower(parts));
    });
    m.def("overflows_mod", &arith::overflows_mod);

    // flag types and cones
    m.def("tower_flag_type",
          [](const std::vector<int>& parts) { return flags::tower_flag_type(tower(parts)); });
    m.def("flag_type_of", [](const std::vector<int>& cyclic_orders,
                             const std::vector<std::vector<int>>& sequence) {
        auto g = abelian::Group::make(abelian::GroupSpec{cyclic_orders});
        std::vector<int> seq;
        for (const auto& c : sequence) seq.push_back(g->index_of(c));
        return flags::flag_type_of(flags::Flag(g, seq));
    });
    m.def("corners", [](const flags::FlagType& t) { return flags::corners(t); });
    m.def("le", &flags::le);
    m.def("h_rep", [](const flags::FlagType& t) {
        auto h = poly::h_rep(t);
        return std::make_pair(h.dim, h.ineqs);
    });
    m.def("member", [](const flags::FlagType& t, const std::vector<std::string>& x) {
        return poly::member(t, parse_point(x));
    });
    m.def("subset", &poly::subset);
    m.def("separating_corner", &poly::separating_corner);
    m.def("find_m", &poly::find_m);
    m.def("lift_point", [](const std::vector<std::string>& x, const flags::FlagType& t, int p) {
        auto r = poly::lift_point(parse_point(x), t, p);
        return std::make_pair(dump_point(r.point), r.epsilon.to_string());
    });
    m.def("escape_point",
          [](const flags::FlagType& t, const std::vector<flags::FlagType>& excluded) {
              auto r = poly::escape_point(t, excluded);
              return r.point ? py::cast(dump_point(*r.point)) : py::object(py::none());
          });
    m.def("witness", [](const std::string& kind, const std::vector<std::int64_t>& primes) {
        poly::WitnessKind wk;
        if (kind == "p2q") wk = poly::WitnessKind::p2q;
        else if (kind == "pqr") wk = poly::WitnessKind::pqr;
        else if (kind == "fourp") wk = poly::WitnessKind::fourp;
        else throw std::invalid_argument("witness kind must be p2q, pqr or fourp");
        return io::witness_to_json(poly::counterexample_witness(wk, primes)).dump();
    });

    // search and verification
    m.def("abelian_groups_of_order", [](std::int64_t n) {
        std::vector<std::vector<int>> out;
        for (const auto& s : search::abelian_groups_of_order(n)) out.push_back(s.cyclic_orders);
        return out;
    });
    m.def(
        "minimal_types",
        [](int n, int threads, bool long_run) {
            return search::minimal_types(search::realizable_types(n, opts_of(threads, long_run)));
        },
        py::arg("n"), py::arg("threads") = 0, py::arg("long_run") = false);
    m.def("kneser_filter", &search::kneser_filter);

    auto report_dict = [](const search::Report& r) {
        py::dict d;
        d["name"] = r.name;
        d["passed"] = r.passed;
        d["lines"] = r.lines;
        return d;
    };
    m.def(
        "verify_classification",
        [report_dict](int n, bool long_run) {
            return report_dict(search::verify_classification(n, opts_of(0, long_run)));
        },
        py::arg("n"), py::arg("long_run") = false);
    m.def(
        "verify_corner_bound",
        [report_dict](int n, int field_samples, std::uint64_t seed) {
            return report_dict(search::verify_corner_bound(n, field_samples, seed));
        },
        py::arg("n"), py::arg("field_samples") = 0, py::arg("seed") = 0);
    m.def("verify_realizability",
          [report_dict](int n) { return report_dict(search::verify_realizability(n)); });
    m.def("verify_tower_minimality", [report_dict](const std::vector<int>& parts) {
        return report_dict(search::verify_tower_minimality(arith::TowerType(parts)));
    });
    m.def("verify_prop12_lists",
          [report_dict]() { return report_dict(search::verify_prop12_lists()); });
    m.def(
        "verify_kneser",
        [report_dict](std::int64_t samples, std::uint64_t seed, int max_order) {
            return report_dict(search::verify_kneser(samples, seed, max_order));
        },
        py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("max_order") = 36);
    m.def(
        "verify_bsz",
        [report_dict](std::int64_t samples, std::uint64_t seed) {
            return report_dict(search::verify_bsz(samples, seed));
        },
        py::arg("samples") = 1000, py::arg("seed") = 0);

    // group-side sumset audit on explicit coordinate sets
    m.def("kneser_audit", [](const std::vector<int>& cyclic_orders,
                             const std::vector<std::vector<int>>& A,
                             const std::vector<std::vector<int>>& B) {
        auto g = abelian::Group::make(abelian::GroupSpec{cyclic_orders});
        auto set_of = [&](const std::vector<std::vector<int>>& coords) {
            std::vector<int> idx;
            for (const auto& c : coords) idx.push_back(g->index_of(c));
            return abelian::ElementSet(g, idx);
        };
        auto r = abelian::kneser_audit(set_of(A), set_of(B));
        py::dict d;
        d["size_a"] = r.size_a;
        d["size_b"] = r.size_b;
        d["size_ab"] = r.size_ab;
        d["stabilizer_order"] = r.stabilizer_order;
        d["sub_additive"] = r.sub_additive;
        d["overflow"] = r.overflow;
        return d;
    });
}
