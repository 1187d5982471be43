#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdx/allocators.hpp"
#include "fdx/envy.hpp"
#include "fdx/error.hpp"
#include "fdx/generators.hpp"
#include "fdx/json_io.hpp"
#include "fdx/reductions.hpp"

#include <optional>
#include <string>

namespace py = pybind11;
using namespace fdx;

namespace {

// Values cross the boundary as Python ints or "p/q" strings; never floats.
Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj))
        return parse_rational(py::str(obj).cast<std::string>());
    fail(Errc::non_rational, "values must be ints or \"p/q\" strings");
}

std::vector<Rational> to_values(const py::sequence& seq) {
    std::vector<Rational> values;
    values.reserve(py::len(seq));
    for (const auto& item : seq)
        values.push_back(to_rational(item));
    return values;
}

std::vector<std::vector<Rational>> to_vectors(const py::sequence& seq) {
    std::vector<std::vector<Rational>> vectors;
    for (const auto& row : seq)
        vectors.push_back(to_values(row.cast<py::sequence>()));
    return vectors;
}

py::list from_values(const std::vector<Rational>& values) {
    py::list result;
    for (const Rational& v : values)
        result.append(format_rational(v));
    return result;
}

ValueTable table_from_py(const py::sequence& rows, bool diagonal_none) {
    ValueTable table;
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::vector<std::vector<Rational>> cells;
        std::size_t j = 0;
        for (const auto& cell : row.cast<py::sequence>()) {
            if (diagonal_none && i == j) {
                require(cell.is_none(), Errc::diagonal_present,
                        "asym diagonal entries must be None");
                cells.emplace_back();
            } else {
                cells.push_back(to_values(cell.cast<py::sequence>()));
            }
            ++j;
        }
        table.push_back(std::move(cells));
        ++i;
    }
    return table;
}

py::object table_to_py(const ValueTable& table, bool diagonal_none) {
    py::list rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
        py::list cells;
        for (std::size_t j = 0; j < table[i].size(); ++j) {
            if (diagonal_none && i == j)
                cells.append(py::none());
            else
                cells.append(from_values(table[i][j]));
        }
        rows.append(std::move(cells));
    }
    return rows;
}

Allocation allocation_from_bundles(const py::sequence& bundles, std::size_t m) {
    std::vector<ItemSet> sets;
    for (const auto& bundle : bundles) {
        ItemSet set = bundle.cast<ItemSet>();
        std::sort(set.begin(), set.end());
        sets.push_back(std::move(set));
    }
    return Allocation::from_bundles(sets, m);
}

py::dict certificate_to_py(const EfcCertificate& certificate) {
    py::list pairs;
    for (const PairRecord& record : certificate.pairs) {
        py::dict entry;
        entry["envier"] = record.envier;
        entry["envied"] = record.envied;
        entry["count"] = record.count;
        entry["discards"] = record.witness;
        pairs.append(std::move(entry));
    }
    py::dict result;
    result["c"] = certificate.c;
    result["pairs"] = std::move(pairs);
    return result;
}

SolverConfig make_config(const std::string& solver, std::uint64_t seed,
                         std::optional<std::uint64_t> budget) {
    SolverConfig config;
    config.strategy = parse_strategy(solver);
    config.seed = seed;
    if (budget.has_value())
        config.budget = *budget;
    return config;
}

py::dict allocate_result_to_py(const AllocateResult& result) {
    py::dict out;
    out["bundles"] = result.allocation.bundles();
    out["T_final"] = result.T_final;
    out["certified_bound"] = result.certified_bound;
    out["achieved"] = format_rational(result.achieved);
    out["certificate"] = certificate_to_py(result.certificate);
    return out;
}

} // namespace

PYBIND11_MODULE(_fdx, m) {
    m.doc() = "Fair division with externalities: exact certification, "
              "discrepancy-based allocators, hard-instance generators.";

    py::register_exception<Error>(m, "FdxError");

    py::class_<ExternInstance>(m, "ExternInstance")
        .def_property_readonly("n", &ExternInstance::agent_count)
        .def_property_readonly("m", &ExternInstance::item_count)
        .def_property_readonly("items", &ExternInstance::items)
        .def_property_readonly("is_binary", &ExternInstance::is_binary)
        .def_property_readonly("has_no_chores", &ExternInstance::has_no_chores)
        .def("values", [](const ExternInstance& self) {
            return table_to_py(self.values(), false);
        })
        .def("value",
             [](const ExternInstance& self, std::size_t i, std::size_t j, std::size_t x) {
                 return format_rational(self.value(i, j, x));
             },
             py::arg("i"), py::arg("j"), py::arg("x"))
        .def("to_json",
             [](const ExternInstance& self) { return io::to_json(self).dump(2); })
        .def("__repr__", [](const ExternInstance& self) {
            return "<ExternInstance n=" + std::to_string(self.agent_count()) +
                   " m=" + std::to_string(self.item_count()) + ">";
        });

    py::class_<AsymInstance>(m, "AsymInstance")
        .def_property_readonly("n", &AsymInstance::agent_count)
        .def_property_readonly("m", &AsymInstance::item_count)
        .def_property_readonly("items", &AsymInstance::items)
        .def_property_readonly("is_binary", &AsymInstance::is_binary)
        .def_property_readonly("has_no_chores", &AsymInstance::has_no_chores)
        .def("values", [](const AsymInstance& self) {
            return table_to_py(self.values(), true);
        })
        .def("pair_values",
             [](const AsymInstance& self, std::size_t i, std::size_t j) {
                 return from_values(self.pair_values(i, j));
             },
             py::arg("i"), py::arg("j"))
        .def("to_json", [](const AsymInstance& self) { return io::to_json(self).dump(2); })
        .def("__repr__", [](const AsymInstance& self) {
            return "<AsymInstance n=" + std::to_string(self.agent_count()) +
                   " m=" + std::to_string(self.item_count()) + ">";
        });

    m.def(
        "make_extern_instance",
        [](std::size_t n, const std::vector<std::string>& items, const py::sequence& values) {
            return ExternInstance::create(n, items, table_from_py(values, false));
        },
        py::arg("n"), py::arg("items"), py::arg("values"));
    m.def(
        "make_asym_instance",
        [](std::size_t n, const std::vector<std::string>& items, const py::sequence& values) {
            return AsymInstance::create(n, items, table_from_py(values, true));
        },
        py::arg("n"), py::arg("items"), py::arg("values"));
    m.def("instance_from_json", [](const std::string& text) -> py::object {
        auto parsed = io::parse_instance(io::json::parse(text));
        if (auto* ext = std::get_if<ExternInstance>(&parsed))
            return py::cast(*ext);
        return py::cast(std::get<AsymInstance>(parsed));
    });

    m.def("to_asym", &to_asym, py::arg("instance"));
    m.def("lift_additive", &lift_additive, py::arg("instance"));
    m.def("lift_binary", &lift_binary, py::arg("instance"));

    m.def(
        "allocation_value",
        [](const ExternInstance& instance, const py::sequence& bundles, std::size_t agent) {
            return format_rational(allocation_value(
                instance, allocation_from_bundles(bundles, instance.item_count()), agent));
        },
        py::arg("instance"), py::arg("bundles"), py::arg("agent"));

    m.def(
        "certify_efc",
        [](const AsymInstance& instance, const py::sequence& bundles) {
            return certificate_to_py(
                certify_efc(instance, allocation_from_bundles(bundles, instance.item_count())));
        },
        py::arg("instance"), py::arg("bundles"));

    m.def(
        "extern_envy",
        [](const ExternInstance& instance, const py::sequence& bundles, std::size_t envier,
           std::size_t envied) {
            return extern_envy(instance,
                               allocation_from_bundles(bundles, instance.item_count()), envier,
                               envied);
        },
        py::arg("instance"), py::arg("bundles"), py::arg("envier"), py::arg("envied"));

    m.def(
        "min_discard_pair",
        [](const py::sequence& values, const ItemSet& own, const ItemSet& other) {
            DiscardResult result = min_discard_pair(to_values(values), own, other);
            return py::make_tuple(result.count, result.witness);
        },
        py::arg("values"), py::arg("own"), py::arg("other"));

    m.def(
        "brute_min_discard_pair",
        [](const py::sequence& values, const ItemSet& own, const ItemSet& other) {
            return brute_min_discard_pair(to_values(values), own, other);
        },
        py::arg("values"), py::arg("own"), py::arg("other"));

    m.def(
        "brute_min_efc",
        [](const AsymInstance& instance, std::optional<std::uint64_t> budget) {
            BruteEfcResult result =
                brute_min_efc(instance, budget.value_or(kDefaultAllocationBudget));
            py::dict out;
            out["c"] = result.c;
            out["bundles"] = result.best.bundles();
            return out;
        },
        py::arg("instance"), py::arg("budget") = py::none());

    m.def(
        "wdisc_brute",
        [](const py::sequence& vectors, const py::handle& p,
           std::optional<std::uint64_t> budget) {
            WdiscResult result = wdisc_brute(to_vectors(vectors), to_rational(p),
                                             budget.value_or(std::uint64_t(1) << 25));
            py::dict out;
            out["value"] = format_rational(result.value);
            out["argmin"] = result.argmin;
            return out;
        },
        py::arg("vectors"), py::arg("p"), py::arg("budget") = py::none());

    m.def(
        "allocate_nonconsensus",
        [](const AsymInstance& instance, const std::string& solver, std::uint64_t seed,
           std::optional<std::uint64_t> budget) {
            return allocate_result_to_py(
                allocate_nonconsensus(instance, make_config(solver, seed, budget)));
        },
        py::arg("instance"), py::arg("solver") = "local", py::arg("seed") = 0,
        py::arg("budget") = py::none());

    m.def(
        "allocate_extern",
        [](const ExternInstance& instance, const std::string& solver, std::uint64_t seed,
           std::optional<std::uint64_t> budget) {
            return allocate_result_to_py(
                allocate_extern(instance, make_config(solver, seed, budget)));
        },
        py::arg("instance"), py::arg("solver") = "local", py::arg("seed") = 0,
        py::arg("budget") = py::none());

    m.def(
        "consensus_partition",
        [](const py::sequence& valuations, std::size_t k, const std::string& solver,
           std::uint64_t seed, std::optional<std::uint64_t> budget) {
            ConsensusResult result =
                consensus_partition(to_vectors(valuations), k, make_config(solver, seed, budget));
            py::dict out;
            out["bundles"] = result.bundles;
            out["T_final"] = result.T_final;
            out["certified_bound"] = result.certified_bound;
            out["achieved"] = format_rational(result.achieved);
            return out;
        },
        py::arg("valuations"), py::arg("k"), py::arg("solver") = "local", py::arg("seed") = 0,
        py::arg("budget") = py::none());

    m.def(
        "truthful_allocate",
        [](const ExternInstance& instance, const std::string& solver, std::uint64_t seed,
           std::optional<std::uint64_t> budget) {
            TruthfulResult result =
                truthful_allocate(instance, make_config(solver, seed, budget), seed);
            py::dict out;
            out["bundles"] = result.allocation.bundles();
            out["bundle_to_agent"] = result.bundle_to_agent;
            out["T_final"] = result.T_final;
            out["certified_bound"] = result.certified_bound;
            out["achieved"] = format_rational(result.achieved);
            out["certificate"] = certificate_to_py(result.certificate);
            return out;
        },
        py::arg("instance"), py::arg("solver") = "local", py::arg("seed") = 0,
        py::arg("budget") = py::none());

    m.def("expected_utilities", [](const ExternInstance& instance) {
        return from_values(expected_utilities(instance));
    });

    m.def("sylvester_hadamard", &sylvester_hadamard, py::arg("order"));
    m.def(
        "mm_sets",
        [](std::size_t q, std::size_t copies) {
            HyperedgeSets sets = mm_sets(q, copies);
            py::dict out;
            out["q"] = sets.q;
            out["m"] = sets.m;
            out["sets"] = sets.sets;
            return out;
        },
        py::arg("q"), py::arg("copies"));
    m.def(
        "lb_asym_instance",
        [](std::size_t q, std::size_t copies) { return lb_asym_instance(mm_sets(q, copies)); },
        py::arg("q"), py::arg("copies"));
    m.def(
        "star_extern_instance",
        [](std::size_t q, std::size_t copies) {
            return star_extern_instance(mm_sets(q, copies));
        },
        py::arg("q"), py::arg("copies"));
    m.def("random_extern_instance", &random_extern_instance, py::arg("n"), py::arg("m"),
          py::arg("lo") = -5, py::arg("hi") = 5, py::arg("binary") = false,
          py::arg("no_chores") = false, py::arg("seed") = 0);
    m.def("random_asym_instance", &random_asym_instance, py::arg("n"), py::arg("m"),
          py::arg("lo") = -5, py::arg("hi") = 5, py::arg("binary") = false,
          py::arg("no_chores") = false, py::arg("seed") = 0);
}
