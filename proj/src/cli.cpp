#include "fdx/cli.hpp"

#include "fdx/allocators.hpp"
#include "fdx/envy.hpp"
#include "fdx/error.hpp"
#include "fdx/generators.hpp"
#include "fdx/json_io.hpp"
#include "fdx/reductions.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fdx::cli {

namespace {

using io::json;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::string hash_hex(const json& doc) {
    std::ostringstream out;
    out << "0x" << std::hex << fnv1a64(doc.dump());
    return out.str();
}

std::optional<std::uint64_t> env_budget() {
    const char* raw = std::getenv("FDX_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    require(end != nullptr && *end == '\0', Errc::bad_argument,
            "FDX_BUDGET must be a non-negative integer");
    return value;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
    if (flag.has_value())
        return *flag;
    if (auto env = env_budget())
        return *env;
    return fallback;
}

struct LoadedInstance {
    std::optional<ExternInstance> externalities;
    AsymInstance asym;
};

LoadedInstance load_instance(const std::filesystem::path& path) {
    auto parsed = io::parse_instance(io::load_json_file(path));
    if (auto* ext = std::get_if<ExternInstance>(&parsed))
        return {*ext, to_asym(*ext)};
    return {std::nullopt, std::get<AsymInstance>(std::move(parsed))};
}

std::filesystem::path derive_path(const std::filesystem::path& base, const std::string& suffix) {
    std::filesystem::path derived = base;
    derived.replace_extension();
    derived += suffix;
    return derived;
}

std::vector<std::vector<Rational>> pair_valuations(const AsymInstance& instance) {
    std::vector<std::vector<Rational>> valuations;
    std::size_t n = instance.agent_count();
    valuations.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                valuations.push_back(instance.pair_values(i, j));
    return valuations;
}

struct AllocateOutcome {
    Allocation allocation;
    std::size_t T_final;
    std::size_t certified_bound;
    Rational achieved;
    EfcCertificate certificate;
};

AllocateOutcome run_method(const LoadedInstance& loaded, const std::string& method,
                           const SolverConfig& config, std::uint64_t seed) {
    const AsymInstance& asym = loaded.asym;
    if (method == "nonconsensus") {
        AllocateResult result = allocate_nonconsensus(asym, config);
        return {result.allocation, result.T_final, result.certified_bound, result.achieved,
                result.certificate};
    }
    if (method == "consensus") {
        ConsensusResult partition =
            consensus_partition(pair_valuations(asym), asym.agent_count(), config);
        std::vector<std::size_t> assignment(asym.item_count());
        for (std::size_t b = 0; b < partition.bundles.size(); ++b)
            for (std::size_t x : partition.bundles[b])
                assignment[x] = b;
        Allocation allocation = Allocation::create(std::move(assignment), asym.agent_count());
        EfcCertificate certificate = certify_efc(asym, allocation);
        return {std::move(allocation), partition.T_final, partition.certified_bound,
                partition.achieved, std::move(certificate)};
    }
    if (method == "truthful") {
        ExternInstance instance =
            loaded.externalities.has_value() ? *loaded.externalities : lift_additive(asym);
        TruthfulResult result = truthful_allocate(instance, config, seed);
        return {result.allocation, result.T_final, result.certified_bound, result.achieved,
                result.certificate};
    }
    fail(Errc::bad_argument, "unknown method '" + method + "'");
}

int command_generate(const std::string& family, const std::string& model, std::size_t q,
                     std::optional<std::size_t> copies, std::size_t n, std::size_t m,
                     long vmin, long vmax, bool binary, bool no_chores, std::uint64_t seed,
                     const std::string& out) {
    json doc;
    if (family == "lb-asym") {
        auto sets = mm_sets(q, copies.value_or(2 * q));
        doc = io::to_json(lb_asym_instance(sets));
    } else if (family == "star") {
        auto sets = mm_sets(q, copies.value_or(2 * q));
        doc = io::to_json(star_extern_instance(sets));
    } else if (family == "random") {
        if (model == "externalities")
            doc = io::to_json(random_extern_instance(n, m, vmin, vmax, binary, no_chores, seed));
        else if (model == "asym")
            doc = io::to_json(random_asym_instance(n, m, vmin, vmax, binary, no_chores, seed));
        else
            fail(Errc::bad_argument, "unknown model '" + model + "'");
    } else {
        fail(Errc::bad_argument, "unknown family '" + family + "'");
    }
    io::write_json_file(out, doc);
    return 0;
}

int command_convert(const std::string& in, const std::string& out) {
    auto parsed = io::parse_instance(io::load_json_file(in));
    json doc;
    if (auto* ext = std::get_if<ExternInstance>(&parsed)) {
        doc = io::to_json(to_asym(*ext));
    } else {
        const AsymInstance& asym = std::get<AsymInstance>(parsed);
        doc = io::to_json(asym.is_binary() ? lift_binary(asym) : lift_additive(asym));
    }
    io::write_json_file(out, doc);
    return 0;
}

int command_allocate(const std::string& in, const std::string& method,
                     const std::string& solver, std::uint64_t seed,
                     std::optional<std::uint64_t> budget, const std::string& out,
                     std::string cert_path, std::string report_path) {
    LoadedInstance loaded = load_instance(in);

    SolverConfig config;
    config.strategy = parse_strategy(solver);
    config.seed = seed;
    if (budget.has_value())
        config.budget = *budget;
    else if (auto env = env_budget())
        config.budget = *env;

    if (cert_path.empty())
        cert_path = derive_path(out, ".cert.json").string();
    if (report_path.empty())
        report_path = derive_path(out, ".report.json").string();

    AllocateOutcome outcome = run_method(loaded, method, config, seed);

    json allocation_doc = io::to_json(outcome.allocation);
    json certificate_doc = io::to_json(outcome.certificate);
    io::write_json_file(out, allocation_doc);
    io::write_json_file(cert_path, certificate_doc);

    json report{{"method", method},
                {"solver", solver},
                {"seed", seed},
                {"T_final", outcome.T_final},
                {"certified_bound", outcome.certified_bound},
                {"achieved_discrepancy", format_rational(outcome.achieved)},
                {"measured_c", outcome.certificate.c},
                {"allocation_hash", hash_hex(allocation_doc)},
                {"certificate_hash", hash_hex(certificate_doc)}};
    if (config.budget.has_value())
        report["budget"] = *config.budget;
    io::write_json_file(report_path, report);
    return 0;
}

int command_certify(const std::string& in, const std::string& allocation_path,
                    const std::string& out) {
    LoadedInstance loaded = load_instance(in);
    Allocation allocation =
        io::parse_allocation(io::load_json_file(allocation_path), loaded.asym.agent_count(),
                             loaded.asym.item_count());
    EfcCertificate certificate = certify_efc(loaded.asym, allocation);
    json doc = io::to_json(certificate);
    if (out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        io::write_json_file(out, doc);
    return 0;
}

int command_oracle(const std::string& in, std::optional<std::uint64_t> budget,
                   const std::string& out) {
    LoadedInstance loaded = load_instance(in);
    BruteEfcResult result =
        brute_min_efc(loaded.asym, resolve_budget(budget, kDefaultAllocationBudget));
    json doc{{"c", result.c}, {"allocation", io::to_json(result.best)}};
    if (out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        io::write_json_file(out, doc);
    return 0;
}

int command_wdisc(const std::string& in, const std::string& p_text,
                  std::optional<std::uint64_t> budget, const std::string& out) {
    auto vectors = io::parse_valuation_vectors(io::load_json_file(in));
    Rational p = parse_rational(p_text);
    WdiscResult result =
        wdisc_brute(vectors, p, resolve_budget(budget, std::uint64_t(1) << 25));
    json doc{{"value", format_rational(result.value)}, {"argmin", result.argmin}};
    if (out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        io::write_json_file(out, doc);
    return 0;
}

int command_bench(std::vector<std::size_t> agent_counts, std::size_t m_factor,
                  std::size_t seeds, const std::string& method, const std::string& solver,
                  std::optional<std::uint64_t> budget, bool binary, const std::string& out) {
    std::sort(agent_counts.begin(), agent_counts.end());

    std::ostringstream csv;
    csv << "n,m,seed,method,solver,T_final,achieved_discrepancy,certified_bound,"
           "measured_c,wall_ms,c_over_sqrt_n\n";
    for (std::size_t n : agent_counts) {
        std::size_t m = n * m_factor;
        for (std::uint64_t seed = 0; seed < seeds; ++seed) {
            AsymInstance instance =
                random_asym_instance(n, m, -5, 5, binary, /*no_chores=*/false, seed);
            LoadedInstance loaded{std::nullopt, instance};

            SolverConfig config;
            config.strategy = parse_strategy(solver);
            config.seed = seed;
            if (budget.has_value())
                config.budget = *budget;

            auto start = std::chrono::steady_clock::now();
            AllocateOutcome outcome = run_method(loaded, method, config, seed);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();

            require(outcome.certificate.c <= outcome.certified_bound, Errc::assumption_violated,
                    "bench row violates its certified bound");
            double ratio = static_cast<double>(outcome.certificate.c) /
                           std::sqrt(static_cast<double>(n));
            csv << n << ',' << m << ',' << seed << ',' << method << ',' << solver << ','
                << outcome.T_final << ',' << format_rational(outcome.achieved) << ','
                << outcome.certified_bound << ',' << outcome.certificate.c << ',' << elapsed
                << ',' << ratio << '\n';
        }
    }

    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream stream(out);
        require(stream.good(), Errc::io_error, "cannot write " + out);
        stream << csv.str();
        require(stream.good(), Errc::io_error, "failed writing " + out);
    }
    return 0;
}

void emit_error(const std::string& code, const std::string& message) {
    std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
}

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::budget_exceeded:
        return 3;
    case Errc::io_error:
        return 1;
    default:
        return 2;
    }
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"fair division with externalities: generators, allocators, certification"};
    app.require_subcommand(1);

    // generate
    std::string family, model = "asym", gen_out;
    std::size_t q = 2, gen_n = 4, gen_m = 8;
    std::optional<std::size_t> copies;
    long vmin = -5, vmax = 5;
    bool binary = false, no_chores = false;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "write an instance JSON file");
    generate->add_option("--family", family, "instance family")
        ->required()
        ->check(CLI::IsMember({"lb-asym", "star", "random"}));
    generate->add_option("--model", model, "random family: externalities or asym")
        ->check(CLI::IsMember({"externalities", "asym"}));
    generate->add_option("--q", q, "hyperedge count (power of two)");
    generate->add_option("--copies", copies, "stacked copies (default 2q)");
    generate->add_option("--n", gen_n, "agent count (random family)");
    generate->add_option("--m", gen_m, "item count (random family)");
    generate->add_option("--vmin", vmin, "minimum value (random family)");
    generate->add_option("--vmax", vmax, "maximum value (random family)");
    generate->add_flag("--binary", binary, "sample {0,1} values");
    generate->add_flag("--no-chores", no_chores, "enforce the no-chores property");
    generate->add_option("--seed", gen_seed, "random seed");
    generate->add_option("-o,--output", gen_out, "output file")->required();

    // convert
    std::string conv_in, conv_out;
    auto* convert = app.add_subcommand("convert", "convert between the two instance models");
    convert->add_option("-i,--input", conv_in, "input instance")->required();
    convert->add_option("-o,--output", conv_out, "output instance")->required();

    // allocate
    std::string alloc_in, alloc_method = "nonconsensus", alloc_solver = "local";
    std::string alloc_out, alloc_cert, alloc_report;
    std::uint64_t alloc_seed = 0;
    std::optional<std::uint64_t> alloc_budget;
    auto* allocate = app.add_subcommand("allocate", "compute an allocation with a certificate");
    allocate->add_option("-i,--input", alloc_in, "instance file")->required();
    allocate->add_option("--method", alloc_method, "allocation method")
        ->check(CLI::IsMember({"nonconsensus", "consensus", "truthful"}));
    allocate->add_option("--solver", alloc_solver, "coloring solver")
        ->check(CLI::IsMember({"exhaustive", "random", "local"}));
    allocate->add_option("--seed", alloc_seed, "random seed");
    allocate->add_option("--budget", alloc_budget, "solver budget");
    allocate->add_option("-o,--output", alloc_out, "allocation file")->required();
    allocate->add_option("--certificate", alloc_cert, "certificate file");
    allocate->add_option("--report", alloc_report, "run report file");

    // certify
    std::string cert_in, cert_alloc, cert_out;
    auto* certify = app.add_subcommand("certify", "certify an allocation");
    certify->add_option("-i,--input", cert_in, "instance file")->required();
    certify->add_option("-a,--allocation", cert_alloc, "allocation file")->required();
    certify->add_option("-o,--output", cert_out, "certificate file (default: stdout)");

    // oracle
    std::string oracle_in, oracle_out;
    std::optional<std::uint64_t> oracle_budget;
    auto* oracle = app.add_subcommand("oracle", "brute-force the optimal c over all allocations");
    oracle->add_option("-i,--input", oracle_in, "instance file")->required();
    oracle->add_option("--budget", oracle_budget, "allocation enumeration budget");
    oracle->add_option("-o,--output", oracle_out, "output file (default: stdout)");

    // wdisc
    std::string wdisc_in, wdisc_p, wdisc_out;
    std::optional<std::uint64_t> wdisc_budget;
    auto* wdisc = app.add_subcommand("wdisc", "exact weighted discrepancy of valuation vectors");
    wdisc->add_option("-i,--input", wdisc_in, "valuation vectors file")->required();
    wdisc->add_option("--p", wdisc_p, "weight p as a rational, e.g. 1/5")->required();
    wdisc->add_option("--budget", wdisc_budget, "subset enumeration budget");
    wdisc->add_option("-o,--output", wdisc_out, "output file (default: stdout)");

    // bench
    std::vector<std::size_t> bench_n{4, 9, 16, 25, 36};
    std::size_t bench_m_factor = 2, bench_seeds = 3;
    std::string bench_method = "nonconsensus", bench_solver = "local", bench_out;
    std::optional<std::uint64_t> bench_budget;
    bool bench_binary = true;
    auto* bench = app.add_subcommand("bench", "allocate over a size/seed grid, emit CSV");
    bench->add_option("--n", bench_n, "agent counts");
    bench->add_option("--m-factor", bench_m_factor, "items per agent");
    bench->add_option("--seeds", bench_seeds, "number of seeds (0..seeds-1)");
    bench->add_option("--method", bench_method, "allocation method")
        ->check(CLI::IsMember({"nonconsensus", "consensus", "truthful"}));
    bench->add_option("--solver", bench_solver, "coloring solver")
        ->check(CLI::IsMember({"exhaustive", "random", "local"}));
    bench->add_option("--budget", bench_budget, "solver budget");
    bench->add_flag("--binary,!--no-binary", bench_binary, "binary instance values");
    bench->add_option("-o,--output", bench_out, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (generate->parsed())
            return command_generate(family, model, q, copies, gen_n, gen_m, vmin, vmax, binary,
                                    no_chores, gen_seed, gen_out);
        if (convert->parsed())
            return command_convert(conv_in, conv_out);
        if (allocate->parsed())
            return command_allocate(alloc_in, alloc_method, alloc_solver, alloc_seed,
                                    alloc_budget, alloc_out, alloc_cert, alloc_report);
        if (certify->parsed())
            return command_certify(cert_in, cert_alloc, cert_out);
        if (oracle->parsed())
            return command_oracle(oracle_in, oracle_budget, oracle_out);
        if (wdisc->parsed())
            return command_wdisc(wdisc_in, wdisc_p, wdisc_budget, wdisc_out);
        if (bench->parsed())
            return command_bench(bench_n, bench_m_factor, bench_seeds, bench_method,
                                 bench_solver, bench_budget, bench_binary, bench_out);
        emit_error("usage", "no subcommand given");
        return 2;
    } catch (const Error& e) {
        emit_error(errc_name(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("fdx");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace fdx::cli
