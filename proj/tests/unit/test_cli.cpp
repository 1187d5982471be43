#include "fdx/cli.hpp"

#include "fdx/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

using namespace fdx;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("fdx_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int value = 0;
        return value;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream stream(path);
    std::ostringstream out;
    out << stream.rdbuf();
    return out.str();
}

std::string strip_wall_ms(const std::string& csv) {
    // drop the wall_ms column (second to last)
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto last = line.rfind(',');
        auto second = line.rfind(',', last - 1);
        out << line.substr(0, second) << line.substr(last) << '\n';
    }
    return out.str();
}

} // namespace

TEST_CASE("generated artifacts re-validate on load") {
    TempDir dir;
    REQUIRE(cli::run({"generate", "--family", "random", "--model", "asym", "--n", "3", "--m",
                      "4", "--binary", "--seed", "5", "-o", dir.file("inst.json")}) == 0);
    auto parsed = io::parse_instance(io::load_json_file(dir.file("inst.json")));
    CHECK(std::get<AsymInstance>(parsed).is_binary());

    REQUIRE(cli::run({"generate", "--family", "star", "--q", "2", "--copies", "1", "-o",
                      dir.file("star.json")}) == 0);
    auto star = io::parse_instance(io::load_json_file(dir.file("star.json")));
    CHECK(std::get<ExternInstance>(star).agent_count() == 5);
}

TEST_CASE("convert round trips are byte-identical") {
    TempDir dir;
    REQUIRE(cli::run({"generate", "--family", "lb-asym", "--q", "2", "--copies", "2", "-o",
                      dir.file("lb.json")}) == 0);
    REQUIRE(cli::run({"convert", "-i", dir.file("lb.json"), "-o", dir.file("ext.json")}) == 0);
    REQUIRE(cli::run({"convert", "-i", dir.file("ext.json"), "-o", dir.file("back.json")}) == 0);
    CHECK(read_file(dir.file("lb.json")) == read_file(dir.file("back.json")));

    // and the lifted externalities form is itself a fixed point
    REQUIRE(cli::run({"convert", "-i", dir.file("back.json"), "-o", dir.file("ext2.json")}) == 0);
    CHECK(read_file(dir.file("ext.json")) == read_file(dir.file("ext2.json")));
}

TEST_CASE("allocate writes allocation, certificate, and report that re-validate") {
    TempDir dir;
    REQUIRE(cli::run({"generate", "--family", "random", "--model", "asym", "--n", "3", "--m",
                      "6", "--seed", "2", "-o", dir.file("inst.json")}) == 0);
    REQUIRE(cli::run({"allocate", "-i", dir.file("inst.json"), "--method", "nonconsensus",
                      "--solver", "local", "--seed", "3", "-o", dir.file("alloc.json"),
                      "--certificate", dir.file("cert.json"), "--report",
                      dir.file("report.json")}) == 0);

    auto instance =
        std::get<AsymInstance>(io::parse_instance(io::load_json_file(dir.file("inst.json"))));
    Allocation allocation = io::parse_allocation(io::load_json_file(dir.file("alloc.json")),
                                                 instance.agent_count(), instance.item_count());
    EfcCertificate certificate =
        io::parse_certificate(io::load_json_file(dir.file("cert.json")));
    io::json report = io::load_json_file(dir.file("report.json"));
    CHECK(report["measured_c"].get<std::size_t>() == certificate.c);
    CHECK(certificate.c <= report["certified_bound"].get<std::size_t>());
    CHECK(report["certified_bound"].get<std::size_t>() ==
          14 * report["T_final"].get<std::size_t>());
    CHECK(allocation.item_count() == instance.item_count());
}

TEST_CASE("certify reports zero for an envy-free allocation") {
    TempDir dir;
    io::json instance = {{"model", "asym"},
                         {"n", 2},
                         {"items", {"a", "b"}},
                         {"values", {{nullptr, {1, 0}}, {{0, 1}, nullptr}}}};
    io::write_json_file(dir.file("inst.json"), instance);
    io::write_json_file(dir.file("alloc.json"), io::json{{"bundles", {{0}, {1}}}});
    REQUIRE(cli::run({"certify", "-i", dir.file("inst.json"), "-a", dir.file("alloc.json"),
                      "-o", dir.file("cert.json")}) == 0);
    EfcCertificate certificate =
        io::parse_certificate(io::load_json_file(dir.file("cert.json")));
    CHECK(certificate.c == 0);
}

TEST_CASE("oracle and wdisc write their results") {
    TempDir dir;
    io::json instance = {{"model", "asym"},
                         {"n", 2},
                         {"items", {"a"}},
                         {"values", {{nullptr, {1}}, {{1}, nullptr}}}};
    io::write_json_file(dir.file("inst.json"), instance);
    REQUIRE(cli::run({"oracle", "-i", dir.file("inst.json"), "-o", dir.file("best.json")}) == 0);
    io::json best = io::load_json_file(dir.file("best.json"));
    CHECK(best["c"] == 1);

    io::write_json_file(dir.file("vectors.json"),
                        io::json{{"vectors", {{1, 1, 1}}}});
    REQUIRE(cli::run({"wdisc", "-i", dir.file("vectors.json"), "--p", "1/2", "-o",
                      dir.file("w.json")}) == 0);
    CHECK(io::load_json_file(dir.file("w.json"))["value"] == "1/2");
}

TEST_CASE("bench emits a deterministic CSV up to timing") {
    TempDir dir;
    std::vector<std::string> args{"bench", "--n",     "3",    "--n",   "4",
                                  "--seeds", "2",     "--m-factor", "2", "--solver", "local",
                                  "-o",    dir.file("a.csv")};
    REQUIRE(cli::run(args) == 0);
    args.back() = dir.file("b.csv");
    REQUIRE(cli::run(args) == 0);
    std::string a = read_file(dir.file("a.csv"));
    std::string b = read_file(dir.file("b.csv"));
    CHECK(strip_wall_ms(a) == strip_wall_ms(b));
    CHECK(a.find("n,m,seed,method,solver,T_final,achieved_discrepancy,certified_bound,"
                 "measured_c,wall_ms,c_over_sqrt_n") == 0);
}

TEST_CASE("exit codes map error classes") {
    TempDir dir;
    // missing input file -> 1
    CHECK(cli::run({"convert", "-i", dir.file("absent.json"), "-o", dir.file("out.json")}) == 1);

    // malformed instance -> 2
    std::ofstream(dir.file("bad.json")) << "{\"model\": \"asym\", \"n\": 2}";
    CHECK(cli::run({"convert", "-i", dir.file("bad.json"), "-o", dir.file("out.json")}) == 2);

    // oracle over budget -> 3
    REQUIRE(cli::run({"generate", "--family", "random", "--model", "asym", "--n", "4", "--m",
                      "14", "--seed", "1", "-o", dir.file("big.json")}) == 0);
    CHECK(cli::run({"oracle", "-i", dir.file("big.json"), "--budget", "100", "-o",
                    dir.file("o.json")}) == 3);

    // usage errors -> 2
    CHECK(cli::run({"allocate"}) == 2);
    CHECK(cli::run({"generate", "--family", "nope", "-o", dir.file("x.json")}) == 2);
}
