#include "fdx/json_io.hpp"

#include "fdx/error.hpp"
#include "fdx/generators.hpp"

#include <doctest.h>

using namespace fdx;
using io::json;

TEST_CASE("extern instance JSON round trip") {
    json doc = {{"model", "externalities"},
                {"n", 2},
                {"items", {"a", "b"}},
                {"values",
                 {{{1, 0}, {"1/2", -2}},
                  {{0, "3/4"}, {1, 1}}}}};
    auto parsed = io::parse_instance(doc);
    auto* instance = std::get_if<ExternInstance>(&parsed);
    REQUIRE(instance != nullptr);
    CHECK(instance->value(0, 1, 0) == Rational(1, 2));
    CHECK(instance->value(0, 1, 1) == -2);

    auto reparsed = io::parse_instance(io::to_json(*instance));
    CHECK(std::get<ExternInstance>(reparsed).values() == instance->values());
}

TEST_CASE("asym instance JSON requires null diagonals") {
    json doc = {{"model", "asym"},
                {"n", 2},
                {"items", {"a"}},
                {"values", {{nullptr, {1}}, {{0}, nullptr}}}};
    auto parsed = io::parse_instance(doc);
    auto* instance = std::get_if<AsymInstance>(&parsed);
    REQUIRE(instance != nullptr);
    CHECK(instance->pair_values(0, 1)[0] == 1);

    json bad = doc;
    bad["values"][0][0] = {1}; // diagonal defined
    CHECK_THROWS_AS(io::parse_instance(bad), Error);
    try {
        io::parse_instance(bad);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::diagonal_present);
    }
}

TEST_CASE("malformed instance documents are rejected") {
    json missing_model = {{"n", 1}, {"items", json::array()}, {"values", json::array()}};
    CHECK_THROWS_AS(io::parse_instance(missing_model), Error);

    json wrong_rows = {{"model", "externalities"},
                       {"n", 2},
                       {"items", {"a"}},
                       {"values", {{{1}, {0}}, {{0}, {1}}, {{0}, {0}}}}};
    CHECK_THROWS_AS(io::parse_instance(wrong_rows), Error);

    json fractional = {{"model", "externalities"},
                       {"n", 1},
                       {"items", {"a"}},
                       {"values", {{{1.5}}}}};
    CHECK_THROWS_AS(io::parse_instance(fractional), Error);
    try {
        io::parse_instance(fractional);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_rational);
    }
}

TEST_CASE("instance JSON survives a disk round trip") {
    AsymInstance instance = random_asym_instance(3, 4, -5, 5, false, false, 5);
    auto path = std::filesystem::temp_directory_path() / "fdx_io_test_instance.json";
    io::write_json_file(path, io::to_json(instance));
    auto parsed = io::parse_instance(io::load_json_file(path));
    CHECK(std::get<AsymInstance>(parsed).values() == instance.values());
    std::filesystem::remove(path);
}

TEST_CASE("allocation JSON validates the partition") {
    json good = {{"bundles", {{0, 2}, {1}}}};
    Allocation allocation = io::parse_allocation(good, 2, 3);
    CHECK(allocation.assignee(2) == 0);
    auto round = io::parse_allocation(io::to_json(allocation), 2, 3);
    CHECK(round == allocation);

    CHECK_THROWS_AS(io::parse_allocation({{"bundles", {{0}, {0}}}}, 2, 2), Error);
    CHECK_THROWS_AS(io::parse_allocation({{"bundles", {{0}}}}, 2, 2), Error);
    CHECK_THROWS_AS(io::parse_allocation({{"bundles", {{0}, {}}}}, 2, 2), Error);
}

TEST_CASE("certificates serialize with 1-based agents and round trip") {
    EfcCertificate certificate;
    certificate.c = 2;
    certificate.pairs = {{0, 1, 2, {0, 3}}, {1, 0, 0, {}}};
    json doc = io::to_json(certificate);
    CHECK(doc["pairs"][0]["i"] == 1);
    CHECK(doc["pairs"][0]["j"] == 2);
    CHECK(doc["pairs"][0]["discards"] == json({0, 3}));

    EfcCertificate round = io::parse_certificate(doc);
    CHECK(round.c == certificate.c);
    CHECK(round.pairs[0].envier == 0);
    CHECK(round.pairs[0].envied == 1);
    CHECK(round.pairs[0].witness == ItemSet{0, 3});
}

TEST_CASE("valuation vector files parse") {
    json doc = {{"vectors", {{1, "1/2", 0}, {0, 1, 1}}}};
    auto vectors = io::parse_valuation_vectors(doc);
    REQUIRE(vectors.size() == 2);
    CHECK(vectors[0][1] == Rational(1, 2));
    CHECK_THROWS_AS(io::parse_valuation_vectors(json{{"rows", json::array()}}), Error);
}

TEST_CASE("missing files raise io_error") {
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/fdx/file.json"), Error);
    try {
        io::load_json_file("/nonexistent/fdx/file.json");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::io_error);
    }
}
