#include "fdx/json_io.hpp"

#include "fdx/error.hpp"
#include "fdx/rational.hpp"

#include <fstream>
#include <limits>

namespace fdx::io {

Rational parse_value(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned())
            return Rational(value.get<std::uint64_t>());
        return Rational(value.get<std::int64_t>());
    }
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    fail(Errc::non_rational, "values must be integers or \"p/q\" strings, got " + value.dump());
}

json value_to_json(const Rational& value) {
    if (denominator(value) == 1) {
        static const BigInt lo(std::numeric_limits<std::int64_t>::min());
        static const BigInt hi(std::numeric_limits<std::int64_t>::max());
        BigInt num = numerator(value);
        if (num >= lo && num <= hi)
            return json(num.convert_to<std::int64_t>());
    }
    return json(format_rational(value));
}

namespace {

std::size_t get_size(const json& doc, const char* key) {
    require(doc.contains(key) && doc[key].is_number_integer() && doc[key].get<std::int64_t>() >= 0,
            Errc::dimension_mismatch, std::string("missing or invalid \"") + key + "\"");
    return doc[key].get<std::size_t>();
}

std::vector<std::string> get_items(const json& doc) {
    require(doc.contains("items") && doc["items"].is_array(), Errc::dimension_mismatch,
            "missing \"items\" array");
    std::vector<std::string> items;
    for (const auto& entry : doc["items"]) {
        require(entry.is_string(), Errc::dimension_mismatch, "item names must be strings");
        items.push_back(entry.get<std::string>());
    }
    return items;
}

ValueTable get_values(const json& doc, std::size_t n, bool diagonal_null) {
    require(doc.contains("values") && doc["values"].is_array(), Errc::dimension_mismatch,
            "missing \"values\" table");
    const json& table = doc["values"];
    require(table.size() == n, Errc::dimension_mismatch,
            "expected " + std::to_string(n) + " agent rows, got " + std::to_string(table.size()));

    ValueTable values(n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        require(table[i].is_array() && table[i].size() == n, Errc::dimension_mismatch,
                "agent row " + std::to_string(i) + " is not an array of length " +
                    std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const json& row = table[i][j];
            if (diagonal_null && i == j) {
                require(row.is_null(), Errc::diagonal_present,
                        "asym diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") must be null");
                continue;
            }
            require(row.is_array(), Errc::dimension_mismatch,
                    "value row (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not an array");
            values[i][j].reserve(row.size());
            for (const auto& entry : row)
                values[i][j].push_back(parse_value(entry));
        }
    }
    return values;
}

json values_to_json(const ValueTable& values, bool diagonal_null) {
    json table = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < values[i].size(); ++j) {
            if (diagonal_null && i == j) {
                row.push_back(nullptr);
                continue;
            }
            json entries = json::array();
            for (const Rational& v : values[i][j])
                entries.push_back(value_to_json(v));
            row.push_back(std::move(entries));
        }
        table.push_back(std::move(row));
    }
    return table;
}

} // namespace

std::variant<ExternInstance, AsymInstance> parse_instance(const json& doc) {
    require(doc.is_object() && doc.contains("model") && doc["model"].is_string(),
            Errc::dimension_mismatch, "instance file must carry a \"model\" field");
    std::string model = doc["model"].get<std::string>();
    std::size_t n = get_size(doc, "n");
    auto items = get_items(doc);

    if (model == "externalities")
        return ExternInstance::create(n, std::move(items), get_values(doc, n, false));
    if (model == "asym")
        return AsymInstance::create(n, std::move(items), get_values(doc, n, true));
    fail(Errc::dimension_mismatch, "unknown model '" + model + "'");
}

json to_json(const ExternInstance& instance) {
    return json{{"model", "externalities"},
                {"n", instance.agent_count()},
                {"items", instance.items()},
                {"values", values_to_json(instance.values(), false)}};
}

json to_json(const AsymInstance& instance) {
    return json{{"model", "asym"},
                {"n", instance.agent_count()},
                {"items", instance.items()},
                {"values", values_to_json(instance.values(), true)}};
}

Allocation parse_allocation(const json& doc, std::size_t n, std::size_t m) {
    require(doc.is_object() && doc.contains("bundles") && doc["bundles"].is_array(),
            Errc::dimension_mismatch, "allocation file must carry a \"bundles\" array");
    const json& lists = doc["bundles"];
    require(lists.size() == n, Errc::dimension_mismatch,
            "expected " + std::to_string(n) + " bundles, got " + std::to_string(lists.size()));
    std::vector<ItemSet> bundles(n);
    for (std::size_t a = 0; a < n; ++a) {
        require(lists[a].is_array(), Errc::dimension_mismatch, "bundles must be arrays");
        for (const auto& entry : lists[a]) {
            require(entry.is_number_integer() && entry.get<std::int64_t>() >= 0,
                    Errc::dimension_mismatch, "item indices must be non-negative integers");
            bundles[a].push_back(entry.get<std::size_t>());
        }
        std::sort(bundles[a].begin(), bundles[a].end());
    }
    return Allocation::from_bundles(bundles, m);
}

json to_json(const Allocation& allocation) {
    return json{{"bundles", allocation.bundles()}};
}

json to_json(const EfcCertificate& certificate) {
    json pairs = json::array();
    for (const PairRecord& record : certificate.pairs)
        pairs.push_back(json{{"i", record.envier + 1},
                             {"j", record.envied + 1},
                             {"count", record.count},
                             {"discards", record.witness}});
    return json{{"c", certificate.c}, {"pairs", std::move(pairs)}};
}

EfcCertificate parse_certificate(const json& doc) {
    require(doc.is_object() && doc.contains("c") && doc.contains("pairs") &&
                doc["pairs"].is_array(),
            Errc::dimension_mismatch, "certificate file must carry \"c\" and \"pairs\"");
    EfcCertificate certificate;
    certificate.c = doc["c"].get<std::size_t>();
    for (const auto& entry : doc["pairs"]) {
        PairRecord record;
        std::size_t i = entry.at("i").get<std::size_t>();
        std::size_t j = entry.at("j").get<std::size_t>();
        require(i >= 1 && j >= 1, Errc::dimension_mismatch, "certificate agents are 1-based");
        record.envier = i - 1;
        record.envied = j - 1;
        record.count = entry.at("count").get<std::size_t>();
        record.witness = entry.at("discards").get<ItemSet>();
        certificate.pairs.push_back(std::move(record));
    }
    return certificate;
}

std::vector<std::vector<Rational>> parse_valuation_vectors(const json& doc) {
    require(doc.is_object() && doc.contains("vectors") && doc["vectors"].is_array(),
            Errc::dimension_mismatch, "expected a \"vectors\" array");
    std::vector<std::vector<Rational>> vectors;
    for (const auto& row : doc["vectors"]) {
        require(row.is_array(), Errc::dimension_mismatch, "vectors must be arrays");
        std::vector<Rational> vec;
        for (const auto& entry : row)
            vec.push_back(parse_value(entry));
        vectors.push_back(std::move(vec));
    }
    return vectors;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream stream(path);
    require(stream.good(), Errc::io_error, "cannot open " + path.string());
    try {
        return json::parse(stream);
    } catch (const json::parse_error& e) {
        fail(Errc::dimension_mismatch, "invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
    std::ofstream stream(path);
    require(stream.good(), Errc::io_error, "cannot write " + path.string());
    stream << doc.dump(2) << '\n';
    require(stream.good(), Errc::io_error, "failed writing " + path.string());
}

} // namespace fdx::io
