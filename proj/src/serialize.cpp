#include "simonsim/serialize.hpp"

#include "simonsim/errors.hpp"

#include <fstream>
#include <sstream>

namespace simonsim {

namespace {

const Json &require(const Json &doc, const char *key) {
    if (!doc.is_object()) {
        throw ParseError("expected a JSON object");
    }
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return *it;
}

template <typename T> T get_as(const Json &doc, const char *key) {
    const Json &value = require(doc, key);
    try {
        return value.get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

int get_width(const Json &doc) {
    const Json &value = require(doc, "n");
    if (!value.is_number_integer()) {
        throw ParseError("field 'n' must be an integer");
    }
    const auto n = value.get<std::int64_t>();
    if (n < 1 || n > kMaxWordBits) {
        throw ParseError("field 'n' out of range: " + std::to_string(n));
    }
    return static_cast<int>(n);
}

Bits get_hex(const Json &value, int n, const char *what) {
    if (!value.is_string()) {
        throw ParseError(std::string(what) + " must be a hex string");
    }
    return parse_hex(value.get<std::string>(), n);
}

template <typename T> Json optional_to_json(const std::optional<T> &value) {
    return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json &doc, const char *key) {
    const auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
        return std::nullopt;
    }
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

} // namespace

Json function_to_json(const SimonFunction &f) {
    Json table = Json::array();
    for (Bits value : f.table()) {
        table.push_back(to_hex(value, f.n()));
    }
    Json doc;
    doc["n"] = f.n();
    doc["table"] = std::move(table);
    if (f.shift()) {
        doc["r"] = to_hex(f.shift()->value(), f.n());
    }
    return doc;
}

SimonFunction function_from_json(const Json &doc) {
    const int n = get_width(doc);
    const Json &table = require(doc, "table");
    if (!table.is_array()) {
        throw ParseError("field 'table' must be an array");
    }
    if (table.size() != dimension(n)) {
        throw ParseError("table has " + std::to_string(table.size()) +
                         " entries, expected " + std::to_string(dimension(n)));
    }
    std::vector<Bits> values;
    values.reserve(table.size());
    for (const Json &entry : table) {
        values.push_back(get_hex(entry, n, "table entry"));
    }
    std::optional<HiddenShift> shift;
    if (const auto it = doc.find("r"); it != doc.end() && !it->is_null()) {
        const Bits r = get_hex(*it, n, "field 'r'");
        if (r == 0) {
            throw InvalidShiftError("field 'r' must be nonzero");
        }
        shift = HiddenShift(r);
    }
    return SimonFunction(n, std::move(values), shift);
}

Json run_report_to_json(const RunReport &report) {
    Json doc;
    doc["n"] = report.n;
    doc["seed"] = report.seed;
    doc["measure_v"] = report.measure_v;
    doc["rounds"] = report.rounds;
    doc["oracle_queries"] = report.oracle_queries;
    doc["rank_trajectory"] = report.rank_trajectory;
    doc["recovered"] = report.recovered
                           ? Json(to_hex(report.recovered->value(), report.n))
                           : Json(nullptr);
    doc["success"] = report.success;
    return doc;
}

RunReport run_report_from_json(const Json &doc) {
    RunReport report;
    report.n = get_width(doc);
    report.seed = get_as<std::uint64_t>(doc, "seed");
    report.measure_v = get_as<bool>(doc, "measure_v");
    report.rounds = get_as<std::uint64_t>(doc, "rounds");
    report.oracle_queries = get_as<std::uint64_t>(doc, "oracle_queries");
    report.rank_trajectory = get_as<std::vector<int>>(doc, "rank_trajectory");
    if (const Json &rec = require(doc, "recovered"); !rec.is_null()) {
        report.recovered = HiddenShift(get_hex(rec, report.n, "recovered"));
    }
    report.success = get_as<bool>(doc, "success");
    return report;
}

Json collision_to_json(const CollisionResult &result) {
    Json doc;
    doc["n"] = result.n;
    doc["strategy"] = std::string(to_string(result.strategy));
    doc["x1"] = to_hex(result.x1, result.n);
    doc["x2"] = to_hex(result.x2, result.n);
    doc["queries"] = result.queries;
    return doc;
}

CollisionResult collision_from_json(const Json &doc) {
    CollisionResult result;
    result.n = get_width(doc);
    try {
        result.strategy = parse_strategy(get_as<std::string>(doc, "strategy"));
    } catch (const ArgumentError &e) {
        throw ParseError(e.what());
    }
    result.x1 = get_hex(require(doc, "x1"), result.n, "x1");
    result.x2 = get_hex(require(doc, "x2"), result.n, "x2");
    result.queries = get_as<std::uint64_t>(doc, "queries");
    return result;
}

Json cost_report_to_json(const CostReport &report) {
    Json doc;
    doc["n"] = report.n;
    doc["quantum_rounds"] = optional_to_json(report.quantum_rounds);
    doc["quantum_oracle_queries"] =
        optional_to_json(report.quantum_oracle_queries);
    doc["quantum_measurement_units"] =
        optional_to_json(report.quantum_measurement_units);
    doc["classical_scan_queries"] =
        optional_to_json(report.classical_scan_queries);
    doc["classical_birthday_queries"] =
        optional_to_json(report.classical_birthday_queries);
    doc["printout_terms"] = report.printout_terms;
    doc["printout_term_bits"] = report.printout_term_bits;
    return doc;
}

CostReport cost_report_from_json(const Json &doc) {
    CostReport report;
    report.n = get_width(doc);
    report.quantum_rounds =
        optional_from_json<std::uint64_t>(doc, "quantum_rounds");
    report.quantum_oracle_queries =
        optional_from_json<std::uint64_t>(doc, "quantum_oracle_queries");
    report.quantum_measurement_units =
        optional_from_json<std::uint64_t>(doc, "quantum_measurement_units");
    report.classical_scan_queries =
        optional_from_json<std::uint64_t>(doc, "classical_scan_queries");
    report.classical_birthday_queries =
        optional_from_json<double>(doc, "classical_birthday_queries");
    report.printout_terms = get_as<std::uint64_t>(doc, "printout_terms");
    report.printout_term_bits = get_as<std::uint64_t>(doc, "printout_term_bits");
    return report;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path,
                     const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << contents;
    if (!out) {
        throw Error("write to '" + path.string() + "' failed");
    }
}

} // namespace simonsim
