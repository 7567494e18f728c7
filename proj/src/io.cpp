#include "fairseq/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fairseq {

using nlohmann::json;

ParseError::ParseError(int line_, int field_, const std::string &msg)
    : std::runtime_error("line " + std::to_string(line_) +
                         (field_ > 0 ? ", field " + std::to_string(field_)
                                     : std::string()) +
                         ": " + msg),
      line(line_), field(field_) {}

RepeatedAssignment parse_sequence_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(1, 0, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("days"))
        throw ParseError(1, 0, "expected object with \"n\" and \"days\"");
    if (!doc["n"].is_number_integer())
        throw ParseError(1, 0, "\"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (!doc["days"].is_array())
        throw ParseError(1, 0, "\"days\" must be an array of arrays");
    std::vector<std::vector<int>> days;
    for (const auto &d : doc["days"]) {
        if (!d.is_array())
            throw ParseError(1, 0, "each day must be an array");
        std::vector<int> day;
        for (const auto &x : d) {
            if (!x.is_number_integer())
                throw ParseError(1, 0, "items must be integers");
            day.push_back(x.get<int>());
        }
        days.push_back(std::move(day));
    }
    try {
        return RepeatedAssignment(n, std::move(days));
    } catch (const std::invalid_argument &e) {
        throw ParseError(1, 0, e.what());
    }
}

std::string sequence_to_json(const RepeatedAssignment &seq) {
    json doc;
    doc["n"] = seq.n();
    doc["days"] = seq.days();
    return doc.dump(2) + "\n";
}

RepeatedAssignment parse_sequence_csv(const std::string &text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<int> row;
        std::istringstream ls(line);
        std::string cell;
        int field = 0;
        while (std::getline(ls, cell, ',')) {
            ++field;
            try {
                size_t pos = 0;
                int value = std::stoi(cell, &pos);
                while (pos < cell.size() && std::isspace(
                           static_cast<unsigned char>(cell[pos])))
                    ++pos;
                if (pos != cell.size())
                    throw std::invalid_argument("trailing characters");
                row.push_back(value);
            } catch (const std::exception &) {
                throw ParseError(line_no, field,
                                 "not an integer: \"" + cell + "\"");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError(1, 0, "empty file");
    try {
        return RepeatedAssignment::from_rows(static_cast<int>(rows.size()),
                                             rows);
    } catch (const std::invalid_argument &e) {
        throw ParseError(line_no, 0, e.what());
    }
}

std::string sequence_to_csv(const RepeatedAssignment &seq) {
    std::ostringstream os;
    for (const auto &row : seq.rows()) {
        for (size_t t = 0; t < row.size(); ++t)
            os << (t ? "," : "") << row[t];
        os << "\n";
    }
    return os.str();
}

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

} // namespace

RepeatedAssignment load_sequence(const std::filesystem::path &path) {
    std::string text = read_file(path);
    if (path.extension() == ".json")
        return parse_sequence_json(text);
    return parse_sequence_csv(text);
}

void save_sequence(const std::filesystem::path &path,
                   const RepeatedAssignment &seq) {
    if (path.extension() == ".json")
        write_file(path, sequence_to_json(seq));
    else
        write_file(path, sequence_to_csv(seq));
}

ResultStore::ResultStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultStore::save(const SearchConfig &cfg,
                                        const SearchOutcome &outcome) const {
    json doc;
    doc["config"] = {
        {"n", cfg.n},
        {"kind", to_string(cfg.kind)},
        {"max_days", cfg.effective_max_days()},
        {"timeout_seconds", cfg.timeout_seconds},
        {"symmetry_breaking", cfg.symmetry_breaking},
        {"deterministic", cfg.deterministic},
        {"workers", cfg.workers},
    };
    doc["status"] = to_string(outcome.status);
    doc["witness"] =
        outcome.witness ? json(outcome.witness->days()) : json(nullptr);
    doc["nodes"] = outcome.nodes_expanded;
    doc["max_depth"] = outcome.max_depth_reached;
    doc["elapsed_seconds"] = outcome.elapsed_seconds;
    doc["tool_version"] = kToolVersion;

    std::string stem =
        "n" + std::to_string(cfg.n) + "_" + to_string(cfg.kind) + "_d" +
        std::to_string(cfg.effective_max_days());
    std::filesystem::path path = dir_ / (stem + ".json");
    for (int k = 1; std::filesystem::exists(path); ++k)
        path = dir_ / (stem + "." + std::to_string(k) + ".json");
    write_file(path, doc.dump(2) + "\n");
    return path;
}

std::optional<ResultStore::Record>
ResultStore::load(int n, ConditionKind kind) const {
    std::optional<Record> found;
    for (const auto &entry : std::filesystem::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json")
            continue;
        json doc = json::parse(read_file(entry.path()));
        if (doc["config"]["n"].get<int>() != n ||
            doc["config"]["kind"].get<std::string>() != to_string(kind))
            continue;
        Record rec;
        rec.config.n = n;
        rec.config.kind = kind;
        rec.config.max_days = doc["config"]["max_days"].get<int>();
        std::string status = doc["status"].get<std::string>();
        rec.status = status == "sat"     ? SearchStatus::Sat
                     : status == "unsat" ? SearchStatus::Unsat
                                         : SearchStatus::Timeout;
        if (!doc["witness"].is_null()) {
            rec.witness.emplace(
                n, doc["witness"].get<std::vector<std::vector<int>>>());
            if (!check(*rec.witness, kind).valid())
                throw std::runtime_error("stored witness in " +
                                         entry.path().string() +
                                         " fails re-verification");
        }
        rec.nodes = doc["nodes"].get<std::uint64_t>();
        rec.elapsed_seconds = doc["elapsed_seconds"].get<double>();
        rec.tool_version = doc["tool_version"].get<std::string>();
        found = std::move(rec);
        break;
    }
    return found;
}

} // namespace fairseq
