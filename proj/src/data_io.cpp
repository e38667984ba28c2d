#include "twistcode/data_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "json.hpp"
#include "twistcode/errors.hpp"

namespace twistcode {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error::parse("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error::parse(path + ": " + e.what());
    }
    return j;
}

struct RawTable {
    std::vector<std::pair<long, long>> fingerprints; // (order, size) per column
    std::vector<std::string> names;
    std::vector<long> degrees;
    std::vector<std::vector<Cyclotomic>> rows; // rows[i][column]
};

RawTable parse_table_file(const std::string& path) {
    json j = read_json(path);
    RawTable t;
    try {
        for (const auto& c : j.at("class_fingerprints"))
            t.fingerprints.push_back({c.at("order").get<long>(), c.at("size").get<long>()});
        for (const auto& ir : j.at("irreps")) {
            t.names.push_back(ir.at("name").get<std::string>());
            t.degrees.push_back(ir.at("degree").get<long>());
            std::vector<Cyclotomic> row;
            for (const auto& v : ir.at("values"))
                row.push_back(Cyclotomic::parse(v.get<std::string>()));
            if (row.size() != t.fingerprints.size())
                throw Error::parse(path + ": irrep '" + t.names.back() + "' has " +
                                   std::to_string(row.size()) + " values for " +
                                   std::to_string(t.fingerprints.size()) + " classes");
            t.rows.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw Error::parse(path + ": " + e.what());
    }
    return t;
}

struct RawGroup {
    std::string name;
    int degree = 0;
    std::string fundamental;
    std::string table_file;
    std::vector<CycMatrix> generators;
};

RawGroup parse_group_file(const std::string& path) {
    json j = read_json(path);
    RawGroup g;
    try {
        g.name = j.at("name").get<std::string>();
        g.degree = j.at("degree").get<int>();
        g.fundamental = j.at("fundamental").get<std::string>();
        g.table_file = j.value("character_table", "");
        for (const auto& gen : j.at("generators")) {
            CycMatrix m(g.degree, g.degree);
            if (static_cast<int>(gen.size()) != g.degree)
                throw Error::parse(path + ": generator row count != degree");
            for (int i = 0; i < g.degree; ++i) {
                if (static_cast<int>(gen[static_cast<std::size_t>(i)].size()) != g.degree)
                    throw Error::parse(path + ": generator column count != degree");
                for (int jj = 0; jj < g.degree; ++jj)
                    m.at(i, jj) = Cyclotomic::parse(gen[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)].get<std::string>());
            }
            g.generators.push_back(std::move(m));
        }
    } catch (const json::exception& e) {
        throw Error::parse(path + ": " + e.what());
    }
    return g;
}

// Align file columns to the group's canonical classes using the declared
// fundamental row, then build the validated table.
std::pair<IrrepTable, std::vector<int>> align_table(GroupPtr group, const RawTable& raw,
                                                    const std::string& fundamental,
                                                    const std::string& path) {
    const int nc = group->num_classes();
    if (static_cast<int>(raw.fingerprints.size()) != nc)
        throw Error::validation(path + ": table has " + std::to_string(raw.fingerprints.size()) +
                                " classes, group has " + std::to_string(nc));
    long size_sum = 0;
    for (auto& [o, s] : raw.fingerprints) size_sum += s;
    if (size_sum != group->size())
        throw Error::validation(path + ": class sizes sum to " + std::to_string(size_sum) +
                                ", |G| = " + std::to_string(group->size()));

    int fund_row = -1;
    for (std::size_t i = 0; i < raw.names.size(); ++i)
        if (raw.names[i] == fundamental) fund_row = static_cast<int>(i);
    if (fund_row < 0)
        throw Error::validation(path + ": declared fundamental '" + fundamental + "' not in table");

    std::vector<int> column_of(static_cast<std::size_t>(nc), -1);
    std::vector<bool> used(static_cast<std::size_t>(nc), false);
    for (int c = 0; c < nc; ++c) {
        const long order = group->class_order(c);
        const long size = group->class_sizes()[static_cast<std::size_t>(c)];
        const Cyclotomic& tr = group->class_trace(c);
        for (int j = 0; j < nc; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (raw.fingerprints[static_cast<std::size_t>(j)] != std::make_pair(order, size)) continue;
            if (raw.rows[static_cast<std::size_t>(fund_row)][static_cast<std::size_t>(j)] != tr) continue;
            column_of[static_cast<std::size_t>(c)] = j;
            used[static_cast<std::size_t>(j)] = true;
            break;
        }
        if (column_of[static_cast<std::size_t>(c)] < 0)
            throw Error::validation(
                path + ": no unused table column matches class " + std::to_string(c) +
                " (order " + std::to_string(order) + ", size " + std::to_string(size) +
                ", trace " + tr.to_string() + ") on row '" + fundamental + "'");
    }

    std::vector<Irrep> irreps;
    for (std::size_t i = 0; i < raw.names.size(); ++i) {
        Irrep ir;
        ir.name = raw.names[i];
        ir.degree = raw.degrees[i];
        ir.character.group = group;
        for (int c = 0; c < nc; ++c)
            ir.character.values.push_back(raw.rows[i][static_cast<std::size_t>(column_of[static_cast<std::size_t>(c)])]);
        irreps.push_back(std::move(ir));
    }
    IrrepTable table(group, std::move(irreps)); // validates orthonormality etc.
    return {std::move(table), std::move(column_of)};
}

} // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("TWISTCODE_DATA_DIR"); env && *env) return env;
    return TWISTCODE_BUNDLED_DATA_DIR;
}

GroupBundle load_bundle(const std::string& group_file, const std::string& table_file,
                        const std::string& data_dir, long cap) {
    RawGroup rg = parse_group_file(group_file);
    std::string tpath = table_file;
    if (tpath.empty()) {
        if (rg.table_file.empty())
            throw Error::validation(group_file + ": no character_table declared and none given");
        const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
        tpath = (fs::path(dir) / "tables" / rg.table_file).string();
        if (!fs::exists(tpath))
            tpath = (fs::path(group_file).parent_path() / rg.table_file).string();
    }
    RawTable rt = parse_table_file(tpath);

    auto group = std::make_shared<FiniteMatrixGroup>(
        FiniteMatrixGroup::enumerate(rg.generators, cap, rg.name));
    auto [table, columns] = align_table(group, rt, rg.fundamental, tpath);

    GroupBundle b;
    b.group = group;
    b.table = std::move(table);
    b.fundamental = rg.fundamental;
    b.class_to_column = std::move(columns);
    b.group_path = group_file;
    b.table_path = tpath;

    // the aligned fundamental row must be the embedding character itself
    const auto& fvals = b.table.by_name(b.fundamental).character.values;
    for (int c = 0; c < group->num_classes(); ++c)
        if (fvals[static_cast<std::size_t>(c)] != group->class_trace(c))
            throw Error::inconsistent("aligned fundamental row disagrees with enumerated traces");
    return b;
}

const GroupBundle& bundled_group(const std::string& name_or_path, const std::string& data_dir) {
    static std::mutex mu;
    static std::map<std::string, GroupBundle> cache;

    const std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    std::string path = name_or_path;
    if (path.find('/') == std::string::npos && path.find(".json") == std::string::npos) {
        std::string key = path;
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (key == "2i")
            path = (fs::path(dir) / "groups" / "2i.json").string();
        else if (key == "sigma360" || key == "sigma(360phi)" || key == "sigma")
            path = (fs::path(dir) / "groups" / "sigma360.json").string();
        else
            throw Error::invalid("unknown bundled group '" + name_or_path +
                                 "' (expected 2I or sigma360, or a file path)");
    }

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it == cache.end()) it = cache.emplace(path, load_bundle(path, "", dir)).first;
    return it->second;
}

} // namespace twistcode
