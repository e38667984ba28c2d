#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"

using namespace twistcode;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    auto d = fs::temp_directory_path() / "twistcode_io_test";
    fs::create_directories(d);
    return d;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("unknown bundled names are rejected") {
    CHECK_THROWS_AS(bundled_group("nosuchgroup"), Error);
}

TEST_CASE("malformed JSON is a parse error naming the file") {
    auto p = temp_dir() / "broken.json";
    write_file(p, "{ not json");
    try {
        load_bundle(p.string());
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
    }
}

TEST_CASE("a tampered character value fails table validation") {
    // copy the bundled 2I files, corrupt one chi8 value
    auto dir = temp_dir();
    fs::create_directories(dir / "tables");
    auto gsrc = fs::path(default_data_dir()) / "groups" / "2i.json";
    auto tsrc = fs::path(default_data_dir()) / "tables" / "2i_chartable.json";
    std::string table = slurp(tsrc);
    auto pos = table.find("\"5\", \"0\", \"0\", \"-1\"");
    REQUIRE(pos != std::string::npos);
    table.replace(pos, 3, "\"6\"");
    write_file(dir / "tables" / "2i_chartable.json", table);
    auto gp = dir / "2i.json";
    write_file(gp, slurp(gsrc));
    try {
        load_bundle(gp.string(), (dir / "tables" / "2i_chartable.json").string());
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("a wrong fingerprint leaves a class unmatched") {
    auto dir = temp_dir();
    auto tsrc = fs::path(default_data_dir()) / "tables" / "2i_chartable.json";
    std::string table = slurp(tsrc);
    auto pos = table.find("{\"order\": 4, \"size\": 30}");
    REQUIRE(pos != std::string::npos);
    table.replace(pos, std::string("{\"order\": 4, \"size\": 30}").size(),
                  "{\"order\": 8, \"size\": 30}");
    auto tp = dir / "bad_fingerprint.json";
    write_file(tp, table);
    auto gsrc = fs::path(default_data_dir()) / "groups" / "2i.json";
    try {
        load_bundle(gsrc.string(), tp.string());
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(std::string(e.what()).find("no unused table column") != std::string::npos);
    }
}

TEST_CASE("alignment is a permutation and the fundamental row is the trace row") {
    for (const char* name : {"2I", "sigma360"}) {
        const auto& b = bundled_group(name);
        std::set<int> cols(b.class_to_column.begin(), b.class_to_column.end());
        CHECK(static_cast<int>(cols.size()) == b.group->num_classes());
        const auto& fvals = b.fundamental_character().values;
        for (int c = 0; c < b.group->num_classes(); ++c)
            CHECK(fvals[static_cast<std::size_t>(c)] == b.group->class_trace(c));
    }
}

TEST_CASE("nonexistent table path errors cleanly") {
    auto gsrc = fs::path(default_data_dir()) / "groups" / "2i.json";
    CHECK_THROWS_AS(load_bundle(gsrc.string(), "/nonexistent/table.json"), Error);
}
