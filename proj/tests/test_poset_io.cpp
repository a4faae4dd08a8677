#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "stasheff/poset_io.hpp"

using namespace stasheff;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("stasheff-io-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("JSON document shape") {
    const auto doc = poset_to_json(FacePoset::build(PolytopeKind::J, 3));
    CHECK(doc["schema_version"] == kPosetSchemaVersion);
    CHECK(doc["kind"] == "J");
    CHECK(doc["n"] == 3);
    CHECK(doc["f_vector"] == nlohmann::json::array({6, 6, 1}));
    CHECK(doc["faces"].size() == 13);
    CHECK(doc["faces"][12]["dim"] == 2);
    CHECK(doc["faces"][12]["tree"] == "f(x,x,x)");
}

TEST_CASE("JSON round trip") {
    for (auto kind : {PolytopeKind::K, PolytopeKind::J})
        for (int n = kind == PolytopeKind::K ? 2 : 1; n <= 6; ++n) {
            const auto p = FacePoset::build(kind, n);
            const auto text = poset_to_json(p).dump();
            CHECK(poset_from_json(nlohmann::json::parse(text)) == p);
        }
}

TEST_CASE("JSON rejects bad documents") {
    auto doc = poset_to_json(FacePoset::build(PolytopeKind::K, 4));
    auto bad = doc;
    bad["schema_version"] = kPosetSchemaVersion + 1;
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["f_vector"][0] = 4;
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["faces"].erase(0);
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["faces"][0]["tree"] = "m(x,x)";
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["faces"][0]["dim"] = 9;
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad.erase("kind");
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["n"] = "four";
    CHECK_THROWS_AS(poset_from_json(bad), std::invalid_argument);
}

TEST_CASE("binary round trip and corruption") {
    const auto p = FacePoset::build(PolytopeKind::J, 4);
    const auto bytes = encode_binary(p);
    CHECK(decode_binary(bytes) == p);

    CHECK_THROWS_AS(decode_binary(""), std::runtime_error);
    CHECK_THROWS_AS(decode_binary(bytes.substr(0, bytes.size() / 2)), std::runtime_error);
    CHECK_THROWS_AS(decode_binary(bytes + "x"), std::runtime_error);
    for (std::size_t i = 0; i < bytes.size(); i += 7) {
        auto flipped = bytes;
        flipped[i] = static_cast<char>(flipped[i] ^ 0x20);
        CHECK_THROWS_AS(decode_binary(flipped), std::runtime_error);
    }
}

TEST_CASE("cache store and load") {
    TempDir dir;
    CHECK_FALSE(load_cached(dir.path, PolytopeKind::K, 5).has_value());

    const auto k5 = FacePoset::build(PolytopeKind::K, 5);
    store_cached(dir.path, k5);
    const auto loaded = load_cached(dir.path, PolytopeKind::K, 5);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == k5);
    CHECK(loaded->dimension_of("m(x,x,x,x,x)") == 3);

    // only the final file remains
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        ++files;
        CHECK(e.path() == cache_file(dir.path, PolytopeKind::K, 5));
    }
    CHECK(files == 1);

    const auto file = cache_file(dir.path, PolytopeKind::K, 5);
    CHECK(file.filename().string().find(std::to_string(kPosetSchemaVersion)) != std::string::npos);
    CHECK(cache_file(dir.path, PolytopeKind::J, 5) != file);
}

TEST_CASE("corrupt cache is ignored and rebuilt") {
    TempDir dir;
    const auto j5 = FacePoset::build(PolytopeKind::J, 5);
    store_cached(dir.path, j5);
    const auto file = cache_file(dir.path, PolytopeKind::J, 5);
    auto bytes = slurp(file);
    bytes[bytes.size() / 2] = static_cast<char>(bytes[bytes.size() / 2] ^ 1);
    spit(file, bytes);

    std::string warning;
    CHECK_FALSE(load_cached(dir.path, PolytopeKind::J, 5, &warning).has_value());
    CHECK(warning.find("corrupt") != std::string::npos);

    warning.clear();
    CHECK(load_or_build(dir.path, PolytopeKind::J, 5, &warning) == j5);
    CHECK_FALSE(warning.empty());
    warning.clear();
    CHECK(load_cached(dir.path, PolytopeKind::J, 5, &warning).has_value());
    CHECK(warning.empty());

    // a file written for another key is rejected
    fs::copy_file(file, cache_file(dir.path, PolytopeKind::J, 4), fs::copy_options::overwrite_existing);
    warning.clear();
    CHECK_FALSE(load_cached(dir.path, PolytopeKind::J, 4, &warning).has_value());
    CHECK_FALSE(warning.empty());
}

TEST_CASE("report JSON") {
    FaceMapReport r;
    r.map_name = "K-relations";
    r.n_max = 4;
    r.instances = 3;
    r.checks_passed = 2;
    r.tallies.push_back({"K.boundary-image", 3, 1});
    r.failures.push_back({"K.boundary-image", "k=1", "m(x,x)", "m(x)"});
    const auto j = report_to_json(r);
    CHECK(j["map_name"] == "K-relations");
    CHECK(j["n_max"] == 4);
    CHECK(j["instances"] == 3);
    CHECK(j["failures"].size() == 1);
    CHECK(j["failures"][0]["got"] == "m(x)");
    CHECK(j["checks"][0]["failed"] == 1);
}
