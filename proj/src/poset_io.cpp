#include "stasheff/poset_io.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stasheff {

namespace {

constexpr char kMagic[4] = {'S', 'T', 'F', 'P'};

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
        pos_ += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
        pos_ += 8;
        return v;
    }
    std::string_view take(std::size_t n) {
        need(n);
        auto out = bytes_.substr(pos_, n);
        pos_ += n;
        return out;
    }
    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (bytes_.size() - pos_ < n) throw std::runtime_error("face cache truncated");
    }
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

nlohmann::json poset_to_json(const FacePoset& poset) {
    nlohmann::json faces = nlohmann::json::array();
    for (int d = 0; d <= poset.top_dimension(); ++d)
        for (const auto& code : poset.faces(d)) faces.push_back({{"dim", d}, {"tree", code}});
    return {{"schema_version", kPosetSchemaVersion},
            {"kind", to_string(poset.kind())},
            {"n", poset.n()},
            {"faces", std::move(faces)},
            {"f_vector", poset.f_vector()}};
}

FacePoset poset_from_json(const nlohmann::json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != kPosetSchemaVersion)
            throw std::invalid_argument("unsupported schema_version");
        const auto kind = parse_kind(doc.at("kind").get<std::string>());
        const int n = doc.at("n").get<int>();
        const int top = top_dimension(kind, n);
        if (top < 0 || n > kFullEnumerationCap) throw std::invalid_argument("n out of range");
        std::vector<std::vector<std::string>> grades(static_cast<std::size_t>(top) + 1);
        for (const auto& f : doc.at("faces")) {
            const int d = f.at("dim").get<int>();
            if (d < 0 || d > top) throw std::invalid_argument("face dimension out of range");
            grades[static_cast<std::size_t>(d)].push_back(f.at("tree").get<std::string>());
        }
        auto poset = FacePoset::from_grades(kind, n, std::move(grades));
        if (doc.contains("f_vector") && doc.at("f_vector").get<std::vector<std::size_t>>() != poset.f_vector())
            throw std::invalid_argument("f_vector does not match the faces");
        return poset;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed face poset document: ") + e.what());
    }
}

std::string encode_binary(const FacePoset& poset) {
    std::string body;
    put_u32(body, kPosetSchemaVersion);
    put_u32(body, kCodeVersion);
    put_u32(body, poset.kind() == PolytopeKind::K ? 0u : 1u);
    put_u32(body, static_cast<std::uint32_t>(poset.n()));
    put_u32(body, static_cast<std::uint32_t>(poset.grades().size()));
    for (const auto& grade : poset.grades()) {
        put_u32(body, static_cast<std::uint32_t>(grade.size()));
        for (const auto& code : grade) {
            put_u32(body, static_cast<std::uint32_t>(code.size()));
            body += code;
        }
    }
    std::string out(kMagic, sizeof kMagic);
    out += body;
    put_u64(out, fnv1a(body));
    return out;
}

FacePoset decode_binary(std::string_view bytes) {
    if (bytes.size() < sizeof kMagic + 8 || bytes.substr(0, sizeof kMagic) != std::string_view(kMagic, sizeof kMagic))
        throw std::runtime_error("not a face cache file");
    const auto body = bytes.substr(sizeof kMagic, bytes.size() - sizeof kMagic - 8);
    Reader trailer(bytes.substr(bytes.size() - 8));
    if (trailer.u64() != fnv1a(body)) throw std::runtime_error("face cache checksum mismatch");

    Reader r(body);
    if (r.u32() != static_cast<std::uint32_t>(kPosetSchemaVersion)) throw std::runtime_error("face cache schema mismatch");
    if (r.u32() != static_cast<std::uint32_t>(kCodeVersion)) throw std::runtime_error("face cache code version mismatch");
    const auto kind_tag = r.u32();
    if (kind_tag > 1) throw std::runtime_error("face cache has an unknown kind");
    const auto kind = kind_tag == 0 ? PolytopeKind::K : PolytopeKind::J;
    const int n = static_cast<int>(r.u32());
    const auto grade_count = r.u32();
    if (grade_count > 64) throw std::runtime_error("face cache grade count implausible");
    std::vector<std::vector<std::string>> grades(grade_count);
    for (auto& grade : grades) {
        const auto count = r.u32();
        if (count > r.remaining()) throw std::runtime_error("face cache truncated");
        grade.reserve(count);
        for (std::uint32_t i = 0; i < count; ++i) grade.emplace_back(r.take(r.u32()));
    }
    if (r.remaining() != 0) throw std::runtime_error("face cache has trailing bytes");
    try {
        return FacePoset::from_grades(kind, n, std::move(grades));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("face cache content invalid: ") + e.what());
    }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, PolytopeKind kind, int n) {
    return dir / ("faces-" + std::string(to_string(kind)) + std::to_string(n) + "-v" +
                  std::to_string(kPosetSchemaVersion) + "." + std::to_string(kCodeVersion) + ".bin");
}

void store_cached(const std::filesystem::path& dir, const FacePoset& poset) {
    std::filesystem::create_directories(dir);
    const auto target = cache_file(dir, poset.kind(), poset.n());
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        const auto bytes = encode_binary(poset);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::optional<FacePoset> load_cached(const std::filesystem::path& dir, PolytopeKind kind, int n, std::string* warning) {
    const auto path = cache_file(dir, kind, n);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto poset = decode_binary(buf.str());
        if (poset.kind() != kind || poset.n() != n) throw std::runtime_error("face cache key mismatch");
        return poset;
    } catch (const std::exception& e) {
        if (warning) *warning = "ignoring corrupt cache " + path.string() + ": " + e.what();
        return std::nullopt;
    }
}

FacePoset load_or_build(const std::filesystem::path& dir, PolytopeKind kind, int n, std::string* warning) {
    if (auto hit = load_cached(dir, kind, n, warning)) return std::move(*hit);
    auto poset = FacePoset::build(kind, n);
    try {
        store_cached(dir, poset);
    } catch (const std::exception& e) {
        if (warning) *warning += (warning->empty() ? "" : "; ") + std::string("cache not written: ") + e.what();
    }
    return poset;
}

nlohmann::json report_to_json(const FaceMapReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& t : report.tallies)
        checks.push_back({{"check", t.check}, {"instances", t.instances}, {"failed", t.failed}});
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    return {{"map_name", report.map_name},
            {"n_max", report.n_max},
            {"instances", report.instances},
            {"checks_passed", report.checks_passed},
            {"checks", std::move(checks)},
            {"failures", std::move(failures)}};
}

}  // namespace stasheff
