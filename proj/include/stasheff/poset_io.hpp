#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "stasheff/face_poset.hpp"
#include "stasheff/verify.hpp"

namespace stasheff {

/// Bumped on any breaking change to the JSON document or binary cache; old
/// cache files then stop matching and are rebuilt.
inline constexpr int kPosetSchemaVersion = 1;
inline constexpr int kCodeVersion = 1;

/// {schema_version, kind, n, faces: [{dim, tree}], f_vector}
nlohmann::json poset_to_json(const FacePoset& poset);
/// Throws std::invalid_argument on schema mismatch or invalid content.
FacePoset poset_from_json(const nlohmann::json& doc);

/// Compact cache encoding with a checksum trailer.
std::string encode_binary(const FacePoset& poset);
/// Throws std::runtime_error if the bytes are truncated, corrupt, or from
/// another schema/code version.
FacePoset decode_binary(std::string_view bytes);

std::filesystem::path cache_file(const std::filesystem::path& dir, PolytopeKind kind, int n);

/// Writes to a temporary file in `dir`, then renames over the target.
void store_cached(const std::filesystem::path& dir, const FacePoset& poset);

/// Loads a cached poset; on a missing file returns nullopt, on a corrupt one
/// also returns nullopt and fills `warning`.
std::optional<FacePoset> load_cached(const std::filesystem::path& dir, PolytopeKind kind, int n,
                                     std::string* warning = nullptr);

/// Cache hit, or build and store. Corrupt entries are rebuilt.
FacePoset load_or_build(const std::filesystem::path& dir, PolytopeKind kind, int n, std::string* warning = nullptr);

/// {map_name, n_max, instances, checks_passed, checks: [...], failures: [...]}
nlohmann::json report_to_json(const FaceMapReport& report);

}  // namespace stasheff
