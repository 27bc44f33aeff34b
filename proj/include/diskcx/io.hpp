#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

#include "diskcx/bbm.hpp"
#include "diskcx/gamma.hpp"
#include "diskcx/split.hpp"

// JSON documents. Every file is an envelope
//   {"schema": <name>, "version": <int>, "payload": {...}, "manifest": {...}}
// where the payload is a pure function of the inputs and the manifest holds
// run metadata (timings, digests). Object keys are emitted sorted.
namespace diskcx::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;
inline constexpr std::string_view tool_version = "0.1.0";

inline constexpr std::string_view surface_schema = "diskcx.surface";
inline constexpr std::string_view complex_schema = "diskcx.complex";
inline constexpr std::string_view homology_schema = "diskcx.homology";
inline constexpr std::string_view split_schema = "diskcx.split";
inline constexpr std::string_view gamma_schema = "diskcx.gamma";

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Serialized form used for files and for digests.
std::string dump(const json& j);

json make_envelope(std::string_view schema, json payload, json manifest);

/// Returns the payload after checking schema name and version. Throws
/// DomainError for an unknown schema, a missing or unsupported version, or
/// a malformed envelope.
const json& open_envelope(const json& doc, std::initializer_list<std::string_view> accepted);

std::string read_text(const std::filesystem::path& p);
void write_text(const std::filesystem::path& p, std::string_view text);
/// Throws DomainError if the file is missing or not JSON.
json parse(std::string_view text, const std::string& origin);

// Chain surface: darts may carry arbitrary distinct integer ids.
//   {"genus", "darts": [ids], "rev": [[d, d'], ...], "rot": [[cycle], ...],
//    "labels": {"generator": [[d, ±i or 0], ...], "circle": [[d, i], ...]}}
json surface_payload(const ChainSurface& s);
ChainSurface surface_from_payload(const json& payload);

json complex_payload(const BBMComplex& x);
json gamma_payload(const GammaSample& g, long long cap, int max_simplex_dim, const ConnectivityProbe& probe);
/// Complex stored in a complex or gamma payload ("vertices" ids + "facets").
SimplicialComplex complex_from_payload(const json& payload);

json homology_payload(const SimplicialComplex& c, const HomologyProfile& h);
json split_payload(const SplitReport& r, const std::vector<std::string>& names, const std::vector<CurveClass>& curves,
                   bool bookkeeping);

json sides_json(SideSet s);
json group_json(const HomologyGroup& g);

}  // namespace diskcx::io
