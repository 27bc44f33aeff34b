#include "diskcx/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "diskcx/error.hpp"

namespace diskcx::io {

namespace {

const char* schema_pre = "supported schema and version";

std::string interval_name(const Interval& J) { return std::to_string(J.j) + "-" + std::to_string(J.m); }

json facets_json(const SimplicialComplex& c) {
  json out = json::array();
  for (const auto& f : c.facets()) out.push_back(f);
  return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (auto [a, b] : edges) out.push_back({a, b});
  return out;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError("well-formed document", std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError("well-formed document", std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw InvariantError("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json make_envelope(std::string_view schema, json payload, json manifest) {
  json doc;
  doc["schema"] = schema;
  doc["version"] = schema_version;
  doc["payload"] = std::move(payload);
  doc["manifest"] = std::move(manifest);
  return doc;
}

const json& open_envelope(const json& doc, std::initializer_list<std::string_view> accepted) {
  if (!doc.is_object() || !doc.contains("schema") || !doc.contains("version") || !doc.contains("payload"))
    throw DomainError(schema_pre, "document lacks schema, version or payload");
  if (!doc["schema"].is_string() || !doc["version"].is_number_integer())
    throw DomainError(schema_pre, "schema must be a string and version an integer");
  const auto name = doc["schema"].get<std::string>();
  if (std::find(accepted.begin(), accepted.end(), name) == accepted.end())
    throw DomainError(schema_pre, "unexpected schema '" + name + "'");
  const int v = doc["version"].get<int>();
  if (v != schema_version)
    throw DomainError(schema_pre, "schema '" + name + "' version " + std::to_string(v) + " is not supported (expected " +
                                      std::to_string(schema_version) + ")");
  return doc["payload"];
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DomainError("readable input file", "cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw DomainError("writable output path", "cannot write '" + p.string() + "'");
  out << text;
}

json parse(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("valid JSON input", origin + ": " + e.what());
  }
}

json sides_json(SideSet s) {
  json out = json::array();
  if (s.o) out.push_back("O");
  if (s.e) out.push_back("E");
  return out;
}

json group_json(const HomologyGroup& g) {
  json t = json::array();
  for (const auto& x : g.torsion) t.push_back(x.get_str());
  return {{"betti", g.betti}, {"torsion", t}};
}

json surface_payload(const ChainSurface& s) {
  const auto& g = s.graph();
  json darts = json::array(), rev = json::array(), rot = json::array(), gen = json::array(), circle = json::array();
  for (Dart d = 0; d < g.num_darts(); ++d) {
    darts.push_back(d);
    if (d < g.rev(d)) rev.push_back({d, g.rev(d)});
    gen.push_back({d, s.generator_of(d)});
    circle.push_back({d, s.circle_of(d)});
  }
  for (int v = 0; v < g.num_vertices(); ++v) rot.push_back(g.vertex_darts(v));
  return {{"genus", s.genus()},
          {"darts", darts},
          {"rev", rev},
          {"rot", rot},
          {"labels", {{"generator", gen}, {"circle", circle}}}};
}

ChainSurface surface_from_payload(const json& p) {
  const char* pre = "well-formed chain surface";
  const int genus = field<int>(p, "genus");
  const auto ids = field<std::vector<long>>(p, "darts");
  std::map<long, int> index;
  for (long id : ids)
    if (!index.emplace(id, static_cast<int>(index.size())).second)
      throw DomainError(pre, "dart id " + std::to_string(id) + " repeated");
  const int n = static_cast<int>(ids.size());
  auto at = [&](long id) {
    auto it = index.find(id);
    if (it == index.end()) throw DomainError(pre, "unknown dart id " + std::to_string(id));
    return it->second;
  };
  auto fill_once = [&](std::vector<int>& table, int d, int value, const char* what) {
    if (table[d] != -1) throw DomainError(pre, std::string("dart listed twice in ") + what);
    table[d] = value;
  };
  std::vector<int> rev(static_cast<std::size_t>(n), -1), rot(static_cast<std::size_t>(n), -1);
  for (const auto& pr : field<std::vector<std::vector<long>>>(p, "rev")) {
    if (pr.size() != 2) throw DomainError(pre, "rev entries must be pairs");
    const int a = at(pr[0]), b = at(pr[1]);
    fill_once(rev, a, b, "rev");
    fill_once(rev, b, a, "rev");
  }
  for (const auto& cyc : field<std::vector<std::vector<long>>>(p, "rot")) {
    if (cyc.empty()) throw DomainError(pre, "empty rotation cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) fill_once(rot, at(cyc[i]), at(cyc[(i + 1) % cyc.size()]), "rot");
  }
  if (std::count(rev.begin(), rev.end(), -1) || std::count(rot.begin(), rot.end(), -1))
    throw DomainError(pre, "every dart needs a rev partner and a rotation slot");

  const auto labels = field<json>(p, "labels");
  std::vector<int> gen(static_cast<std::size_t>(n), 0), circle(static_cast<std::size_t>(n), 0);
  std::vector<char> seen_gen(static_cast<std::size_t>(n), 0), seen_circle(static_cast<std::size_t>(n), 0);
  for (const auto& pr : field<std::vector<std::vector<long>>>(labels, "generator")) {
    if (pr.size() != 2) throw DomainError(pre, "label entries must be pairs");
    const int d = at(pr[0]);
    if (seen_gen[d]++) throw DomainError(pre, "generator label repeated");
    gen[d] = static_cast<int>(pr[1]);
  }
  for (const auto& pr : field<std::vector<std::vector<long>>>(labels, "circle")) {
    if (pr.size() != 2) throw DomainError(pre, "label entries must be pairs");
    const int d = at(pr[0]);
    if (seen_circle[d]++) throw DomainError(pre, "circle label repeated");
    circle[d] = static_cast<int>(pr[1]);
  }
  if (std::count(seen_gen.begin(), seen_gen.end(), 0) || std::count(seen_circle.begin(), seen_circle.end(), 0))
    throw DomainError(pre, "every dart needs generator and circle labels");
  return ChainSurface::from_parts(RibbonGraph(std::move(rev), std::move(rot)), genus, std::move(gen), std::move(circle));
}

json complex_payload(const BBMComplex& x) {
  json vertices = json::array();
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    const auto& v = x.vertices[i];
    json comps = json::array();
    for (const auto& w : v.x.components) comps.push_back(render(w));
    vertices.push_back({{"id", i},
                        {"interval", interval_name(v.interval)},
                        {"word", render(v.x.curve.word())},
                        {"sides", sides_json(v.x.sides)},
                        {"ambiguous", v.x.ambiguous},
                        {"boundary_components", comps}});
  }
  const std::string convention =
      x.rule == OddComponentRule::least_word
          ? "odd |J|: of the boundary components of N_J bounding on the predicted side, the one with the least canonical word"
          : "odd |J|: of the boundary components of N_J bounding on the predicted side, the one with the greater canonical word";
  return {{"genus", x.genus},
          {"vertices", vertices},
          {"edges", edges_json(x.edges)},
          {"facets", facets_json(x.complex)},
          {"f_vector", x.complex.f_vector()},
          {"report",
           {{"vertex_count", x.vertices.size()},
            {"odd_rule", to_string(x.rule)},
            {"odd_convention", convention},
            {"ambiguous_choices", x.ambiguous_choices}}}};
}

json gamma_payload(const GammaSample& g, long long cap, int max_simplex_dim, const ConnectivityProbe& probe) {
  json vertices = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    vertices.push_back({{"id", i},
                        {"word", render(v.curve.word())},
                        {"length", v.curve.word().length()},
                        {"sides", sides_json(v.sides)},
                        {"injected", v.injected}});
  }
  return {{"genus", g.genus},
          {"budget", g.budget},
          {"cap", cap},
          {"raw_words", g.raw_words},
          {"vertices", vertices},
          {"edges", edges_json(g.edges)},
          {"facets", facets_json(g.complex)},
          {"max_simplex_dim", max_simplex_dim},
          {"dimension_bound", 3 * g.genus - 3},
          {"connectivity_probe",
           {{"label", probe.label},
            {"reduced_h0", group_json(probe.h0)},
            {"reduced_h1", group_json(probe.h1)},
            {"budget_artifact", probe.budget_artifact}}}};
}

SimplicialComplex complex_from_payload(const json& payload) {
  auto facets = field<std::vector<Simplex>>(payload, "facets");
  return SimplicialComplex::from_facets(std::move(facets));
}

json homology_payload(const SimplicialComplex& c, const HomologyProfile& h) {
  json degrees = json::array();
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    auto g = group_json(h.degrees[k]);
    g["degree"] = k;
    degrees.push_back(g);
  }
  const int dim = c.dimension();
  const auto pm = pseudomanifold_check(c, dim);
  return {{"dimension", dim},
          {"f_vector", c.f_vector()},
          {"euler_characteristic", c.euler_characteristic()},
          {"reduced_homology", degrees},
          {"summary", h.summary()},
          {"homology_sphere", h.is_homology_sphere(dim)},
          {"pseudomanifold",
           {{"pure", pm.pure},
            {"ridges_in_two_facets", pm.ridges_in_two_facets},
            {"facets_connected", pm.facets_connected},
            {"pass", pm.pass()}}}};
}

json split_payload(const SplitReport& r, const std::vector<std::string>& names, const std::vector<CurveClass>& curves,
                   bool bookkeeping) {
  json cs = json::array();
  for (std::size_t i = 0; i < curves.size(); ++i)
    cs.push_back({{"name", names[i]},
                  {"word", render(curves[i].word())},
                  {"left_component", r.sides[i].first},
                  {"right_component", r.sides[i].second}});
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"genus", c.genus}, {"boundary", c.boundary}, {"euler", c.euler}});
  return {{"ambient", {{"genus", r.ambient_genus}, {"boundary", r.ambient_boundary}}},
          {"curves", cs},
          {"components", comps},
          {"checks",
           {{"euler_additive", r.euler_additive},
            {"boundary_count", r.boundary_count},
            {"bookkeeping", bookkeeping}}}};
}

}  // namespace diskcx::io
