// Command-line front end: diskcx <command> ...
//
// Exit codes: 0 success, 2 domain error (bad input), 1 internal invariant
// failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diskcx/error.hpp"
#include "diskcx/io.hpp"

using namespace diskcx;
using io::json;

namespace {

struct Run {
  std::string command;
  json parameters = json::object();
  json inputs = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool serial = false;

  kernels::Exec exec() const { return serial ? kernels::Exec::serial : kernels::Exec::parallel; }

  json manifest(const json& payload) const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {{"command", command},
            {"parameters", parameters},
            {"tool_version", io::tool_version},
            {"input_digests", inputs},
            {"payload_sha256", io::sha256_hex(io::dump(payload))},
            {"wall_seconds", secs},
            {"threads", serial ? 1 : kernels::max_threads()}};
  }
  json envelope(std::string_view schema, json payload) const {
    auto m = manifest(payload);
    return io::make_envelope(schema, std::move(payload), std::move(m));
  }
};

CyclicWord parse_word(const std::string& text, const ChainSurface& s) {
  auto w = canonical(parse_letters(text));
  if (max_generator(w.letters()) > s.rank())
    throw DomainError("generators within g1..g2g", "word '" + text + "' uses a generator beyond g" + std::to_string(s.rank()));
  return w;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw DomainError("nonempty curve list", "no curves given");
  return out;
}

std::string group_text(const HomologyGroup& g) {
  std::string out;
  if (g.betti == 1) out = "Z";
  if (g.betti > 1) out = "Z^" + std::to_string(g.betti);
  for (const auto& t : g.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

void emit(const json& doc, bool as_json, const std::string& table) {
  if (as_json)
    std::cout << io::dump(doc);
  else
    std::cout << table;
}

int cmd_bbm_build(Run& run, int g, const std::string& out, const std::string& rule, bool as_json) {
  run.command = "bbm build";
  run.parameters = {{"genus", g}, {"odd_rule", rule}};
  const auto s = ChainSurface::standard(g);
  run.inputs["surface"] = io::sha256_hex(io::dump(io::surface_payload(s)));
  const auto r = rule == "other-word" ? OddComponentRule::other_word : OddComponentRule::least_word;
  const auto x = build_X(s, r, run.exec());
  const auto doc = run.envelope(io::complex_schema, io::complex_payload(x));
  if (!out.empty()) io::write_text(out, io::dump(doc));

  std::ostringstream t;
  t << "genus " << g << ": " << x.vertices.size() << " vertices, " << x.edges.size() << " edges, "
    << x.complex.facets().size() << " facets, dimension " << x.complex.dimension() << "\n";
  t << "f-vector";
  for (long f : x.complex.f_vector()) t << ' ' << f;
  t << "\nodd-|J| rule: " << to_string(r) << " (" << x.ambiguous_choices << " ambiguous choices)\n";
  for (const auto& v : x.vertices)
    t << "  " << v.interval.j << "-" << v.interval.m << "\t" << to_string(v.x.sides) << (v.x.ambiguous ? "*" : "") << "\t"
      << render(v.x.curve.word()) << "\n";
  if (!out.empty()) t << "wrote " << out << "\n";
  emit(doc, as_json, t.str());
  return 0;
}

int cmd_homology(Run& run, const std::string& path, const std::string& out, bool as_json) {
  run.command = "homology";
  run.parameters = {{"input", path}};
  const auto text = io::read_text(path);
  run.inputs[path] = io::sha256_hex(text);
  const auto doc = io::parse(text, path);
  const auto& payload = io::open_envelope(doc, {io::complex_schema, io::gamma_schema});
  const auto c = io::complex_from_payload(payload);
  if (c.empty()) throw DomainError("nonempty complex", "complex in '" + path + "' has no facets");
  const auto h = reduced_homology(c);
  const auto result = run.envelope(io::homology_schema, io::homology_payload(c, h));
  if (!out.empty()) io::write_text(out, io::dump(result));

  std::ostringstream t;
  t << "reduced homology " << h.summary() << "\n";
  for (std::size_t k = 0; k < h.degrees.size(); ++k) t << "  H~" << k << " = " << group_text(h.degrees[k]) << "\n";
  t << "euler characteristic " << c.euler_characteristic() << "\n";
  t << "pseudomanifold " << (result["payload"]["pseudomanifold"]["pass"].get<bool>() ? "yes" : "no") << "\n";
  emit(result, as_json, t.str());
  return 0;
}

int cmd_intersect(Run& run, int g, const std::string& w1, const std::string& w2, bool as_json) {
  run.command = "intersect";
  run.parameters = {{"genus", g}, {"words", {w1, w2}}};
  const auto s = ChainSurface::standard(g);
  const auto u = parse_word(w1, s), v = parse_word(w2, s);
  const int i = geometric_intersection(s, u, v);
  const int a = algebraic_intersection(s, u, v);
  json payload = {{"genus", g}, {"words", {render(u), render(v)}}, {"geometric", i}, {"algebraic", a}};
  std::ostringstream t;
  t << "i(" << render(u) << ", " << render(v) << ") = " << i << "  (algebraic " << a << ")\n";
  emit(run.envelope("diskcx.intersect", payload), as_json, t.str());
  return 0;
}

int cmd_self_intersect(Run& run, int g, const std::string& w, bool as_json) {
  run.command = "self-intersect";
  run.parameters = {{"genus", g}, {"word", w}};
  const auto s = ChainSurface::standard(g);
  const auto u = parse_word(w, s);
  const int i = self_intersection(s, u);
  json payload = {{"genus", g}, {"word", render(u)}, {"self_intersection", i}};
  emit(run.envelope("diskcx.intersect", payload), as_json, "i(" + render(u) + ") = " + std::to_string(i) + "\n");
  return 0;
}

int cmd_disk_check(Run& run, int g, const std::string& w, bool as_json) {
  run.command = "disk-check";
  run.parameters = {{"genus", g}, {"word", w}};
  const auto s = ChainSurface::standard(g);
  const auto u = parse_word(w, s);
  json payload = {{"genus", g}, {"word", render(u)}};
  std::string reason;
  SideSet sides;
  try {
    sides = bounds_disk_sides(s, CurveClass::make(s, u));
    if (sides.empty()) reason = "bounds no compressing disk";
  } catch (const DomainError& e) {
    reason = e.precondition() + " fails: " + e.what();
  }
  const bool vertex = reason.empty();
  payload["disk_vertex"] = vertex;
  payload["sides"] = io::sides_json(sides);
  payload["reason"] = reason;
  std::string t = render(u) + ": " + (vertex ? "disk vertex, sides " + to_string(sides) : "not a disk vertex (" + reason + ")") + "\n";
  emit(run.envelope("diskcx.disk-check", payload), as_json, t);
  return 0;
}

int cmd_split(Run& run, int g, const std::string& list, const std::string& out, bool as_json) {
  run.command = "split";
  run.parameters = {{"genus", g}, {"curves", list}};
  const auto s = ChainSurface::standard(g);
  const auto names = split_list(list);
  std::vector<CurveClass> curves;
  for (const auto& n : names) curves.push_back(named_curve(s, n));
  const auto r = cut_along(s, curves);
  const bool ok = bookkeeping_check(r);
  if (!ok) throw InvariantError("split bookkeeping failed");
  const auto doc = run.envelope(io::split_schema, io::split_payload(r, names, curves, ok));
  if (!out.empty()) io::write_text(out, io::dump(doc));
  std::ostringstream t;
  t << "cut genus " << g << " (b=1) along " << curves.size() << " curve(s): " << r.components.size() << " component(s)\n";
  for (std::size_t i = 0; i < r.components.size(); ++i)
    t << "  F" << i + 1 << ": genus " << r.components[i].genus << ", boundary " << r.components[i].boundary << ", chi "
      << r.components[i].euler << "\n";
  t << "bookkeeping " << (ok ? "pass" : "FAIL") << "\n";
  emit(doc, as_json, t.str());
  return 0;
}

int cmd_gamma_sample(Run& run, int g, int L, long long cap, const std::vector<std::string>& inject, const std::string& out,
                     bool as_json) {
  run.command = "gamma sample";
  run.parameters = {{"genus", g}, {"budget", L}, {"cap", cap}, {"inject", inject}};
  const auto s = ChainSurface::standard(g);
  std::vector<CyclicWord> extra;
  for (const auto& w : inject) {
    const bool named = w.rfind("z", 0) == 0 || w.rfind("x:", 0) == 0;
    extra.push_back(named ? named_curve(s, w).word() : parse_word(w, s));
  }
  const auto sample = sample_gamma(s, L, cap, extra, run.exec());
  const int dim = max_simplex_probe(sample);
  const auto probe = connectivity_probe(sample);
  const auto doc = run.envelope(io::gamma_schema, io::gamma_payload(sample, cap, dim, probe));
  if (!out.empty()) io::write_text(out, io::dump(doc));
  std::ostringstream t;
  t << "genus " << g << ", L=" << L << ": " << sample.vertices.size() << " disk vertices from " << sample.raw_words
    << " raw words, " << sample.edges.size() << " edges\n";
  t << "max simplex dimension " << dim << " (bound " << 3 * g - 3 << ")\n";
  t << probe.label << ": H~0 = " << group_text(probe.h0) << ", H~1 = " << group_text(probe.h1)
    << (probe.budget_artifact ? " (disconnected: budget artifact)" : "") << "\n";
  if (sample.vertices.size() <= 40)
    for (const auto& v : sample.vertices)
      t << "  " << to_string(v.sides) << "\t" << render(v.curve.word()) << (v.injected ? "  (injected)" : "") << "\n";
  if (!out.empty()) t << "wrote " << out << "\n";
  emit(doc, as_json, t.str());
  return 0;
}

int cmd_dims(Run& run, int g, int b, bool as_json) {
  run.command = "dims";
  run.parameters = {{"genus", g}, {"boundary", b}};
  const auto d = dims(g, b);
  json payload = {{"genus", g}, {"boundary", b}, {"d_dim", d.d_dim}, {"d_conn", d.d_conn}};
  emit(run.envelope("diskcx.dims", payload), as_json,
       "d_dim=" + std::to_string(d.d_dim) + " d_conn=" + std::to_string(d.d_conn) + "\n");
  return 0;
}

int cmd_surface_write(Run& run, int g, const std::string& out, bool as_json) {
  run.command = "surface write";
  run.parameters = {{"genus", g}};
  const auto s = ChainSurface::standard(g);
  const auto doc = run.envelope(io::surface_schema, io::surface_payload(s));
  if (!out.empty()) io::write_text(out, io::dump(doc));
  emit(doc, as_json, "genus " + std::to_string(g) + " chain surface, boundary word " + render(s.boundary_word()) + "\n");
  return 0;
}

int cmd_surface_check(Run& run, const std::string& path, bool as_json) {
  run.command = "surface check";
  run.parameters = {{"input", path}};
  const auto text = io::read_text(path);
  run.inputs[path] = io::sha256_hex(text);
  const auto s = io::surface_from_payload(io::open_envelope(io::parse(text, path), {io::surface_schema}));
  json payload = {{"genus", s.genus()},
                  {"darts", s.graph().num_darts()},
                  {"vertices", s.graph().num_vertices()},
                  {"boundary_word", render(canonical(s.boundary_word()))}};
  emit(run.envelope("diskcx.surface-check", payload), as_json,
       "valid chain surface of genus " + std::to_string(s.genus()) + ", boundary word " + render(s.boundary_word()) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk complexes of standardly embedded surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Run run;
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON document instead of a table");
  app.add_flag("--serial", run.serial, "Use the serial kernels");

  int g = 2, b = 0, L = 1;
  long long cap = default_candidate_cap;
  std::string out, path, w1, w2, list, rule = "least-word";
  std::vector<std::string> inject;

  auto* bbm = app.add_subcommand("bbm", "BBM subcomplex X");
  bbm->require_subcommand(1);
  auto* build = bbm->add_subcommand("build", "Build X for the chain surface of genus g");
  build->add_option("-g,--genus", g, "Genus (>= 2)")->required();
  build->add_option("--out", out, "Output JSON path");
  build->add_option("--odd-rule", rule, "Odd-|J| component rule")->check(CLI::IsMember({"least-word", "other-word"}));

  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a stored complex");
  hom->add_option("path", path, "complex or gamma JSON")->required();
  hom->add_option("--out", out, "Output JSON path");

  auto* inter = app.add_subcommand("intersect", "Geometric intersection number of two classes");
  inter->add_option("-g,--genus", g)->required();
  inter->add_option("w1", w1, "Word, e.g. \"g1 -g2\"")->required();
  inter->add_option("w2", w2)->required();

  auto* self = app.add_subcommand("self-intersect", "Self-intersection number of a class");
  self->add_option("-g,--genus", g)->required();
  self->add_option("w", w1)->required();

  auto* disk = app.add_subcommand("disk-check", "Does the word bound a compressing disk, and on which side");
  disk->add_option("-g,--genus", g)->required();
  disk->add_option("w", w1)->required();

  auto* split = app.add_subcommand("split", "Cut along disjoint curves");
  split->add_option("-g,--genus", g)->required();
  split->add_option("--curves", list, "Comma-separated names: z<i> or x:<j>-<m>")->required();
  split->add_option("--out", out, "Output JSON path");

  auto* gamma = app.add_subcommand("gamma", "Finite samples of the disk complex");
  gamma->require_subcommand(1);
  auto* sample = gamma->add_subcommand("sample", "Disk vertices up to word length L");
  sample->add_option("-g,--genus", g)->required();
  sample->add_option("-L,--length", L, "Word-length budget")->required();
  sample->add_option("--cap", cap, "Raw candidate cap");
  sample->add_option("--inject", inject, "Extra curve (word or z<i> / x:<j>-<m>)");
  sample->add_option("--out", out, "Output JSON path");

  auto* dm = app.add_subcommand("dims", "Dimension and connectivity formulas");
  dm->add_option("-g,--genus", g)->required();
  dm->add_option("-b,--boundary", b)->required();

  auto* surf = app.add_subcommand("surface", "Chain surface documents");
  surf->require_subcommand(1);
  auto* swrite = surf->add_subcommand("write", "Write the genus-g chain surface");
  swrite->add_option("-g,--genus", g)->required();
  swrite->add_option("--out", out, "Output JSON path");
  auto* scheck = surf->add_subcommand("check", "Load and re-verify a chain surface");
  scheck->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*build) return cmd_bbm_build(run, g, out, rule, as_json);
    if (*hom) return cmd_homology(run, path, out, as_json);
    if (*inter) return cmd_intersect(run, g, w1, w2, as_json);
    if (*self) return cmd_self_intersect(run, g, w1, as_json);
    if (*disk) return cmd_disk_check(run, g, w1, as_json);
    if (*split) return cmd_split(run, g, list, out, as_json);
    if (*sample) return cmd_gamma_sample(run, g, L, cap, inject, out, as_json);
    if (*dm) return cmd_dims(run, g, b, as_json);
    if (*swrite) return cmd_surface_write(run, g, out, as_json);
    if (*scheck) return cmd_surface_check(run, path, as_json);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.precondition() << ": " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
