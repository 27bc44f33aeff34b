#include <algorithm>
#include <random>

#include "doctest.h"

#include "diskcx/error.hpp"
#include "diskcx/io.hpp"

using namespace diskcx;
using io::json;

TEST_CASE("sha256") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("surface round trip") {
  const auto s = ChainSurface::standard(3);
  const auto back = io::surface_from_payload(io::parse(io::dump(io::surface_payload(s)), "mem"));
  CHECK(back.boundary_word() == s.boundary_word());
  CHECK(back.dart_generators() == s.dart_generators());
  CHECK(io::dump(io::surface_payload(back)) == io::dump(io::surface_payload(s)));
}

TEST_CASE("surface documents are invariant under dart relabeling") {
  const auto s = ChainSurface::standard(3);
  const auto p = io::surface_payload(s);
  const int n = s.graph().num_darts();
  std::vector<long> id(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) id[d] = 1000 + 7L * d;
  std::mt19937 rng(9);
  std::shuffle(id.begin(), id.end(), rng);

  json q;
  q["genus"] = 3;
  std::vector<long> darts(id.begin(), id.end());
  std::shuffle(darts.begin(), darts.end(), rng);
  q["darts"] = darts;
  q["rev"] = json::array();
  for (const auto& pr : p["rev"]) q["rev"].push_back({id[pr[1].get<int>()], id[pr[0].get<int>()]});
  q["rot"] = json::array();
  for (const auto& cyc : p["rot"]) {
    std::vector<long> c;
    for (const auto& d : cyc) c.push_back(id[d.get<int>()]);
    std::rotate(c.begin(), c.begin() + 1, c.end());
    q["rot"].push_back(c);
  }
  for (const char* key : {"generator", "circle"}) {
    q["labels"][key] = json::array();
    for (const auto& pr : p["labels"][key]) q["labels"][key].push_back({id[pr[0].get<int>()], pr[1]});
  }
  const auto t = io::surface_from_payload(q);
  CHECK(canonical(t.boundary_word()) == canonical(s.boundary_word()));
  const auto a = io::complex_payload(build_X(s));
  const auto b = io::complex_payload(build_X(t));
  CHECK(io::dump(a) == io::dump(b));
}

TEST_CASE("malformed surfaces are rejected") {
  auto p = io::surface_payload(ChainSurface::standard(2));
  auto missing = p;
  missing.erase("rot");
  CHECK_THROWS_AS(io::surface_from_payload(missing), DomainError);
  auto dup = p;
  dup["darts"].push_back(0);
  CHECK_THROWS_AS(io::surface_from_payload(dup), DomainError);
  auto relabel = p;
  relabel["labels"]["circle"][0][1] = 3;
  CHECK_THROWS_AS(io::surface_from_payload(relabel), DomainError);
  auto wrong_genus = p;
  wrong_genus["genus"] = 3;
  CHECK_THROWS_AS(io::surface_from_payload(wrong_genus), DomainError);
}

TEST_CASE("envelopes are versioned") {
  const auto doc = io::make_envelope(io::complex_schema, json{{"facets", json::array({json::array({0, 1})})}}, json::object());
  CHECK_NOTHROW(io::open_envelope(doc, {io::complex_schema}));
  CHECK_THROWS_AS(io::open_envelope(doc, {io::gamma_schema}), DomainError);
  auto newer = doc;
  newer["version"] = 2;
  CHECK_THROWS_WITH_AS(io::open_envelope(newer, {io::complex_schema}), doctest::Contains("version 2"), DomainError);
  auto bare = doc;
  bare.erase("version");
  CHECK_THROWS_AS(io::open_envelope(bare, {io::complex_schema}), DomainError);
  CHECK_THROWS_AS(io::parse("{not json", "x"), DomainError);
}

TEST_CASE("complex payloads are deterministic and reload") {
  const auto s = ChainSurface::standard(2);
  const auto a = io::dump(io::complex_payload(build_X(s, OddComponentRule::least_word, kernels::Exec::parallel)));
  const auto b = io::dump(io::complex_payload(build_X(s, OddComponentRule::least_word, kernels::Exec::serial)));
  CHECK(a == b);
  const auto payload = io::parse(a, "mem");
  const auto c = io::complex_from_payload(payload);
  CHECK(c.f_vector() == std::vector<long>{9, 21, 14});
  CHECK(payload["report"]["ambiguous_choices"] == 2);
  CHECK(payload["vertices"][0]["interval"] == "1-1");

  const auto h = io::homology_payload(c, reduced_homology(c));
  CHECK(h["summary"] == "(0, 0, Z)");
  CHECK(h["pseudomanifold"]["pass"] == true);
}
