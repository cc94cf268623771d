#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sonar/error.hpp"
#include "sonar/search.hpp"
#include "sonar/sequence.hpp"
#include "sonar/sidon.hpp"
#include "sonar/verify.hpp"

namespace sonar::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Provenance& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  return Json{{"construction", p.construction}, {"params", params}};
}

inline Provenance provenance_from_json(const Json& j) {
  Provenance p;
  if (j.is_null()) return p;
  p.construction = j.value("construction", std::string{});
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) p.params.emplace_back(k, v.get<std::int64_t>());
  return p;
}

inline Json to_json(const SonarSeq& s) {
  return Json{{"m", s.m()},
              {"n", s.n()},
              {"modular", s.modular()},
              {"values", s.values()},
              {"provenance", to_json(s.provenance())}};
}

inline SonarSeq sonar_seq_from_json(const Json& j) {
  try {
    auto values = j.at("values").get<std::vector<std::int64_t>>();
    if (j.contains("n") && j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(values.size()))
      throw Error(Errc::Parse, "\"n\" does not match the number of values");
    return SonarSeq(std::move(values), j.at("m").get<std::int64_t>(), j.value("modular", true),
                    provenance_from_json(j.value("provenance", Json())));
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

inline Json to_json(const SidonSet& s) {
  return Json{{"modulus", s.modulus()}, {"elements", s.elements()}, {"provenance", to_json(s.provenance())}};
}

/// Imported sets always carry the "external" provenance: anything read
/// from outside is re-verified before use.
inline SidonSet sidon_set_from_json(const Json& j) {
  try {
    return SidonSet(j.at("modulus").get<std::int64_t>(),
                    j.at("elements").get<std::vector<std::int64_t>>(), Provenance{"external", {}});
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

inline Json to_json(const VerifyReport& r) {
  Json j{{"pass", r.pass}, {"mode", r.mode == Mode::Modular ? "modular" : "plain"}};
  if (r.mode == Mode::Modular) j["m"] = r.m;
  if (r.witness) j["witness"] = Json{{"h", r.witness->h}, {"i", r.witness->i}, {"j", r.witness->j}};
  return j;
}

inline Json to_json(const SearchResult& r) {
  Json j{{"m", r.m},
         {"mode", r.mode == Mode::Modular ? "modular" : "plain"},
         {"best_n", r.best_n},
         {"exhaustive", r.exhaustive},
         {"nodes_explored", r.nodes_explored},
         {"wall_time_s", r.wall_time.count()}};
  j["example"] = r.example ? to_json(*r.example) : Json();
  return j;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(Errc::Io, "write failed for " + path);
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

}  // namespace sonar::io
