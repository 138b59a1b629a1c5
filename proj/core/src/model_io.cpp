#include "teamlogic/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "teamlogic/errors.hpp"

namespace teamlogic {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string> string_list(const ojson& j, const std::string& where) {
  if (!j.is_array()) throw ModelError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const ojson& e : j) {
    if (!e.is_string()) throw ModelError(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

const Team& ModelDocument::team(std::string_view name) const {
  for (const NamedTeam& t : teams) {
    if (t.name == name) return t.team;
  }
  throw ModelError("no team named '" + std::string(name) + "'");
}

ModelDocument load_model(std::string_view json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const ojson::parse_error& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "props" && key != "worlds" && key != "edges" && key != "valuation" && key != "teams") {
      throw ModelError("unknown field '" + key + "' in model document");
    }
  }
  if (!doc.contains("props")) throw ModelError("model document lacks \"props\"");
  if (!doc.contains("worlds")) throw ModelError("model document lacks \"worlds\"");

  std::vector<std::string> props = string_list(doc["props"], "\"props\"");
  std::vector<std::string> worlds = string_list(doc["worlds"], "\"worlds\"");

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    const ojson& je = doc["edges"];
    if (!je.is_array()) throw ModelError("\"edges\" must be an array of pairs");
    for (const ojson& e : je) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ModelError("each edge must be a pair of world names");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }

  std::map<std::string, std::vector<std::string>> valuation;
  if (doc.contains("valuation")) {
    const ojson& jv = doc["valuation"];
    if (!jv.is_object()) throw ModelError("\"valuation\" must be an object");
    for (const auto& [p, members] : jv.items()) {
      valuation[p] = string_list(members, "valuation of '" + p + "'");
    }
  }

  ModelDocument out{KripkeModel(std::move(props), std::move(worlds), edges, valuation), {}};

  if (doc.contains("teams")) {
    const ojson& jt = doc["teams"];
    if (!jt.is_object()) throw ModelError("\"teams\" must be an object");
    std::unordered_set<std::string> seen;
    for (const auto& [name, members] : jt.items()) {
      if (!seen.insert(name).second) throw ModelError("duplicate team '" + name + "'");
      std::vector<std::string> ws = string_list(members, "team '" + name + "'");
      for (const std::string& w : ws) {
        if (!out.model.find_world(w)) {
          throw ModelError("team '" + name + "' names unknown world '" + w + "'");
        }
      }
      out.teams.push_back({name, out.model.team(ws)});
    }
  }
  return out;
}

ModelDocument load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string save_model(const KripkeModel& k, std::span<const NamedTeam> teams) {
  ojson doc;
  doc["props"] = k.props();
  doc["worlds"] = k.worlds();
  ojson edges = ojson::array();
  for (auto [a, b] : k.edges()) edges.push_back({k.worlds()[a], k.worlds()[b]});
  doc["edges"] = std::move(edges);
  ojson val = ojson::object();
  for (std::size_t p = 0; p < k.props().size(); ++p) val[k.props()[p]] = k.names(k.valuation(p));
  doc["valuation"] = std::move(val);
  ojson jt = ojson::object();
  for (const NamedTeam& t : teams) jt[t.name] = k.names(t.team);
  doc["teams"] = std::move(jt);
  return doc.dump(2) + "\n";
}

}  // namespace teamlogic
