#include "ofs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ofs {

namespace {

using json = nlohmann::json;

const json& expect(const json& doc, const char* key, json::value_t type,
                   const char* what) {
  auto it = doc.find(key);
  if (it == doc.end() || it->type() != type)
    throw OfsError("InvalidInput",
                   std::string("key \"") + key + "\" missing or not " + what);
  return *it;
}

}  // namespace

Ofs read_structure(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw OfsError("InvalidInput", e.what());
  }
  if (!doc.is_object())
    throw OfsError("InvalidInput", "document is not a JSON object");

  RawStructure raw;
  const json& faces = expect(doc, "faces", json::value_t::object, "an object");
  for (const auto& [dim_str, list] : faces.items()) {
    int k = 0;
    try {
      k = std::stoi(dim_str);
    } catch (...) {
      throw OfsError("InvalidInput",
                     "\"faces\" key \"" + dim_str + "\" is not a dimension");
    }
    if (k < 0 || !list.is_array())
      throw OfsError("InvalidInput",
                     "\"faces\"/" + dim_str + " is not a list of names");
    if (static_cast<int>(raw.faces.size()) <= k) raw.faces.resize(k + 1);
    for (const json& name : list) {
      if (!name.is_string())
        throw OfsError("InvalidInput",
                       "\"faces\"/" + dim_str + " contains a non-string");
      raw.faces[k].push_back(name.get<std::string>());
    }
  }

  if (auto it = doc.find("gamma"); it != doc.end()) {
    if (!it->is_object())
      throw OfsError("InvalidInput", "\"gamma\" is not an object");
    for (const auto& [name, target] : it->items()) {
      if (!target.is_string())
        throw OfsError("InvalidInput",
                       "\"gamma\"/" + name + " is not a face name");
      raw.gamma.emplace_back(name, target.get<std::string>());
    }
  }

  if (auto it = doc.find("delta"); it != doc.end()) {
    if (!it->is_object())
      throw OfsError("InvalidInput", "\"delta\" is not an object");
    for (const auto& [name, value] : it->items()) {
      RawDelta d;
      if (value.is_array()) {
        for (const json& f : value) {
          if (!f.is_string())
            throw OfsError("InvalidInput",
                           "\"delta\"/" + name + " contains a non-string");
          d.faces.push_back(f.get<std::string>());
        }
      } else if (value.is_object() && value.contains("empty") &&
                 value["empty"].is_string()) {
        d.empty_base = value["empty"].get<std::string>();
      } else {
        throw OfsError("InvalidInput",
                       "\"delta\"/" + name +
                           " is neither a name list nor {\"empty\": base}");
      }
      raw.delta.emplace_back(name, std::move(d));
    }
  }

  if (auto it = doc.find("tilde"); it != doc.end()) {
    if (!it->is_object())
      throw OfsError("InvalidInput", "\"tilde\" is not an object");
    for (const auto& [dim_str, pairs] : it->items()) {
      if (!pairs.is_array())
        throw OfsError("InvalidInput",
                       "\"tilde\"/" + dim_str + " is not a list of pairs");
      for (const json& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
            !p[1].is_string())
          throw OfsError("InvalidInput",
                         "\"tilde\"/" + dim_str + " entry is not an [a, b] "
                         "pair of names");
        raw.tilde.emplace_back(p[0].get<std::string>(),
                               p[1].get<std::string>());
      }
    }
  }

  if (auto it = doc.find("relaxed_top"); it != doc.end()) {
    if (!it->is_boolean())
      throw OfsError("InvalidInput", "\"relaxed_top\" is not a boolean");
    raw.relaxed_top = it->get<bool>();
  }

  return build(raw);
}

Ofs read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw OfsError("InvalidInput", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_structure(buf.str());
}

std::string write_structure(const Ofs& s) {
  json doc = json::object();
  json faces = json::object();
  json gamma = json::object();
  json delta = json::object();
  json tilde = json::object();
  for (int k = 0; k <= s.dim(); ++k) {
    if (s.count(k) == 0) continue;
    json list = json::array();
    for (const std::string& name : s.names[k]) list.push_back(name);
    faces[std::to_string(k)] = std::move(list);
    for (int i = 0; i < s.count(k); ++i) {
      if (k == 0) continue;
      gamma[s.names[k][i]] = s.names[k - 1][s.gamma[k][i]];
      const Delta& d = s.delta[k][i];
      if (d.empty_dom) {
        delta[s.names[k][i]] = {{"empty", s.names[k - 2][d.base]}};
      } else {
        json fl = json::array();
        for (int f : d.faces) fl.push_back(s.names[k - 1][f]);
        delta[s.names[k][i]] = std::move(fl);
      }
    }
    if (!s.tilde[k].empty()) {
      json pairs = json::array();
      auto sorted = s.tilde[k];
      std::sort(sorted.begin(), sorted.end());
      for (auto [a, b] : sorted)
        pairs.push_back(json::array({s.names[k][a], s.names[k][b]}));
      tilde[std::to_string(k)] = std::move(pairs);
    }
  }
  doc["faces"] = std::move(faces);
  if (!gamma.empty()) doc["gamma"] = std::move(gamma);
  if (!delta.empty()) doc["delta"] = std::move(delta);
  if (!tilde.empty()) doc["tilde"] = std::move(tilde);
  if (s.relaxed_top) doc["relaxed_top"] = true;
  return doc.dump(2) + "\n";
}

}  // namespace ofs
