#include <nlohmann/json.hpp>

#include "canonwit/error.hpp"
#include "canonwit/extraction.hpp"

namespace canonwit {

using nlohmann::json;

std::string witness_to_json(const Witness& w, bool verified) {
  json j;
  j["type"] = w.type();
  if (auto* p = std::get_if<InducedPathWitness>(&w.value)) {
    j["vertices"] = p->vertices;
  } else if (auto* b = std::get_if<Biclique>(&w.value)) {
    j["sideA"] = b->side_a;
    j["sideB"] = b->side_b;
  } else if (auto* c = std::get_if<CanonicalWitness>(&w.value)) {
    j["descriptor"] = to_string(c->descriptor);
    j["vertices"] = c->embedding.image;
  } else if (auto* r = std::get_if<RakeEmbedding>(&w.value)) {
    j["base"] = r->base;
    json teeth = json::array();
    for (auto [t, idx] : r->teeth) teeth.push_back({t, idx});
    j["teeth"] = teeth;
    if (r->density) j["density"] = *r->density;
  } else if (auto* i = std::get_if<Inconclusive>(&w.value)) {
    j["reason"] = i->reason;
  }
  j["verified"] = verified;
  j["stageLog"] = w.stage_log;
  return j.dump(2);
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw MalformedInput(std::string("witness lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw MalformedInput(std::string("witness field \"") + key + "\" has the wrong shape");
  }
}

}  // namespace

Witness witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("witness is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedInput("witness must be a JSON object");
  Witness w;
  const auto type = field<std::string>(j, "type");
  if (type == "induced-path") {
    w.value = InducedPathWitness{field<VertexSequence>(j, "vertices")};
  } else if (type == "biclique") {
    w.value = Biclique{field<VertexSet>(j, "sideA"), field<VertexSet>(j, "sideB")};
  } else if (type == "canonical") {
    CanonicalWitness c;
    c.descriptor = parse_descriptor(field<std::string>(j, "descriptor"));
    c.embedding = Embedding{EmbeddingMode::kInduced, field<std::vector<Vertex>>(j, "vertices"), {}};
    w.value = c;
  } else if (type == "rake") {
    RakeEmbedding r;
    r.base = field<VertexSequence>(j, "base");
    for (const auto& pair : field<std::vector<std::vector<std::size_t>>>(j, "teeth")) {
      if (pair.size() != 2) throw MalformedInput("each tooth must be [tooth, rootIndex]");
      r.teeth.emplace_back(static_cast<Vertex>(pair[0]), pair[1]);
    }
    if (j.contains("density")) r.density = field<std::size_t>(j, "density");
    w.value = r;
  } else if (type == "inconclusive") {
    w.value = Inconclusive{j.contains("reason") ? field<std::string>(j, "reason") : ""};
  } else {
    throw MalformedInput("unknown witness type \"" + type + "\"");
  }
  if (j.contains("stageLog")) w.stage_log = field<std::vector<std::string>>(j, "stageLog");
  return w;
}

}  // namespace canonwit
