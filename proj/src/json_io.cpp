#include "rectpack/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace rectpack {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

i64 get_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<i64>();
}

bool get_bool(const Json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw SchemaError(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& get_array(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  return v;
}

Json placements_json(const std::vector<Placement>& ps) {
  Json arr = Json::array();
  for (const auto& pl : ps) arr.push_back({{"id", pl.item_id}, {"x", pl.x}, {"y", pl.y}, {"rotated", pl.rotated}});
  return arr;
}

Json placed_json(const std::vector<PlacedItem>& items) {
  Json arr = Json::array();
  for (const auto& it : items) {
    arr.push_back({{"id", it.item.id}, {"x", it.x}, {"y", it.y}, {"rotated", it.rotated}});
  }
  return arr;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << dump(j);
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Instance& inst) {
  Json items = Json::array();
  for (const auto& it : inst.items) items.push_back({{"id", it.id}, {"w", it.w}, {"h", it.h}, {"p", it.p}});
  return {{"N", inst.N}, {"rotation_allowed", inst.rotation_allowed}, {"items", items}};
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.N = get_int(j, "N");
  inst.rotation_allowed = get_bool(j, "rotation_allowed", false);
  for (const auto& it : get_array(j, "items")) {
    inst.items.push_back({get_string(it, "id"), get_int(it, "w"), get_int(it, "h"), get_int(it, "p")});
  }
  return inst;
}

Json to_json(const Packing& p, const std::string& instance_path) {
  Json j;
  if (instance_path.empty()) j["instance"] = to_json(p.instance);
  else j["instance"] = instance_path;
  j["placements"] = placements_json(p.placements);
  return j;
}

Packing packing_from_json(const Json& j, const std::string& base_dir) {
  Packing p;
  const Json& ref = require(j, "instance");
  if (ref.is_string()) {
    std::filesystem::path path(ref.get<std::string>());
    if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
    p.instance = instance_from_json(read_json_file(path.string()));
  } else {
    p.instance = instance_from_json(ref);
  }
  for (const auto& pl : get_array(j, "placements")) {
    p.placements.push_back({get_string(pl, "id"), get_int(pl, "x"), get_int(pl, "y"), get_bool(pl, "rotated", false)});
  }
  return p;
}

Json to_json(const PackResult& r, const Instance& inst) {
  Json j = to_json(Packing{inst, r.placements});
  j["leftovers"] = r.leftovers;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"ids", x.ids}, {"detail", x.detail}});
  return {{"valid", r.valid()}, {"violations", v}};
}

Json to_json(const Container& c) {
  return {{"x", c.x}, {"y", c.y}, {"w", c.w}, {"h", c.h}, {"label", label_name(c.label)}};
}

Container container_from_json(const Json& j) {
  Container c{get_int(j, "x"), get_int(j, "y"), get_int(j, "w"), get_int(j, "h"), ContainerLabel::Horizontal};
  try {
    c.label = parse_label(get_string(j, "label"));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  return c;
}

Json containers_to_json(const std::vector<Container>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(to_json(c));
  return arr;
}

std::vector<Container> containers_from_json(const Json& j) {
  const Json& arr = j.is_object() ? get_array(j, "containers") : j;
  if (!arr.is_array()) throw SchemaError("expected an array of containers");
  std::vector<Container> out;
  for (const auto& c : arr) out.push_back(container_from_json(c));
  return out;
}

Json to_json(const LShape& L) { return {{"W_L", L.W_L}, {"H_L", L.H_L}, {"w_L", L.w_L}, {"h_L", L.h_L}}; }

LShape lshape_from_json(const Json& j) {
  return {get_int(j, "W_L"), get_int(j, "H_L"), get_int(j, "w_L"), get_int(j, "h_L")};
}

Json to_json(const Corridor& c) {
  Json subs = Json::array();
  for (const auto& s : c.subcorridors) {
    subs.push_back({{"x", s.rect.x},
                    {"y", s.rect.y},
                    {"w", s.rect.w},
                    {"h", s.rect.h},
                    {"orientation", orientation_name(s.orientation)}});
  }
  return {{"kind", c.kind == CorridorKind::Open ? "open" : "closed"}, {"subcorridors", subs}};
}

Corridor corridor_from_json(const Json& j) {
  Corridor c;
  const std::string kind = get_string(j, "kind");
  if (kind == "open") c.kind = CorridorKind::Open;
  else if (kind == "closed") c.kind = CorridorKind::Closed;
  else throw SchemaError("corridor kind must be 'open' or 'closed', got '" + kind + "'");
  for (const auto& s : get_array(j, "subcorridors")) {
    Subcorridor sub{{get_int(s, "x"), get_int(s, "y"), get_int(s, "w"), get_int(s, "h")}, Orientation::Horizontal};
    try {
      sub.orientation = parse_orientation(get_string(s, "orientation"));
    } catch (const InvalidArgument& e) {
      throw SchemaError(e.what());
    }
    c.subcorridors.push_back(sub);
  }
  return c;
}

Json to_json(const EqualSplit& s) { return {{"values", s.values}, {"m", s.m}}; }

EqualSplit split_from_json(const Json& j) {
  EqualSplit s;
  for (const auto& v : get_array(j, "values")) {
    if (!v.is_number_integer()) throw SchemaError("split values must be integers");
    s.values.push_back(v.get<i64>());
  }
  s.m = static_cast<int>(get_int(j, "m"));
  return s;
}

Json to_json(const PartSumInstance& ps) { return {{"A", ps.A}, {"k", ps.k}}; }

PartSumInstance partsum_from_json(const Json& j) {
  PartSumInstance ps;
  for (const auto& v : get_array(j, "A")) {
    if (!v.is_number_integer()) throw SchemaError("values of A must be integers");
    ps.A.push_back(v.get<i64>());
  }
  ps.k = static_cast<int>(get_int(j, "k"));
  return ps;
}

Json to_json(const GapInstance& g) {
  Json bins = Json::array(), items = Json::array();
  for (const auto& b : g.bins) bins.push_back({{"id", b.id}, {"capacity", b.capacity}});
  for (const auto& it : g.items) {
    Json sizes = Json::array();
    for (const auto& s : it.sizes) sizes.push_back(s ? Json(*s) : Json(nullptr));
    items.push_back({{"id", it.id}, {"profit", it.profit}, {"sizes", sizes}});
  }
  return {{"bins", bins}, {"items", items}};
}

GapInstance gap_instance_from_json(const Json& j) {
  GapInstance g;
  for (const auto& b : get_array(j, "bins")) g.bins.push_back({get_string(b, "id"), get_int(b, "capacity")});
  for (const auto& it : get_array(j, "items")) {
    GapItem item{get_string(it, "id"), get_int(it, "profit"), {}};
    for (const auto& s : get_array(it, "sizes")) {
      if (s.is_null()) item.sizes.push_back(std::nullopt);
      else if (s.is_number_integer()) item.sizes.push_back(s.get<i64>());
      else throw SchemaError("GAP sizes must be integers or null");
    }
    if (item.sizes.size() != g.bins.size()) {
      throw SchemaError("item '" + item.id + "' needs one size per bin");
    }
    g.items.push_back(item);
  }
  return g;
}

Json to_json(const GapSolution& s) { return {{"assignment", s.assignment}, {"profit", s.profit}}; }

GapSolution gap_solution_from_json(const Json& j) {
  GapSolution s;
  const Json& a = require(j, "assignment");
  if (!a.is_object()) throw SchemaError("assignment must map item ids to bin ids");
  for (auto it = a.begin(); it != a.end(); ++it) {
    if (!it.value().is_string()) throw SchemaError("assignment values must be bin ids");
    s.assignment[it.key()] = it.value().get<std::string>();
  }
  s.profit = get_int(j, "profit");
  return s;
}

Json to_json(const ContractionReport& r) {
  Json losses = Json::object();
  for (const auto& [stage, l] : r.losses) losses[stage] = {{"count", l.count}, {"profit", l.profit}};
  Json j = to_json(r.packing);
  j["containers"] = containers_to_json(r.containers);
  j["report"] = {{"strip", free_strip_name(r.strip)},
                 {"eps_c_small", to_string(r.thresholds.eps_c_small)},
                 {"eps_c_large", to_string(r.thresholds.eps_c_large)},
                 {"band", r.thresholds.band},
                 {"mu", to_string(r.mu)},
                 {"mu_effective", to_string(r.mu_effective)},
                 {"strip_thickness", r.strip_thickness},
                 {"losses", losses},
                 {"discarded_count", r.discarded_count},
                 {"discarded_profit", r.discarded_profit}};
  return j;
}

Json to_json(const CorridorProcessOutput& out) {
  return {{"boxes", containers_to_json(out.boxes)},
          {"containers", containers_to_json(out.containers)},
          {"placements", placed_json(out.boxed)},
          {"thin_items", out.thin_items},
          {"killed_items", out.killed_items},
          {"box_bound", out.box_bound},
          {"thin_area", out.thin_area},
          {"thin_area_bound", to_string(out.thin_area_bound)}};
}

Json to_json(const BoxSplit& b) {
  return {{"containers", containers_to_json(b.containers)}, {"placements", placed_json(b.kept)}, {"killed", b.killed}};
}

Json to_json(const ShrinkResult& r) {
  return {{"container", to_json(r.container)}, {"placements", placed_json(r.kept)}, {"killed", r.killed}};
}

}  // namespace rectpack
