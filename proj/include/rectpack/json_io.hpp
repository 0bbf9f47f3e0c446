#pragma once

#include "rectpack/container_search.hpp"
#include "rectpack/gap.hpp"
#include "rectpack/greedy.hpp"
#include "rectpack/instance_lab.hpp"
#include "rectpack/model.hpp"
#include "rectpack/transforms.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rectpack {

using Json = nlohmann::json;

// Throws IoError or SchemaError (for unparsable text).
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// The instance is embedded unless a path is given.
Json to_json(const Packing& p, const std::string& instance_path = "");
// "instance" may be inline or a path, resolved relative to base_dir.
Packing packing_from_json(const Json& j, const std::string& base_dir = "");

Json to_json(const PackResult& r, const Instance& inst);

Json to_json(const ValidationReport& r);

Json to_json(const Container& c);
Container container_from_json(const Json& j);
Json containers_to_json(const std::vector<Container>& cs);
std::vector<Container> containers_from_json(const Json& j);

Json to_json(const LShape& L);
LShape lshape_from_json(const Json& j);

Json to_json(const Corridor& c);
Corridor corridor_from_json(const Json& j);

Json to_json(const EqualSplit& s);
EqualSplit split_from_json(const Json& j);

Json to_json(const PartSumInstance& ps);
PartSumInstance partsum_from_json(const Json& j);

Json to_json(const GapInstance& g);
GapInstance gap_instance_from_json(const Json& j);
Json to_json(const GapSolution& s);
GapSolution gap_solution_from_json(const Json& j);

Json to_json(const ContractionReport& r);
Json to_json(const CorridorProcessOutput& out);
Json to_json(const BoxSplit& b);
Json to_json(const ShrinkResult& r);

}  // namespace rectpack
