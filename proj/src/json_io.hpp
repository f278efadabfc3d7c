#ifndef SNAKECALC_JSON_IO_HPP
#define SNAKECALC_JSON_IO_HPP

#include "calculus.hpp"
#include "cluster.hpp"
#include "orbifold.hpp"

#include <json.hpp>

namespace snakecalc {

using json = nlohmann::json;

json to_json(const SnakeGraph& g);
json to_json(const BandGraph& g);
json graph_to_json(const GraphAny& g);
GraphAny graph_from_json(const json& j);

json bundle_to_json(const GraphBundle& b);
GraphBundle bundle_from_json(const json& j);

json to_json(const Identity& id);
Identity identity_from_json(const json& j);

json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json to_json(const Curve& c);
Curve curve_from_json(const json& j);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace snakecalc

#endif
