#pragma once

#include "spolya/cox.hpp"
#include "spolya/feynman.hpp"
#include "spolya/geometry.hpp"
#include "spolya/polya.hpp"
#include "spolya/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace spolya {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct NamedPoly {
    SparsePoly poly;
    std::vector<std::string> vars;
};

// Parse errors become InputError carrying line and column.
Json parse_json(const std::string& text, const std::string& origin = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);
// Hash of the compact dump with keys sorted, as 16 hex digits.
std::string input_hash(const Json& j);

Json to_json(const SparsePoly& f, const std::vector<std::string>& vars);
// Accepts { "vars", "terms": [{ "exp", "coef" }] } or { "vars", "expr": "<polynomial>" }.
NamedPoly poly_from_json(const Json& j);

Json to_json(const PointSet& a);
PointSet point_set_from_json(const Json& j);
Json to_json(const LatticePolytope& p);
Json to_json(const CoxContext& ctx);

Json to_json(const Certificate& c, const std::vector<std::string>& vars, const std::string& hash);
Certificate certificate_from_json(const Json& j);

struct GraphInput {
    FeynmanGraph graph;
    KinematicSpec kinematics;
};

GraphInput graph_from_json(const Json& j);
Json to_json(const ParamPoly& f, const std::vector<std::string>& vars);
Assignment assignment_from_json(const Json& j);
Json to_json(const Assignment& a);

}  // namespace spolya
