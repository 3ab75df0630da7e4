#pragma once

// JSON ingestion and emission for every CLI-facing value. Floats are written
// rounded to 12 significant digits so repeated runs are byte-identical.
// Schema problems throw Error(InvalidSpec).

#include "intdist/constructions.hpp"
#include "intdist/enumerator.hpp"
#include "intdist/voronoi.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace intdist {

using Json = nlohmann::json;

inline constexpr int kJsonDigits = 12;

/// x rounded to 12 significant digits (non-finite values pass through).
double round_sig(double x, int digits = kJsonDigits);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json norm_to_json(const NormSpec& spec);
NormSpec norm_from_json(const Json& j);

Json field_to_json(const DistanceField& field);
DistanceField field_from_json(const Json& j);

Json diagram_to_json(const Diagram& diagram);
Diagram diagram_from_json(const Json& j);

/// {"points":[[x,y],..],"residuals":[..],"solver_stats":{..}}
Json triple_points_to_json(const TriplePointSet& set);

/// {"field":<field spec>,"vertices":[[x,y],[x,y],[x,y]]}
Json triangle_to_json(const TriangleSpec& triangle);
TriangleSpec triangle_from_json(const Json& j);

Json candidate_to_json(const Candidate& c);
Json report_to_json(const EnumerationReport& report);

/// {"points":[[x,y],..]}
Json point_set_to_json(std::span<const Point> points);
std::vector<Point> point_set_from_json(const Json& j);

/// Rational coordinates as "num/den" strings, plus the exact distances and
/// the common scale when requested.
Json rational_set_to_json(const RationalPointSet& set, bool scaled);

Json cone_points_to_json(std::span<const ConePoint> points);
std::vector<ConePoint> cone_points_from_json(const Json& j);

/// {"norm":<arcs NormSpec>,"scaled_points":..,"target_distances":..,"epsilon":..,"scale":..}
Json integral_norm_to_json(const IntegralNorm& result);

/// Reads and parses a JSON file; unreadable files throw Error(InvalidSpec).
Json read_json_file(const std::string& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace intdist
