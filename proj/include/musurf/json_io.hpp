#pragma once

#include <json.hpp>

#include "musurf/movplanes.hpp"
#include "musurf/multiplicity.hpp"
#include "musurf/oracle.hpp"
#include "musurf/singular.hpp"
#include "musurf/surface.hpp"

namespace musurf {

using Json = nlohmann::ordered_json;

// Input document:
//   {"surface":{"a":str,"b":str,"c":str,"d":str},
//    "points":[[x,y,z,w],...], "seed":int?, "degree_bound":int?}
// Polynomial strings follow the text grammar; point entries are rational
// strings ("1/3") or integers.
struct SurfaceFile {
  SurfaceParam surface;
  std::vector<ProjPoint> points;
  std::uint64_t seed = 0;
  int degree_bound = -1;  // -1: default 2n
};

SurfaceFile parse_surface_file(const std::string& text);

Json to_json(const ProjPoint& p);
Json to_json(const MovingPlane& plane);
Json to_json(const MultiplicityReport& report);
Json to_json(const BasePointReport& report);
Json to_json(const SingularityReport& report);
Json to_json(const MuBasisResult& result);
Json to_json(const ImplicitSurface& surface);
Json to_json(const CountCheck& check);

inline const char* kLambdaNote =
    "lambda is the total multiplicity of the base locus (sum of local "
    "intersection multiplicities of <a,b,c> over the base points); the "
    "set-theoretic point count is reported as base_point_count";

}  // namespace musurf
