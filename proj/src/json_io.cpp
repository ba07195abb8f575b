#include "musurf/json_io.hpp"

#include "musurf/errors.hpp"
#include "musurf/parser.hpp"

namespace musurf {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw AlgebraError(Errc::invalid_input, "expected an integer or rational string");
}

}  // namespace

SurfaceFile parse_surface_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(Errc::invalid_input, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("surface"))
    throw AlgebraError(Errc::invalid_input, "missing \"surface\" object");
  const Json& s = doc["surface"];
  for (const char* key : {"a", "b", "c", "d"})
    if (!s.contains(key) || !s[key].is_string())
      throw AlgebraError(Errc::invalid_input, std::string("surface needs string \"") + key + "\"");

  SurfaceFile out;
  auto poly = [&](const char* key) {
    try {
      return parse_poly(s[key].get<std::string>(), vars_stu());
    } catch (const ParseError& e) {
      throw AlgebraError(Errc::invalid_input, std::string("surface.") + key + ": " + e.what());
    }
  };
  out.surface = SurfaceParam::make(poly("a"), poly("b"), poly("c"), poly("d"));

  if (doc.contains("points")) {
    for (const Json& p : doc["points"]) {
      if (!p.is_array() || p.size() != 4)
        throw AlgebraError(Errc::invalid_input, "each point must be [x,y,z,w]");
      out.points.push_back(ProjPoint::space(rat_from_json(p[0]), rat_from_json(p[1]),
                                            rat_from_json(p[2]), rat_from_json(p[3])));
    }
  }
  if (doc.contains("seed")) out.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("degree_bound")) out.degree_bound = doc["degree_bound"].get<int>();
  return out;
}

Json to_json(const ProjPoint& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(rat_str(c));
  return arr;
}

Json to_json(const MovingPlane& plane) {
  return Json{{"A", plane.comps[0].str()},
              {"B", plane.comps[1].str()},
              {"C", plane.comps[2].str()},
              {"D", plane.comps[3].str()},
              {"degree", plane.degree()}};
}

Json to_json(const MultiplicityReport& report) {
  return Json{{"total", report.total},
              {"chart_u1", report.affine_chart},
              {"chart_s1_u0", report.infinity_chart},
              {"point_0_1_0", report.far_point},
              {"agreement", report.agreement},
              {"seed", report.seed},
              {"attempts", report.attempts},
              {"truncation_cap_hit", report.truncation_cap_hit},
              {"draws", report.draws}};
}

Json to_json(const BasePointReport& report) {
  Json gens = Json::array();
  for (const auto& g : report.base_locus.gens) gens.push_back(g.str());
  return Json{{"lambda", report.lambda},
              {"base_point_count", report.set_count},
              {"base_point_free", report.is_base_point_free},
              {"base_locus_groebner", gens},
              {"seed", report.seed},
              {"lambda_interpretation", kLambdaNote},
              {"multiplicity", to_json(report.mult)}};
}

Json to_json(const SingularityReport& report) {
  Json curves = Json::array();
  for (const auto& c : report.difference_curves) curves.push_back(c.str());
  return Json{{"point", to_json(report.point)},
              {"r", report.r},
              {"lambda_used", report.lambda_used},
              {"total_count", report.total_count},
              {"pivot_coordinate", report.pivot_coordinate},
              {"difference_curves", curves},
              {"multiplicity", to_json(report.mult)}};
}

Json to_json(const MuBasisResult& result) {
  if (!result.basis) {
    Json pool = Json::array();
    for (const auto& p : result.pool) pool.push_back(to_json(p));
    return Json{{"found", false},
                {"failure", errc_name(result.failure)},
                {"message", result.message},
                {"searched_degree", result.searched_degree},
                {"plane_pool", pool}};
  }
  return Json{{"found", true},
              {"p", to_json(result.basis->p)},
              {"q", to_json(result.basis->q)},
              {"r", to_json(result.basis->r)},
              {"kappa", rat_str(result.basis->kappa)}};
}

Json to_json(const ImplicitSurface& surface) {
  return Json{{"f", surface.f.str()},
              {"degree", surface.degree},
              {"reducible_suspect", surface.reducible_suspect}};
}

Json to_json(const CountCheck& check) {
  Json j{{"count", check.count},
         {"r", check.r},
         {"matches_r", check.matches_r},
         {"vacuous", check.vacuous},
         {"augmented", check.augmented}};
  if (check.standalone_count)
    j["standalone_count"] = *check.standalone_count;
  return j;
}

}  // namespace musurf
