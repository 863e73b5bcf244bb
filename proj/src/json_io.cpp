#include "lowindex/json_io.hpp"

namespace lowindex {

namespace {

Json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

std::string cone_text(const ConeOrder& c) {
  if (c.symbolic) return c.value == 1 ? "p" : "p/" + std::to_string(c.value);
  return std::to_string(c.value);
}

}  // namespace

Json census_json(const CensusEntry& entry) {
  Json j;
  j["family"] = family_name(entry.family);
  j["p_condition"] = entry.condition ? Json(entry.condition_text()) : Json(nullptr);
  j["p"] = entry.p ? Json(*entry.p) : Json(nullptr);
  j["index"] = entry.degree;
  j["mode"] = mode_name(entry.mode);
  j["count"] = entry.count();
  Json reps = Json::array();
  for (const auto& h : entry.representatives) {
    Json gens = Json::object();
    const auto& alphabet = h.presentation->alphabet;
    for (std::size_t g = 0; g < h.images.size(); ++g) {
      gens[alphabet[static_cast<int>(g)].name] = h.images[g].to_string();
    }
    reps.push_back({{"generators", gens},
                    {"divisibility", h.divisibility ? Json(*h.divisibility) : Json(nullptr)}});
  }
  j["representatives"] = reps;
  return j;
}

Json subgroup_json(const SubgroupRecord& record) {
  const Presentation& pres = *record.hom.presentation;
  Json j;
  j["index"] = record.index;
  Json t = Json::array();
  for (const auto& w : record.transversal.words) t.push_back(pres.format(w));
  j["transversal"] = t;
  Json g = Json::array();
  for (const auto& w : record.generators) g.push_back(pres.format(w));
  j["generators"] = g;
  j["orientation_preserving"] =
      record.orientation_preserving ? Json(*record.orientation_preserving) : Json(nullptr);
  j["verified"] = record.verified == Verification::Verified;
  return j;
}

Json signature_json(const Signature& sig) {
  Json cones = Json::array();
  for (const auto& c : sig.cones) cones.push_back(cone_text(c));
  const PExpr chi = sig.chi();
  return {{"genus", sig.genus},
          {"cones", cones},
          {"cusps", sig.cusps},
          {"conway", sig.conway()},
          {"chi", {{"const", rational_json(chi.constant)}, {"over_p", rational_json(chi.over_p)}}}};
}

Json enumeration_json(const EnumerationResult& result) {
  Json j;
  j["index"] = result.index ? Json(*result.index) : Json("overflow");
  j["cosets_defined"] = result.cosets_defined;
  j["coincidences"] = result.coincidences;
  return j;
}

Json isometry_json(const IsometryClass& cls) {
  Json j;
  j["class"] = kind_name(cls.kind);
  j["name"] = cls.name();
  j["trace"] = cls.trace;
  j["rotation_order"] = cls.rotation_order ? Json(*cls.rotation_order) : Json(nullptr);
  return j;
}

Json report_json(const Report& report) {
  Json j;
  j["p"] = report.p;
  Json tables = Json::array();
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    Json rows = Json::array();
    for (const auto& r : report.tables[t]) {
      Json ds = Json::array();
      for (const auto& d : r.discrepancies) {
        ds.push_back({{"kind", kind_name(d.kind)},
                      {"detail", d.detail},
                      {"recomputed", d.recomputed.empty() ? Json(nullptr) : Json(d.recomputed)}});
      }
      rows.push_back({{"row", r.row}, {"status", r.status()}, {"illegible", r.illegible},
                      {"discrepancies", ds}});
    }
    tables.push_back({{"id", t + 1}, {"rows", rows}});
  }
  j["tables"] = tables;
  Json census = Json::array();
  for (const auto& c : report.census) {
    census.push_back({{"family", family_name(c.family)},
                      {"index", c.index},
                      {"mode", mode_name(c.mode)},
                      {"paper", c.printed},
                      {"computed", c.computed},
                      {"match", c.match()}});
  }
  j["census"] = census;
  Json bij = Json::array();
  for (const auto& b : report.bijections) {
    bij.push_back({{"table", b.table},
                   {"index", b.index},
                   {"rows", b.rows},
                   {"distinct_classes", b.distinct_classes},
                   {"census_classes", b.census_classes},
                   {"missing", b.missing},
                   {"holds", b.holds()}});
  }
  j["bijection"] = bij;
  Json rel = Json::array();
  for (const auto& d : report.picard_relators) {
    rel.push_back({{"label", d.label}, {"relators", d.relators}, {"counts", d.counts}});
  }
  j["picard_relators"] = rel;
  return j;
}

}  // namespace lowindex
