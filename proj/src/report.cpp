#include "multinv/report.hpp"

#include <sstream>

#include "multinv/errors.hpp"
#include "multinv/reflection.hpp"

namespace multinv {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string factors(const std::vector<std::size_t>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

std::string vector_label(const IntVector& m) { return m.isZero() ? "0" : to_string(m); }

Verdict verdict_from_string(const std::string& s) {
  if (s == "Obstructed") return Verdict::kObstructed;
  if (s == "Inconclusive") return Verdict::kInconclusive;
  if (s == "TriviallyCM") return Verdict::kTriviallyCM;
  throw ValidationError("$.verdict: unknown verdict '" + s + "'");
}

IntVector vector_from_json(const Json& j) {
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& x = j[i];
    v(static_cast<Index>(i)) = x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<std::int64_t>());
  }
  return v;
}

}  // namespace

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    if (auto x = to_int64(v(i))) out.push_back(*x);
    else out.push_back(to_string(v(i)));
  }
  return out;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "obstruction";
  j["name"] = r.name;
  j["rank"] = r.rank;
  j["generator_count"] = r.generator_count;
  j["group_order"] = r.group_order;
  j["fixed_rank"] = r.fixed_rank;
  j["effective_rank"] = r.effective_rank;
  j["effective_order"] = r.effective_order;
  j["isotropy"] = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["witness"] = to_json(row.witness);
    x["order"] = row.order;
    x["bireflection_order"] = row.bireflection_order;
    x["abelianization"] = row.abelianization;
    x["bireflection_image"] = row.bireflection_image;
    x["moved_rank"] = row.moved_rank;
    x["perfect"] = row.perfect;
    x["perfect_mod_bireflections"] = row.perfect_mod_bireflections;
    x["bireflection_generated"] = row.bireflection_generated;
    j["isotropy"].push_back(std::move(x));
  }
  j["condition_a"] = r.condition_a;
  j["condition_b"] = r.condition_b;
  j["all_bireflection_generated"] = r.all_bireflection_generated;
  j["special_rule"] = r.special_rule ? Json(*r.special_rule) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["findings"] = r.findings;
  j["fpf_notes"] = r.fpf_notes;
  j["conclusion"] = r.conclusion;
  return j;
}

ObstructionReport report_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ValidationError("$.schema_version: unsupported");
    ObstructionReport r;
    r.name = j.at("name").get<std::string>();
    r.rank = j.at("rank").get<Index>();
    r.generator_count = j.at("generator_count").get<std::size_t>();
    r.group_order = j.at("group_order").get<std::size_t>();
    r.fixed_rank = j.at("fixed_rank").get<Index>();
    r.effective_rank = j.at("effective_rank").get<Index>();
    r.effective_order = j.at("effective_order").get<std::size_t>();
    for (const auto& x : j.at("isotropy")) {
      IsotropyRow row;
      row.witness = vector_from_json(x.at("witness"));
      row.order = x.at("order").get<std::size_t>();
      row.bireflection_order = x.at("bireflection_order").get<std::size_t>();
      row.abelianization = x.at("abelianization").get<std::vector<std::size_t>>();
      row.bireflection_image = x.at("bireflection_image").get<std::vector<std::size_t>>();
      row.moved_rank = x.at("moved_rank").get<Index>();
      row.perfect = x.at("perfect").get<bool>();
      row.perfect_mod_bireflections = x.at("perfect_mod_bireflections").get<bool>();
      row.bireflection_generated = x.at("bireflection_generated").get<bool>();
      r.rows.push_back(std::move(row));
    }
    r.condition_a = j.at("condition_a").get<bool>();
    r.condition_b = j.at("condition_b").get<bool>();
    r.all_bireflection_generated = j.at("all_bireflection_generated").get<bool>();
    if (!j.at("special_rule").is_null()) r.special_rule = j.at("special_rule").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.findings = j.at("findings").get<std::vector<std::string>>();
    r.fpf_notes = j.at("fpf_notes").get<std::vector<std::string>>();
    r.conclusion = j.at("conclusion").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const ObstructionReport& r) {
  std::ostringstream out;
  out << "name: " << r.name << "\n";
  out << "rank: " << r.rank << "\n";
  out << "generators: " << r.generator_count << "\n";
  out << "group order: " << r.group_order << "\n";
  out << "fixed rank: " << r.fixed_rank << "\n";
  out << "effective rank: " << r.effective_rank << "\n";
  out << "effective order: " << r.effective_order << "\n";
  out << "isotropy classes: " << r.rows.size() << "\n";
  for (const auto& row : r.rows) {
    out << "  m = " << vector_label(row.witness) << ": |G_m| = " << row.order << ", |M(G_m)| = "
        << row.bireflection_order << ", abelianization " << factors(row.abelianization) << ", bireflection image "
        << factors(row.bireflection_image) << ", moved rank " << row.moved_rank << ", perfect "
        << yes_no(row.perfect) << ", perfect mod bireflections " << yes_no(row.perfect_mod_bireflections)
        << ", bireflection generated " << yes_no(row.bireflection_generated) << "\n";
  }
  out << "condition A: " << (r.condition_a ? "holds" : "fails") << "\n";
  out << "condition B: " << (r.condition_b ? "holds" : "fails") << "\n";
  out << "all isotropy groups bireflection generated: " << yes_no(r.all_bireflection_generated) << "\n";
  out << "special rule: " << (r.special_rule ? *r.special_rule : "none") << "\n";
  for (const auto& f : r.findings) out << f << "\n";
  for (const auto& f : r.fpf_notes) out << "note: " << f << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "conclusion: " << r.conclusion << "\n";
  return out.str();
}

Json to_json(const IsotropyCatalog& catalog, const std::string& name) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "isotropy";
  j["name"] = name;
  j["classes"] = Json::array();
  for (const auto& c : catalog.classes) {
    Json x;
    x["witness"] = to_json(c.witness);
    x["order"] = c.group.order();
    x["fixed_rank"] = c.fixed_basis.rows();
    x["bireflection_order"] = bireflection_subgroup(c.group).order();
    x["abelianization"] = abelianization(c.group);
    j["classes"].push_back(std::move(x));
  }
  return j;
}

std::string to_text(const IsotropyCatalog& catalog, const std::string& name) {
  std::ostringstream out;
  out << "name: " << name << "\n";
  out << "isotropy classes: " << catalog.classes.size() << "\n";
  for (const auto& c : catalog.classes)
    out << "  m = " << vector_label(c.witness) << ": |G_m| = " << c.group.order() << ", fixed rank "
        << c.fixed_basis.rows() << ", |M(G_m)| = " << bireflection_subgroup(c.group).order()
        << ", abelianization " << factors(abelianization(c.group)) << "\n";
  return out.str();
}

Json to_json(const DecompositionResult& result, const std::string& name) {
  const auto& c = result.certificate;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decomposition";
  j["name"] = name;
  j["holds"] = result.holds;
  j["bound"] = c.bound;
  j["interior_bound"] = c.interior_bound;
  j["truncation_size"] = c.truncation_size;
  j["variables"] = c.variables;
  j["products"] = Json::array();
  for (const auto& p : c.products) j["products"].push_back({{"exponents", p.exponents}, {"module", p.module_index}});
  j["expressions"] = Json::array();
  for (const auto& e : c.expressions) {
    Json terms = Json::array();
    for (const auto& [i, k] : e.coefficients) {
      Json coeff = to_int64(k) ? Json(*to_int64(k)) : Json(to_string(k));
      terms.push_back({{"product", i}, {"coefficient", coeff}});
    }
    j["expressions"].push_back({{"representative", e.representative}, {"terms", std::move(terms)}});
  }
  if (result.failure) {
    j["failure"] = {{"kind", to_string(result.failure->kind)},
                    {"description", result.failure->description},
                    {"witness", result.failure->witness.to_string()}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

std::string to_text(const DecompositionResult& result, const std::string& name) {
  const auto& c = result.certificate;
  std::ostringstream out;
  out << "name: " << name << "\n";
  out << "bound: " << c.bound << "\n";
  out << "interior bound: " << c.interior_bound << "\n";
  out << "orbit sums in truncation: " << c.truncation_size << "\n";
  out << "products: " << c.products.size() << "\n";
  out << "interior orbit sums expressed: " << c.expressions.size() << "\n";
  if (result.failure) {
    out << "failure: " << to_string(result.failure->kind) << "\n";
    out << "description: " << result.failure->description << "\n";
    out << "witness: " << result.failure->witness.to_string() << "\n";
  }
  out << "result: " << (result.holds ? "pass" : "fail") << "\n";
  return out.str();
}

Json to_json(const std::vector<GradedSlice>& slices, const std::string& name) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "graded_slices";
  j["name"] = name;
  bool holds = true;
  j["slices"] = Json::array();
  for (const auto& s : slices) {
    holds = holds && s.span_rank == static_cast<Index>(s.invariant_rank) &&
            s.product_count == static_cast<std::size_t>(s.span_rank) && s.saturated;
    j["slices"].push_back({{"degree", s.degree},
                           {"products", s.product_count},
                           {"span_rank", s.span_rank},
                           {"invariant_rank", s.invariant_rank},
                           {"saturated", s.saturated}});
  }
  j["holds"] = holds;
  return j;
}

std::string to_text(const std::vector<GradedSlice>& slices, const std::string& name) {
  std::ostringstream out;
  out << "name: " << name << "\n";
  bool holds = true;
  for (const auto& s : slices) {
    const bool ok = s.span_rank == static_cast<Index>(s.invariant_rank) &&
                    s.product_count == static_cast<std::size_t>(s.span_rank) && s.saturated;
    holds = holds && ok;
    out << "  degree " << s.degree << ": products " << s.product_count << ", span rank " << s.span_rank
        << ", invariant rank " << s.invariant_rank << ", saturated " << yes_no(s.saturated) << "\n";
  }
  out << "result: " << (holds ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace multinv
