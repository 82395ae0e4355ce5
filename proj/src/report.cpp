#include "forest_turan/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace forest_turan {

std::string fixed9(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << x;
  std::string s = os.str();
  if (s == "-0.000000000") s.erase(0, 1);
  return s;
}

double round9(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

namespace {

Json extremal_json(const std::vector<ExtremalGraph>& graphs) {
  Json arr = Json::array();
  for (const auto& g : graphs) arr.push_back(Json{{"key", g.key.hex()}, {"graph6", g.graph6}});
  return arr;
}

Json spec_json(const LinearForestSpec& spec) { return Json{{"forest", spec.to_string()}, {"p", spec.p()}}; }

Json points_json(const std::vector<P7Point>& pts) {
  Json arr = Json::array();
  for (const auto& pt : pts) arr.push_back(Json{{"n1", pt.n1}, {"m1", pt.m1}, {"ex", pt.ex}, {"bound", pt.bound}});
  return arr;
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok:
      return "ok";
    case RowStatus::formula_undefined:
      return "formula_undefined";
    case RowStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

Json to_json(const FamilyDescriptor& d) { return Json(d.to_string()); }

Json to_json(const FormulaResult& r) {
  Json ext = Json::array();
  for (const auto& d : r.extremal) ext.push_back(to_json(d));
  return Json{{"value", r.value}, {"case", r.case_label}, {"validity", to_string(r.validity)}, {"extremal", ext}};
}

Json to_json(const OracleReport& r, bool timing) {
  Json j;
  j["graphs"] = r.bipartite ? "bipartite" : "general";
  if (r.bipartite) {
    j["m"] = r.m;
    j["n"] = r.n;
  } else {
    j["order"] = r.m;
  }
  j["spec"] = spec_json(r.spec);
  j["max_edges"] = r.max_edges;
  j["extremal_count"] = r.extremal.size();
  j["extremal"] = extremal_json(r.extremal);
  j["counts"] = Json{{"nodes", r.nodes}, {"leaves", r.leaves}, {"seed_edges", r.seed_edges}};
  if (timing) j["elapsed_seconds"] = round9(r.elapsed_seconds);
  return j;
}

Json to_json(const ScanReport& r, bool timing) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json missing = Json::array();
    for (const auto& m : row.missing_constructions) missing.push_back(m);
    rows.push_back(Json{{"n", row.n},
                        {"status", to_string(row.status)},
                        {"brute", row.brute},
                        {"formula", row.formula},
                        {"case", row.case_label},
                        {"agree", row.agree},
                        {"construction_extremal", row.constructions_extremal},
                        {"missing", missing}});
  }
  Json j{{"m", r.m}, {"n_max", r.n_max}, {"spec", spec_json(r.spec)}, {"rows", rows}};
  j["n0"] = r.n0 ? Json(*r.n0) : Json(nullptr);
  if (timing) j["elapsed_seconds"] = round9(r.elapsed_seconds);
  return j;
}

Json to_json(const SpectralSearchReport& r, bool timing) {
  Json j{{"mode", r.bipartite_only ? "bipartite_max_radius" : "general_min_least_eigenvalue"},
         {"order", r.n},
         {"spec", spec_json(r.spec)},
         {"value", round9(r.value)},
         {"extremal_count", r.extremal.size()},
         {"extremal", extremal_json(r.extremal)},
         {"counts", Json{{"graphs", r.graphs},
                         {"bracket_violations", r.bracket_violations},
                         {"symmetry_checks", r.symmetry_checks},
                         {"symmetry_mismatches", r.symmetry_mismatches}}}};
  if (timing) j["elapsed_seconds"] = round9(r.elapsed_seconds);
  return j;
}

Json to_json(const SpectralResult& r) {
  return Json{{"lambda_max", round9(r.lambda_max)},
              {"lambda_min", round9(r.lambda_min)},
              {"iterations", r.iterations},
              {"residual", r.residual}};
}

Json to_json(const EmbedResult& r, std::optional<int> bipartite_m) {
  Json j;
  switch (r.status) {
    case EmbedStatus::found:
      j["result"] = "found";
      break;
    case EmbedStatus::free:
      j["result"] = "free";
      break;
    case EmbedStatus::budget_exceeded:
      j["result"] = "budget_exceeded";
      break;
  }
  if (r.certificate) {
    Json paths = Json::array();
    for (const auto& p : r.certificate->paths) paths.push_back(format_path(p, bipartite_m));
    j["paths"] = paths;
  }
  j["extensions"] = r.extensions;
  return j;
}

Json to_json(const P7LemmaReport& r) {
  Json j{{"p", r.p}, {"limit", r.limit}};
  j["m"] = r.m ? Json(*r.m) : Json(nullptr);
  j["first"] = Json{{"violations", points_json(r.first_violations)}, {"equalities", points_json(r.first_equalities)}};
  if (r.m) {
    j["second"] =
        Json{{"violations", points_json(r.second_violations)}, {"equalities", points_json(r.second_equalities)}};
  }
  return j;
}

// ------------------------------------------------------------------ text

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) return fixed9(v.get<double>());
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += scalar(v[i]);
    }
    return out + "]";
  }
  if (v.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      if (!first) out += ", ";
      out += k + "=" + scalar(x);
      first = false;
    }
    return out + "}";
  }
  return v.dump();
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_object() || row.size() != v.front().size()) return false;
  return true;
}

void table(std::ostringstream& os, const Json& rows, const std::string& indent) {
  std::vector<std::string> header;
  for (const auto& [k, x] : rows.front().items()) header.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < header.size(); ++c) {
      line.push_back(row.contains(header[c]) ? scalar(row[header[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << "  ";
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
}

void render(std::ostringstream& os, const Json& j, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() && !v.empty()) {
      os << indent << key << ":\n";
      render(os, v, indent + "  ");
    } else if (is_table(v)) {
      os << indent << key << ":\n";
      table(os, v, indent + "  ");
    } else {
      os << indent << key << ": " << scalar(v) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (j.is_object()) {
    render(os, j, "");
  } else {
    os << scalar(j) << '\n';
  }
  return os.str();
}

}  // namespace forest_turan
