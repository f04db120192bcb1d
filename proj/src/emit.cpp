#include "qh/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include "qh/errors.hpp"
#include "qh/strings.hpp"

namespace qh {

namespace {

using nlohmann::json;

std::vector<std::vector<std::string>> string_grid(const ExactMatrix& M) {
  std::vector<std::vector<std::string>> g(M.rows());
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    g[i].reserve(M.cols());
    for (Eigen::Index j = 0; j < M.cols(); ++j) g[i].push_back(to_string(M(i, j)));
  }
  return g;
}

std::string align(const std::vector<std::vector<std::string>>& g) {
  if (g.empty()) return "";
  std::vector<std::size_t> width(g[0].size(), 0);
  for (const auto& row : g)
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  for (const auto& row : g) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      out << row[j] << std::string(width[j] - row[j].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

json matrix_to_json(const ExactMatrix& M) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      entries.push_back(to_string(M(i, j)));
  return json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

json report_to_json(const ContractionReport& r) {
  json divs = json::array();
  for (const auto& d : r.divergences)
    divs.push_back(json{{"row", d.row},
                        {"col", d.col},
                        {"hPower", d.h_power},
                        {"poleOrder", d.pole_order}});
  json cancel = json::array();
  for (Eigen::Index i = 0; i < r.cancellation.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < r.cancellation.cols(); ++j)
      row.push_back(r.cancellation(i, j));
    cancel.push_back(row);
  }
  json out{{"source", r.source},
           {"finite", r.finite()},
           {"cancellation", cancel},
           {"divergences", divs}};
  if (r.finite()) {
    out["deformationFree"] = r.deformation_free();
    if (r.deformation_free()) out["note"] = "no h-deformation produced";
  }
  return out;
}

}  // namespace

std::string text_grid(const ExactMatrix& M) { return align(string_grid(M)); }

std::string text_grid(const LimitMatrix& M) { return text_grid(to_exact(M)); }

std::string report_text(const ContractionReport& r) {
  std::ostringstream out;
  if (!r.source.empty()) out << "source: " << r.source << "\n";
  out << "finite: " << (r.finite() ? "yes" : "no") << "\n";
  if (!r.finite()) {
    out << "divergent entries:\n";
    for (const auto& d : r.divergences)
      out << "  (" << d.row << "," << d.col << "): pole order " << d.pole_order
          << " at h^" << d.h_power << "\n";
    return out.str();
  }
  int worst = 0;
  for (Eigen::Index i = 0; i < r.cancellation.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cancellation.cols(); ++j)
      worst = std::max(worst, r.cancellation(i, j));
  out << "worst intermediate pole order cancelled: " << worst << "\n";
  if (r.deformation_free()) out << "note: no h-deformation produced\n";
  return out.str();
}

std::string relation_report_text(const RelationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass) {
      int nonzero = 0;
      int deg = -1;
      for (Eigen::Index j = 0; j < c.residual.cols(); ++j)
        for (Eigen::Index i = 0; i < c.residual.rows(); ++i)
          if (!c.residual(i, j).is_zero()) {
            ++nonzero;
            deg = std::max(deg, c.residual(i, j).degree());
          }
      if (nonzero)
        out << "  [residual: " << nonzero << " nonzero entries, top h-degree " << deg
            << "]";
      else
        out << "  [residual unavailable]";
    }
    out << "\n";
  }
  return out.str();
}

std::string emission_json(const std::string& command, const std::string& algebra,
                          const std::string& rep, int L, const ExactMatrix* matrix,
                          const ContractionReport* report) {
  json out{{"command", command}, {"algebra", algebra}, {"rep", rep}, {"L", L}};
  if (matrix) out["matrix"] = matrix_to_json(*matrix);
  if (report) out["report"] = report_to_json(*report);
  return out.dump(2) + "\n";
}

ExactMatrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid structured matrix: ") + e.what());
  }
  const json* m = &doc;
  if (doc.is_object() && doc.contains("matrix")) m = &doc["matrix"];
  if (!m->is_object() || !m->contains("rows") || !m->contains("cols") ||
      !m->contains("entries"))
    throw ParseError("structured matrix needs rows, cols and entries");
  const Eigen::Index rows = (*m)["rows"].get<Eigen::Index>();
  const Eigen::Index cols = (*m)["cols"].get<Eigen::Index>();
  const auto& entries = (*m)["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows * cols))
    throw ParseError("entry count does not match matrix shape");
  ExactMatrix M(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      M(i, j) = parse_scalar(entries[k++].get<std::string>());
  return M;
}

}  // namespace qh
