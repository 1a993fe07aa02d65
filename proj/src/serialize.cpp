#include "quiverlab/serialize.hpp"

namespace quiverlab {

namespace {

Json matrix_to_json(const MatC& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(Json::array(
          {rational_to_string(m(r, c).re), rational_to_string(m(r, c).im)}));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatC matrix_c_from_json(const Json& j, int rows, int cols) {
  MatC m(rows, cols);
  if (static_cast<int>(j.size()) != rows) throw std::invalid_argument("matrix row count mismatch");
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw std::invalid_argument("matrix column count mismatch");
    for (int c = 0; c < cols; ++c)
      m(r, c) = {j[r][c][0].get<double>(), j[r][c][1].get<double>()};
  }
  return m;
}

MatQ matrix_q_from_json(const Json& j, int rows, int cols) {
  MatQ m(rows, cols);
  if (static_cast<int>(j.size()) != rows) throw std::invalid_argument("matrix row count mismatch");
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw std::invalid_argument("matrix column count mismatch");
    for (int c = 0; c < cols; ++c)
      m(r, c) = RationalComplex(rational_from_string(j[r][c][0].get<std::string>()),
                                rational_from_string(j[r][c][1].get<std::string>()));
  }
  return m;
}

template <class S>
Json rep_to_json_impl(const Representation<S>& rep, const char* scalar) {
  Json j;
  j["schema"] = "quiverlab.rep/1";
  j["scalar"] = scalar;
  j["v"] = rep.v;
  j["w"] = rep.w;
  j["cyclic"] = rep.quiver.cyclic;
  Json arrows = Json::array();
  for (const auto& a : rep.quiver.omega) arrows.push_back(Json::array({a.from, a.to}));
  j["arrows"] = std::move(arrows);
  Json b = Json::array();
  for (const auto& m : rep.b) b.push_back(matrix_to_json(m));
  j["B"] = std::move(b);
  Json im = Json::array();
  for (const auto& m : rep.i_map) im.push_back(matrix_to_json(m));
  j["i"] = std::move(im);
  Json jm = Json::array();
  for (const auto& m : rep.j_map) jm.push_back(matrix_to_json(m));
  j["j"] = std::move(jm);
  return j;
}

template <class S, class MatReader>
Representation<S> rep_from_json_impl(const Json& j, MatReader read_matrix) {
  Representation<S> rep;
  rep.v = j.at("v").get<std::vector<int>>();
  rep.w = j.at("w").get<std::vector<int>>();
  rep.quiver.vertices = static_cast<int>(rep.v.size());
  rep.quiver.cyclic = j.at("cyclic").get<bool>();
  for (const auto& a : j.at("arrows"))
    rep.quiver.omega.push_back({a[0].get<int>(), a[1].get<int>()});
  const auto& q = rep.quiver;
  for (int h = 0; h < q.arrow_count(); ++h)
    rep.b.push_back(read_matrix(j.at("B").at(h), rep.v[q.in_of(h)], rep.v[q.out_of(h)]));
  for (int k = 0; k < q.vertices; ++k) {
    rep.i_map.push_back(read_matrix(j.at("i").at(k), rep.v[k], rep.w[k]));
    rep.j_map.push_back(read_matrix(j.at("j").at(k), rep.w[k], rep.v[k]));
  }
  return rep;
}

}  // namespace

Json rep_to_json(const NumericRep& rep) { return rep_to_json_impl(rep, "complex128"); }
Json rep_to_json(const ExactRep& rep) { return rep_to_json_impl(rep, "exact"); }

NumericRep rep_from_json(const Json& j) {
  if (j.at("scalar") != "complex128")
    throw std::invalid_argument("expected complex128 representation");
  return rep_from_json_impl<std::complex<double>>(j, matrix_c_from_json);
}

ExactRep exact_rep_from_json(const Json& j) {
  if (j.at("scalar") != "exact") throw std::invalid_argument("expected exact representation");
  return rep_from_json_impl<RationalComplex>(j, matrix_q_from_json);
}

Json report_to_json(const SolveReport& report) {
  Json j;
  j["schema"] = "quiverlab.solve/1";
  j["status"] = to_string(report.status);
  j["final_residual"] = report.final_residual;
  j["iterations"] = report.iterations;
  j["group_log_norm"] = report.group_log_norm;
  j["final_complex_residual"] = report.final_complex_residual;
  j["solution"] = rep_to_json(report.solution);
  return j;
}

SolveReport report_from_json(const Json& j) {
  SolveReport rep;
  std::string status = j.at("status").get<std::string>();
  if (status == "converged")
    rep.status = SolveStatus::converged;
  else if (status == "diverged")
    rep.status = SolveStatus::diverged;
  else if (status == "max_iters")
    rep.status = SolveStatus::max_iters;
  else
    throw std::invalid_argument("unknown solve status: " + status);
  rep.final_residual = j.at("final_residual").get<double>();
  rep.iterations = j.at("iterations").get<int>();
  rep.group_log_norm = j.at("group_log_norm").get<double>();
  rep.final_complex_residual = j.value("final_complex_residual", 0.0);
  rep.solution = rep_from_json(j.at("solution"));
  return rep;
}

}  // namespace quiverlab
