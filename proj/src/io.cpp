#include "subfan/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subfan {

Json matrix_to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& e = j.at("entries");
  if (static_cast<Eigen::Index>(e.size()) != rows) throw std::invalid_argument("matrix json: row count mismatch");
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(e[i].size()) != cols) throw std::invalid_argument("matrix json: ragged row");
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
      const auto& x = e[i][j2];
      m(i, j2) = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long long>());
    }
  }
  return m;
}

std::string matrix_to_csv(const RationalMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << '\n';
  }
  return os.str();
}

RationalMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_rational(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("matrix csv: ragged row");
    rows.push_back(std::move(row));
  }
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

std::string matrix_to_printed(const RationalMatrix& m) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) width = std::max(width, to_string(m(i, j)).size());
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::string s = to_string(m(i, j));
      if (j) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

Json fan_to_json(const Fan& fan) {
  Json facets = Json::array();
  for (Face F : fan.complex.facets) facets.push_back(face_positions(F));
  return Json{{"type", std::string(1, fan.complex.group.type)},
              {"rank", fan.complex.group.rank},
              {"word", word_to_string(fan.complex.word)},
              {"rays", matrix_to_json(fan.rays)},
              {"facets", std::move(facets)}};
}

Fan fan_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  const int rank = j.at("rank").get<int>();
  CoxeterSystem W = type == "B" ? CoxeterSystem::B(rank) : CoxeterSystem::A(rank);
  Fan fan = build_fan(W, parse_word(j.at("word").get<std::string>()), matrix_from_json(j.at("rays")));
  if (j.contains("facets")) {
    std::vector<Face> stored;
    for (const auto& f : j.at("facets")) stored.push_back(face_from_positions(f.get<std::vector<int>>()));
    if (stored != fan.complex.facets) throw std::invalid_argument("fan json: facets do not match the word");
  }
  return fan;
}

Json graph_to_json(const BraidGraph& g) {
  Json vertices = Json::array();
  for (const auto& w : g.vertices) vertices.push_back(word_to_string(w));
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, Json::array({e.label.first, e.label.second})}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string fvector_to_csv(const std::vector<std::uint64_t>& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  return os.str();
}

Json to_json(const SignatureReport& r) {
  return Json{{"good", r.good}, {"bad", r.bad}, {"zero", r.zero}, {"total", r.total},
              {"signature", r.signature()}, {"offending", r.offending}};
}

namespace {

Json wall_to_json(const Wall& w) {
  return Json{{"facets", {w.facet_i, w.facet_j}}, {"leaving", w.i}, {"entering", w.j}, {"coeffs", vector_to_json(w.coeffs)}};
}

Wall wall_from_json(const Json& j) {
  Wall w;
  w.facet_i = j.at("facets")[0].get<int>();
  w.facet_j = j.at("facets")[1].get<int>();
  w.i = j.at("leaving").get<int>();
  w.j = j.at("entering").get<int>();
  w.coeffs = vector_from_json(j.at("coeffs"));
  return w;
}

}  // namespace

Json to_json(const FanCheckReport& r) {
  Json j{{"complete", r.complete()}, {"basis", r.basis_ok}, {"flip", r.flip_ok},
         {"injective", r.injective_ok}, {"reference_facet", r.reference_facet}, {"walls", r.walls}};
  if (r.singular_facet) j["singular_facet"] = *r.singular_facet;
  if (r.bad_wall) j["bad_wall"] = wall_to_json(*r.bad_wall);
  if (r.overlapping_facet) j["overlapping_facet"] = *r.overlapping_facet;
  if (r.signature_ok) j["signature"] = *r.signature_ok;
  return j;
}

Json to_json(const RegularityResult& r) {
  Json walls = Json::array();
  for (const auto& w : r.walls) walls.push_back(wall_to_json(w));
  Json j{{"verdict", r.verdict == Verdict::Regular ? "regular" : "non_regular"},
         {"reference_facet", r.reference_facet}};
  if (r.verdict == Verdict::Regular) j["heights"] = vector_to_json(r.heights);
  else j["farkas"] = vector_to_json(r.farkas);
  j["walls"] = std::move(walls);
  return j;
}

RegularityResult regularity_from_json(const Json& j) {
  RegularityResult r;
  const std::string v = j.at("verdict").get<std::string>();
  if (v != "regular" && v != "non_regular") throw std::invalid_argument("unknown verdict: " + v);
  r.verdict = v == "regular" ? Verdict::Regular : Verdict::NonRegular;
  r.reference_facet = j.at("reference_facet").get<int>();
  if (j.contains("heights")) r.heights = vector_from_json(j.at("heights"));
  if (j.contains("farkas")) r.farkas = vector_from_json(j.at("farkas"));
  for (const auto& w : j.at("walls")) r.walls.push_back(wall_from_json(w));
  return r;
}

Json vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

RationalVector vector_from_json(const Json& j) {
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_rational(j[i].get<std::string>());
  return v;
}

}  // namespace subfan
