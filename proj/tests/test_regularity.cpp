#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "subfan/linalg.hpp"
#include "subfan/regularity.hpp"

using namespace subfan;

namespace {

Fan builtin_fan(Family f, int m) { return build_fan(builtin_group(f), builtin_word(f, m), builtin_rays(f, m)); }

// Random integer matrix with determinant one: product of elementary operations.
RationalMatrix unimodular(std::mt19937_64& rng, int d) {
  RationalMatrix U = RationalMatrix::Identity(d, d);
  std::uniform_int_distribution<int> idx(0, d - 1), coef(-2, 2);
  for (int t = 0; t < 4 * d; ++t) {
    int i = idx(rng), j = idx(rng);
    if (i != j) U.row(i) += coef(rng) * U.row(j);
  }
  return U;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("boundary of a simplex is regular") {
  for (int k = 1; k <= 4; ++k) {
    Word Q = multiassoc(1, k, {1}).Q;
    auto D = counting_matrix_in(1, {1}, Q).D;
    Fan fan = build_fan(CoxeterSystem::A(1), Q, kernel_basis(D));
    CHECK(fan.complex.facets.size() == static_cast<std::size_t>(k + 1));
    auto res = check_regular(fan);
    CHECK(res.verdict == Verdict::Regular);
    CHECK(verify_certificate(fan, res));
    for (int p : face_positions(fan.complex.facets[res.reference_facet])) CHECK(res.heights(p) == 0);
  }
}

TEST_CASE("M_213 with m = 5 is not regular") {
  Fan fan = builtin_fan(Family::M213, 5);
  auto res = check_regular(fan);
  CHECK(res.walls.size() == 1485);
  CHECK(res.verdict == Verdict::NonRegular);
  CHECK(verify_certificate(fan, res));
  auto tampered = res;
  Eigen::Index nz = 0;
  while (tampered.farkas(nz) == 0) ++nz;
  tampered.farkas(nz) += 1;
  CHECK(!verify_certificate(fan, tampered));
}

TEST_CASE("small fans are regular and tampering is caught") {
  for (Family f : {Family::M12, Family::M123}) {
    Fan fan = builtin_fan(f, 4);
    auto res = check_regular(fan);
    REQUIRE(res.verdict == Verdict::Regular);
    CHECK(verify_certificate(fan, res));
    bool caught = false;
    for (Eigen::Index p = 0; p < res.heights.size() && !caught; ++p) {
      if (res.heights(p) == 0) continue;
      auto tampered = res;
      tampered.heights(p) = 0;
      caught = !verify_certificate(fan, tampered);
    }
    CHECK(caught);
  }
}

TEST_CASE("verdicts do not depend on the choice of Gale dual") {
  std::mt19937_64 rng(17);
  for (auto [f, m] : {std::pair{Family::M123, 4}, std::pair{Family::M12, 5}, std::pair{Family::M213, 4}}) {
    Fan fan = builtin_fan(f, m);
    const Verdict base = check_regular(fan).verdict;
    for (int t = 0; t < 3; ++t) {
      Fan moved = fan;
      moved.rays = unimodular(rng, fan.dim()) * fan.rays;
      for (int p = 0; p < moved.rays.cols(); ++p) moved.rays.col(p) *= Rational(1 + (p + t) % 4, 2);
      auto res = check_regular(moved);
      CHECK(res.verdict == base);
      CHECK(verify_certificate(moved, res));
    }
  }
}

TEST_CASE("regularity needs a complete fan") {
  Fan fan = builtin_fan(Family::M12, 4);
  fan.rays.col(2) = -fan.rays.col(2);
  CHECK_THROWS_AS(check_regular(fan), NotComplete);
}

TEST_CASE("survey rows round-trip through csv") {
  SurveyRow row{"12121", 4, {0, 1, 2, 5, 6}, true, false, 40, 12};
  auto back = survey_row_from_csv(survey_row_to_csv(row));
  CHECK(back.word == row.word);
  CHECK(back.positions == row.positions);
  CHECK(back.regular == row.regular);
  CHECK(back.walls == row.walls);
  SurveyRow incomplete{"121", 2, {0, 1, 2}, false, std::nullopt, 3, 0};
  CHECK(!survey_row_from_csv(survey_row_to_csv(incomplete)).regular);
  CHECK_THROWS(survey_row_from_csv("1,2,3"));
}

TEST_CASE("an interrupted survey resumes where it stopped") {
  auto base = std::filesystem::temp_directory_path() / "subfan_survey_test";
  std::filesystem::remove_all(base);
  SurveyConfig cfg;
  cfg.n = 2;
  cfg.k = 1;
  cfg.m_max = 5;
  cfg.cache_dir = base / "resumed";
  cfg.limit = 7;
  auto first = survey(cfg);
  CHECK(first.jobs == 7);
  CHECK(first.resumed == 0);
  cfg.limit = 0;
  auto second = survey(cfg);
  CHECK(second.resumed == 7);

  SurveyConfig fresh = cfg;
  fresh.cache_dir = base / "fresh";
  fresh.threads = 2;
  auto whole = survey(fresh);
  CHECK(whole.jobs == second.jobs);
  CHECK(whole.regular == second.regular);
  // Every A2 fan in the survey is regular.
  CHECK(whole.regular == whole.jobs);
  auto strip = [](const std::string& csv) {
    std::stringstream in(csv), out;
    std::string line;
    while (std::getline(in, line)) out << line.substr(0, line.rfind(',')) << '\n';
    return out.str();
  };
  CHECK(strip(slurp(second.csv)) == strip(slurp(whole.csv)));
  std::filesystem::remove_all(base);
}
