#include "subfan/regularity.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "subfan/counting.hpp"
#include "subfan/linalg.hpp"
#include "subfan/lp.hpp"
#include "subfan/parallel.hpp"

namespace subfan {

RegularityResult check_regular_unchecked(const Fan& fan, std::vector<Wall> walls, int reference) {
  const Face ref = fan.complex.facets.at(reference);
  std::vector<int> free_cols;
  for (int p = 0; p < fan.rays.cols(); ++p)
    if (!((ref >> p) & 1)) free_cols.push_back(p);
  RationalMatrix rows(static_cast<Eigen::Index>(walls.size()), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t w = 0; w < walls.size(); ++w) {
    RationalVector full = primitive(walls[w].coeffs);
    for (std::size_t q = 0; q < free_cols.size(); ++q)
      rows(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(q)) = full(free_cols[q]);
  }
  StrictResult s = strict_feasibility(rows);
  RegularityResult res;
  res.reference_facet = reference;
  if (s.feasible) {
    res.verdict = Verdict::Regular;
    res.heights = RationalVector::Zero(fan.rays.cols());
    for (std::size_t q = 0; q < free_cols.size(); ++q) res.heights(free_cols[q]) = s.point(static_cast<Eigen::Index>(q));
  } else {
    res.verdict = Verdict::NonRegular;
    // Rows were rescaled positively; express the weights against the raw walls.
    res.farkas = s.witness;
    for (std::size_t w = 0; w < walls.size(); ++w) {
      RationalVector full = primitive(walls[w].coeffs);
      const Eigen::Index i = walls[w].i;
      res.farkas(static_cast<Eigen::Index>(w)) *= full(i) / walls[w].coeffs(i);
    }
    res.farkas = primitive(res.farkas);
  }
  res.walls = std::move(walls);
  return res;
}

RegularityResult check_regular(const Fan& fan, int threads) {
  FanCheckReport rep = check_complete(fan, nullptr, threads);
  if (!rep.complete()) throw NotComplete("fan is not complete; regularity is undefined");
  return check_regular_unchecked(fan, wall_relations(fan, threads), rep.reference_facet);
}

bool verify_certificate(const Fan& fan, const RegularityResult& result) {
  const Eigen::Index r = fan.rays.cols();
  if (result.walls.empty()) return false;
  for (const auto& w : result.walls) {
    if (w.coeffs.size() != r) return false;
    if (!(fan.rays * w.coeffs).isZero()) return false;
    if (w.coeffs(w.i) != 1 || w.coeffs(w.j) <= 0) return false;
  }
  if (result.verdict == Verdict::Regular) {
    if (result.heights.size() != r) return false;
    for (const auto& w : result.walls)
      if (w.coeffs.dot(result.heights) <= 0) return false;
    return true;
  }
  if (result.farkas.size() != static_cast<Eigen::Index>(result.walls.size())) return false;
  bool nonzero = false;
  RationalVector sum = RationalVector::Zero(r);
  for (std::size_t w = 0; w < result.walls.size(); ++w) {
    const Rational& y = result.farkas(static_cast<Eigen::Index>(w));
    if (y < 0) return false;
    if (y != 0) nonzero = true;
    sum += y * result.walls[w].coeffs;
  }
  // A nonnegative combination of strict inequalities that is identically zero.
  return nonzero && sum.isZero();
}

const char* const kSurveyHeader = "word,m,positions,complete,regular,walls,runtime_ms";

std::string survey_row_to_csv(const SurveyRow& row) {
  std::ostringstream os;
  os << row.word << ',' << row.m << ',';
  for (std::size_t t = 0; t < row.positions.size(); ++t) os << (t ? " " : "") << row.positions[t];
  os << ',' << (row.complete ? 1 : 0) << ',';
  if (row.regular) os << (*row.regular ? 1 : 0);
  else os << '-';
  os << ',' << row.walls << ',' << row.runtime_ms;
  return os.str();
}

SurveyRow survey_row_from_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  if (fields.size() != 7) throw std::invalid_argument("malformed survey row: " + line);
  SurveyRow row;
  row.word = fields[0];
  row.m = std::stoi(fields[1]);
  std::stringstream ps(fields[2]);
  for (int p; ps >> p;) row.positions.push_back(p);
  row.complete = fields[3] == "1";
  if (fields[4] != "-") row.regular = fields[4] == "1";
  row.walls = std::stoull(fields[5]);
  row.runtime_ms = std::stoll(fields[6]);
  return row;
}

std::filesystem::path survey_cache_dir(const SurveyConfig& config) {
  if (!config.cache_dir.empty()) return config.cache_dir;
  if (const char* env = std::getenv("SUBFAN_CACHE"); env && *env) return env;
  return ".subfan-cache";
}

namespace {

Word survey_c(const SurveyConfig& config) {
  return config.c.empty() ? bipartite_coxeter(config.n) : config.c;
}

struct Job {
  Word Q;
  int m;
  std::vector<int> positions;
};

// Lazily walks words x m x embeddings in a fixed order.
class JobStream {
 public:
  JobStream(const SurveyConfig& cfg) : c_(survey_c(cfg)), m_max_(cfg.m_max) {
    const CoxeterSystem W = CoxeterSystem::A(cfg.n);
    words_ = commutation_class(W, multiassoc(cfg.n, cfg.k, c_).Q);
    start_word();
  }

  std::optional<Job> next() {
    while (word_ < words_.size()) {
      if (auto e = it_->next()) return Job{words_[word_], m_, e->positions};
      if (++m_ > m_max_) {
        ++word_;
        start_word();
      } else {
        it_.emplace(words_[word_], c_, m_);
      }
    }
    return std::nullopt;
  }

 private:
  void start_word() {
    if (word_ >= words_.size()) return;
    m_ = 1;
    it_.emplace(words_[word_], c_, m_);
  }

  Word c_;
  int m_max_;
  std::vector<Word> words_;
  std::size_t word_ = 0;
  int m_ = 1;
  std::optional<EmbeddingEnumerator> it_;
};

SurveyRow run_job(int n, const Word& c, const Job& job) {
  auto t0 = std::chrono::steady_clock::now();
  SurveyRow row;
  row.word = word_to_string(job.Q);
  row.m = job.m;
  row.positions = job.positions;
  auto D = counting_matrix(n, c, job.m);
  Embedding phi{job.Q, c, job.m, job.positions};
  RationalMatrix Dphi = restricted_matrix(D, phi);
  Fan fan = build_fan(CoxeterSystem::A(n), job.Q, kernel_basis(Dphi));
  FanCheckReport rep = check_complete(fan);
  row.complete = rep.complete();
  row.walls = rep.walls;
  if (row.complete) {
    auto res = check_regular_unchecked(fan, wall_relations(fan), rep.reference_facet);
    if (!verify_certificate(fan, res)) throw std::logic_error("survey: certificate failed to verify");
    row.regular = res.verdict == Verdict::Regular;
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

void tally_row(SurveyTally& t, const SurveyRow& row) {
  ++t.jobs;
  if (!row.complete) ++t.incomplete;
  else if (*row.regular) ++t.regular;
  else ++t.non_regular;
}

}  // namespace

std::string survey_key(const SurveyConfig& config) {
  return "A" + std::to_string(config.n) + "_k" + std::to_string(config.k) + "_c" +
         word_to_string(survey_c(config)) + "_m" + std::to_string(config.m_max);
}

SurveyTally survey(const SurveyConfig& config) {
  const Word c = survey_c(config);
  if (!is_coxeter_element(CoxeterSystem::A(config.n), c)) throw std::invalid_argument("not a Coxeter element");
  const auto dir = survey_cache_dir(config);
  std::filesystem::create_directories(dir);
  SurveyTally tally;
  tally.csv = dir / (survey_key(config) + ".csv");
  const auto cursor_path = dir / (survey_key(config) + ".cursor");

  std::size_t done = 0;
  if (std::ifstream cur(cursor_path); cur) cur >> done;
  std::vector<std::string> kept;
  if (std::ifstream in(tally.csv); in && done > 0) {
    std::string line;
    std::getline(in, line);
    while (kept.size() < done && std::getline(in, line)) kept.push_back(line);
  }
  done = kept.size();
  {
    // Rewrite so that rows past the cursor from an interrupted batch are dropped.
    std::ofstream out(tally.csv, std::ios::trunc);
    out << kSurveyHeader << '\n';
    for (const auto& line : kept) {
      out << line << '\n';
      tally_row(tally, survey_row_from_csv(line));
    }
  }
  tally.resumed = done;

  JobStream stream(config);
  for (std::size_t s = 0; s < done; ++s)
    if (!stream.next()) break;

  const std::size_t batch = static_cast<std::size_t>(std::max(config.threads, 1)) * 4;
  std::size_t total = done;
  while (config.limit == 0 || total < config.limit) {
    std::vector<Job> jobs;
    while (jobs.size() < batch && (config.limit == 0 || total + jobs.size() < config.limit)) {
      auto j = stream.next();
      if (!j) break;
      jobs.push_back(std::move(*j));
    }
    if (jobs.empty()) break;
    std::vector<SurveyRow> rows(jobs.size());
    parallel_for(jobs.size(), config.threads, [&](std::size_t t) { rows[t] = run_job(config.n, c, jobs[t]); });
    std::ofstream out(tally.csv, std::ios::app);
    for (const auto& row : rows) {
      out << survey_row_to_csv(row) << '\n';
      tally_row(tally, row);
    }
    out.close();
    total += jobs.size();
    std::ofstream(cursor_path, std::ios::trunc) << total << '\n';
  }
  return tally;
}

}  // namespace subfan
