#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subfan/fan.hpp"

namespace subfan {

enum class Verdict { Regular, NonRegular };

struct RegularityResult {
  Verdict verdict = Verdict::NonRegular;
  int reference_facet = 0;      // rays of this facet have height 0
  RationalVector heights;       // one per ray, when regular
  RationalVector farkas;        // one weight per wall, when non-regular
  std::vector<Wall> walls;      // the inequalities the certificate refers to
};

struct NotComplete : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Wall inequalities sum_r c_r h_r > 0, strict feasibility solved exactly.
// Throws NotComplete unless the fan passes check_complete.
RegularityResult check_regular(const Fan& fan, int threads = 1);
// Skips the completeness check; walls must come from wall_relations(fan).
RegularityResult check_regular_unchecked(const Fan& fan, std::vector<Wall> walls, int reference);

bool verify_certificate(const Fan& fan, const RegularityResult& result);

struct SurveyConfig {
  int n = 2;                  // rank of the type A group
  int k = 1;                  // Q runs over the commutation class of c^k w0(c)
  Word c;                     // defaults to the bipartite Coxeter element
  int m_max = 4;
  std::size_t limit = 0;      // stop after this many jobs in total, 0 = no limit
  int threads = 1;
  std::filesystem::path cache_dir;  // empty: $SUBFAN_CACHE, else ./.subfan-cache
};

struct SurveyRow {
  std::string word;
  int m = 0;
  std::vector<int> positions;
  bool complete = false;
  std::optional<bool> regular;
  std::size_t walls = 0;
  long long runtime_ms = 0;
};

struct SurveyTally {
  std::size_t regular = 0, non_regular = 0, incomplete = 0, jobs = 0;
  std::size_t resumed = 0;  // rows loaded from the cache
  std::filesystem::path csv;
};

// Runs jobs (word x m x embedding) in a fixed order, appending rows to a CSV
// and a cursor file so that an interrupted survey resumes where it stopped.
SurveyTally survey(const SurveyConfig& config);
std::filesystem::path survey_cache_dir(const SurveyConfig& config);
std::string survey_key(const SurveyConfig& config);

std::string survey_row_to_csv(const SurveyRow& row);
SurveyRow survey_row_from_csv(const std::string& line);
extern const char* const kSurveyHeader;

}  // namespace subfan
