#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subfan/io.hpp"
#include "subfan/linalg.hpp"

using namespace subfan;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolated = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int rank = 2;
  char type = 'A';
  std::string c;
  int m = 0;
  std::string word;
  std::string embedding;
  std::string builtin;
  std::string input;
  std::string gale;
  std::string format = "json";
  int threads = 1;
  std::uint64_t seed = 1;
  int k = 1;
  int m_max = 4;
  std::size_t limit = 0;
  std::string cache_dir;
  int points = 0;
  bool closed_form = false;
  bool check = false;
};

CoxeterSystem group(const Options& o) {
  if (o.rank < 1 || o.rank > 10) throw InputError("rank out of supported range 1..10");
  if (o.type == 'B') {
    if (o.rank != 2) throw InputError("type B is supported for rank 2 only");
    return CoxeterSystem::B(2);
  }
  return CoxeterSystem::A(o.rank);
}

Word coxeter_element(const Options& o) {
  if (o.c.empty()) return bipartite_coxeter(o.rank);
  Word c = parse_word(o.c);
  if (!is_coxeter_element(group(o), c)) throw InputError("not a Coxeter element: " + o.c);
  return c;
}

int int_param(const std::string& spec, const std::string& key) {
  auto pos = spec.find(key + "=");
  if (pos == std::string::npos) throw InputError("word spec needs " + key + "=: " + spec);
  try {
    return std::stoi(spec.substr(pos + key.size() + 1));
  } catch (const std::exception&) {
    throw InputError("bad number in word spec: " + spec);
  }
}

// multiassoc:k=K | power:m=M | obs | explicit letters
Word resolve_word(const Options& o) {
  const std::string& s = o.word;
  Word Q;
  if (s.empty() && o.m > 0) Q = power(coxeter_element(o), o.m);
  else if (s.rfind("multiassoc:", 0) == 0) Q = multiassoc(o.rank, int_param(s, "k"), coxeter_element(o)).Q;
  else if (s.rfind("power:", 0) == 0) Q = power(coxeter_element(o), int_param(s, "m"));
  else if (s == "obs") Q = obs_a3().word;
  else if (!s.empty()) Q = parse_word(s);
  else throw InputError("a word is required (--word or --m)");
  check_word(group(o), Q);
  if (!is_reduced(group(o), Q) && reduced_subwords(group(o), Q).empty())
    throw InputError("word does not contain a reduced expression of w0");
  return Q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RationalMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return matrix_from_json(Json::parse(text));
  return matrix_from_csv(text);
}

void print_matrix(const RationalMatrix& m, const std::string& format) {
  if (format == "json") std::cout << matrix_to_json(m).dump() << '\n';
  else if (format == "csv") std::cout << matrix_to_csv(m);
  else if (format == "printed") std::cout << matrix_to_printed(m);
  else throw InputError("unknown format: " + format);
}

std::vector<int> parse_positions(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

struct LoadedFan {
  Fan fan;
  std::optional<RationalMatrix> gale;
};

LoadedFan load_fan(const Options& o) {
  if (!o.builtin.empty()) {
    if (o.builtin == "A4_92" || o.builtin == "A4_113") {
      const auto& A = a4_builtin_matrices();
      const bool small = o.builtin == "A4_92";
      Word Q = multiassoc(4, small ? 2 : 3, {2, 4, 1, 3}).Q;
      return {build_fan(CoxeterSystem::A(4), Q, (small ? A.rays92 : A.rays113).transpose()),
              small ? A.sig92 : A.sig113};
    }
    Family f;
    try {
      f = parse_family(o.builtin);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (o.m < 3) throw InputError("--m >= 3 is required for builtin families");
    RationalMatrix rays = builtin_rays(f, o.m);
    return {build_fan(builtin_group(f), builtin_word(f, o.m), rays), kernel_basis(rays)};
  }
  if (o.input.empty()) throw InputError("pass --builtin, a fan json via --input, or --input rays with --word");
  std::string text = read_file(o.input);
  LoadedFan lf{[&] {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      Json j = Json::parse(text);
      if (j.contains("facets") || j.contains("word")) return fan_from_json(j);
      return build_fan(group(o), resolve_word(o), matrix_from_json(j));
    }
    return build_fan(group(o), resolve_word(o), matrix_from_csv(text));
  }(), std::nullopt};
  if (!o.gale.empty()) lf.gale = load_matrix(o.gale);
  return lf;
}

RationalMatrix counting_for(const Options& o) {
  if (o.type != 'A') throw InputError("counting matrices are defined in type A");
  Word c = coxeter_element(o);
  if (o.closed_form) {
    if (o.m <= 0) throw InputError("--closed-form needs --m");
    return closed_form_counting(o.rank, c, o.m).D;
  }
  if (o.m > 0 && o.word.empty()) {
    auto D = counting_matrix(o.rank, c, o.m);
    if (o.embedding.empty()) return D.D;
    throw InputError("--embedding needs --word (the embedded word)");
  }
  Word Q = resolve_word(o);
  if (!o.embedding.empty()) {
    if (o.m <= 0) throw InputError("--embedding needs --m");
    Embedding phi{Q, c, o.m, parse_positions(o.embedding)};
    return restricted_matrix(counting_matrix(o.rank, c, o.m), phi);
  }
  return counting_matrix_in(o.rank, c, Q).D;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "counting-matrix") {
    print_matrix(counting_for(o), o.format);
    return kOk;
  }
  if (cmd == "gale") {
    RationalMatrix M = o.input.empty() ? counting_for(o) : load_matrix(o.input);
    try {
      print_matrix(kernel_basis(M), o.format);
    } catch (const RankDeficientError& e) {
      throw InputError(e.what());
    }
    return kOk;
  }
  if (cmd == "facets") {
    auto K = subword_complex(group(o), resolve_word(o));
    if (o.format == "json") {
      Json a = Json::array();
      for (Face F : K.facets) a.push_back(face_positions(F));
      std::cout << a.dump() << '\n';
    } else {
      std::cout << to_polymake(K);
    }
    return kOk;
  }
  if (cmd == "fvector") {
    std::cout << fvector_to_csv(f_vector(subword_complex(group(o), resolve_word(o)))) << '\n';
    return kOk;
  }
  if (cmd == "signature") {
    Word Q = resolve_word(o);
    RationalMatrix D = o.input.empty() ? counting_for(o) : load_matrix(o.input);
    auto W = group(o);
    auto rep = signature_report(W, D, Q, default_sign(W, o.type == 'A' ? coxeter_element(o) : Word{1, 2}), o.threads);
    if (o.format == "csv") std::cout << rep.good << ',' << rep.bad << ',' << rep.zero << ',' << rep.total << '\n';
    else std::cout << to_json(rep).dump() << '\n';
    return rep.signature() ? kOk : kViolated;
  }
  if (cmd == "build-fan") {
    std::cout << fan_to_json(load_fan(o).fan).dump() << '\n';
    return kOk;
  }
  if (cmd == "check-fan") {
    auto lf = load_fan(o);
    auto rep = check_complete(lf.fan, lf.gale ? &*lf.gale : nullptr, o.threads);
    Json j = to_json(rep);
    bool ok = rep.complete() && rep.signature_ok.value_or(true);
    if (o.points > 0 && rep.complete()) {
      CoveringOracle oracle(lf.fan);
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 97);
      int covered_once = 0;
      for (int t = 0; t < o.points; ++t) {
        RationalVector p(lf.fan.dim());
        for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = Rational(num(rng), den(rng));
        try {
          covered_once += oracle.covering_number(p) == 1;
        } catch (const DegeneratePoint&) {
          --t;
        }
      }
      j["points"] = o.points;
      j["covered_once"] = covered_once;
      ok = ok && covered_once == o.points;
    }
    std::cout << j.dump() << '\n';
    return ok ? kOk : kViolated;
  }
  if (cmd == "check-regular") {
    auto lf = load_fan(o);
    try {
      auto res = check_regular(lf.fan, o.threads);
      Json j = to_json(res);
      j["verified"] = verify_certificate(lf.fan, res);
      std::cout << j.dump() << '\n';
      return res.verdict == Verdict::Regular ? kOk : kViolated;
    } catch (const NotComplete& e) {
      std::cout << Json{{"verdict", "not_complete"}}.dump() << '\n';
      return kViolated;
    }
  }
  if (cmd == "survey") {
    SurveyConfig cfg;
    cfg.n = o.rank;
    cfg.k = o.k;
    if (!o.c.empty()) cfg.c = coxeter_element(o);
    cfg.m_max = o.m_max;
    cfg.limit = o.limit;
    cfg.threads = o.threads;
    cfg.cache_dir = o.cache_dir;
    auto t = survey(cfg);
    std::cout << Json{{"key", survey_key(cfg)}, {"csv", t.csv.string()}, {"jobs", t.jobs},
                      {"resumed", t.resumed}, {"regular", t.regular}, {"non_regular", t.non_regular},
                      {"incomplete", t.incomplete}}.dump()
              << '\n';
    return kOk;
  }
  if (cmd == "a4-table") {
    Word c{2, 4, 1, 3};
    Word Q = multiassoc(4, o.k, c).Q;
    auto rep = signature_report(4, counting_matrix_in(4, c, Q).D, Q, o.threads);
    std::cout << rep.good << ',' << rep.bad << ',' << rep.zero << ',' << rep.total << '\n';
    return kOk;
  }
  if (cmd == "braid-graph") {
    auto W = group(o);
    auto g = braid_graph(W, longest_element(W));
    if (o.format == "dot") std::cout << to_dot(g);
    else std::cout << graph_to_json(g).dump() << '\n';
    return kOk;
  }
  if (cmd == "fold-b2") {
    if (o.m < 3) throw InputError("--m >= 3 is required");
    RationalMatrix folded = fold_to_b2(o.m);
    if (o.check) {
      bool same = folded == builtin_rays(Family::M12, o.m);
      std::cout << (same ? "equal" : "different") << '\n';
      return same ? kOk : kViolated;
    }
    print_matrix(folded, o.format);
    return kOk;
  }
  throw InputError("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete simplicial fans for subword complexes"};
  app.require_subcommand(1);
  Options o;
  std::string type = "A";

  auto add_group = [&](CLI::App* s) {
    s->add_option("--rank", o.rank, "Rank n of the Coxeter group");
    s->add_option("--type", type, "A or B")->check(CLI::IsMember({"A", "B"}));
    s->add_option("--c", o.c, "Coxeter element, e.g. 213");
  };
  auto add_word = [&](CLI::App* s) {
    add_group(s);
    s->add_option("--m", o.m, "Power of c");
    s->add_option("--word", o.word, "multiassoc:k=K | power:m=M | obs | letters");
  };
  auto add_fan = [&](CLI::App* s) {
    add_word(s);
    s->add_option("--builtin", o.builtin, "M_213 | M_123 | M_12 | A4_92 | A4_113");
    s->add_option("--input", o.input, "Fan json, or ray matrix json/csv with --word");
    s->add_option("--gale", o.gale, "Gale dual matrix for the signature check");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json | csv | printed");
    s->add_option("--threads", o.threads, "Worker threads");
    s->add_option("--seed", o.seed, "Random seed");
  };

  auto* counting = app.add_subcommand("counting-matrix", "Counting matrix of c^m or of a word");
  add_word(counting);
  counting->add_option("--embedding", o.embedding, "Positions of the word inside c^m, comma separated");
  counting->add_flag("--closed-form", o.closed_form, "Use the closed-form expressions");
  auto* gale = app.add_subcommand("gale", "Kernel basis of a matrix");
  add_word(gale);
  gale->add_option("--input", o.input, "Matrix json or csv");
  gale->add_option("--embedding", o.embedding, "Positions of the word inside c^m");
  auto* facets = app.add_subcommand("facets", "Facets of the subword complex");
  add_word(facets);
  auto* fvector = app.add_subcommand("fvector", "f-vector of the subword complex");
  add_word(fvector);
  auto* signature = app.add_subcommand("signature", "Determinant signs on reduced expressions of w0");
  add_word(signature);
  signature->add_option("--input", o.input, "Matrix json or csv, default: counting matrix");
  auto* build = app.add_subcommand("build-fan", "Serialize a fan");
  add_fan(build);
  auto* check = app.add_subcommand("check-fan", "Completeness check");
  add_fan(check);
  check->add_option("--points", o.points, "Random points for the covering number");
  auto* regular = app.add_subcommand("check-regular", "Regularity with certificate");
  add_fan(regular);
  auto* surv = app.add_subcommand("survey", "Regularity survey over embeddings");
  add_group(surv);
  surv->add_option("--k", o.k, "Q runs over the commutation class of c^k w0(c)");
  surv->add_option("--m-max", o.m_max, "Largest power of c");
  surv->add_option("--limit", o.limit, "Stop after this many jobs");
  surv->add_option("--cache-dir", o.cache_dir, "Directory for the CSV and cursor");
  auto* a4 = app.add_subcommand("a4-table", "Sign counts for c = 2413 and Q = c^k w0(c)");
  a4->add_option("--k", o.k, "Power k")->required();
  auto* braid = app.add_subcommand("braid-graph", "Braid graph of w0");
  add_group(braid);
  auto* fold = app.add_subcommand("fold-b2", "Fold the M_213 rays to B2");
  fold->add_option("--m", o.m, "Power m")->required();
  fold->add_flag("--check", o.check, "Compare with the M_12 family");

  for (auto* s : {counting, gale, facets, fvector, signature, build, check, regular, surv, a4, braid, fold})
    add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  o.type = type[0];
  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
