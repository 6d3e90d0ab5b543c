#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <quadrica/bounds.hpp>
#include <quadrica/case_studies.hpp>
#include <quadrica/chow.hpp>
#include <quadrica/diophantine.hpp>
#include <quadrica/double_points.hpp>
#include <quadrica/json_io.hpp>
#include <quadrica/line_restriction.hpp>
#include <quadrica/schubert.hpp>

namespace {

using namespace quadrica;

// exit codes, one per failure family
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBadNumber = 3;
constexpr int kNoFile = 4;
constexpr int kDomain = 5;

struct BadNumber : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool csv = false;
  bool quiet = false;
};

Integer to_integer(const std::string& s) {
  try {
    return parse_integer(s);
  } catch (const std::invalid_argument& e) {
    throw BadNumber(e.what());
  }
}

std::vector<Integer> to_integer_list(const std::string& s) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(to_integer(tok));
  if (out.empty()) throw BadNumber("empty integer list");
  return out;
}

ProjectivePoint to_point(const std::string& s) {
  ProjectivePoint p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      p.push_back(parse_rational(tok));
    } catch (const std::invalid_argument& e) {
      throw BadNumber(e.what());
    }
  }
  if (p.empty()) throw BadNumber("empty coordinate list");
  return p;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "not evaluated";
  return *b ? "yes" : "no";
}

void emit(const Options& opt, const nlohmann::json& j, const std::string& human) {
  if (opt.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << human;
}

std::string render_report(const BoundReport& rep) {
  std::ostringstream os;
  os << "c:                  " << rep.c.get_str() << "\n";
  os << "C(d,2) <= C(2c-1,c-1):  " << rep.main_lhs.get_str() << " <= " << rep.main_rhs.get_str()
     << "  -> " << (rep.main_bound_ok ? "holds" : "fails") << "\n";
  os << "equality:           " << (rep.equality ? "yes" : "no") << "\n";
  os << "alpha >= 2c-2:      " << flag(rep.alpha_lower_ok) << "\n";
  os << "equality iff alpha: " << flag(rep.equality_iff_alpha) << "\n";
  if (rep.np_lhs) {
    os << "N_p bound:          " << rep.np_lhs->get_str() << " <= " << rep.np_rhs->get_str()
       << "  -> " << (*rep.np_bound_ok ? "holds" : "fails") << "\n";
    os << "N_p equality:       " << flag(rep.np_equality) << "\n";
    os << "h0 floor:           " << flag(rep.h0_lower_ok) << "\n";
    os << "h0 iff equality:    " << flag(rep.h0_equality_iff_ok) << "\n";
  }
  if (rep.classification_hit)
    os << "classification:     (d, c, g) = (" << (*rep.classification_hit)[0].get_str() << ", "
       << (*rep.classification_hit)[1].get_str() << ", " << (*rep.classification_hit)[2].get_str()
       << ")\n";
  if (rep.regime) os << "regime:             " << to_string(*rep.regime) << "\n";
  for (const std::string& m : rep.messages) os << "note: " << m << "\n";
  return os.str();
}

int run_bound(const Options& opt, const SchemeDescriptor& s, const std::string& beta) {
  BoundReport rep = main_bound_check(s);
  std::optional<bool> span_ok;
  if (!beta.empty()) {
    span_ok = span_refined_bound_check(s.d, s.codim(), to_integer(beta));
    rep.messages.push_back(std::string("span-refined bound (beta = ") + beta +
                           "): " + (*span_ok ? "holds" : "fails"));
  }
  nlohmann::json j = to_json(rep);
  if (span_ok) j["span_refined_ok"] = *span_ok;
  emit(opt, j, render_report(rep));
  return rep.all_ok() && (!span_ok || *span_ok) ? kOk : kCheckFailed;
}

int run_np_bound(const Options& opt, const SchemeDescriptor& s) {
  const BoundReport rep = np_bound_check(s);
  emit(opt, to_json(rep), render_report(rep));
  return rep.all_ok() ? kOk : kCheckFailed;
}

int run_double_points(const Options& opt, const VarietyNumerics& v) {
  const BVector b = b_vector(v);
  const Integer direct = veronese_double_points_direct(v);
  const Integer via_b = veronese_double_points_via_b(v);
  const bool agree = direct == via_b;
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  nlohmann::json jb = nlohmann::json::array();
  for (const Integer& x : b.values) jb.push_back(json_integer(x));
  j["b"] = jb;
  j["delta_direct"] = json_integer(direct);
  j["delta_via_b"] = json_integer(via_b);
  j["agree"] = agree;
  std::ostringstream os;
  os << "dim:           " << v.dim << "\n";
  os << "degree:        " << v.degree.get_str() << "\n";
  os << "b-vector:     ";
  for (const Integer& x : b.values) os << " " << x.get_str();
  os << "\n";
  if (v.sectional_genus) os << "sect. genus:   " << v.sectional_genus->get_str() << "\n";
  os << "Delta direct:  " << direct.get_str() << "\n";
  os << "Delta via b:   " << via_b.get_str() << "\n";
  os << "agree:         " << (agree ? "yes" : "no") << "\n";
  emit(opt, j, os.str());
  return agree ? kOk : kCheckFailed;
}

int run_secants(const Options& opt, const std::vector<Integer>& a, const std::vector<Integer>& b,
                long r) {
  BVector av, bv;
  av.values = a;
  bv.values = b;
  const Integer n = common_secant_count(av, bv, static_cast<int>(r));
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["common_secants"] = json_integer(n);
  emit(opt, j, "common secant lines: " + n.get_str() + "\n");
  return kOk;
}

int run_classify_line(const Options& opt, const std::string& forms_path, const std::string& ps,
                      const std::string& qs) {
  const std::vector<QuadraticForm> forms = load_forms(forms_path);
  const ProjectivePoint p = to_point(ps);
  const ProjectivePoint q = to_point(qs);
  const LineCase c = classify(restrict_to_line(forms, p, q));
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["case"] = to_string(c);
  emit(opt, j, std::string("line case: ") + to_string(c) + "\n");
  return kOk;
}

int run_sample_lines(const Options& opt, const std::string& forms_path, long trials,
                     std::uint64_t seed, long height) {
  const std::vector<QuadraticForm> forms = load_forms(forms_path);
  const LineSampleReport rep = sample_lines(forms, trials, seed, height);
  std::ostringstream os;
  os << "trials: " << rep.trials << "  height: " << rep.height << "  seed: " << rep.seed << "\n";
  for (const auto& [c, n] : rep.counts) os << "  " << to_string(c) << ": " << n << "\n";
  os << "double cover witnessed: " << (rep.double_cover_found ? "yes" : "no") << "\n";
  emit(opt, to_json(rep), os.str());
  return kOk;
}

int run_diophantine(const Options& opt, long c_min, long c_max, int shards,
                    const std::string& scan_log) {
  std::ofstream log;
  ScanHook hook;
  if (!scan_log.empty()) {
    log.open(scan_log);
    if (!log) throw std::runtime_error("cannot open scan log: " + scan_log);
    log << "c,value,is_triangular\n";
    hook = [&log](long c, const Integer& value, bool tri) {
      log << c << "," << value.get_str() << "," << (tri ? 1 : 0) << "\n";
    };
  }
  const std::vector<Solution> sols =
      hook || shards == 1 ? search(c_min, c_max, hook) : search_sharded(c_min, c_max, shards);
  for (const Solution& s : sols) std::cout << to_json(s).dump() << "\n";
  if (!opt.quiet && !opt.json) {
    if (sols.empty())
      std::cout << "no solutions for " << c_min << " <= c <= " << c_max << "\n";
    else
      std::cout << sols.size() << " solution(s); no further ones for c <= " << c_max << "\n";
  }
  return kOk;
}

int run_classify_equality(const Options& opt, long c_max) {
  const auto cases = classify_equality_cases(c_max);
  bool cap_ok = true;
  for (long c = 6; c <= c_max; ++c)
    if (equality_degree_cap_consistent(c)) cap_ok = false;
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : cases)
    arr.push_back(nlohmann::json::array(
        {json_integer(t[0]), json_integer(t[1]), json_integer(t[2])}));
  j["cases"] = arr;
  j["degree_cap_fails_for_c_ge_6"] = cap_ok;
  std::ostringstream os;
  for (const auto& t : cases)
    os << "(d, c, g) = (" << t[0].get_str() << ", " << t[1].get_str() << ", " << t[2].get_str()
       << ")\n";
  os << "degree-cap route rules out every 6 <= c <= " << c_max << ": " << (cap_ok ? "yes" : "no")
     << "\n";
  emit(opt, j, os.str());
  return cap_ok ? kOk : kCheckFailed;
}

int run_asymptotics(const Options& opt, long c_from, long c_to) {
  const auto rows = asymptotic_table(c_from, c_to);
  if (opt.json) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    nlohmann::json arr = nlohmann::json::array();
    for (const AsymptoticRow& r : rows) {
      nlohmann::json row;
      row["c"] = r.c;
      row["d_max"] = json_integer(r.d_max);
      row["ratio"] = r.ratio;
      arr.push_back(row);
    }
    j["rows"] = arr;
    std::cout << j.dump() << "\n";
  } else if (opt.csv) {
    std::cout << "c,d_max,ratio\n";
    for (const AsymptoticRow& r : rows)
      std::printf("%ld,%s,%.9f\n", r.c, r.d_max.get_str().c_str(), r.ratio);
  } else {
    std::printf("%6s  %-40s  %s\n", "c", "d_max", "ratio");
    for (const AsymptoticRow& r : rows)
      std::printf("%6ld  %-40s  %.6f\n", r.c, r.d_max.get_str().c_str(), r.ratio);
  }
  return kOk;
}

int run_verify_identities(const Options& opt, long k_max) {
  if (k_max < 0) throw std::invalid_argument("verify-identities: k-max must be >= 0");
  bool vandermonde_ok = true;
  for (long m = 0; m <= k_max && vandermonde_ok; ++m)
    for (long a = 0; a <= k_max && vandermonde_ok; ++a)
      for (long b = 0; b <= k_max; ++b)
        if (!vandermonde_check(m, a, b)) {
          vandermonde_ok = false;
          break;
        }
  bool coefficient_ok = true;
  for (int k = 1; k <= k_max && coefficient_ok; ++k)
    for (int i = 0; i <= k && coefficient_ok; ++i)
      for (int q = 1; q <= k; ++q)
        if (!coefficient_identity_check(k, i, q)) {
          coefficient_ok = false;
          break;
        }
  bool weights_ok = true;
  for (int k = 0; k <= k_max; ++k) {
    Integer sum = 0;
    for (int i = 0; i <= k; ++i) sum += binom(2 * k + 1, k - i);
    if (sum != Integer(1) << (2 * static_cast<unsigned long>(k))) {
      weights_ok = false;
      break;
    }
  }
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["k_max"] = k_max;
  j["vandermonde"] = vandermonde_ok;
  j["coefficient_identity"] = coefficient_ok;
  j["weight_sums"] = weights_ok;
  std::ostringstream os;
  os << "vandermonde (m,a,b <= " << k_max << "):        " << (vandermonde_ok ? "pass" : "FAIL")
     << "\n";
  os << "coefficient identity (k <= " << k_max << "):   " << (coefficient_ok ? "pass" : "FAIL")
     << "\n";
  os << "weight sums 4^k (k <= " << k_max << "):        " << (weights_ok ? "pass" : "FAIL")
     << "\n";
  emit(opt, j, os.str());
  return vandermonde_ok && coefficient_ok && weights_ok ? kOk : kCheckFailed;
}

std::optional<Integer> opt_field(const nlohmann::json& row, const char* key) {
  if (!row.contains(key) || row.at(key).is_null()) return std::nullopt;
  const nlohmann::json& v = row.at(key);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty()) return std::nullopt;
    return to_integer(s);
  }
  return Integer(v.get<long>());
}

SchemeDescriptor descriptor_from_json(const nlohmann::json& row) {
  SchemeDescriptor s;
  const auto d = opt_field(row, "d"), n = opt_field(row, "n"), r = opt_field(row, "r");
  if (!d || !n || !r) throw std::invalid_argument("catalog row needs d, n and r");
  s.d = *d;
  s.n = *n;
  s.r = *r;
  s.alpha = opt_field(row, "alpha");
  s.g = opt_field(row, "g");
  s.h0 = opt_field(row, "h0");
  s.p = opt_field(row, "p");
  return s;
}

std::vector<SchemeDescriptor> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog: " + path);
  std::vector<SchemeDescriptor> out;
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("catalog: empty CSV");
    std::vector<std::string> cols;
    std::stringstream hs(header);
    std::string col;
    while (std::getline(hs, col, ',')) cols.push_back(col);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json row = nlohmann::json::object();
      std::stringstream ls(line);
      std::string cell;
      for (std::size_t i = 0; std::getline(ls, cell, ','); ++i)
        if (i < cols.size() && !cell.empty()) row[cols[i]] = cell;
      out.push_back(descriptor_from_json(row));
    }
  } else {
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("catalog: expected a JSON array");
    for (const nlohmann::json& row : j) out.push_back(descriptor_from_json(row));
  }
  return out;
}

int run_audit(const Options& opt, const std::string& path) {
  const std::vector<SchemeDescriptor> rows = load_catalog(path);
  bool all_ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BoundReport rep = rows[i].p ? np_bound_check(rows[i]) : main_bound_check(rows[i]);
    all_ok = all_ok && rep.all_ok();
    if (opt.json) {
      arr.push_back(to_json(rep));
    } else {
      std::cout << "--- row " << i << " (d=" << rows[i].d.get_str() << ", n=" << rows[i].n.get_str()
                << ", r=" << rows[i].r.get_str() << ")\n"
                << render_report(rep);
    }
  }
  if (opt.json) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["reports"] = arr;
    std::cout << j.dump() << "\n";
  }
  return all_ok ? kOk : kCheckFailed;
}

int run_case_study(const Options& opt, const std::string& name, bool all) {
  std::vector<const CaseStudy*> todo;
  if (all) {
    for (const CaseStudy& cs : case_studies()) todo.push_back(&cs);
  } else {
    const CaseStudy* cs = find_case_study(name);
    if (!cs) {
      std::cerr << "unknown case study: " << name << "\n";
      std::cerr << "known:";
      for (const CaseStudy& k : case_studies()) std::cerr << " " << k.name;
      std::cerr << "\n";
      return kUsage;
    }
    todo.push_back(cs);
  }
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const CaseStudy* cs : todo) {
    const CaseStudyResult res = ::quadrica::run_case_study(*cs);
    ok = ok && res.ok;
    if (opt.json) {
      nlohmann::json j;
      j["name"] = cs->name;
      j["note"] = cs->note;
      j["matches_expected"] = res.ok;
      j["mismatches"] = res.mismatches;
      j["report"] = to_json(res.report);
      arr.push_back(j);
    } else {
      std::cout << "=== " << cs->name << "\n";
      if (!opt.quiet) std::cout << cs->note << "\n";
      std::cout << render_report(res.report);
      std::cout << "matches expected: " << (res.ok ? "yes" : "NO") << "\n";
      for (const std::string& m : res.mismatches) std::cout << "  mismatch: " << m << "\n";
    }
  }
  if (opt.json) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["case_studies"] = arr;
    std::cout << j.dump() << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadrica: exact invariants of schemes cut out by quadrics"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--csv", opt.csv, "CSV output where supported");
  app.add_flag("--quiet", opt.quiet, "suppress informational output");

  // bound
  std::string b_d, b_n, b_r, b_alpha, b_g, b_h0, b_assume, b_beta;
  CLI::App* bound = app.add_subcommand("bound", "degree bound and equality criterion");
  bound->add_option("d", b_d, "degree")->required();
  bound->add_option("n", b_n, "dimension")->required();
  bound->add_option("r", b_r, "ambient dimension")->required();
  bound->add_option("--alpha", b_alpha, "dim of the quadric system minus 1");
  bound->add_option("--g", b_g, "sectional genus");
  bound->add_option("--h0", b_h0, "independent quadrics through the scheme");
  bound->add_option("--assume", b_assume, "hypothesis tag echoed on the report");
  bound->add_option("--beta", b_beta, "span dimension for the refined bound (caller input)");

  // np-bound
  std::string np_d, np_c, np_p, np_h0, np_g;
  CLI::App* npb = app.add_subcommand("np-bound", "syzygy-level N_p degree bound");
  npb->add_option("d", np_d, "degree")->required();
  npb->add_option("c", np_c, "codimension")->required();
  npb->add_option("p", np_p, "syzygy level, >= 2")->required();
  npb->add_option("--h0", np_h0, "independent quadrics through the scheme");
  npb->add_option("--g", np_g, "sectional genus");

  // double-points
  std::string dp_ci;
  long dp_quadric = -1;
  CLI::App* dp = app.add_subcommand("double-points",
                                    "double-point vector and the two Veronese counts");
  dp->add_option("--ci", dp_ci, "complete intersection, e.g. 4:2,3");
  dp->add_option("--quadric", dp_quadric, "smooth quadric of this dimension");

  // secants
  std::string sec_a, sec_b;
  long sec_r = 0;
  CLI::App* sec = app.add_subcommand("secants", "common secant lines of two subvarieties");
  sec->add_option("--a", sec_a, "double-point vector of X, comma separated")->required();
  sec->add_option("--b", sec_b, "double-point vector of Y, comma separated")->required();
  sec->add_option("--r", sec_r, "ambient dimension")->required();

  // classify-line
  std::string cl_forms, cl_p, cl_q;
  CLI::App* cl = app.add_subcommand("classify-line", "restrict a quadric system to a line");
  cl->add_option("--forms", cl_forms, "forms JSON file")->required();
  cl->add_option("--p", cl_p, "first point, comma separated rationals")->required();
  cl->add_option("--q", cl_q, "second point")->required();

  // sample-lines
  std::string sl_forms;
  long sl_trials = 0, sl_height = 10;
  std::uint64_t sl_seed = 0;
  CLI::App* sl = app.add_subcommand("sample-lines", "classify random lines, histogram per case");
  sl->add_option("--forms", sl_forms, "forms JSON file")->required();
  sl->add_option("--trials", sl_trials, "number of lines")->required();
  sl->add_option("--seed", sl_seed, "RNG seed")->required();
  sl->add_option("--height", sl_height, "coordinate height bound (default 10)");

  // diophantine
  long di_cmax = 0, di_cmin = 2;
  int di_shards = 1;
  std::string di_log;
  CLI::App* di = app.add_subcommand("diophantine", "search C(d,2) = C(2c-1,c-1)");
  di->add_option("--c-max", di_cmax, "largest codimension scanned")->required();
  di->add_option("--c-min", di_cmin, "smallest codimension scanned (default 2)");
  di->add_option("--shards", di_shards, "parallel shards (default 1)");
  di->add_option("--scan-log", di_log, "CSV scan log (single shard only)");

  // classify-equality
  long ce_cmax = 0;
  CLI::App* ce = app.add_subcommand("classify-equality", "equality cases up to a codimension");
  ce->add_option("--c-max", ce_cmax, "largest codimension scanned")->required();

  // asymptotics
  long as_from = 0, as_to = 0;
  CLI::App* as = app.add_subcommand("asymptotics", "exact d_max(c) against 2^c/(pi c)^(1/4)");
  as->add_option("--c-from", as_from, "first codimension")->required();
  as->add_option("--c-to", as_to, "last codimension")->required();

  // verify-identities
  long vi_kmax = 0;
  CLI::App* vi = app.add_subcommand("verify-identities", "exhaustive binomial identity suites");
  vi->add_option("--k-max", vi_kmax, "bound for every suite")->required();

  // audit
  std::string au_catalog;
  CLI::App* au = app.add_subcommand("audit", "bound reports for a JSON/CSV descriptor catalog");
  au->add_option("--catalog", au_catalog, "catalog file (.json or .csv)")->required();

  // case-study
  std::string cs_name;
  bool cs_all = false;
  CLI::App* cs = app.add_subcommand("case-study", "recompute a registered configuration");
  cs->add_option("name", cs_name, "registered name");
  cs->add_flag("--all", cs_all, "run the whole registry");

  for (CLI::App* s : {bound, npb, dp, sec, cl, sl, di, ce, as, vi, au, cs})
    s->fallthrough();  // let the global --json/--csv/--quiet trail the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (bound->parsed()) {
      SchemeDescriptor s;
      s.d = to_integer(b_d);
      s.n = to_integer(b_n);
      s.r = to_integer(b_r);
      if (!b_alpha.empty()) s.alpha = to_integer(b_alpha);
      if (!b_g.empty()) s.g = to_integer(b_g);
      if (!b_h0.empty()) s.h0 = to_integer(b_h0);
      if (!b_assume.empty()) s.assumption = b_assume;
      return run_bound(opt, s, b_beta);
    }
    if (npb->parsed()) {
      SchemeDescriptor s;
      s.d = to_integer(np_d);
      s.n = 0;
      s.r = to_integer(np_c);
      s.p = to_integer(np_p);
      if (!np_h0.empty()) s.h0 = to_integer(np_h0);
      if (!np_g.empty()) s.g = to_integer(np_g);
      return run_np_bound(opt, s);
    }
    if (dp->parsed()) {
      if ((dp_ci.empty()) == (dp_quadric < 0))
        throw CLI::ValidationError("double-points", "give exactly one of --ci and --quadric");
      if (!dp_ci.empty()) {
        const auto colon = dp_ci.find(':');
        if (colon == std::string::npos)
          throw BadNumber("--ci wants m:e1,e2,... , got '" + dp_ci + "'");
        const Integer m = to_integer(dp_ci.substr(0, colon));
        if (!m.fits_sint_p()) throw BadNumber("ambient dimension out of range");
        return run_double_points(
            opt, complete_intersection_numerics(static_cast<int>(m.get_si()),
                                                to_integer_list(dp_ci.substr(colon + 1))));
      }
      return run_double_points(opt, quadric_numerics(static_cast<int>(dp_quadric)));
    }
    if (sec->parsed())
      return run_secants(opt, to_integer_list(sec_a), to_integer_list(sec_b), sec_r);
    if (cl->parsed()) return run_classify_line(opt, cl_forms, cl_p, cl_q);
    if (sl->parsed()) return run_sample_lines(opt, sl_forms, sl_trials, sl_seed, sl_height);
    if (di->parsed()) {
      if (!di_log.empty() && di_shards != 1)
        throw CLI::ValidationError("diophantine", "--scan-log needs --shards 1");
      return run_diophantine(opt, di_cmin, di_cmax, di_shards, di_log);
    }
    if (ce->parsed()) return run_classify_equality(opt, ce_cmax);
    if (as->parsed()) return run_asymptotics(opt, as_from, as_to);
    if (vi->parsed()) return run_verify_identities(opt, vi_kmax);
    if (au->parsed()) return run_audit(opt, au_catalog);
    if (cs->parsed()) {
      if (!cs_all && cs_name.empty())
        throw CLI::ValidationError("case-study", "give a name or --all");
      return run_case_study(opt, cs_name, cs_all);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const BadNumber& e) {
    std::cerr << "malformed number: " << e.what() << "\n";
    return kBadNumber;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kBadNumber;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kDomain;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kNoFile;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kUsage;
}
