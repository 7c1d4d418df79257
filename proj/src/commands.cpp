#include "fdebvp/commands.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fdebvp/analysis.hpp"
#include "fdebvp/config.hpp"
#include "fdebvp/format.hpp"
#include "fdebvp/samples.hpp"
#include "fdebvp/solver.hpp"

namespace fdebvp {

namespace {

using nlohmann::json;

// Table CSVs carry 6 significant digits; solution dumps carry full precision.
std::string table_num(double x) { return strf("%.5e", x); }
std::string full_num(double x) { return strf("%.17g", x); }

bool write_file(const std::filesystem::path& path, const std::string& content,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "cannot write '" << path.string() << "'\n";
    return false;
  }
  out << content;
  return out.good();
}

int report_config_error(const FdeError& e, std::ostream& err) {
  err << e.what() << "\n";
  return 1;
}

int report_validation(const ValidationReport& report, std::ostream& err) {
  err << "invalid problem:\n";
  for (const std::string& issue : report.issues) err << "  - " << issue << "\n";
  return 1;
}

std::string solution_csv(const SolveReport& rep, const ProblemSpec& spec) {
  std::string csv = spec.exact ? "t,u,exact,abs_err\n" : "t,u\n";
  for (std::size_t i = 0; i < rep.grid.nodes.size(); ++i) {
    double t = rep.grid.nodes[i];
    csv += full_num(t) + "," + full_num(rep.u[i]);
    if (spec.exact) {
      double ex = (*spec.exact)(t);
      csv += "," + full_num(ex) + "," + full_num(std::fabs(rep.u[i] - ex));
    }
    csv += "\n";
  }
  return csv;
}

json solve_report_json(const SolveReport& rep) {
  json j;
  j["k"] = rep.k;
  j["converged"] = rep.converged;
  j["residual"] = rep.residual;
  if (rep.error_vs_exact)
    j["error"] = *rep.error_vs_exact;
  else
    j["error"] = nullptr;
  j["residual_history"] = rep.residual_history;
  j["n"] = rep.grid.n;
  j["a"] = rep.grid.a;
  return j;
}

std::string study_csv(const StudyReport& study) {
  std::string csv = "N,h2,K,error,order\n";
  for (const StudyRow& row : study.rows) {
    csv += strf("%d,%s,%d,", row.n, table_num(row.h2).c_str(), row.k);
    if (row.error) csv += table_num(*row.error);
    csv += ",";
    if (row.order) csv += strf("%.5g", *row.order);
    csv += "\n";
  }
  return csv;
}

json study_report_json(const StudyReport& study) {
  json rows = json::array();
  for (const StudyRow& row : study.rows) {
    json r;
    r["n"] = row.n;
    r["h2"] = row.h2;
    r["k"] = row.k;
    r["converged"] = row.converged;
    r["d"] = row.first_residual;
    r["error"] = row.error ? json(*row.error) : json(nullptr);
    r["order"] = row.order ? json(*row.order) : json(nullptr);
    r["pk"] = row.pk ? json(*row.pk) : json(nullptr);
    rows.push_back(r);
  }
  json j;
  j["rows"] = rows;
  j["q"] = study.q ? json(*study.q) : json(nullptr);
  return j;
}

std::filesystem::path with_json_extension(std::filesystem::path p) {
  p.replace_extension(".json");
  return p;
}

}  // namespace

int cmd_solve(const std::filesystem::path& config,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err) {
  ProblemConfig cfg;
  try {
    cfg = load_config(config);
  } catch (const FdeError& e) {
    return report_config_error(e, err);
  }
  ValidationReport vr = validate(cfg.spec);
  if (!vr.pass) return report_validation(vr, err);

  SolveReport rep;
  try {
    rep = solve(cfg.spec, make_grid(cfg.spec.a, cfg.n), cfg.options);
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    err << "evaluation failed: " << e.what() << "\n";
    return 2;
  }

  out << strf("K=%d converged=%s residual=%.6e", rep.k, rep.converged ? "yes" : "no",
              rep.residual);
  if (rep.error_vs_exact) out << strf(" error=%.6e", *rep.error_vs_exact);
  out << "\n";

  json jr = solve_report_json(rep);
  if (output) {
    if (!write_file(*output, solution_csv(rep, cfg.spec), err)) return 1;
    if (!write_file(with_json_extension(*output), jr.dump(2) + "\n", err)) return 1;
    out << "wrote " << output->string() << " and " << with_json_extension(*output).string()
        << "\n";
  } else {
    out << jr.dump() << "\n";
  }
  return rep.converged ? 0 : 2;
}

int cmd_check(const std::filesystem::path& config, std::optional<double> m, int samples,
              std::ostream& out, std::ostream& err) {
  ProblemConfig cfg;
  try {
    cfg = load_config(config);
  } catch (const FdeError& e) {
    return report_config_error(e, err);
  }
  if (!m) m = cfg.m;
  if (!m) {
    err << "no bound M given: add \"M\" to the config or pass --M\n";
    return 1;
  }
  ValidationReport vr = validate(cfg.spec);
  if (!vr.pass) return report_validation(vr, err);

  ConditionReport report;
  try {
    report = check_conditions(cfg.spec, *m, samples);
  } catch (const EvalError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const FdeError& e) {
    return report_config_error(e, err);
  }

  out << strf("%-16s %s\n", "g_norm", full_num(report.g_norm).c_str());
  out << strf("%-16s %s\n", "M0", full_num(report.m0).c_str());
  out << strf("%-16s %s\n", "M", full_num(report.m).c_str());
  out << strf("%-16s %s\n", "f_max_observed", full_num(report.f_max_observed).c_str());
  out << strf("%-16s %s\n", "L1", full_num(report.l1).c_str());
  out << strf("%-16s %s\n", "L2", full_num(report.l2).c_str());
  out << strf("%-16s %s\n", "q", full_num(report.q).c_str());
  out << strf("%-16s %s\n", "bound_R", full_num(report.bound_estimate).c_str());
  out << strf("%-16s %d\n", "samples", report.samples);
  out << strf("%-16s %s\n", "pass", report.pass ? "yes" : "no");

  json j;
  j["g_norm"] = report.g_norm;
  j["m0"] = report.m0;
  j["m"] = report.m;
  j["f_max_observed"] = report.f_max_observed;
  j["l1"] = report.l1;
  j["l2"] = report.l2;
  j["q"] = report.q;
  j["bound_estimate"] = report.bound_estimate;
  j["samples"] = report.samples;
  j["pass"] = report.pass;
  out << j.dump() << "\n";
  return report.pass ? 0 : 2;
}

int cmd_study(const std::filesystem::path& config, const std::vector<int>& ns,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err) {
  ProblemConfig cfg;
  try {
    cfg = load_config(config);
  } catch (const FdeError& e) {
    return report_config_error(e, err);
  }
  if (ns.empty()) {
    err << "no grids given: pass --grids N1,N2,...\n";
    return 1;
  }
  ValidationReport vr = validate(cfg.spec);
  if (!vr.pass) return report_validation(vr, err);

  std::optional<double> q;
  if (cfg.m) {
    try {
      q = check_conditions(cfg.spec, *cfg.m).q;
    } catch (const FdeError& e) {
      err << "note: hypothesis check skipped (" << e.what() << ")\n";
    }
  }

  StudyReport study;
  try {
    study = convergence_study(cfg.spec, ns, cfg.options, q);
  } catch (const FdeError& e) {
    return report_config_error(e, err);
  }

  std::string csv = study_csv(study);
  if (output) {
    if (!write_file(*output, csv, err)) return 1;
    if (!write_file(with_json_extension(*output), study_report_json(study).dump(2) + "\n", err))
      return 1;
    out << "wrote " << output->string() << " and " << with_json_extension(*output).string()
        << "\n";
  } else {
    out << csv;
  }

  for (const StudyRow& row : study.rows)
    if (!row.converged) return 2;
  return 0;
}

namespace {

struct ReferenceRow {
  int n;
  double error;
  bool comparable;  // false: the reference value itself is inconsistent
};

struct StudyCase {
  const char* sample;
  const char* csv_name;
  int expected_k;
  std::vector<ReferenceRow> rows;
};

// Bundled reference tables for the two problems with exact solutions. The
// example1 row at N=800 repeats the N=500 value verbatim in the source
// material (inconsistent with the h² trend of every other row), so it is
// carried but not compared.
const std::vector<StudyCase>& reference_studies() {
  static const std::vector<StudyCase> cases = {
      {"example1",
       "example1_study.csv",
       3,
       {{50, 6.1899e-05, true},
        {100, 1.5475e-05, true},
        {150, 6.877e-06, true},
        {200, 3.8688e-06, true},
        {300, 1.7195e-06, true},
        {400, 9.6721e-07, true},
        {500, 6.1901e-07, true},
        {800, 6.1901e-07, false},
        {1000, 1.5475e-07, true}}},
      {"example3",
       "example3_study.csv",
       25,
       {{50, 1.4455e-04, true},
        {100, 3.6142e-05, true},
        {150, 1.6063e-05, true},
        {200, 9.0345e-06, true},
        {300, 4.0155e-06, true},
        {400, 2.2587e-06, true},
        {500, 1.4456e-06, true},
        {800, 5.6467e-07, true},
        {1000, 3.6139e-07, true}}},
  };
  return cases;
}

constexpr int kCurveGrid = 1000;
const int kIterationGrids[] = {50, 100, 500, 1000};

}  // namespace

int cmd_reproduce(const std::filesystem::path& output_dir, std::ostream& out,
                  std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    err << "cannot create output directory '" << output_dir.string() << "': " << ec.message()
        << "\n";
    return 1;
  }

  int mismatches = 0;
  std::string summary;
  json report;
  report["cases"] = json::object();
  auto note = [&](const std::string& line) { summary += line + "\n"; };

  try {
    // Grid studies against the bundled error tables.
    for (const StudyCase& sc : reference_studies()) {
      const SampleProblem& sample = sample_problem(sc.sample);
      std::vector<int> ns;
      for (const ReferenceRow& row : sc.rows) ns.push_back(row.n);
      StudyReport study = convergence_study(sample.spec, ns);
      if (!write_file(output_dir / sc.csv_name, study_csv(study), err)) return 1;

      note(strf("%s: expected K=%d per row, errors within factor 2 of the references",
                sc.sample, sc.expected_k));
      json case_rows = json::array();
      for (std::size_t i = 0; i < sc.rows.size(); ++i) {
        const ReferenceRow& ref = sc.rows[i];
        const StudyRow& row = study.rows[i];
        bool k_ok = row.converged && row.k == sc.expected_k;
        std::string line = strf("  N=%-5d K=%-3d expected %-3d %s", row.n, row.k, sc.expected_k,
                                k_ok ? "MATCH   " : "MISMATCH");
        bool err_ok = true;
        if (!ref.comparable) {
          line += strf("  error %s, reference skipped (inconsistent reference row)",
                       row.error ? table_num(*row.error).c_str() : "n/a");
        } else if (row.error) {
          double factor = *row.error / ref.error;
          err_ok = factor <= 2.0 && factor >= 0.5;
          line += strf("  error %s vs %s ref, factor %.2f %s", table_num(*row.error).c_str(),
                       table_num(ref.error).c_str(), factor, err_ok ? "MATCH" : "MISMATCH");
        } else {
          err_ok = false;
          line += "  error unavailable MISMATCH";
        }
        if (!k_ok) ++mismatches;
        if (!err_ok) ++mismatches;
        note(line);
        case_rows.push_back({{"n", row.n},
                             {"k", row.k},
                             {"expected_k", sc.expected_k},
                             {"k_match", k_ok},
                             {"error", row.error ? json(*row.error) : json(nullptr)},
                             {"reference_error", ref.comparable ? json(ref.error) : json(nullptr)},
                             {"error_match", err_ok}});
      }
      report["cases"][sc.sample] = case_rows;
    }

    // Grid-independent iteration count plus the solution curve.
    {
      const SampleProblem& sample = sample_problem("example2");
      note("example2: iteration count should be grid-independent at K=8");
      json case_rows = json::array();
      for (int n : kIterationGrids) {
        SolveReport rep = solve(sample.spec, make_grid(sample.spec.a, n));
        bool ok = rep.converged && rep.k == 8;
        if (!ok) ++mismatches;
        note(strf("  N=%-5d K=%-3d expected 8   %s", n, rep.k, ok ? "MATCH" : "MISMATCH"));
        case_rows.push_back({{"n", n}, {"k", rep.k}, {"expected_k", 8}, {"k_match", ok}});
        if (n == kCurveGrid) {
          if (!write_file(output_dir / "example2_solution.csv", solution_csv(rep, sample.spec),
                          err))
            return 1;
        }
      }
      report["cases"]["example2"] = case_rows;
    }

    // The two growth variants: iteration counts only.
    for (const auto& [name, expected] :
         {std::pair<const char*, int>{"quadratic_growth", 15}, {"cubic_growth", 16}}) {
      const SampleProblem& sample = sample_problem(name);
      SolveReport rep = solve(sample.spec, make_grid(sample.spec.a, sample.default_n));
      bool ok = rep.converged && rep.k == expected;
      if (!ok) ++mismatches;
      note(strf("%s: N=%d K=%d expected %d %s", name, sample.default_n, rep.k, expected,
                ok ? "MATCH" : "MISMATCH"));
      report["cases"][name] = {
          {"n", sample.default_n}, {"k", rep.k}, {"expected_k", expected}, {"k_match", ok}};
    }
  } catch (const FdeError& e) {
    err << "reproduction run failed: " << e.what() << "\n";
    return 2;
  }

  note(strf("RESULT: %d mismatch%s", mismatches, mismatches == 1 ? "" : "es"));
  report["mismatches"] = mismatches;

  if (!write_file(output_dir / "summary.txt", summary, err)) return 1;
  if (!write_file(output_dir / "report.json", report.dump(2) + "\n", err)) return 1;
  out << summary;
  out << "wrote " << (output_dir / "summary.txt").string() << "\n";
  return mismatches == 0 ? 0 : 2;
}

}  // namespace fdebvp
