#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "csv.hpp"
#include "twistspin/alexander.hpp"
#include "twistspin/btspin.hpp"
#include "twistspin/distinguisher.hpp"
#include "twistspin/errors.hpp"
#include "twistspin/fox.hpp"
#include "twistspin/knot_codec.hpp"

namespace twistspin::cli {

namespace {

struct KnotInput {
  std::string text;
  std::string format = "auto";
  int strands = 0;
};

struct ResolvedKnot {
  std::string label;
  KnotFormat format;
  std::string code;
  KnotDiagram diagram;
  Presentation presentation;
};

// A knot argument is a table name or an inline code.
ResolvedKnot resolve_knot(const KnotInput& input, const KnotTable& user_table) {
  const KnotTableEntry* entry = user_table.find(input.text);
  if (!entry) entry = bundled_knot_table().find(input.text);
  if (entry) {
    KnotDiagram diagram = parse_knot(entry->code, entry->format);
    Presentation pres = wirtinger(diagram);
    return {input.text, entry->format, entry->code, std::move(diagram), std::move(pres)};
  }
  std::optional<KnotFormat> format;
  if (input.format != "auto") format = parse_knot_format(input.format);
  std::optional<int> strands;
  if (input.strands > 0) strands = input.strands;
  KnotDiagram diagram = parse_knot(input.text, format, strands);
  if (!format) format = detect_knot_format(input.text);
  Presentation pres = wirtinger(diagram);
  return {input.text, *format, input.text, std::move(diagram), std::move(pres)};
}

KnotTable load_table_file(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knot table '" + path + "'");
  return load_knot_table(in);
}

void add_knot_options(CLI::App& cmd, KnotInput& input) {
  cmd.add_option("knot", input.text, "Table name or knot code (PD[...], Gauss 'O1+ U2+ ...', braid 's1 s2^-1 ...')")
      ->required();
  cmd.add_option("--format", input.format, "Notation of an inline code")
      ->check(CLI::IsMember({"auto", "pd", "gauss", "braid"}));
  cmd.add_option("--strands", input.strands, "Strand count for braid words (default: largest index + 1)");
}

std::string sign_summary(const KnotDiagram& d) {
  std::string s;
  for (const auto& x : d.crossings) {
    if (!s.empty()) s += ' ';
    s += x.sign > 0 ? '+' : '-';
  }
  return s;
}

std::string fingerprint_text(const std::vector<Integer>& fp) {
  std::string s = "[";
  for (std::size_t i = 0; i < fp.size(); ++i) s += (i ? ", " : "") + fp[i].get_str();
  return s + "]";
}

ParityPreference parity_from(const std::string& name) {
  if (name == "even") return ParityPreference::prefer_even;
  if (name == "odd") return ParityPreference::prefer_odd;
  return ParityPreference::any;
}

BtSpinParams params_for(std::int64_t m, std::int64_t n, ParityPreference parity) {
  if (m == 0) {
    if (n != 1) throw DomainError("m = 0 requires n = 1 (|m| and n must be coprime)");
    return spun_knot_params();
  }
  return solve_beta_alpha(m, n, parity);
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

template <typename Body>
void run_parallel(std::size_t count, unsigned jobs, Body&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

// CLI11 reads "-2" as a short option, so the distinguish positionals are moved
// behind "--" before parsing.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto cmd = std::find(args.begin(), args.end(), "distinguish");
  if (cmd == args.end() || std::find(cmd, args.end(), "--") != args.end()) return args;
  std::vector<std::string> out(args.begin(), cmd + 1);
  std::vector<std::string> positionals;
  for (auto it = cmd + 1; it != args.end(); ++it) {
    const std::string& a = *it;
    if ((a == "--format" || a == "--table") && it + 1 != args.end()) {
      out.push_back(a);
      out.push_back(*++it);
    } else if (a.starts_with("--") || a == "-h") {
      out.push_back(a);
    } else {
      positionals.push_back(a);
    }
  }
  out.push_back("--");
  out.insert(out.end(), positionals.begin(), positionals.end());
  return out;
}

}  // namespace

BatchResult run_batch(const KnotTable& table, std::istream& pairs, unsigned jobs) {
  const auto records = read_csv(pairs);
  const std::vector<std::string> header{"left_name", "m1", "n1", "right_name", "m2", "n2"};
  if (!records.empty() && records.front().fields != header) {
    throw std::runtime_error("pairs header must be 'left_name,m1,n1,right_name,m2,n2'");
  }

  struct Job {
    const CsvRecord* record = nullptr;
    const KnotTableEntry* left = nullptr;
    const KnotTableEntry* right = nullptr;
    std::int64_t m1 = 0, n1 = 0, m2 = 0, n2 = 0;
    std::string error;
    std::vector<std::string> row;
  };
  std::vector<Job> jobs_list;
  for (std::size_t i = 1; i < records.size(); ++i) {
    Job job;
    job.record = &records[i];
    const auto& f = records[i].fields;
    if (f.size() != 6) {
      job.error = "expected 6 fields, found " + std::to_string(f.size());
    } else {
      job.left = table.find(f[0]);
      job.right = table.find(f[3]);
      const auto m1 = parse_int(f[1]), n1 = parse_int(f[2]), m2 = parse_int(f[4]), n2 = parse_int(f[5]);
      if (!job.left) job.error = "unknown knot name '" + f[0] + "'";
      else if (!job.right) job.error = "unknown knot name '" + f[3] + "'";
      else if (!m1 || !n1 || !m2 || !n2) job.error = "m and n must be integers";
      else {
        job.m1 = *m1;
        job.n1 = *n1;
        job.m2 = *m2;
        job.n2 = *n2;
      }
    }
    jobs_list.push_back(std::move(job));
  }

  // Determinants once per referenced knot.
  std::vector<const KnotTableEntry*> knots;
  for (const auto& job : jobs_list) {
    if (!job.error.empty()) continue;
    for (const auto* e : {job.left, job.right}) {
      if (std::find(knots.begin(), knots.end(), e) == knots.end()) knots.push_back(e);
    }
  }
  std::vector<Integer> dets(knots.size());
  std::vector<std::string> det_errors(knots.size());
  run_parallel(knots.size(), jobs, [&](std::size_t i) {
    try {
      dets[i] = knot_determinant(entry_presentation(*knots[i]));
    } catch (const std::exception& ex) {
      det_errors[i] = ex.what();
    }
  });
  auto det_index = [&](const KnotTableEntry* e) {
    return static_cast<std::size_t>(std::find(knots.begin(), knots.end(), e) - knots.begin());
  };

  run_parallel(jobs_list.size(), jobs, [&](std::size_t i) {
    Job& job = jobs_list[i];
    const auto& f = job.record->fields;
    auto field = [&](std::size_t k) { return k < f.size() ? f[k] : std::string(); };
    if (job.error.empty()) {
      const std::size_t li = det_index(job.left);
      const std::size_t ri = det_index(job.right);
      if (!det_errors[li].empty()) job.error = det_errors[li];
      else if (!det_errors[ri].empty()) job.error = det_errors[ri];
      else {
        try {
          const Verdict v = distinguish_by_determinants(dets[li], job.m1, job.n1, dets[ri], job.m2, job.n2);
          job.row = {field(0),
                     field(3),
                     std::to_string(job.m1),
                     std::to_string(job.n1),
                     std::to_string(job.m2),
                     std::to_string(job.n2),
                     v.evidence.det1.get_str(),
                     v.evidence.det2.get_str(),
                     v.outcome == Verdict::Outcome::distinguished ? "DISTINGUISHED" : "INCONCLUSIVE",
                     std::string(rule_name(v.rule))};
        } catch (const std::exception& ex) {
          job.error = ex.what();
        }
      }
    }
    if (!job.error.empty()) {
      job.row = {field(0), field(3), field(1), field(2), field(4), field(5), "", "", "ERROR", job.error};
    }
  });

  BatchResult result;
  std::ostringstream report;
  write_csv_row(report, {"left", "right", "m1", "n1", "m2", "n2", "det1", "det2", "outcome", "rule"});
  for (const auto& job : jobs_list) {
    write_csv_row(report, job.row);
    if (!job.error.empty()) result.errors.push_back({job.record->line, job.error});
  }
  result.report = report.str();
  return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot groups, Alexander ideals and the determinant criterion for branched twist spins"};
  app.name("twistspin");
  app.require_subcommand(1);
  app.fallthrough();

  std::string table_path;
  app.add_option("--table", table_path, "Extra knot table (CSV: name,format,code) for name lookups");

  KnotInput parse_input;
  auto* parse_cmd = app.add_subcommand("parse", "Print the diagram summary and Wirtinger presentation");
  add_knot_options(*parse_cmd, parse_input);

  KnotInput alex_input;
  auto* alex_cmd = app.add_subcommand("alexander", "Print the normalized Alexander polynomial");
  add_knot_options(*alex_cmd, alex_input);

  KnotInput det_input;
  auto* det_cmd = app.add_subcommand("det", "Print the knot determinant |Delta(-1)|");
  add_knot_options(*det_cmd, det_input);

  KnotInput bt_input;
  std::int64_t bt_m = 0;
  std::int64_t bt_n = 1;
  std::string bt_parity = "any";
  std::string bt_show = "presentation";
  std::size_t max_minors = MinorOptions{}.max_minors;
  unsigned threads = 0;
  auto* bt_cmd = app.add_subcommand("btspin", "Branched twist spin presentation and elementary ideals");
  add_knot_options(*bt_cmd, bt_input);
  bt_cmd->add_option("--m", bt_m, "Twist parameter m")->required()->allow_extra_args(false);
  bt_cmd->add_option("--n", bt_n, "Branch parameter n (coprime to |m|)");
  bt_cmd->add_option("--parity", bt_parity, "Parity preference for beta")->check(CLI::IsMember({"any", "even", "odd"}));
  bt_cmd->add_option("--show", bt_show, "What to print")
      ->check(CLI::IsMember({"presentation", "params", "matrix", "e1", "e1-brute", "e0"}));
  bt_cmd->add_option("--max-minors", max_minors, "Refuse minor enumerations larger than this");
  bt_cmd->add_option("--threads", threads, "Worker threads for minor enumeration (0 = all cores)");

  std::vector<std::string> dist_args;
  std::string dist_format = "auto";
  bool dist_fingerprints = false;
  auto* dist_cmd = app.add_subcommand("distinguish", "Apply the determinant criterion to two branched twist spins");
  dist_cmd->add_option("args", dist_args, "LEFT M1 N1 RIGHT M2 N2")->expected(6)->required()->allow_extra_args();
  dist_cmd->add_option("--format", dist_format, "Notation of inline codes")
      ->check(CLI::IsMember({"auto", "pd", "gauss", "braid"}));
  dist_cmd->add_flag("--e1-fingerprints", dist_fingerprints,
                     "Also compare E1 evaluation fingerprints (experimental, never conclusive)");
  dist_cmd->positionals_at_end();

  std::string batch_table;
  std::string batch_pairs;
  std::string batch_out;
  unsigned batch_jobs = 1;
  auto* batch_cmd = app.add_subcommand("batch", "Run the criterion over a CSV of knot pairs");
  batch_cmd->add_option("--pairs", batch_pairs, "CSV: left_name,m1,n1,right_name,m2,n2")->required();
  batch_cmd->add_option("--out", batch_out, "Report CSV path (default: stdout)");
  batch_cmd->add_option("--jobs", batch_jobs, "Parallel workers")->check(CLI::Range(1U, 1024U));

  try {
    auto args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    const KnotTable user_table = load_table_file(table_path);

    if (*parse_cmd) {
      const auto k = resolve_knot(parse_input, user_table);
      out << "format: " << to_string(k.format) << '\n';
      out << "code: " << k.code << '\n';
      out << "arcs: " << k.diagram.arc_count << '\n';
      out << "crossings: " << k.diagram.crossings.size() << '\n';
      out << "signs: " << sign_summary(k.diagram) << '\n';
      out << "presentation: " << render_presentation(k.presentation) << '\n';
      return kExitOk;
    }
    if (*alex_cmd) {
      const auto k = resolve_knot(alex_input, user_table);
      const LaurentPoly delta = alexander_polynomial(k.presentation);
      if (delta.is_zero()) err << "warning: every (l-1)-minor vanishes; this is not a knot group presentation\n";
      out << delta << '\n';
      return kExitOk;
    }
    if (*det_cmd) {
      const auto k = resolve_knot(det_input, user_table);
      out << knot_determinant(k.presentation).get_str() << '\n';
      return kExitOk;
    }
    if (*bt_cmd) {
      const auto k = resolve_knot(bt_input, user_table);
      const BtSpinParams params = params_for(bt_m, bt_n, parity_from(bt_parity));
      const MinorOptions options{max_minors, threads};
      const bool needs_nonzero_m = bt_show == "e1" || bt_show == "e1-brute" || bt_show == "e0";
      if (needs_nonzero_m && params.m == 0) {
        err << "error: the elementary ideal formulas require m ≠ 0\n";
        return kExitUsageError;
      }
      if (bt_show == "presentation" || bt_show == "params") {
        out << "params: m=" << params.m << " n=" << params.n << " epsilon=" << params.epsilon
            << " beta=" << params.beta << " alpha=" << params.alpha << '\n';
        if (bt_show == "params") return kExitOk;
        const Presentation p = btspin_presentation(k.presentation, params);
        out << "presentation: " << render_presentation(p) << '\n';
        out << "meridian: " << render_word(p.meridian(), p.generator_names()) << '\n';
      } else if (bt_show == "matrix") {
        out << render_matrix(btspin_alexander_matrix(k.presentation, params));
      } else if (bt_show == "e1") {
        out << render_ideal(1, e1_closed_form(k.presentation, params)) << '\n';
      } else if (bt_show == "e1-brute") {
        const Ideal brute = e1_brute_force(k.presentation, params, options);
        const Ideal closed = e1_closed_form(k.presentation, params);
        out << render_ideal(1, brute) << '\n';
        out << "fingerprint at t = -1, 2, 3, 5: " << fingerprint_text(ideal_eval_fingerprint(brute)) << '\n';
        out << "agrees with closed form (necessary condition only): "
            << (ideals_compatible(brute, closed) ? "yes" : "no") << '\n';
      } else {
        const VanishingReport report = e0_check(k.presentation, params, options);
        if (report.all_zero) {
          out << "E0 = 0 (verified, " << report.minors_total << " minors)\n";
        } else {
          out << "E0 ≠ 0 (nonzero minor found)\n";
        }
      }
      return kExitOk;
    }
    if (*dist_cmd) {
      auto number = [&](const std::string& s, const char* what) {
        auto v = parse_int(s);
        if (!v) throw DomainError(std::string(what) + " must be an integer, got '" + s + "'");
        return *v;
      };
      const auto left = resolve_knot({dist_args[0], dist_format, 0}, user_table);
      const auto right = resolve_knot({dist_args[3], dist_format, 0}, user_table);
      const auto m1 = number(dist_args[1], "m1");
      const auto n1 = number(dist_args[2], "n1");
      const auto m2 = number(dist_args[4], "m2");
      const auto n2 = number(dist_args[5], "n2");
      const Verdict v = distinguish(left.presentation, m1, n1, right.presentation, m2, n2);
      out << render_verdict(v) << '\n';
      out << "evidence: det1=" << v.evidence.det1.get_str() << " det2=" << v.evidence.det2.get_str()
          << " m1 " << (v.evidence.m1_even ? "even" : "odd") << ", m2 " << (v.evidence.m2_even ? "even" : "odd")
          << '\n';
      if (v.outcome == Verdict::Outcome::inconclusive) {
        out << "note: INCONCLUSIVE means the criterion does not apply; it does not claim equivalence\n";
      }
      if (dist_fingerprints) {
        const auto e1_left = e1_closed_form(left.presentation, solve_beta_alpha(m1, n1));
        const auto e1_right = e1_closed_form(right.presentation, solve_beta_alpha(m2, n2));
        out << "experimental, not conclusive: E1 fingerprints " << fingerprint_text(ideal_eval_fingerprint(e1_left))
            << " vs " << fingerprint_text(ideal_eval_fingerprint(e1_right)) << '\n';
      }
      return kExitOk;
    }
    if (*batch_cmd) {
      const KnotTable& table = table_path.empty() ? bundled_knot_table() : user_table;
      for (const auto& e : table.errors) err << "table line " << e.line << ": " << e.message << '\n';
      std::ifstream pairs(batch_pairs);
      if (!pairs) throw std::runtime_error("cannot open pairs file '" + batch_pairs + "'");
      const BatchResult result = run_batch(table, pairs, batch_jobs);
      for (const auto& e : result.errors) err << "pairs line " << e.line << ": " << e.message << '\n';
      if (batch_out.empty()) {
        out << result.report;
      } else {
        std::ofstream report(batch_out, std::ios::binary);
        if (!report) throw std::runtime_error("cannot write report '" + batch_out + "'");
        report << result.report;
      }
      return result.errors.empty() && table.errors.empty() ? kExitOk : kExitDataError;
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  return kExitUsageError;
}

}  // namespace twistspin::cli
