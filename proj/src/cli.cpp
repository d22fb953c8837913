#include "eulerzeros/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "eulerzeros/asymptotics.hpp"
#include "eulerzeros/parallel.hpp"
#include "eulerzeros/verify.hpp"

namespace eulerzeros::cli {

namespace {

using Json = nlohmann::ordered_json;

// Significant digits for decimal renderings of rational endpoints.
constexpr int kDecimalDigits = 40;

const std::vector<unsigned> kPaperTableN{10, 15, 20, 25, 30};

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Table: return "table";
    case Command::Zeros: return "zeros";
    case Command::Rates: return "rates";
    case Command::Verify: return "verify";
    case Command::Dist: return "dist";
    case Command::LeftEdge: return "leftedge";
  }
  return "?";
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Pretty: return "pretty";
  }
  return "?";
}

std::vector<unsigned> parse_n_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() ||
        !std::all_of(item.begin(), item.end(),
                     [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 6) {
      throw UsageError("--n expects a comma-separated list of integers, got '" +
                       text + "'");
    }
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("--n list is empty");
  return out;
}

std::string dec_lo(const Rational& r) { return r.to_decimal(kDecimalDigits, false); }
std::string dec_hi(const Rational& r) { return r.to_decimal(kDecimalDigits, true); }

std::string fixed(double v, int digits) { return fmt::format("{:.{}f}", v, digits); }
std::string sci(double v) { return fmt::format("{:.3e}", v); }

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One report: CSV/pretty cells plus a JSON mirror that may carry extra
// exact fields.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;
  Json rows = Json::array();
};

struct Task {
  unsigned n;
  FamilyKind kind;
};

std::vector<Task> tasks_for(const RunConfig& config) {
  std::vector<unsigned> ns = config.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<FamilyKind> kinds = config.families;
  std::sort(kinds.begin(), kinds.end());
  std::vector<Task> out;
  for (unsigned n : ns) {
    for (FamilyKind k : kinds) out.push_back({n, k});
  }
  return out;
}

Report rate_report(const RunConfig& config) {
  const auto tasks = tasks_for(config);
  auto rows = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    return rate(tasks[i].kind, tasks[i].n, config.rel_width);
  });
  Report r;
  r.columns = {"n", "family", "gap_lo", "gap_hi", "rate", "rate_error"};
  for (const auto& row : rows) {
    const auto& g = row.gap_enclosure;
    r.cells.push_back({std::to_string(row.n), std::string(to_string(row.kind)),
                       dec_lo(g.lo()), dec_hi(g.hi()), fixed(row.rate, 9),
                       sci(row.rate_error)});
    r.rows.push_back({{"n", row.n},
                      {"family", to_string(row.kind)},
                      {"gap_lo", g.lo().to_string()},
                      {"gap_hi", g.hi().to_string()},
                      {"gap_lo_decimal", dec_lo(g.lo())},
                      {"gap_hi_decimal", dec_hi(g.hi())},
                      {"a_lo", row.a_enclosure.lo().to_string()},
                      {"a_hi", row.a_enclosure.hi().to_string()},
                      {"rate", row.rate},
                      {"rate_error", row.rate_error}});
  }
  return r;
}

Report zeros_report(const RunConfig& config) {
  const auto tasks = tasks_for(config);
  auto zero_sets = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    return family_zeros_two_sided(build_family(tasks[i].kind, tasks[i].n),
                                  config.rel_width);
  });
  Report r;
  r.columns = {"n", "family", "k", "lo", "hi"};
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& zeros = zero_sets[t];
    if (zeros.size() != tasks[t].n - 1) {
      throw CertificationError("zero count mismatch for n=" +
                               std::to_string(tasks[t].n));
    }
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      const auto& iv = zeros[k].interval;
      const std::string fam(to_string(tasks[t].kind));
      r.cells.push_back({std::to_string(tasks[t].n), fam, std::to_string(k + 1),
                         dec_lo(iv.lo()), dec_hi(iv.hi())});
      r.rows.push_back({{"n", tasks[t].n},
                        {"family", fam},
                        {"k", k + 1},
                        {"lo", iv.lo().to_string()},
                        {"hi", iv.hi().to_string()},
                        {"lo_decimal", dec_lo(iv.lo())},
                        {"hi_decimal", dec_hi(iv.hi())}});
    }
  }
  return r;
}

Report dist_report(const RunConfig& config) {
  const auto tasks = tasks_for(config);
  auto rows = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    return empirical_distance(tasks[i].kind, tasks[i].n);
  });
  Report r;
  r.columns = {"n", "family", "sup_distance"};
  for (const auto& row : rows) {
    r.cells.push_back({std::to_string(row.n), std::string(to_string(row.kind)),
                       fixed(row.sup_distance, 9)});
    r.rows.push_back({{"n", row.n},
                      {"family", to_string(row.kind)},
                      {"sup_distance", row.sup_distance}});
  }
  return r;
}

Report leftedge_report(const RunConfig& config) {
  const auto tasks = tasks_for(config);
  auto rows = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    return left_edge_ratio(tasks[i].kind, tasks[i].n, config.k);
  });
  Report r;
  r.columns = {"n", "family", "k", "x_lo", "x_hi", "ratio", "limit"};
  const double limit = left_edge_constant();
  for (const auto& row : rows) {
    r.cells.push_back({std::to_string(row.n), std::string(to_string(row.kind)),
                       std::to_string(row.k), dec_lo(row.zero.lo()),
                       dec_hi(row.zero.hi()), fixed(row.ratio, 9),
                       fixed(limit, 9)});
    r.rows.push_back({{"n", row.n},
                      {"family", to_string(row.kind)},
                      {"k", row.k},
                      {"x_lo", row.zero.lo().to_string()},
                      {"x_hi", row.zero.hi().to_string()},
                      {"ratio", row.ratio},
                      {"limit", limit}});
  }
  return r;
}

Report verify_report(const RunConfig& config, bool& all_passed) {
  const auto tasks = tasks_for(config);
  const VerifyOptions options{config.rel_width, config.inject_fault};
  auto results = parallel_map(tasks.size(), config.jobs, [&](std::size_t i) {
    return verify_family(tasks[i].kind, tasks[i].n, options);
  });
  Report r;
  r.columns = {"status", "check", "n", "family", "detail"};
  all_passed = true;
  for (const auto& group : results) {
    for (const auto& c : group) {
      all_passed = all_passed && c.passed;
      const std::string status = c.passed ? "PASS" : "FAIL";
      r.cells.push_back({status, c.check, std::to_string(c.n),
                         std::string(to_string(c.kind)), c.detail});
      r.rows.push_back({{"status", status},
                        {"check", c.check},
                        {"n", c.n},
                        {"family", to_string(c.kind)},
                        {"detail", c.detail}});
    }
  }
  return r;
}

Json config_json(const RunConfig& config) {
  Json n = Json::array();
  for (unsigned v : config.n_values) n.push_back(v);
  Json j{{"command", command_name(config.command)},
         {"family", config.family_label},
         {"n", n},
         {"rel_width", config.rel_width.to_string()},
         {"format", format_name(config.format)}};
  if (config.command == Command::LeftEdge) j["k"] = config.k;
  return j;
}

void render(const RunConfig& config, const Report& report, std::ostream& os) {
  switch (config.format) {
    case Format::Csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        os << (i ? "," : "") << report.columns[i];
      }
      os << '\n';
      for (const auto& row : report.cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          os << (i ? "," : "") << csv_escape(row[i]);
        }
        os << '\n';
      }
      break;
    }
    case Format::Json: {
      const Json doc{{"config", config_json(config)}, {"rows", report.rows}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Pretty: {
      std::vector<std::size_t> width(report.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) {
        width[i] = report.columns[i].size();
        for (const auto& row : report.cells) {
          width[i] = std::max(width[i], row[i].size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += cells[i];
          if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        os << s << '\n';
      };
      line(report.columns);
      for (const auto& row : report.cells) line(row);
      break;
    }
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Certified zeros and right-edge rates of the Xi/Lambda "
               "polynomial families",
               "eulerzeros"};
  app.require_subcommand(1);

  std::string family = "both";
  std::string n_list;
  unsigned n_min = 0;
  unsigned n_max = 0;
  std::string rel_width = "1/10^12";
  std::string format = "csv";
  std::string out_path;
  unsigned jobs = 1;
  unsigned k = 1;
  bool inject_fault = false;

  std::map<CLI::App*, Command> commands;
  auto add = [&](Command c, const std::string& help) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(c)), help);
    sub->add_option("--family", family, "xi, lambda or both")
        ->check(CLI::IsMember({"xi", "lambda", "both"}));
    sub->add_option("--n", n_list, "comma-separated list of n (n >= 2)");
    sub->add_option("--n-min", n_min, "smallest n of a range");
    sub->add_option("--n-max", n_max, "largest n of a range");
    sub->add_option("--rel-width", rel_width,
                    "relative width of certified enclosures, e.g. 1/10^12");
    sub->add_option("--format", format, "csv, json or pretty")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--jobs", jobs, "worker threads");
    commands[sub] = c;
    return sub;
  };
  add(Command::Table, "right-edge rate table (default n = 10,15,20,25,30)");
  add(Command::Rates, "right-edge rates over an n range (default 2..30)");
  add(Command::Zeros, "certified enclosures of every zero");
  auto* verify = add(Command::Verify, "structural and lemma-level checks");
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt a source coefficient (negative-path testing)");
  add(Command::Dist, "sup distance between empirical zero CDF and F");
  auto* leftedge = add(Command::LeftEdge, "x_{k,n} (n-1)^2 / k^2 ratios");
  leftedge->add_option("--k", k, "zero index counted from the left");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  for (const auto& [sub, c] : commands) {
    if (sub->parsed()) config.command = c;
  }
  config.family_label = family;
  if (family == "xi") {
    config.families = {FamilyKind::XiTilde};
  } else if (family == "lambda") {
    config.families = {FamilyKind::LambdaTilde};
  }

  const bool has_range = n_min != 0 || n_max != 0;
  if (!n_list.empty() && has_range) {
    throw UsageError("give either --n or --n-min/--n-max, not both");
  }
  if (!n_list.empty()) {
    config.n_values = parse_n_list(n_list);
  } else if (has_range) {
    if (n_min == 0 || n_max == 0 || n_min > n_max) {
      throw UsageError("--n-min and --n-max must both be set, min <= max");
    }
    for (unsigned n = n_min; n <= n_max; ++n) config.n_values.push_back(n);
  } else {
    switch (config.command) {
      case Command::Table: config.n_values = kPaperTableN; break;
      case Command::Rates:
        for (unsigned n = 2; n <= 30; ++n) config.n_values.push_back(n);
        break;
      case Command::Verify:
        for (unsigned n = 2; n <= 12; ++n) config.n_values.push_back(n);
        break;
      case Command::Dist:
      case Command::LeftEdge: config.n_values = {10, 20, 30}; break;
      case Command::Zeros: throw UsageError("zeros needs --n or --n-min/--n-max");
    }
  }
  for (unsigned n : config.n_values) {
    if (n < 2) throw UsageError("every n must be >= 2");
    if (config.command == Command::LeftEdge && (k < 1 || k > n - 1)) {
      throw UsageError("--k must be in 1..n-1 for every n");
    }
  }

  try {
    config.rel_width = Rational::parse(rel_width);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--rel-width: ") + e.what());
  }
  if (config.rel_width.sign() <= 0) throw UsageError("--rel-width must be > 0");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");

  config.format = format == "json"     ? Format::Json
                  : format == "pretty" ? Format::Pretty
                                       : Format::Csv;
  config.out_path = out_path;
  config.jobs = jobs;
  config.k = k;
  config.inject_fault = inject_fault;
  return config;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  bool all_passed = true;
  try {
    switch (config.command) {
      case Command::Table:
      case Command::Rates: report = rate_report(config); break;
      case Command::Zeros: report = zeros_report(config); break;
      case Command::Verify: report = verify_report(config, all_passed); break;
      case Command::Dist: report = dist_report(config); break;
      case Command::LeftEdge: report = leftedge_report(config); break;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "certification error: " << e.what() << '\n';
    return kCertificationError;
  }

  if (config.out_path.empty()) {
    render(config, report, out);
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out_path << '\n';
      return kUsageError;
    }
    render(config, report, file);
  }

  if (!all_passed) {
    for (const auto& row : report.rows) {
      if (row["status"] == "FAIL") {
        err << "FAILED " << row["check"].get<std::string>()
            << " n=" << row["n"].get<unsigned>()
            << " family=" << row["family"].get<std::string>() << '\n';
      }
    }
    return kVerificationFailed;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return execute(config, out, err);
}

}  // namespace eulerzeros::cli
