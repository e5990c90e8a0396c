// Command-line front end: single-point solves for edge/internal/half-plane
// cracks, reproduction of the published coefficient tables, and parameter
// sweeps with machine-readable CSV/JSON output.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedgecrack/wedgecrack.hpp"

namespace wc = wedgecrack;
using json = nlohmann::json;

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
  bool no_timestamp = false;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RowTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void emit(const OutputOptions& opts) const {
    std::ostringstream os;
    if (opts.format == "csv") {
      if (!opts.no_timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[64];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
        os << "# generated " << buf << "\n";
      }
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
      }
    } else if (opts.format == "json") {
      json doc = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
          char* end = nullptr;
          const double v = std::strtod(row[i].c_str(), &end);
          if (end && *end == '\0' && !row[i].empty())
            obj[header[i]] = v;
          else
            obj[header[i]] = row[i];
        }
        doc.push_back(obj);
      }
      os << doc.dump(2) << "\n";
    } else {
      throw wc::validation_error("unknown output format: " + opts.format);
    }
    if (opts.out_path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(opts.out_path, std::ios::trunc);
      if (!f) throw wc::validation_error("cannot open output file: " + opts.out_path);
      f << os.str();
    }
  }
};

// angles require an explicit unit suffix: "90deg" or "1.5708rad"
double parse_angle(const std::string& text) {
  auto ends_with = [&](const char* suf) {
    const std::size_t n = std::strlen(suf);
    return text.size() > n && text.compare(text.size() - n, n, suf) == 0;
  };
  double scale = 0.0;
  std::size_t cut = 0;
  if (ends_with("deg")) {
    scale = wc::kPi / 180.0;
    cut = 3;
  } else if (ends_with("rad")) {
    scale = 1.0;
    cut = 3;
  } else {
    throw wc::validation_error("angle needs a unit suffix (deg or rad): " + text);
  }
  char* end = nullptr;
  const std::string num = text.substr(0, text.size() - cut);
  const double v = std::strtod(num.c_str(), &end);
  if (!end || *end != '\0' || num.empty())
    throw wc::validation_error("cannot parse angle: " + text);
  return v * scale;
}

std::pair<double, double> parse_load(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw wc::validation_error("load must be P1,P2: " + text);
  char *e1 = nullptr, *e2 = nullptr;
  const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
  const double p1 = std::strtod(a.c_str(), &e1), p2 = std::strtod(b.c_str(), &e2);
  if (!e1 || *e1 || !e2 || *e2) throw wc::validation_error("cannot parse load: " + text);
  return {p1, p2};
}

std::filesystem::path cache_dir_from(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("WEDGECRACK_CACHE_DIR")) return env;
  return {};
}

std::filesystem::path data_dir_from(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("WEDGECRACK_DATA_DIR")) return env;
#ifdef WEDGECRACK_SOURCE_DATA_DIR
  return WEDGECRACK_SOURCE_DATA_DIR;
#else
  return "data";
#endif
}

// ---------------------------------------------------------------------------

int cmd_edge(double alpha, double b, std::optional<std::pair<double, double>> load,
             std::optional<std::string> eigen_kind, double k_theta0,
             const OutputOptions& out) {
  wc::KhrapkovFactor fact(alpha);
  RowTable table;
  table.header = {"alpha_rad", "b",   "load_kind", "p1",  "p2",  "mu",
                  "k_star",    "K_I", "K_II",      "D11", "D12", "D21",
                  "D22",       "quad_error"};
  wc::EdgeSif sif;
  std::string kind;
  double p1 = 0.0, p2 = 0.0, mu = 0.0, kstar = 0.0;
  if (eigen_kind) {
    kind = "eigen_" + *eigen_kind;
    const auto which =
        (*eigen_kind == "second") ? wc::EigenKind::second : wc::EigenKind::first;
    const auto eig = wc::eigen_solution(alpha, which);
    mu = eig.mu;
    kstar = eig.k_star;
    sif = wc::sif_edge_eigen(fact, b, k_theta0, which);
    p1 = k_theta0;
    p2 = k_theta0 * kstar;
  } else {
    kind = "constant";
    p1 = load->first;
    p2 = load->second;
    sif = wc::sif_edge_constant(fact, b, p1, p2);
  }
  table.rows.push_back({fmt17(alpha), fmt17(b), kind, fmt17(p1), fmt17(p2), fmt17(mu),
                        fmt17(kstar), fmt17(sif.k1), fmt17(sif.k2), fmt17(sif.dmat.a.real()),
                        fmt17(sif.dmat.b.real()), fmt17(sif.dmat.c.real()),
                        fmt17(sif.dmat.d.real()), fmt17(sif.quad_error)});
  table.emit(out);
  return 0;
}

std::vector<std::string> internal_row(double alpha, double a, double b, double p1, double p2,
                                      const wc::SifResult& r) {
  return {fmt17(alpha),      fmt17(a),
          fmt17(b),          fmt17(p1),
          fmt17(p2),         fmt17(r.k1_minus),
          fmt17(r.k2_minus), fmt17(r.k1_plus),
          fmt17(r.k2_plus),  fmt17(r.du_minus),
          fmt17(r.du_plus),  fmt17(r.du_minus_near_vertex),
          fmt17(r.du_minus_near_vertex_as_printed), std::to_string(r.n_roots),
          fmt17(r.closure_defect), fmt17(r.residual),
          fmt17(r.trunc_bound),    fmt17(r.quad_error)};
}

const std::vector<std::string> kInternalHeader = {
    "alpha_rad", "a",  "b",   "p1", "p2", "K_I_minus", "K_II_minus", "K_I_plus", "K_II_plus",
    "dU_minus",  "dU_plus", "dU_minus_near_vertex", "dU_minus_near_vertex_as_printed",
    "n_roots",   "closure_defect", "residual", "trunc_bound", "quad_error"};

int cmd_internal(double alpha, double a, double b, double p1, double p2, int nmax,
                 const std::filesystem::path& cache_dir, const OutputOptions& out) {
  wc::CrackConfig cfg{a, b};
  wc::KhrapkovFactor fact(alpha);
  wc::InternalOptions opts;
  if (nmax > 0) opts.n_roots_override = nmax;
  const auto roots = wc::truncated_pole_table(alpha, cfg.delta(), opts);
  const auto data = wc::cached_internal_data(fact, roots, cache_dir);
  const auto r = wc::solve_internal(fact, data, a, b, wc::Vec2{p1, p2});
  RowTable table;
  table.header = kInternalHeader;
  table.rows.push_back(internal_row(alpha, a, b, p1, p2, r));
  table.emit(out);
  return 0;
}

int cmd_halfplane(double a, double b, double p, bool with_oracle, const OutputOptions& out) {
  wc::ScalarFactor fact;
  const auto r = wc::solve_halfplane(fact, a, b, p);
  RowTable table;
  table.header = {"a",        "b",       "P",
                  "K_I_minus", "K_I_plus", "dU_minus",
                  "dU_plus",  "n_roots", "closure_defect",
                  "residual", "quad_error"};
  std::vector<std::string> row = {fmt17(a),          fmt17(b),
                                  fmt17(p),          fmt17(r.k1_minus),
                                  fmt17(r.k1_plus),  fmt17(r.du_minus),
                                  fmt17(r.du_plus),  std::to_string(r.n_roots),
                                  fmt17(r.closure_defect), fmt17(r.residual),
                                  fmt17(r.quad_error)};
  if (with_oracle && a > 0.0) {
    const auto sie = wc::sie_solve(a, b, [p](double) { return p; }, 96);
    table.header.insert(table.header.end(),
                        {"oracle_K_minus", "oracle_K_plus", "oracle_rel_dev"});
    const double dev = std::max(std::abs(sie.k_minus - r.k1_minus) / std::abs(sie.k_minus),
                                std::abs(sie.k_plus - r.k1_plus) / std::abs(sie.k_plus));
    row.insert(row.end(), {fmt17(sie.k_minus), fmt17(sie.k_plus), fmt17(dev)});
  }
  table.rows.push_back(std::move(row));
  table.emit(out);
  return 0;
}

struct RefTable {
  // (table, alpha_over_pi) -> quantity -> value
  std::map<std::pair<int, double>, std::map<std::string, double>> entries;
};

RefTable load_reference(const std::filesystem::path& data_dir) {
  const auto path = data_dir / "reference_tables.csv";
  std::ifstream f(path);
  if (!f)
    throw wc::validation_error("reference data file not found: " + path.string() +
                               " (set --data-dir or WEDGECRACK_DATA_DIR)");
  RefTable ref;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("table,", 0) == 0) continue;
    std::istringstream ls(line);
    std::string tab, af, q, v;
    if (!std::getline(ls, tab, ',') || !std::getline(ls, af, ',') ||
        !std::getline(ls, q, ',') || !std::getline(ls, v, ','))
      continue;
    ref.entries[{std::stoi(tab), std::stod(af)}][q] = std::stod(v);
  }
  return ref;
}

int cmd_tables(int which, const std::filesystem::path& data_dir, const OutputOptions& out) {
  const auto ref = load_reference(data_dir);
  RowTable table;
  table.header = {"table", "alpha_over_pi", "quantity", "reference", "computed", "rel_error"};
  double worst = 0.0;

  auto push = [&](double af, const std::string& q, double reference, double computed) {
    const double rel = std::abs(computed - reference) /
                       std::max(std::abs(reference), 1e-300);
    worst = std::max(worst, rel);
    table.rows.push_back({std::to_string(which), fmt17(af), q, fmt17(reference),
                          fmt17(computed), fmt17(rel)});
  };

  for (const auto& [key, quantities] : ref.entries) {
    if (key.first != which) continue;
    const double alpha = key.second * wc::kPi;
    if (which == 1) {
      wc::KhrapkovFactor fact(alpha);
      const auto sif = wc::sif_edge_constant(fact, 1.0, 1.0, 0.0);
      const std::map<std::string, double> got = {{"D11", sif.dmat.a.real()},
                                                 {"D12", sif.dmat.b.real()},
                                                 {"D21", sif.dmat.c.real()},
                                                 {"D22", sif.dmat.d.real()}};
      for (const auto& [q, v] : quantities) push(key.second, q, v, got.at(q));
    } else if (which == 2) {
      wc::KhrapkovFactor fact(alpha);
      const auto eig = wc::eigen_solution(alpha, wc::EigenKind::first);
      const auto sif = wc::sif_edge_eigen(fact, 1.0, 1.0, wc::EigenKind::first);
      const std::map<std::string, double> got = {{"mu", eig.mu},
                                                 {"k_star", eig.k_star},
                                                 {"D11", sif.dmat.a.real()},
                                                 {"D12", sif.dmat.b.real()},
                                                 {"D21", sif.dmat.c.real()},
                                                 {"D22", sif.dmat.d.real()}};
      for (const auto& [q, v] : quantities) push(key.second, q, v, got.at(q));
    } else if (which == 3) {
      wc::KhrapkovFactor fact(alpha);
      const auto eig = wc::eigen_solution(alpha, wc::EigenKind::second);
      const auto sif = wc::sif_edge_eigen(fact, 1.0, 1.0, wc::EigenKind::second);
      const std::map<std::string, double> got = {{"mu0", eig.mu},
                                                 {"KI_hat", sif.k1},
                                                 {"KII_hat", sif.k2}};
      for (const auto& [q, v] : quantities) push(key.second, q, v, got.at(q));
    } else {
      throw wc::validation_error("tables: expected 1, 2 or 3");
    }
  }
  table.emit(out);
  std::cerr << "max rel error: " << fmt17(worst) << "\n";
  return 0;
}

struct SweepGrid {
  std::vector<double> alphas;
};

SweepGrid parse_alpha_grid(const std::string& text) {
  // lo:hi:step with one trailing unit suffix, e.g. 10:170:5deg
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  SweepGrid grid;
  if (c1 == std::string::npos || c2 == std::string::npos) {
    grid.alphas.push_back(parse_angle(text));
    return grid;
  }
  const std::string lo_s = text.substr(0, c1);
  const std::string hi_s = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string step_s = text.substr(c2 + 1);
  const double step = parse_angle(step_s);
  const double unit = step_s.size() > 3 && step_s.compare(step_s.size() - 3, 3, "deg") == 0
                          ? wc::kPi / 180.0
                          : 1.0;
  char *e1 = nullptr, *e2 = nullptr;
  const double lo = std::strtod(lo_s.c_str(), &e1) * unit;
  const double hi = std::strtod(hi_s.c_str(), &e2) * unit;
  if (!e1 || *e1 || !e2 || *e2) throw wc::validation_error("cannot parse grid: " + text);
  if (!(step > 0.0) || !(hi >= lo)) throw wc::validation_error("bad grid: " + text);
  for (double v = lo; v <= hi + 1e-12; v += step) grid.alphas.push_back(v);
  return grid;
}

int cmd_sweep(const std::string& alpha_grid, double delta, double a, double b, double p1,
              double p2, int jobs, const std::filesystem::path& cache_dir,
              const OutputOptions& out) {
  const auto grid = parse_alpha_grid(alpha_grid);
  double a_eff = a, b_eff = b;
  if (delta > 0.0) {
    a_eff = delta * b;
    b_eff = b;
  }
  wc::CrackConfig cfg{a_eff, b_eff};
  cfg.validate();

  RowTable table;
  table.header = kInternalHeader;
  table.header.push_back("status");
  table.rows.resize(grid.alphas.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.alphas.size()) return;
      const double alpha = grid.alphas[i];
      std::vector<std::string> row;
      try {
        wc::KhrapkovFactor fact(alpha);
        const auto roots = wc::truncated_pole_table(alpha, cfg.delta(), {});
        const auto data = wc::cached_internal_data(fact, roots, cache_dir);
        const auto r = wc::solve_internal(fact, data, a_eff, b_eff, wc::Vec2{p1, p2});
        row = internal_row(alpha, a_eff, b_eff, p1, p2, r);
        row.push_back("ok");
      } catch (const std::exception& e) {
        row.assign(kInternalHeader.size(), "nan");
        row[0] = fmt17(alpha);
        row.push_back(std::string("error: ") + e.what());
      }
      table.rows[i] = std::move(row);
    }
  };
  const int nthreads =
      std::max(1, jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  table.emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stress intensity factors for cracks along a wedge side "
               "(Wiener-Hopf / Khrapkov factorization)"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string cache_flag, data_flag;
  app.add_option("--format", out.format, "Output format: csv or json")->capture_default_str();
  app.add_option("--out", out.out_path, "Write output to a file instead of stdout");
  app.add_flag("--no-timestamp", out.no_timestamp, "Suppress the timestamp header line");
  app.add_option("--cache-dir", cache_flag,
                 "Factorization cache directory (or WEDGECRACK_CACHE_DIR)");
  app.add_option("--data-dir", data_flag,
                 "Directory holding reference_tables.csv (or WEDGECRACK_DATA_DIR)");

  // edge
  auto* edge = app.add_subcommand("edge", "Edge crack (a = 0) along the wedge side");
  edge->fallthrough();
  std::string e_alpha, e_load = "1,1", e_eigen;
  double e_b = 1.0, e_kt = 1.0;
  edge->add_option("--alpha", e_alpha, "Wedge angle, e.g. 90deg or 1.5708rad")->required();
  edge->add_option("--b", e_b, "Crack length")->capture_default_str();
  edge->add_option("--load", e_load, "Constant face loads P1,P2")->capture_default_str();
  edge->add_option("--eigen", e_eigen, "Eigen-solution loading: first or second");
  edge->add_option("--ktheta0", e_kt, "Eigen load scale")->capture_default_str();

  // internal
  auto* internal = app.add_subcommand("internal", "Internal crack (a, b) along the wedge side");
  internal->fallthrough();
  std::string i_alpha, i_load = "1,1";
  double i_a = 0.1, i_b = 1.0;
  int i_nmax = 0;
  internal->add_option("--alpha", i_alpha)->required();
  internal->add_option("--a", i_a, "Inner tip radius")->capture_default_str();
  internal->add_option("--b", i_b, "Outer tip radius")->capture_default_str();
  internal->add_option("--load", i_load, "Constant face loads P1,P2")->capture_default_str();
  internal->add_option("--nmax", i_nmax, "Override the number of table roots");

  // halfplane
  auto* halfplane =
      app.add_subcommand("halfplane", "Internal crack orthogonal to a half-plane boundary");
  halfplane->fallthrough();
  double h_a = 0.1, h_b = 1.0, h_p = 1.0;
  bool h_oracle = false;
  halfplane->add_option("--a", h_a, "Inner tip depth (0 routes to the edge limit)")
      ->capture_default_str();
  halfplane->add_option("--b", h_b)->capture_default_str();
  halfplane->add_option("--P", h_p, "Constant normal load")->capture_default_str();
  halfplane->add_flag("--oracle", h_oracle, "Also run the collocation oracle and compare");

  // tables
  auto* tables = app.add_subcommand("tables", "Reproduce a published coefficient table");
  tables->fallthrough();
  int t_which = 1;
  tables->add_option("which", t_which, "Table number: 1, 2 or 3")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep the wedge angle for an internal crack");
  sweep->fallthrough();
  std::string s_alpha, s_load = "1,1";
  double s_delta = 0.0, s_a = 0.0, s_b = 1.0;
  int s_jobs = 0;
  sweep->add_option("--alpha", s_alpha, "Angle grid lo:hi:step with unit, e.g. 10:170:5deg")
      ->required();
  sweep->add_option("--delta", s_delta, "a/b ratio (alternative to --a)");
  sweep->add_option("--a", s_a);
  sweep->add_option("--b", s_b)->capture_default_str();
  sweep->add_option("--load", s_load)->capture_default_str();
  sweep->add_option("--jobs", s_jobs, "Worker threads (default: hardware)");

  try {
    app.parse(argc, argv);
    const auto cache_dir = cache_dir_from(cache_flag);
    if (edge->parsed()) {
      const double alpha = parse_angle(e_alpha);
      std::optional<std::string> eig;
      if (!e_eigen.empty()) {
        if (e_eigen != "first" && e_eigen != "second")
          throw wc::validation_error("--eigen must be first or second");
        eig = e_eigen;
      }
      return cmd_edge(alpha, e_b, parse_load(e_load), eig, e_kt, out);
    }
    if (internal->parsed()) {
      const auto [p1, p2] = parse_load(i_load);
      return cmd_internal(parse_angle(i_alpha), i_a, i_b, p1, p2, i_nmax, cache_dir, out);
    }
    if (halfplane->parsed()) return cmd_halfplane(h_a, h_b, h_p, h_oracle, out);
    if (tables->parsed()) return cmd_tables(t_which, data_dir_from(data_flag), out);
    if (sweep->parsed()) {
      const auto [p1, p2] = parse_load(s_load);
      return cmd_sweep(s_alpha, s_delta, s_a, s_b, p1, p2, s_jobs, cache_dir, out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const wc::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const wc::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
