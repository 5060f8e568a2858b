#include "szeta/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>

#include "szeta/asymptotics.hpp"
#include "szeta/diagrams.hpp"
#include "szeta/error.hpp"
#include "szeta/extrapolate.hpp"
#include "szeta/fixtures.hpp"
#include "szeta/io.hpp"
#include "szeta/oracle.hpp"
#include "szeta/sumrules.hpp"

namespace szeta::cli {

namespace {

using nlohmann::json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

struct Common {
  std::string density = "uniform";
  std::string bc = "dd";
  std::string orders = "1..4";
  std::string method = "kernel";
  std::string zero_mode;  // empty: per-command default
  std::string format = "json";
  std::string out;
  int threads = 0;
  double tol = 0.0;
  int nodes = 24;
  int panels = 0;
  int max_order = 5;
};

// zeta defaults to the regularized kernel, whose traces are the classic sum
// rules. Commands that compare against eigenvalues default to the projected
// kernel, whose traces are the string's spectral sums.
QuadratureConfig make_config(const Common& c, ZeroMode fallback) {
  QuadratureConfig q;
  q.nodes_per_dim = c.nodes;
  q.panels = c.panels;
  q.max_diagram_order = c.max_order;
  if (c.zero_mode.empty())
    q.zero_mode = fallback;
  else if (c.zero_mode == "projected" || c.zero_mode == "sigma-projected")
    q.zero_mode = ZeroMode::SigmaProjected;
  else if (c.zero_mode == "regularized")
    q.zero_mode = ZeroMode::Regularized;
  else
    throw ParameterError("zero-mode must be 'regularized' or 'projected'");
  return q;
}

int default_oracle_grid(const DensityProfile& p, int modes) {
  return std::max(8 * modes, static_cast<int>(std::ceil(400.0 * p.length() / p.feature_scale())));
}

double oracle_ground_state(const DensityProfile& p, BC bc) {
  const auto r = solve_spectrum(p, bc, 1, default_oracle_grid(p, 1));
  return r.eigenvalues.empty() ? kNaN : r.eigenvalues.front();
}

void add_common(CLI::App* app, Common& c, bool orders = true) {
  app->add_option("--density", c.density, "profile spec: uniform | borg:alpha=<f> | horgan-chan | "
                                          "oscillating:eps=<f> | gottlieb:base=<spec>,alpha=<f> | "
                                          "table:path=<csv>");
  app->add_option("--bc", c.bc, "dd | nn | dn | nd | pp");
  if (orders) app->add_option("--orders", c.orders, "1..4 or 1,2,5");
  app->add_option("--method", c.method, "kernel | diagram | closed");
  app->add_option("--zero-mode", c.zero_mode,
                  "NN/PP kernel route: regularized (zeta default) | projected (default elsewhere)");
  app->add_option("--nodes", c.nodes, "Gauss nodes per dimension (diagram route)");
  app->add_option("--panels", c.panels, "coarsest panel count (kernel route), 0 = automatic");
  app->add_option("--max-diagram-order", c.max_order, "cap for the diagram route");
}

std::vector<std::string> bound_header() { return {"s", "lower", "upper", "oracle"}; }

}  // namespace

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  try {
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    } else {
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(trim(item)));
    }
  } catch (const std::logic_error&) {
    throw ParameterError("bad order list '" + s + "'");
  }
  if (out.empty()) throw ParameterError("empty order list '" + s + "'");
  for (int k : out)
    if (k < 1) throw ParameterError("orders must be >= 1");
  return out;
}

std::vector<double> parse_values(const std::string& s) {
  std::vector<double> out;
  try {
    if (std::count(s.begin(), s.end(), ':') == 2) {
      const auto p1 = s.find(':'), p2 = s.find(':', p1 + 1);
      const double lo = std::stod(s.substr(0, p1)), hi = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
      const int n = std::stoi(s.substr(p2 + 1));
      if (n < 1) throw ParameterError("sweep count must be >= 1");
      for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    } else {
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(trim(item)));
    }
  } catch (const std::logic_error&) {
    throw ParameterError("bad value list '" + s + "'");
  }
  if (out.empty()) throw ParameterError("empty value list");
  return out;
}

std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path);
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParameterError("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (value == "true") {
      extra.push_back(flag);
    } else if (value != "false") {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  std::vector<std::string> merged(args.begin(), args.begin() + std::min<std::size_t>(2, args.size()));
  merged.insert(merged.end(), extra.begin(), extra.end());
  if (args.size() > 2) merged.insert(merged.end(), args.begin() + 2, args.end());
  return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out_default, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  for (std::size_t i = 0; i + 1 < raw_args.size(); ++i) {
    if (raw_args[i] == "--config") {
      std::vector<std::string> rest;
      for (std::size_t k = 0; k < raw_args.size(); ++k)
        if (k != i && k != i + 1) rest.push_back(raw_args[k]);
      try {
        args = merge_config(rest, raw_args[i + 1]);
      } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      break;
    }
  }

  CLI::App app{"Spectral zeta sum rules, eigenvalue bounds and estimates for inhomogeneous strings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config();  // disables CLI11's own config handling; --config is spliced above
  Common c;
  int threads = 0;
  double tol = 0.0;
  std::string out_path;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--tol", tol, "absolute accuracy request; misses exit with status 3");
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--config", "key=value file mirroring the flags")->expected(1);

  auto* zeta = app.add_subcommand("zeta", "sum rules Z(s)");
  add_common(zeta, c);
  zeta->add_option("--format", c.format, "json | csv (columns: order,value,err_est)");

  auto* bounds = app.add_subcommand("bounds", "Euler bounds Z(s+1)^(-1/(s+1)) <= E1 <= Z(s)/Z(s+1)");
  add_common(bounds, c);
  bool with_oracle = false;
  bounds->add_flag("--oracle", with_oracle, "also solve the spectrum for E1");
  bounds->add_option("--format", c.format, "json | csv (columns: s,lower,upper,oracle)");

  auto* estimate = app.add_subcommand("estimate", "Waring, Berry and repeated Shanks estimates");
  add_common(estimate, c);
  std::string fixture;
  double alpha_override = kNaN, beta_override = kNaN;
  estimate->add_option("--fixtures", fixture, "use exact fixture sum rules: horgan-chan");
  estimate->add_option("--alpha", alpha_override, "override the asymptotic alpha");
  estimate->add_option("--beta", beta_override, "override the asymptotic beta");

  auto* spectrum = app.add_subcommand("spectrum", "finite-difference reference spectrum");
  int modes = 5, grid = 0;
  spectrum->add_option("--density", c.density, "profile spec");
  spectrum->add_option("--bc", c.bc, "dd | nn | dn | nd | pp");
  spectrum->add_option("--modes", modes, "number of nonzero modes");
  spectrum->add_option("--grid", grid, "intervals on the coarse grid (0 = automatic)");

  auto* sweep = app.add_subcommand(
      "sweep",
      "bounds over a parameter grid; CSV columns: param,lower,upper,shanks,oracle,status. "
      "lower = Z(k)^(-1/k) and upper = Z(k-1)/Z(k) for the largest order k; shanks uses the "
      "last three orders; empty cells are NaN");
  std::string tmpl, values;
  bool sweep_oracle = false;
  add_common(sweep, c);
  sweep->add_option("--template", tmpl, "profile spec with {} for the parameter, e.g. "
                                         "oscillating:eps={}")
      ->required();
  sweep->add_option("--values", values, "lo:hi:count or v1,v2,...")->required();
  sweep->add_flag("--oracle", sweep_oracle, "add the reference E1 column");

  auto* diagrams = app.add_subcommand("diagrams", "list the cycle diagrams of one order");
  int order = 3;
  diagrams->add_option("--order", order, "n >= 1")->required();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out_default << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out_default << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);
  std::ofstream file;
  std::ostream* out = &out_default;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
    out = &file;
  }

  try {
    if (*zeta) {
      const auto p = parse_profile(c.density);
      const BC bc = parse_bc(c.bc);
      const auto cfg = make_config(c, ZeroMode::Regularized);
      const auto t = zeta_table(p, bc, parse_orders(c.orders), parse_method(c.method), cfg);
      if (c.format == "csv") {
        io::CsvWriter w(*out, {"order", "value", "err_est"});
        for (std::size_t i = 0; i < t.orders.size(); ++i)
          w.row({static_cast<double>(t.orders[i]), t.values[i], t.err_est[i]});
      } else {
        *out << io::to_json(t).dump(2) << '\n';
      }
      if (tol > 0.0) {
        for (std::size_t i = 0; i < t.orders.size(); ++i)
          if (t.err_est[i] > tol) {
            err << "accuracy: order " << t.orders[i] << " error estimate " << t.err_est[i]
                << " exceeds --tol " << tol << '\n';
            return kAccuracy;
          }
      }
      return kOk;
    }

    if (*bounds) {
      const auto p = parse_profile(c.density);
      const BC bc = parse_bc(c.bc);
      auto s_list = parse_orders(c.orders);
      std::vector<int> need = s_list;
      for (int s : s_list) need.push_back(s + 1);
      std::sort(need.begin(), need.end());
      need.erase(std::unique(need.begin(), need.end()), need.end());
      const auto cfg = make_config(c, ZeroMode::SigmaProjected);
      const auto t = zeta_table(p, bc, need, parse_method(c.method), cfg);
      const auto z = to_zeta_data(t);
      const double e1 = with_oracle ? oracle_ground_state(p, bc) : kNaN;
      json arr = json::array();
      std::ostringstream csv;
      io::CsvWriter w(csv, bound_header());
      for (int s : s_list) {
        const auto b = euler_bounds(z, s);
        json row{{"s", s}, {"lower", b.lower}, {"upper", b.upper}};
        if (with_oracle) row["oracle"] = e1;
        arr.push_back(row);
        w.row({static_cast<double>(s), b.lower, b.upper, e1});
      }
      if (c.format == "csv")
        *out << csv.str();
      else
        *out << json{{"bc", to_string(bc)}, {"bounds", arr}}.dump(2) << '\n';
      return kOk;
    }

    if (*estimate) {
      const BC bc = parse_bc(c.bc);
      json result;
      if (!fixture.empty()) {
        if (fixture != "horgan-chan") throw ParameterError("unknown fixture set '" + fixture + "'");
        if (bc != BC::DD) throw ParameterError("the horgan-chan fixtures are Dirichlet only");
        const auto z = fixtures::horgan_chan_table<Wide>();
        TailModel<Wide> tm{Wide(1), Wide(3) / 8, Wide(1)};
        if (!std::isnan(alpha_override)) tm.alpha = Wide(alpha_override);
        if (!std::isnan(beta_override)) tm.beta = Wide(beta_override);
        const auto w = waring_sequence(z);
        const auto b = berry_sequence(z, tm, bc);
        result["waring"] = io::to_json(w, shanks_table(w.estimates));
        result["berry"] = io::to_json(b, shanks_table(b.estimates));
        json bnds = json::array();
        for (int s = 1; s < 9; ++s) {
          const auto e = euler_bounds(z, s);
          bnds.push_back({{"s", s}, {"lower", static_cast<double>(e.lower)},
                          {"upper", static_cast<double>(e.upper)}});
        }
        result["bounds"] = bnds;
        result["alpha"] = static_cast<double>(tm.alpha);
        result["beta"] = static_cast<double>(tm.beta);
      } else {
        const auto p = parse_profile(c.density);
        const auto cfg = make_config(c, ZeroMode::SigmaProjected);
        const auto t = zeta_table(p, bc, parse_orders(c.orders), parse_method(c.method), cfg);
        const auto z = to_zeta_data(t);
        auto coeffs = asym_coeffs(p);
        if (!std::isnan(alpha_override)) coeffs.alpha = alpha_override;
        if (!std::isnan(beta_override)) coeffs.beta = beta_override;
        const auto tm = to_tail_model(coeffs, p.length());
        const auto w = waring_sequence(z);
        result["waring"] = io::to_json(w, shanks_table(w.estimates));
        json bnds = json::array();
        for (int s : t.orders)
          if (z.has(s + 1)) {
            const auto e = euler_bounds(z, s);
            bnds.push_back({{"s", s}, {"lower", e.lower}, {"upper", e.upper}});
          }
        result["bounds"] = bnds;
        result["alpha"] = coeffs.alpha;
        result["beta"] = coeffs.beta;
        result["sum_rules"] = io::to_json(t);
        try {
          const auto b = berry_sequence(z, tm, bc);
          result["berry"] = io::to_json(b, shanks_table(b.estimates));
        } catch (const TailInconsistencyError& e) {
          *out << result.dump(2) << '\n';
          err << "tail inconsistency: " << e.what() << '\n';
          return kAccuracy;
        }
      }
      *out << result.dump(2) << '\n';
      return kOk;
    }

    if (*spectrum) {
      const auto p = parse_profile(c.density);
      const BC bc = parse_bc(c.bc);
      const int g = grid > 0 ? grid : default_oracle_grid(p, modes);
      *out << io::to_json(solve_spectrum(p, bc, modes, g)).dump(2) << '\n';
      return kOk;
    }

    if (*sweep) {
      const BC bc = parse_bc(c.bc);
      const auto orders = parse_orders(c.orders);
      const auto params = parse_values(values);
      const auto method = parse_method(c.method);
      auto cfg = make_config(c, ZeroMode::SigmaProjected);
      cfg.parallel = false;  // parallel over sweep points instead
      const auto pos = tmpl.find("{}");
      if (pos == std::string::npos) throw ParameterError("--template needs a {} placeholder");
      if (orders.size() < 2) throw ParameterError("sweep needs at least two orders");

      struct Row {
        double lower = kNaN, upper = kNaN, shanks = kNaN, oracle = kNaN;
        std::string status = "ok";
      };
      std::vector<Row> rows(params.size());
      const long n = static_cast<long>(params.size());
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < n; ++i) {
        Row& r = rows[static_cast<std::size_t>(i)];
        try {
          std::string spec = tmpl;
          spec.replace(pos, 2, io::format_number(params[static_cast<std::size_t>(i)]));
          const auto p = parse_profile(spec);
          const auto t = zeta_table(p, bc, orders, method, cfg);
          const auto z = to_zeta_data(t);
          const int k = orders.back();
          const auto b = euler_bounds(z, k - 1);
          r.lower = b.lower;
          r.upper = b.upper;
          if (orders.size() >= 3) {
            const auto w = waring_sequence(z);
            const std::vector<double> last(w.estimates.end() - 3, w.estimates.end());
            r.shanks = shanks(last).values.front();
          }
          if (sweep_oracle) r.oracle = oracle_ground_state(p, bc);
        } catch (const std::exception& e) {
          r.status = std::string("error: ") + e.what();
          std::replace(r.status.begin(), r.status.end(), ',', ';');
        }
      }
      io::CsvWriter w(*out, {"param", "lower", "upper", "shanks", "oracle", "status"});
      for (std::size_t i = 0; i < rows.size(); ++i)
        w.row({params[i], rows[i].lower, rows[i].upper, rows[i].shanks, rows[i].oracle},
              {rows[i].status});
      return kOk;
    }

    if (*diagrams) {
      const auto d = enumerate_diagrams(order);
      *out << "# order " << order << ": " << d.size() << " diagrams, prefactor " << prefactor(order)
           << '\n';
      for (const auto& g : d) *out << g.to_string() << '\n';
      return kOk;
    }
  } catch (const AccuracyError& e) {
    err << "accuracy: " << e.what() << " (best " << e.best() << ", estimate " << e.estimate()
        << ")\n";
    return kAccuracy;
  } catch (const TailInconsistencyError& e) {
    err << "tail inconsistency: " << e.what() << '\n';
    return kAccuracy;
  } catch (const NumericalError& e) {
    err << "numerical: " << e.what() << '\n';
    return kAccuracy;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace szeta::cli
