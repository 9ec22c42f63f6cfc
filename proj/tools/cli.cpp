#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fup/fup.hpp"

#ifndef FUP_VERSION
#define FUP_VERSION "unknown"
#endif

namespace fup::cli {

namespace {

/// Invalid or inconsistent arguments, reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RawArgs {
  std::string n_text;
  std::vector<double> alphas;
  std::optional<double> r;
  std::vector<std::string> r_grid;
  std::optional<std::int64_t> k_max;
  std::optional<double> tol;
  std::string method = "cdfsum";
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 12345;
  std::string domain;
  std::string kind;
  std::string z;
  std::string w;
  std::string point;
  std::string out_dir;
  std::string format = "csv";
  std::optional<unsigned> threads;
};

struct Output {
  Report report;
  std::vector<std::string> lines;  // human-readable summary for stdout
};

std::string num(double x) { return format_double(x); }

// ---------------------------------------------------------------------------
// Argument plumbing

void add_output_options(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--out", raw.out_dir, "Directory for <command>-<hash>.{csv,json}; stdout if omitted");
  sub->add_option("--format", raw.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--threads", raw.threads, "Worker threads (default: FUP_THREADS or all cores)");
}

void add_alpha(CLI::App* sub, RawArgs& raw, const std::string& def) {
  sub->add_option("--alpha", raw.alphas, "Weight parameter alpha > 0 (default " + def + ")")
      ->delimiter(',');
}

Domain parse_domain(const std::string& text) {
  if (text == "line") return Domain::Line;
  if (text == "disc") return Domain::Disc;
  if (text == "plane") return Domain::Plane;
  if (text == "halfplane") return Domain::HalfPlane;
  throw UsageError("unknown domain '" + text + "' (line, disc, plane, halfplane)");
}

std::pair<int, int> require_n(const RawArgs& raw, const std::string& def, bool single) {
  const std::string text = raw.n_text.empty() ? def : raw.n_text;
  const auto range = parse_n_range(text);
  if (!range) throw UsageError("--n must be a non-negative integer or a range a..b, got '" + text + "'");
  if (single && range->first != range->second) throw UsageError("--n must be a single depth here");
  return *range;
}

double require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(name) + " must be finite and positive");
  return v;
}

unsigned resolve_thread_option(const RawArgs& raw) {
  if (raw.threads) return *raw.threads;
  if (const char* env = std::getenv("FUP_THREADS"); env && *env) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("FUP_THREADS must be a non-negative integer");
    }
    return v;
  }
  return 0;
}

RunConfig resolve(const std::string& command, const RawArgs& raw) {
  RunConfig cfg;
  cfg.command = command;
  cfg.r = raw.r;
  cfg.r_grid = raw.r_grid;
  cfg.k_max = raw.k_max;
  cfg.tol = raw.tol;
  cfg.method = raw.method;
  cfg.samples = raw.samples;
  cfg.seed = raw.seed;
  cfg.domain = raw.domain;
  cfg.kind = raw.kind;
  cfg.z = raw.z;
  cfg.w = raw.w;
  cfg.point = raw.point;
  cfg.out_dir = raw.out_dir;
  cfg.format = raw.format;
  cfg.threads = resolve_thread_option(raw);
  cfg.alphas = raw.alphas;
  for (double a : cfg.alphas) require_positive(a, "--alpha");
  if (cfg.r) require_positive(*cfg.r, "--r");
  if (cfg.k_max && *cfg.k_max < 0) throw UsageError("--k-max must be non-negative");
  if (cfg.tol && !(*cfg.tol >= 0.0 && *cfg.tol < 1.0)) throw UsageError("--tol must lie in [0, 1)");
  return cfg;
}

double single_alpha(RunConfig& cfg, double def) {
  if (cfg.alphas.empty()) cfg.alphas = {def};
  if (cfg.alphas.size() != 1) throw UsageError("--alpha takes a single value for this command");
  return cfg.alphas.front();
}

std::vector<RadiusRule> radius_rules(const RunConfig& cfg, bool allow_default) {
  if (cfg.r && !cfg.r_grid.empty()) throw UsageError("give either --r or --r-grid, not both");
  if (cfg.r) return {RadiusRule{*cfg.r, 0.0}};
  if (cfg.r_grid.empty()) {
    if (allow_default) return default_radius_grid();
    return {RadiusRule{1.0, 0.0}};
  }
  std::vector<RadiusRule> rules;
  for (const std::string& text : cfg.r_grid) {
    const auto rule = parse_radius_rule(text);
    if (!rule) throw UsageError("cannot parse radius rule '" + text + "'");
    rules.push_back(*rule);
  }
  return rules;
}

std::complex<double> require_complex(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string(name) + " is required");
  const auto c = parse_complex(text);
  if (!c) throw UsageError(std::string(name) + " must be 're' or 're,im'");
  return {c->first, c->second};
}

std::vector<Field> config_fields(const RunConfig& cfg) {
  std::vector<Field> f;
  std::string alphas;
  for (std::size_t i = 0; i < cfg.alphas.size(); ++i) alphas += (i ? "," : "") + num(cfg.alphas[i]);
  f.emplace_back("alpha", alphas);
  f.emplace_back("n", std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi));
  f.emplace_back("r", cfg.r ? num(*cfg.r) : std::string());
  std::string grid;
  for (std::size_t i = 0; i < cfg.r_grid.size(); ++i) grid += (i ? ";" : "") + cfg.r_grid[i];
  f.emplace_back("r_grid", grid);
  f.emplace_back("k_max", cfg.k_max ? std::to_string(*cfg.k_max) : std::string());
  f.emplace_back("tol", cfg.tol ? num(*cfg.tol) : std::string());
  f.emplace_back("method", cfg.method);
  f.emplace_back("samples", cfg.samples);
  f.emplace_back("seed", std::to_string(cfg.seed));
  f.emplace_back("domain", cfg.domain);
  f.emplace_back("kind", cfg.kind);
  f.emplace_back("z", cfg.z);
  f.emplace_back("w", cfg.w);
  f.emplace_back("point", cfg.point);
  f.emplace_back("format", cfg.format);
  return f;
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_cantor(RunConfig& cfg) {
  if (cfg.domain.empty()) cfg.domain = "line";
  const Domain domain = parse_domain(cfg.domain);
  if (domain == Domain::HalfPlane) throw UsageError("cantor tables exist for line, disc and plane");
  const double R = cfg.r.value_or(1.0);
  if (cfg.n_lo > kMaxMaterializeDepth) {
    throw DepthExceeded("tables are limited to depth " + std::to_string(kMaxMaterializeDepth));
  }
  const CantorSpec spec(cfg.n_lo, R, domain);
  Output o;
  Table& t = o.report.table;
  if (domain == Domain::Line) {
    t.columns = {"index", "lo", "hi"};
    std::int64_t i = 0;
    for (const Interval& iv : intervals(spec)) t.rows.push_back({i++, iv.lo, iv.hi});
    o.report.summary = {{"intervals", i}, {"measure", line_measure(spec)}};
    o.lines = {"intervals: " + std::to_string(i), "measure: " + num(line_measure(spec))};
    return o;
  }
  const bool disc = domain == Domain::Disc;
  t.columns = {"index", "r_inner", "r_outer", disc ? "hyperbolic_measure" : "area"};
  std::int64_t i = 0;
  CompensatedSum total;
  for (const Annulus& a : annuli(spec)) {
    const double m = disc ? annulus_hyperbolic_measure(a) : std::numbers::pi * (a.u_outer - a.u_inner);
    total += m;
    t.rows.push_back({i++, a.r_inner, a.r_outer, m});
  }
  if (disc) {
    const double closed = hyperbolic_measure(spec);
    o.report.summary = {{"annuli", i}, {"hyperbolic_measure", closed}, {"hyperbolic_measure_annuli", total.value()}};
    o.lines = {"annuli: " + std::to_string(i), "hyperbolic_measure: " + num(closed),
               "hyperbolic_measure_annuli: " + num(total.value())};
  } else {
    const double area = planar_volume(cfg.n_lo, R);
    o.report.summary = {{"annuli", i}, {"area", area}, {"area_annuli", total.value()}};
    o.lines = {"annuli: " + std::to_string(i), "area: " + num(area), "area_annuli: " + num(total.value())};
  }
  return o;
}

Output cmd_spectrum(RunConfig& cfg) {
  if (cfg.domain.empty()) cfg.domain = "disc";
  if (parse_domain(cfg.domain) != Domain::Disc) throw UsageError("spectrum needs --domain disc");
  const double alpha = single_alpha(cfg, 1.0);
  if (cfg.k_max && cfg.tol) throw UsageError("give either --k-max or --tol, not both");
  if (cfg.tol && *cfg.tol == 0.0) throw UsageError("--tol must be positive for spectrum");
  const auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "' (cdfsum, quadrature, montecarlo)");
  if (*method == Method::MonteCarlo && cfg.samples < 1000) throw UsageError("--samples must be >= 1000");

  SpectrumOptions opt;
  opt.method = *method;
  opt.threads = cfg.threads;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  const SpectrumLimit limit =
      cfg.tol ? SpectrumLimit{TruncationTol{*cfg.tol}} : SpectrumLimit{KMax{cfg.k_max.value_or(20)}};
  const Spectrum s = spectrum(CantorSpec(cfg.n_lo, cfg.r.value_or(1.0), Domain::Disc), alpha, limit, opt);

  Output o;
  o.report.table = spectrum_table(s);
  std::int64_t argmax = 0;
  double best = -1.0;
  for (const SpectrumEntry& e : s.entries) {
    if (e.lambda > best) {
      best = e.lambda;
      argmax = e.k;
    }
  }
  o.report.summary = {{"entries", static_cast<std::int64_t>(s.entries.size())},
                      {"max_lambda", best},
                      {"argmax_k", argmax},
                      {"stopping_k", s.stopping_k ? Cell{*s.stopping_k} : Cell{std::string()}}};
  o.lines = {"entries: " + std::to_string(s.entries.size()), "max_lambda: " + num(best),
             "argmax_k: " + std::to_string(argmax)};
  if (s.stopping_k) o.lines.push_back("stopping_k: " + std::to_string(*s.stopping_k));
  return o;
}

Output sandwich_output(RunConfig& cfg, const std::vector<RadiusRule>& grid) {
  const double tol = cfg.tol.value_or(kDefaultNormTol);
  std::vector<SandwichReport> reports;
  for (double alpha : cfg.alphas) {
    reports.push_back(verify_sandwich(alpha, cfg.n_lo, cfg.n_hi, grid, cfg.threads, tol));
  }
  Output o;
  o.report.table = sandwich_table(reports);
  // argmax_k is recorded beside the schema columns.
  o.report.table.columns.push_back("argmax_k");
  std::size_t row = 0;
  for (const SandwichReport& r : reports) {
    for (const SandwichPoint& p : r.points) o.report.table.rows[row++].push_back(p.argmax_k);
  }
  for (const SandwichReport& r : reports) {
    const std::string a = num(r.alpha);
    o.report.summary.emplace_back("min_ratio_alpha_" + a, r.min_ratio);
    o.report.summary.emplace_back("max_ratio_alpha_" + a, r.max_ratio);
    o.report.summary.emplace_back("min_lambda0_ratio_alpha_" + a, r.min_lambda0_ratio);
    o.report.summary.emplace_back("bounded_alpha_" + a, std::string(r.bounded() ? "true" : "false"));
  }
  return o;
}

Output cmd_norm(RunConfig& cfg) {
  if (cfg.alphas.empty()) cfg.alphas = {1.0};
  Output o = sandwich_output(cfg, radius_rules(cfg, false));
  for (const auto& row : o.report.table.rows) {
    o.lines.push_back("n=" + format_cell(row[0]) + " R=" + format_cell(row[1]) + " alpha=" +
                      format_cell(row[2]) + " norm=" + format_cell(row[3]) + " argmax_k=" +
                      format_cell(row[6]) + " envelope=" + format_cell(row[4]) + " ratio=" +
                      format_cell(row[5]));
  }
  return o;
}

Output cmd_sandwich(RunConfig& cfg) {
  if (cfg.alphas.empty()) cfg.alphas = {0.5, 1.0, 2.0};
  Output o = sandwich_output(cfg, radius_rules(cfg, true));
  for (const Field& f : o.report.summary) o.lines.push_back(f.first + ": " + format_cell(f.second));
  return o;
}

Output fit_output(const ScalingFit& fit) {
  Output o;
  o.report.table = scaling_table(fit);
  o.report.summary = {{"quantity", fit.quantity},
                      {"slope", fit.slope},
                      {"target_slope", fit.target_slope},
                      {"intercept", fit.intercept},
                      {"max_residual", fit.max_residual}};
  o.lines = {"slope: " + num(fit.slope), "target: " + num(fit.target_slope),
             "max_residual: " + num(fit.max_residual)};
  return o;
}

Output cmd_scaling(RunConfig& cfg) {
  const double alpha = single_alpha(cfg, 1.0);
  return fit_output(scaling_fit(alpha, cfg.n_lo, cfg.n_hi, cfg.threads, cfg.tol.value_or(kDefaultNormTol)));
}

Output cmd_fock(RunConfig& cfg) {
  if (!cfg.k_max) {
    return fit_output(fock_norm_scaling(cfg.n_lo, cfg.n_hi, cfg.threads, cfg.tol.value_or(kDefaultNormTol)));
  }
  if (cfg.n_lo != cfg.n_hi) throw UsageError("fock --k-max needs a single --n");
  const double R = cfg.r.value_or(1.0);
  const auto count = static_cast<std::size_t>(*cfg.k_max) + 1;
  std::vector<double> lambdas(count);
  parallel_for(count, cfg.threads, [&](std::size_t k) {
    lambdas[k] = fock_eigenvalue(static_cast<std::int64_t>(k), cfg.n_lo, R);
  });
  Output o;
  o.report.table.columns = {"k", "lambda", "n", "R"};
  double best = -1.0;
  std::int64_t argmax = 0;
  for (std::size_t k = 0; k < count; ++k) {
    o.report.table.rows.push_back({static_cast<std::int64_t>(k), lambdas[k], std::int64_t{cfg.n_lo}, R});
    if (lambdas[k] > best) {
      best = lambdas[k];
      argmax = static_cast<std::int64_t>(k);
    }
  }
  o.report.summary = {{"max_lambda", best}, {"argmax_k", argmax}};
  o.lines = {"max_lambda: " + num(best), "argmax_k: " + std::to_string(argmax)};
  return o;
}

Output cmd_kernel(RunConfig& cfg) {
  const double alpha = single_alpha(cfg, 1.0);
  if (cfg.kind.empty()) cfg.kind = "bergman";
  Output o;
  if (cfg.kind == "admissibility") {
    const WaveletParams p = admissibility(alpha);
    o.report.table.columns = {"alpha", "c_psi", "norm_squared", "ratio"};
    o.report.table.rows.push_back({alpha, p.admissibility, p.norm_squared, p.ratio()});
    o.lines = {"c_psi: " + num(p.admissibility), "norm_squared: " + num(p.norm_squared),
               "ratio: " + num(p.ratio())};
    return o;
  }
  if (cfg.kind != "bergman" && cfg.kind != "wavelet") {
    throw UsageError("unknown kernel kind '" + cfg.kind + "' (bergman, wavelet, admissibility)");
  }
  const std::complex<double> z = require_complex(cfg.z, "--z");
  const std::complex<double> w = require_complex(cfg.w, "--w");
  const std::complex<double> v = cfg.kind == "bergman" ? bergman_kernel(z, w, alpha) : wavelet_kernel(z, w, alpha);
  o.report.table.columns = {"kind", "alpha", "z_re", "z_im", "w_re", "w_im", "re", "im"};
  o.report.table.rows.push_back({cfg.kind, alpha, z.real(), z.imag(), w.real(), w.imag(), v.real(), v.imag()});
  o.lines = {"value: " + num(v.real()) + (v.imag() < 0 ? " - " : " + ") + num(std::fabs(v.imag())) + "i"};
  return o;
}

Output cmd_member(RunConfig& cfg) {
  if (cfg.domain.empty()) cfg.domain = "line";
  const Domain domain = parse_domain(cfg.domain);
  const CantorSpec spec(cfg.n_lo, cfg.r.value_or(1.0), domain);
  const std::complex<double> p = require_complex(cfg.point, "--point");
  bool inside = false;
  if (domain == Domain::Line) {
    if (p.imag() != 0.0) throw UsageError("line membership needs a real --point");
    inside = member(spec, p.real());
  } else {
    inside = member(spec, p);
  }
  Output o;
  o.report.table.columns = {"domain", "n", "R", "point_re", "point_im", "member"};
  o.report.table.rows.push_back({cfg.domain, std::int64_t{cfg.n_lo}, spec.dilation(), p.real(), p.imag(),
                                 std::int64_t{inside ? 1 : 0}});
  o.lines = {std::string("member: ") + (inside ? "true" : "false")};
  return o;
}

void emit(const RunConfig& cfg, Output& o, std::ostream& out) {
  o.report.command = cfg.command;
  o.report.version = FUP_VERSION;
  o.report.config = config_fields(cfg);

  std::ostringstream body;
  if (cfg.format == "json") {
    write_json(body, o.report);
  } else {
    write_csv(body, o.report.table);
  }

  for (const std::string& line : o.lines) out << line << '\n';
  if (cfg.out_dir.empty()) {
    out << '\n' << body.str();
    return;
  }
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  const std::filesystem::path file = dir / (cfg.command + "-" + config_hash(cfg) + "." + cfg.format);
  std::ofstream f(file, std::ios::binary | std::ios::trunc);
  f << body.str();
  if (!f) throw std::runtime_error("cannot write " + file.string());
  out << "wrote: " << file.string() << '\n';
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::pair<int, int>> parse_n_range(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) return std::nullopt;
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v) return std::nullopt;
    return std::pair{*v, *v};
  }
  const auto lo = parse_int(text.substr(0, dots));
  const auto hi = parse_int(text.substr(dots + 2));
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return std::pair{*lo, *hi};
}

std::optional<std::pair<double, double>> parse_complex(std::string_view text) {
  const auto parse = [](std::string_view s) -> std::optional<double> {
    double v = 0.0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    const auto re = parse(text);
    if (!re) return std::nullopt;
    return std::pair{*re, 0.0};
  }
  const auto re = parse(text.substr(0, comma));
  const auto im = parse(text.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return std::pair{*re, *im};
}

std::string canonical_config(const RunConfig& cfg) {
  std::string s = "command=" + cfg.command;
  for (const auto& [key, value] : config_fields(cfg)) s += ";" + key + "=" + format_cell(value);
  return s;
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_config(cfg)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cantor-set localization operators: eigenvalues, operator norms, scaling fits", "fup"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(FUP_VERSION));

  RawArgs raw;

  struct Command {
    const char* name;
    const char* help;
    const char* n_default;
    bool single_n;
    Output (*run)(RunConfig&);
  };
  const std::vector<Command> commands = {
      {"cantor", "Intervals or annuli of a Cantor iterate and their measure", "3", true, cmd_cantor},
      {"spectrum", "Eigenvalues lambda_k of the disc localization operator", "3", true, cmd_spectrum},
      {"norm", "Operator norm sup_k lambda_k with its envelope ratio", "3", false, cmd_norm},
      {"sandwich", "Norm / envelope ratios over an (n, R) grid", "1..12", false, cmd_sandwich},
      {"scaling", "Log-log fit of the norm along R = 3^(n/2)", "6..14", false, cmd_scaling},
      {"fock", "Fock-space comparison: norm scaling or eigenvalues", "6..16", false, cmd_fock},
      {"kernel", "Bergman or wavelet kernel values, admissibility constants", "0", true, cmd_kernel},
      {"member", "Membership of a point in a Cantor iterate", "3", true, cmd_member},
  };

  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs.push_back(sub);
    const std::string name = c.name;
    if (name != "kernel") {
      sub->add_option("--n", raw.n_text,
                      std::string(c.single_n ? "Depth n" : "Depth n or range a..b") + " (default " +
                          c.n_default + ")");
    }
    if (name == "cantor" || name == "spectrum" || name == "member") {
      sub->add_option("--domain", raw.domain, "line, disc, plane or halfplane");
    }
    if (name != "scaling" && name != "kernel" && name != "sandwich") {
      sub->add_option("--r", raw.r, "Dilation R > 0 (default 1)");
    }
    if (name == "norm" || name == "sandwich") {
      sub->add_option("--r-grid", raw.r_grid, "Radius rules such as 0.25, 3^(n/2), 10*3^n")->delimiter(',');
    }
    if (name == "spectrum" || name == "norm" || name == "sandwich" || name == "scaling" ||
        name == "kernel") {
      add_alpha(sub, raw, name == "sandwich" ? "0.5,1,2" : "1");
    }
    if (name == "spectrum" || name == "fock") {
      sub->add_option("--k-max", raw.k_max, "Compute k = 0..k_max");
    }
    if (name == "spectrum" || name == "norm" || name == "sandwich" || name == "scaling" ||
        name == "fock") {
      sub->add_option("--tol", raw.tol, "Truncation tolerance for the tail majorant");
    }
    if (name == "spectrum") {
      sub->add_option("--method", raw.method, "cdfsum, quadrature or montecarlo")->capture_default_str();
      sub->add_option("--samples", raw.samples, "Monte Carlo samples")->capture_default_str();
      sub->add_option("--seed", raw.seed, "Monte Carlo seed")->capture_default_str();
    }
    if (name == "kernel") {
      sub->add_option("--kind", raw.kind, "bergman, wavelet or admissibility (default bergman)");
      sub->add_option("--z", raw.z, "First point as re,im");
      sub->add_option("--w", raw.w, "Second point as re,im");
    }
    if (name == "member") sub->add_option("--point", raw.point, "Point as re or re,im");
    add_output_options(sub, raw);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Command* chosen = nullptr;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (subs[i]->parsed()) chosen = &commands[i];
  }
  if (chosen == nullptr) {
    err << "no command given\n";
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    cfg = resolve(chosen->name, raw);
    const auto range = require_n(raw, chosen->n_default, chosen->single_n);
    cfg.n_lo = range.first;
    cfg.n_hi = range.second;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Output o = chosen->run(cfg);
    emit(cfg, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fup::cli
