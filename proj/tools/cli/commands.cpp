#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "nuclearity/characters.hpp"
#include "nuclearity/error.hpp"
#include "nuclearity/free_field.hpp"
#include "nuclearity/interval_geometry.hpp"
#include "nuclearity/lowest_weight_rep.hpp"
#include "nuclearity/report_json.hpp"
#include "nuclearity/sl2_group.hpp"
#include "nuclearity/spectrum_io.hpp"
#include "run_config.hpp"

namespace nuclearity::cli {

namespace {

using io::Json;
using Table = std::vector<std::vector<std::string>>;
using Curve = std::vector<std::pair<double, double>>;

struct Output {
  Json json;
  Table csv;
  Curve plot;
  int exit_code = kExitOk;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "not a number: '" + text + "'");
  }
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const std::string& p : split(text)) out.push_back(parse_double(p));
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty list");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_doubles(text)) {
    if (v != std::floor(v)) throw Error(ErrorKind::InvalidInput, "expected integers in list");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::pair<double, double> parse_pair(const std::string& text) {
  const std::vector<double> v = parse_doubles(text);
  if (v.size() != 2) throw Error(ErrorKind::InvalidInput, "expected two comma-separated values: '" + text + "'");
  return {v[0], v[1]};
}

geometry::Interval make_interval(const std::string& text, bool angles) {
  const auto [x, y] = parse_pair(text);
  return angles ? geometry::Interval(x, y) : geometry::Interval::from_line(x, y);
}

Json interval_json(const geometry::Interval& iv) {
  const auto [x1, x2] = iv.line_endpoints();
  return Json{{"x1", io::number(x1)}, {"x2", io::number(x2)}, {"angle_start", io::number(iv.start())},
              {"angle_end", io::number(iv.end())}};
}

std::string fmt(double v) { return io::format_double(v); }

Table details_table(const VerificationReport& r) {
  Table t{{"N", "residual"}};
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    t.push_back({i < r.dims_tested.size() ? std::to_string(r.dims_tested[i]) : "", fmt(r.residuals[i])});
  }
  return t;
}

void write_csv(const Table& table, std::ostream& os) {
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

struct GlobalOptions {
  std::string format;
  std::string output;
  std::string config_path;
  std::string plot_path;
};

struct GeomOptions {
  std::string outer;
  std::string inner;
  bool angles = false;
};

struct VerifyOptions {
  std::string identity;
  double alpha = 1.0;
  std::optional<double> param;
  double t = 0.0;
  std::string dims;
  std::optional<int> block;
  std::optional<double> tolerance;
};

struct CharOptions {
  std::string spectrum;
  std::string s;
  bool chain = false;
  bool kms = false;
  bool l2 = false;
  std::optional<double> split;
  std::optional<double> lambda;
  std::string outer;
  std::string inner;
  std::optional<double> time;
  std::string grid;
};

struct BranchOptions {
  int d = 3;
  std::optional<int> kmax;
  bool partition = false;
  std::string grid;
  std::optional<double> double_cone;
};

Output cmd_geom(const GeomOptions& o) {
  const geometry::Interval outer = make_interval(o.outer, o.angles);
  const geometry::Interval inner = make_interval(o.inner, o.angles);
  const geometry::InnerDistances dist = geometry::inner_distances(outer, inner);
  const geometry::TranslationDecomposition dec = geometry::translation_decomposition(outer, inner);
  Output out;
  out.json["outer"] = interval_json(outer);
  out.json["inner"] = interval_json(inner);
  out.json["ell"] = io::number(dist.ell);
  out.json["ell_prime"] = io::number(dist.ell_prime);
  out.json["sinh_half_ell"] = io::number(std::sinh(0.5 * dist.ell));
  out.json["a"] = io::number(dec.a);
  out.json["a_prime"] = io::number(dec.a_prime);
  out.csv = {{"ell", "ell_prime", "a", "a_prime"}, {fmt(dist.ell), fmt(dist.ell_prime), fmt(dec.a), fmt(dec.a_prime)}};
  return out;
}

double default_param(const std::string& identity) {
  if (identity == "t2") return 0.5;
  if (identity == "kdc") return 0.125;
  return 1.0;
}

Output cmd_verify(const VerifyOptions& o, RunConfig& config) {
  const std::string& id = o.identity;
  const double param = o.param.value_or(default_param(id));
  VerificationReport report;
  const bool group_level = id == "bch" || id == "rotation" || id == "euclidean" || id == "half_turn";
  if (id == "bch") {
    report = sl2::verify_bch_identity(param, o.t);
  } else if (id == "rotation") {
    report = sl2::verify_rotation_factorization(param);
  } else if (id == "euclidean") {
    report = sl2::verify_euclidean_factorization(param);
  } else if (id == "half_turn") {
    report = sl2::verify_half_turn_factorization();
  } else {
    const bool glw = id == "glw";
    if (!o.dims.empty()) config.truncation_dims = parse_ints(o.dims);
    if (config.truncation_dims.empty()) {
      config.truncation_dims = glw ? std::vector<int>{200, 400, 800} : std::vector<int>{50, 100, 200};
    }
    const int block = o.block ? *o.block : config.block.value_or(glw ? 5 : 10);
    normalize(config, block);
    const std::vector<int>& dims = config.truncation_dims;
    if (id == "m1") {
      report = lwrep::verify_m1_truncated(o.alpha, param, dims, block);
    } else if (id == "t2") {
      report = lwrep::verify_t2_equals_t1(o.alpha, param, dims, block);
    } else if (id == "m2") {
      report = lwrep::verify_operator_inequalities(o.alpha, param, dims, block, lwrep::Inequality::M2);
    } else if (id == "kdc") {
      report = lwrep::verify_operator_inequalities(o.alpha, param, dims, block, lwrep::Inequality::KdcVector);
    } else if (id == "ko") {
      report = lwrep::verify_operator_inequalities(o.alpha, param, dims, block, lwrep::Inequality::KoBound);
    } else if (glw) {
      report = lwrep::verify_glw(o.alpha, dims, block);
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown identity '" + id + "'");
    }
  }
  std::optional<double> tolerance = o.tolerance;
  if (!tolerance) {
    const auto it = config.tolerance_overrides.find(id);
    if (it != config.tolerance_overrides.end()) tolerance = it->second;
  }
  if (tolerance) {
    const bool failed_extra = !report.notes.empty();
    report.tolerance = *tolerance;
    finalize(report);
    if (failed_extra) report.verdict = false;
  }
  Output out;
  out.json = io::to_json(report);
  out.csv = details_table(report);
  if (!group_level) {
    for (std::size_t i = 0; i < report.residuals.size(); ++i) {
      out.plot.emplace_back(report.dims_tested[i], report.residuals[i]);
    }
  }
  out.exit_code = report.verdict ? kExitOk : kExitVerificationFailed;
  return out;
}

characters::MultiplicitySpectrum spectrum_or_default(const std::string& path) {
  if (path.empty()) return characters::MultiplicitySpectrum::single_weight(1.0);
  return io::load_spectrum(path);
}

Output cmd_char(const CharOptions& o) {
  const characters::MultiplicitySpectrum spec = spectrum_or_default(o.spectrum);
  const int modes = int(o.chain) + int(o.kms) + int(o.l2) + int(o.split.has_value()) + int(!o.s.empty());
  if (modes != 1) {
    throw Error(ErrorKind::InvalidInput, "choose exactly one of --s, --chain, --kms, --l2, --split");
  }
  Output out;
  if (o.chain) {
    if (!o.lambda) throw Error(ErrorKind::InvalidInput, "--chain requires --lambda");
    const auto [w1, w2] = parse_pair(o.outer);
    const auto [z1, z2] = parse_pair(o.inner);
    const characters::NuclearityChainReport r =
        characters::bw_nuclearity_bound(spec, characters::LineInterval{w1, w2}, characters::LineInterval{z1, z2}, *o.lambda, o.time);
    out.json = io::to_json(r);
    out.csv = {{"name", "relation", "value", "upper_bound"}};
    for (const auto& step : r.steps) {
      out.csv.push_back({step.name, step.relation, step.value ? fmt(*step.value) : "", fmt(step.upper_bound)});
    }
    return out;
  }
  if (o.l2) {
    const double lambda = o.lambda.value_or(0.25);
    const double value = characters::l2_nuclearity_norm(spec, make_interval(o.outer, false),
                                                        make_interval(o.inner, false), lambda);
    out.json = Json{{"lambda", io::number(lambda)}, {"l2_nuclearity_norm", io::number(value)}};
    out.csv = {{"lambda", "l2_nuclearity_norm"}, {fmt(lambda), fmt(value)}};
    return out;
  }
  if (o.kms) {
    const characters::LogEllipticityFit fit = characters::log_ellipticity_fit(spec, parse_doubles(o.grid));
    out.json = io::to_json(fit);
    out.csv = {{"s", "log_trace"}};
    for (const auto& [s, t] : fit.points) {
      out.csv.push_back({fmt(s), fmt(t)});
      out.plot.emplace_back(std::log(s), std::log(t));
    }
    return out;
  }
  if (o.split) {
    const characters::SplitResult r = characters::split_distance(spec, *o.split);
    out.json = Json{{"threshold", io::number(r.threshold)}, {"norm", io::number(r.norm)}};
    out.csv = {{"threshold", "norm"}, {fmt(r.threshold), fmt(r.norm)}};
    return out;
  }
  Json rows = Json::array();
  out.csv = {{"s", "character"}};
  for (double s : parse_doubles(o.s)) {
    const double v = characters::character(spec, s);
    if (!std::isfinite(v)) throw Error(ErrorKind::DivergentSpectrum, "character diverges at s = " + fmt(s));
    rows.push_back(Json{{"s", io::number(s)}, {"character", io::number(v)}});
    out.csv.push_back({fmt(s), fmt(v)});
    out.plot.emplace_back(s, v);
  }
  out.json["spectrum"] = io::spectrum_to_json(spec);
  out.json["values"] = rows;
  return out;
}

Output cmd_branch(const BranchOptions& o) {
  const characters::MultiplicitySpectrum spec = freefield::free_field_spectrum(o.d);
  Output out;
  if (o.double_cone) {
    const freefield::DoubleConeResult r = freefield::l2_nuclearity_double_cone(*o.double_cone, o.d);
    out.json = io::to_json(r);
    out.csv = {{"r", "s", "value", "asymptotic_reference", "relative_deviation"},
               {fmt(r.r), fmt(r.s), fmt(r.value), fmt(r.asymptotic_reference), fmt(r.relative_deviation)}};
    return out;
  }
  if (o.partition) {
    const bool closed = o.d == 3;
    Json rows = Json::array();
    out.csv = {{"s", "value"}};
    if (closed) out.csv[0].push_back("closed_form");
    for (double s : parse_doubles(o.grid)) {
      const double v = freefield::free_field_partition(o.d, s);
      Json row{{"s", io::number(s)}, {"value", io::number(v)}};
      std::vector<std::string> line{fmt(s), fmt(v)};
      if (closed) {
        const double c = freefield::free_field_closed_form(o.d, s);
        row["closed_form"] = io::number(c);
        line.push_back(fmt(c));
      }
      rows.push_back(row);
      out.csv.push_back(line);
      out.plot.emplace_back(s, v);
    }
    out.json["d"] = o.d;
    out.json["partition"] = rows;
    if (!spec.flags.empty()) out.json["flags"] = spec.flags;
    return out;
  }
  const int kmax = o.kmax.value_or(20);
  if (kmax < 0) throw Error(ErrorKind::InvalidInput, "--kmax must be non-negative");
  Json rows = Json::array();
  out.csv = {{"d", "k", "m_d(k)", "N_d(k)"}};
  for (int k = 0; k <= kmax; ++k) {
    const std::uint64_t m = freefield::monomial_count(o.d, k);
    const std::uint64_t n = freefield::branching_multiplicity(o.d, k);
    rows.push_back(Json{{"d", o.d}, {"k", k}, {"m_d_k", m}, {"N_d_k", n}});
    out.csv.push_back({std::to_string(o.d), std::to_string(k), std::to_string(m), std::to_string(n)});
  }
  out.json["d"] = o.d;
  out.json["table"] = rows;
  if (!spec.flags.empty()) out.json["flags"] = spec.flags;
  return out;
}

void emit(const Output& result, const RunConfig& config, const std::string& plot_path, std::ostream& out) {
  std::ostringstream text;
  if (config.output_format == "csv") {
    write_csv(result.csv, text);
  } else {
    text << io::dump_json(result.json);
  }
  if (config.output_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(config.output_path);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + config.output_path);
    file << text.str();
  }
  if (!plot_path.empty()) {
    std::ofstream file(plot_path);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + plot_path);
    file << "x,y\n";
    for (const auto& [x, y] : result.plot) file << fmt(x) << "," << fmt(y) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moebius-covariant nuclearity computations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", g.output, "Write output to this path");
  app.add_option("--config", g.config_path, "JSON config merged under explicit flags");
  app.add_option("--emit-plot-data", g.plot_path, "Write an (x, y) CSV curve");

  GeomOptions geom;
  CLI::App* geom_cmd = app.add_subcommand("geom", "Inner distances of an interval inclusion");
  geom_cmd->add_option("--outer", geom.outer, "Outer interval a,b (line picture, inf allowed)")->required();
  geom_cmd->add_option("--inner", geom.inner, "Inner interval c,d")->required();
  geom_cmd->add_flag("--angles", geom.angles, "Read endpoints as circle angles");

  VerifyOptions ver;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify an identity or inequality");
  verify_cmd->add_option("--identity", ver.identity, "Identity name")
      ->required()
      ->check(CLI::IsMember({"bch", "rotation", "euclidean", "half_turn", "m1", "t2", "m2", "kdc", "ko", "glw"}));
  verify_cmd->add_option("--alpha", ver.alpha, "Lowest weight (target weight for glw)");
  verify_cmd->add_option("--param", ver.param, "s, lambda (kdc) or half-length R (ko)");
  verify_cmd->add_option("--t", ver.t, "Second BCH parameter");
  verify_cmd->add_option("--dims", ver.dims, "Truncation sizes N1,N2,...");
  verify_cmd->add_option("--block", ver.block, "Leading block size (number of eigenvalues for glw)");
  verify_cmd->add_option("--tolerance", ver.tolerance, "Override the verdict tolerance");

  CharOptions ch;
  CLI::App* char_cmd = app.add_subcommand("char", "Characters, nuclearity chains and log-ellipticity fits");
  char_cmd->add_option("--spectrum", ch.spectrum, "Spectrum JSON file (default: single weight 1)");
  char_cmd->add_option("--s", ch.s, "Evaluate the character at s (comma list allowed)");
  char_cmd->add_flag("--chain", ch.chain, "Nuclearity chain report");
  char_cmd->add_flag("--kms", ch.kms, "Log-ellipticity fit and KMS verdict");
  char_cmd->add_flag("--l2", ch.l2, "L2-nuclearity norm of an inclusion");
  char_cmd->add_option("--split", ch.split, "Split threshold certified at s0");
  char_cmd->add_option("--lambda", ch.lambda, "Exponent lambda");
  char_cmd->add_option("--outer", ch.outer, "Outer interval a,b");
  char_cmd->add_option("--inner", ch.inner, "Inner interval c,d");
  char_cmd->add_option("--time", ch.time, "Time for the asymptotic estimate");
  char_cmd->add_option("--grid", ch.grid, "Grid s1,s2,... for --kms");

  BranchOptions br;
  CLI::App* branch_cmd = app.add_subcommand("branch", "Free-field branching multiplicities and partition functions");
  branch_cmd->add_option("--d", br.d, "Space dimension (odd)");
  branch_cmd->add_option("--kmax", br.kmax, "Largest k in the table");
  branch_cmd->add_flag("--partition", br.partition, "Partition function curve");
  branch_cmd->add_option("--grid", br.grid, "Grid s1,s2,... for --partition");
  branch_cmd->add_option("--double-cone", br.double_cone, "Double-cone radius r > 1");

  std::vector<std::string> argv_store{"nuclearity"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);
    if (!g.format.empty()) config.output_format = g.format;
    if (!g.output.empty()) config.output_path = g.output;
    if (config.output_format != "json" && config.output_format != "csv") {
      throw Error(ErrorKind::InvalidInput, "output_format must be json or csv");
    }
    Output result;
    if (geom_cmd->parsed()) {
      result = cmd_geom(geom);
    } else if (verify_cmd->parsed()) {
      result = cmd_verify(ver, config);
    } else if (char_cmd->parsed()) {
      if ((ch.chain || ch.l2) && (ch.outer.empty() || ch.inner.empty())) {
        throw Error(ErrorKind::InvalidInput, "--outer and --inner are required");
      }
      if (ch.kms && ch.grid.empty()) throw Error(ErrorKind::InvalidInput, "--kms requires --grid");
      result = cmd_char(ch);
    } else {
      if (br.partition && br.grid.empty()) throw Error(ErrorKind::InvalidInput, "--partition requires --grid");
      result = cmd_branch(br);
    }
    emit(result, config, g.plot_path, out);
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nuclearity::cli
