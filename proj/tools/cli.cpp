#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polycauchy/combinatorics.hpp"
#include "polycauchy/polycauchy.hpp"
#include "polycauchy/report.hpp"
#include "polycauchy/sequences.hpp"
#include "polycauchy/series.hpp"
#include "polycauchy/verify.hpp"

namespace polycauchy::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct Options {
  std::string format = "text";
  std::string output;

  std::string gen_sequence;
  std::optional<int> k;
  std::optional<int> alpha;
  std::optional<int> r;
  std::optional<std::string> lambda;
  std::optional<int> a;
  int n_max = 10;

  int expand_n = 0;
  int expand_k = 0;
  std::string basis;

  std::optional<int> verify_n_max;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::optional<int> r_max;
  std::optional<int> lif_order;
  std::vector<std::string> lambdas;
  std::vector<std::string> ys;
  std::vector<std::string> identities;

  std::string series_which;
  int order = 0;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int parse_int_field(const std::string& what, const std::string& text) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("malformed integer in " + what + ": \"" + text + "\"");
  }
}

Rational require_lambda(const std::string& flag, const std::string& text) {
  const Rational lambda = parse_rational_flag(flag, text);
  if (lambda == Rational(1)) throw UsageError("Frobenius-Euler parameter must differ from 1");
  return lambda;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> rational_strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

// A row value is either a single rational or a coefficient list.
struct Row {
  long index;
  std::vector<std::string> values;
  bool is_list;
};

struct Table {
  std::string command;
  Json params;
  std::string index_name;
  std::string value_name;
  std::vector<Row> rows;
};

void emit_table(const Table& t, Format format, std::ostream& os, const Json& extra = Json::object()) {
  switch (format) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json r;
        r[t.index_name] = row.index;
        if (row.is_list) {
          r[t.value_name] = row.values;
        } else {
          r[t.value_name] = row.values.front();
        }
        rows.push_back(std::move(r));
      }
      Json doc;
      doc["command"] = t.command;
      doc["params"] = t.params;
      doc["rows"] = std::move(rows);
      for (const auto& [key, value] : extra.items()) doc[key] = value;
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << t.index_name << "," << t.value_name << "\n";
      for (const auto& row : t.rows) os << row.index << "," << csv_quote(join(row.values, " ")) << "\n";
      break;
    case Format::Text:
      for (const auto& row : t.rows) os << t.index_name << "=" << row.index << ": " << join(row.values, " ") << "\n";
      break;
  }
}

int cmd_gen(const Options& o, Format format, std::ostream& os) {
  if (o.n_max < 0) throw UsageError("--n-max must be non-negative");
  const auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("sequence " + o.gen_sequence + " requires " + flag);
    return *v;
  };

  Table t{"gen", Json::object(), "n", "value", {}};
  t.params["sequence"] = o.gen_sequence;
  const std::string& seq = o.gen_sequence;
  const auto add_poly = [&](long n, const Polynomial& p) {
    t.rows.push_back({n, rational_strings(p.coefficients()), true});
  };

  if (seq == "polycauchy2-number") {
    const int k = need(o.k, "--k");
    t.params["k"] = k;
    for (int n = 0; n <= o.n_max; ++n) t.rows.push_back({n, {number_closed(n, k).to_string()}, false});
  } else if (seq == "polycauchy2-poly") {
    const int k = need(o.k, "--k");
    t.params["k"] = k;
    for (int n = 0; n <= o.n_max; ++n) add_poly(n, poly_closed(n, k));
  } else if (seq == "stirling1") {
    for (int n = 0; n <= o.n_max; ++n) {
      std::vector<std::string> row;
      for (const auto& s : stirling1_table().row(n)) row.push_back(Rational(s).to_string());
      t.rows.push_back({n, row, true});
    }
  } else if (seq == "bernoulli2") {
    for (int n = 0; n <= o.n_max; ++n) add_poly(n, bernoulli_2nd_poly(n));
  } else if (seq == "bernoulli-order") {
    const int alpha = need(o.alpha, "--alpha");
    t.params["alpha"] = alpha;
    for (int n = 0; n <= o.n_max; ++n) add_poly(n, bernoulli_high_order_poly(n, alpha));
  } else if (seq == "frobenius-euler") {
    const int r = need(o.r, "--r");
    if (r < 0) throw UsageError("--r must be non-negative");
    if (!o.lambda) throw UsageError("sequence frobenius-euler requires --lambda");
    const Rational lambda = require_lambda("--lambda", *o.lambda);
    t.params["r"] = r;
    t.params["lambda"] = lambda.to_string();
    for (int n = 0; n <= o.n_max; ++n) add_poly(n, frobenius_euler_poly(n, r, lambda));
  } else if (seq == "narumi") {
    const int a = need(o.a, "--a");
    t.params["a"] = a;
    for (int n = 0; n <= o.n_max; ++n) add_poly(n, narumi_poly(n, a));
  } else {
    throw UsageError("unknown sequence \"" + seq + "\"");
  }
  t.params["n_max"] = o.n_max;
  emit_table(t, format, os);
  return kExitOk;
}

Basis parse_basis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 1 && parts[0] == "falling") return Basis::falling_factorial();
  if (parts.size() == 2 && parts[0] == "bernoulli") {
    const int r = parse_int_field("--basis", parts[1]);
    if (r < 0) throw UsageError("--basis: r must be non-negative");
    return Basis::higher_order_bernoulli(r);
  }
  if (parts.size() == 3 && parts[0] == "frobenius") {
    const int r = parse_int_field("--basis", parts[1]);
    if (r < 0) throw UsageError("--basis: r must be non-negative");
    return Basis::frobenius_euler(r, require_lambda("--basis", parts[2]));
  }
  throw UsageError("unknown basis \"" + spec + "\" (expected falling, bernoulli:r or frobenius:r:lambda)");
}

int cmd_expand(const Options& o, Format format, std::ostream& os) {
  if (o.expand_n < 0) throw UsageError("--n must be non-negative");
  const Basis basis = parse_basis(o.basis);
  ConnectionMatrix matrix;
  switch (basis.kind) {
    case BasisKind::FallingFactorial:
      matrix = connection_to_falling(o.expand_n, o.expand_k);
      break;
    case BasisKind::HigherOrderBernoulli:
      matrix = connection_to_bernoulli(o.expand_n, o.expand_k, basis.r);
      break;
    case BasisKind::FrobeniusEuler:
      matrix = connection_to_frobenius(o.expand_n, o.expand_k, basis.r, basis.lambda);
      break;
    case BasisKind::Monomial:
      throw UsageError("monomial basis is not an expansion target");
  }
  const Polynomial target = poly_closed(o.expand_n, o.expand_k);
  const bool ok = reconstruct(matrix.expansion()) == target;
  const std::string check = ok ? "pass" : "fail";

  Table t{"expand", Json::object(), "m", "value", {}};
  t.params["n"] = o.expand_n;
  t.params["k"] = o.expand_k;
  t.params["basis"] = basis.to_string();
  for (std::size_t m = 0; m < matrix.entries.size(); ++m) {
    t.rows.push_back({static_cast<long>(m), {matrix.entries[m].to_string()}, false});
  }

  if (format == Format::Csv) {
    os << "m,value,check\n";
    for (const auto& row : t.rows) os << row.index << "," << csv_quote(row.values.front()) << "," << check << "\n";
  } else if (format == Format::Json) {
    Json extra;
    extra["polynomial"] = rational_strings(target.coefficients());
    extra["check"] = check;
    emit_table(t, format, os, extra);
  } else {
    emit_table(t, format, os);
    os << "check: " << check << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, Format format, std::ostream& os) {
  verify::GridConfig config;
  if (o.verify_n_max) config.n_max = *o.verify_n_max;
  if (o.k_min) config.k_min = *o.k_min;
  if (o.k_max) config.k_max = *o.k_max;
  if (o.r_max) config.r_max = *o.r_max;
  if (o.lif_order) config.lif_order = *o.lif_order;
  if (!o.lambdas.empty()) {
    config.lambdas.clear();
    for (const auto& l : o.lambdas) config.lambdas.push_back(require_lambda("--lambda", l));
  }
  if (!o.ys.empty()) {
    config.y_values.clear();
    for (const auto& y : o.ys) config.y_values.push_back(parse_rational_flag("--y", y));
  }
  config.identities = o.identities;
  try {
    config.validate();
  } catch (const verify::ConfigError& e) {
    throw UsageError(e.what());
  }

  const auto report = verify::run_suite(config);
  switch (format) {
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& c : report.checks) rows.push_back(verify::to_json(c));
      Json doc;
      doc["command"] = "verify";
      doc["params"] = verify::to_json(config);
      doc["rows"] = std::move(rows);
      doc["summary"] = verify::summary_json(report);
      const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char stamp[32];
      std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      doc["metadata"] = Json{{"generated_at", stamp}};
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "identity,params,status,sides\n";
      for (const auto& c : report.checks) {
        std::vector<std::string> ps;
        for (const auto& p : c.params) ps.push_back(p.name + "=" + p.value.to_string());
        os << c.identity << "," << csv_quote(join(ps, ";")) << "," << (c.pass ? "pass" : "fail") << ","
           << csv_quote(join(c.sides, " | ")) << "\n";
      }
      break;
    case Format::Text:
      os << verify::summary_text(report);
      break;
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_series(const Options& o, Format format, std::ostream& os) {
  if (o.order < 0) throw UsageError("--order must be non-negative");
  const auto order = static_cast<std::size_t>(o.order);
  const std::string& which = o.series_which;
  const auto colon = which.find(':');
  const std::string name = which.substr(0, colon);
  const std::optional<std::string> arg =
      colon == std::string::npos ? std::nullopt : std::optional<std::string>(which.substr(colon + 1));

  const auto int_arg = [&] {
    if (!arg) throw UsageError("generating function " + name + " needs an integer parameter, e.g. " + name + ":1");
    return parse_int_field("series", *arg);
  };

  std::optional<RationalSeries> gf;
  if (name == "lif") {
    gf = lif_series(int_arg(), order);
  } else if (name == "polycauchy-gf") {
    gf = polycauchy_number_gf(int_arg(), order);
  } else if (name == "bernoulli2-gf" && !arg) {
    gf = t_over_log1p_series(order);
  } else if (name == "narumi-gf") {
    // (t/log(1+t))^{-a} = (log(1+t)/t)^a
    gf = pow_int(divide_by_t(log1p_series(order + 1)), int_arg());
  } else {
    throw UsageError("unknown generating function \"" + which + "\"");
  }

  Table t{"series", Json::object(), "i", "coefficient", {}};
  t.params["gf"] = which;
  t.params["order"] = o.order;
  for (std::size_t i = 0; i <= order; ++i) t.rows.push_back({static_cast<long>(i), {(*gf)[i].to_string()}, false});
  if (format == Format::Text) {
    for (const auto& row : t.rows) os << "t^" << row.index << ": " << row.values.front() << "\n";
  } else {
    emit_table(t, format, os);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact poly-Cauchy numbers and polynomials of the second kind", "polycauchy"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "Write results to this file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Tabulate a sequence for n = 0..n-max")->fallthrough();
  gen->add_option("sequence", o.gen_sequence,
                  "polycauchy2-number | polycauchy2-poly | stirling1 | bernoulli2 | bernoulli-order | "
                  "frobenius-euler | narumi")
      ->required();
  gen->add_option("--k", o.k, "Poly-order k (any integer)");
  gen->add_option("--alpha", o.alpha, "Bernoulli order alpha (any integer)");
  gen->add_option("--r", o.r, "Frobenius-Euler order r >= 0");
  gen->add_option("--lambda", o.lambda, "Frobenius-Euler parameter (num/den, != 1)");
  gen->add_option("--a", o.a, "Narumi order a (any integer)");
  gen->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Connection constants of C_n^(k)(x) in a basis")->fallthrough();
  expand->add_option("--n", o.expand_n, "Degree n")->required();
  expand->add_option("--k", o.expand_k, "Poly-order k")->required();
  expand->add_option("--basis", o.basis, "falling | bernoulli:r | frobenius:r:lambda")->required();

  auto* ver = app.add_subcommand("verify", "Run the identity suite over a parameter grid")->fallthrough();
  ver->add_option("--n-max", o.verify_n_max, "Largest n (default 12)");
  ver->add_option("--k-min", o.k_min, "Smallest k (default -3)");
  ver->add_option("--k-max", o.k_max, "Largest k (default 3)");
  ver->add_option("--r-max", o.r_max, "Largest r (default 4)");
  ver->add_option("--lif-order", o.lif_order, "Series order for the Lif derivative check (default 16)");
  ver->add_option("--lambda", o.lambdas, "Frobenius-Euler parameter; repeatable")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ver->add_option("--y", o.ys, "Shift y for the addition formula; repeatable")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ver->add_option("--identity", o.identities, "Identity id to run; repeatable")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* series = app.add_subcommand("series", "Print a generating function's coefficients")->fallthrough();
  series->add_option("which", o.series_which, "lif:k | polycauchy-gf:k | bernoulli2-gf | narumi-gf:a")->required();
  series->add_option("--order", o.order, "Truncation order")->required();

  std::vector<std::string> argv_storage{"polycauchy"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open " << o.output << " for writing\n";
      return kExitUsage;
    }
    os = &file;
  }

  const Format format = parse_format(o.format);
  try {
    if (gen->parsed()) return cmd_gen(o, format, *os);
    if (expand->parsed()) return cmd_expand(o, format, *os);
    if (ver->parsed()) return cmd_verify(o, format, *os);
    if (series->parsed()) return cmd_series(o, format, *os);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polycauchy::cli
