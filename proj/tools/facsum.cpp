// Command-line front end: sequence triangles, reduced summations, factorial
// transforms, and the numeric/identity verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "facsum/identities.hpp"
#include "facsum/numerics.hpp"
#include "facsum/reduction.hpp"
#include "facsum/sequences.hpp"
#include "facsum/transforms.hpp"

namespace {

using facsum::Rat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal form that round-trips.
std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + value;
  }
  return out;
}

ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  ordered_json obj = ordered_json::object();
  for (const auto& [name, value] : params) obj[name] = value;
  return obj;
}

// ---------------------------------------------------------------------------
// table

facsum::SeqKind parse_table_kind(const std::string& name) {
  if (name == "binomial") return facsum::SeqKind::Binomial;
  if (name == "stirling1") return facsum::SeqKind::Stirling1Unsigned;
  if (name == "stirling2") return facsum::SeqKind::Stirling2;
  if (name == "rstirling1") return facsum::SeqKind::RStirling1;
  if (name == "rstirling2") return facsum::SeqKind::RStirling2;
  throw UsageError("unknown table kind '" + name + "'");
}

int run_table(const std::string& kind_name, unsigned long n_max,
              std::optional<unsigned> r, const std::string& format) {
  const facsum::SeqKind kind = parse_table_kind(kind_name);
  const bool r_kind =
      kind == facsum::SeqKind::RStirling1 || kind == facsum::SeqKind::RStirling2;
  if (r && !r_kind) throw UsageError("--r applies to rstirling kinds only");

  unsigned long cap = 500;
  if (const char* env = std::getenv("FACSUM_MAX_N")) {
    char* end = nullptr;
    cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("FACSUM_MAX_N is not a number");
  }
  if (n_max > cap)
    throw UsageError("n exceeds the row cap of " + std::to_string(cap) +
                     " (override with FACSUM_MAX_N)");

  facsum::SeqTable table(kind, r.value_or(0));
  std::vector<std::vector<std::string>> rows;
  for (unsigned long n = 0; n <= n_max; ++n) {
    std::vector<std::string> row;
    for (const auto& v : table.row(n)) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }

  if (format == "json") {
    ordered_json doc;
    doc["kind"] = kind_name;
    doc["r"] = r.value_or(0);
    doc["rows"] = rows;
    std::cout << doc.dump() << "\n";
  } else {
    const char* sep = format == "csv" ? "," : " ";
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k)
        std::cout << (k ? sep : "") << row[k];
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sum

facsum::SuperRecurrence parse_preset(const std::string& name) {
  if (name == "binomial") return facsum::SuperRecurrence::binomial();
  if (name == "stirling1") return facsum::SuperRecurrence::stirling1();
  if (name == "stirling2") return facsum::SuperRecurrence::stirling2();
  throw UsageError("unknown sum kind '" + name + "'");
}

int run_sum(const std::string& kind_name, unsigned long n,
            std::optional<unsigned long> n0_opt, const std::string& weight,
            const std::string& x_text, bool trace, const std::string& format) {
  const facsum::SuperRecurrence rec = parse_preset(kind_name);
  const unsigned long n0 = n0_opt.value_or(rec.lower_bound);
  if (n < n0) throw UsageError("n must be at least n0");

  std::optional<facsum::SumWeight> sum_weight;
  if (!weight.empty()) {
    if (x_text.empty()) throw UsageError("--weight requires --x");
    if (trace) throw UsageError("--trace applies to unweighted sums only");
    facsum::WeightKind wk;
    if (weight == "power")
      wk = facsum::WeightKind::Power;
    else if (weight == "rising")
      wk = facsum::WeightKind::Rising;
    else
      throw UsageError("weight must be 'power' or 'rising'");
    try {
      sum_weight = facsum::SumWeight{wk, facsum::rat_from_string(x_text)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (!x_text.empty()) {
    throw UsageError("--x requires --weight");
  }

  Rat value;
  facsum::ReductionTrace reduction_trace;
  if (sum_weight) {
    value = sum_weight->kind == facsum::WeightKind::Power
                ? facsum::y_power(rec, n, n0, sum_weight->x)
                : facsum::y_rising(rec, n, n0, sum_weight->x);
  } else {
    std::tie(value, reduction_trace) = facsum::reduce_sum(rec, n, n0);
  }

  auto trace_rows = [&] {
    std::vector<std::vector<std::string>> rows;
    for (const auto& step : reduction_trace.steps) {
      std::vector<std::string> row;
      for (const auto& c : step) row.push_back(facsum::rat_to_string(c));
      rows.push_back(std::move(row));
    }
    return rows;
  };

  if (format == "json") {
    ordered_json doc;
    doc["kind"] = kind_name;
    doc["n"] = n;
    doc["n0"] = n0;
    if (sum_weight) {
      doc["weight"] = weight;
      doc["x"] = x_text;
    }
    doc["value"] = facsum::rat_to_string(value);
    if (trace) doc["trace"] = trace_rows();
    std::cout << doc.dump() << "\n";
  } else if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> params = {
        {"kind", kind_name}, {"n", std::to_string(n)}, {"n0", std::to_string(n0)}};
    if (sum_weight) {
      params.emplace_back("weight", weight);
      params.emplace_back("x", x_text);
    }
    std::cout << "params,value\n"
              << join_params(params) << "," << facsum::rat_to_string(value) << "\n";
  } else {
    if (trace) {
      std::size_t s = 1;
      for (const auto& row : trace_rows()) {
        std::cout << "step " << s++ << ":";
        for (const auto& c : row) std::cout << " " << c;
        std::cout << "\n";
      }
    }
    std::cout << facsum::rat_to_string(value) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// transform

int run_transform(const std::string& op_name, int power, const std::string& coeff_text,
                  const std::string& format) {
  facsum::TransformKind kind;
  if (op_name == "rft")
    kind.op = facsum::TransformOp::RFT;
  else if (op_name == "fft")
    kind.op = facsum::TransformOp::FFT;
  else
    throw UsageError("unknown transform '" + op_name + "'");
  kind.power = power;

  std::vector<Rat> coeffs;
  std::size_t start = 0;
  try {
    while (start <= coeff_text.size()) {
      const std::size_t comma = coeff_text.find(',', start);
      const std::string item = coeff_text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      coeffs.push_back(facsum::rat_from_string(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  facsum::Poly result;
  try {
    result = facsum::apply_transform(kind, facsum::Poly(facsum::Basis::Power, coeffs));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::vector<std::string> out;
  for (const auto& c : result.coeffs()) out.push_back(facsum::rat_to_string(c));
  if (out.empty()) out.push_back("0");

  if (format == "json") {
    ordered_json doc;
    doc["op"] = op_name;
    doc["power"] = kind.power;
    doc["coeffs"] = out;
    std::cout << doc.dump() << "\n";
  } else if (format == "csv") {
    std::string joined;
    for (std::size_t i = 0; i < out.size(); ++i) joined += (i ? " " : "") + out[i];
    std::cout << "params,coeffs\n"
              << "op=" << op_name << ";power=" << kind.power << "," << joined << "\n";
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? "," : "") << out[i];
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct Record {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string exact;
  bool exact_is_number = false;
  std::string numeric;
  bool numeric_is_number = false;
  double abs_error = 0;
  double rel_error = 0;
  bool passed = false;
  std::optional<double> tolerance;  // numeric checks only; identities are exact
  std::optional<std::string> paper_variant;
  std::string note;
};

Record to_record(const facsum::VerifyReport& report) {
  Record rec;
  rec.id = report.label;
  rec.params = report.params;
  if (const Rat* r = std::get_if<Rat>(&report.exact_value)) {
    rec.exact = facsum::rat_to_string(*r);
  } else {
    rec.exact = format_real(std::get<double>(report.exact_value));
    rec.exact_is_number = true;
  }
  rec.numeric = format_real(report.numeric_value);
  rec.numeric_is_number = true;
  rec.abs_error = report.abs_error;
  rec.rel_error = report.rel_error;
  rec.passed = report.passed;
  rec.tolerance = report.tolerance;
  return rec;
}

Record to_record(const facsum::IdentityResult& result) {
  Record rec;
  rec.id = result.identity_id;
  rec.params = result.parameters;
  rec.exact = facsum::rat_to_string(result.lhs);
  rec.numeric = facsum::rat_to_string(result.rhs);
  const double diff = std::abs(facsum::to_double(result.lhs - result.rhs));
  rec.abs_error = diff;
  rec.rel_error = result.lhs == 0 ? diff : std::abs(diff / facsum::to_double(result.lhs));
  rec.passed = result.passed;
  if (result.paper_variant_lhs)
    rec.paper_variant = facsum::rat_to_string(*result.paper_variant_lhs);
  rec.note = result.note;
  return rec;
}

void emit_records(const std::vector<Record>& records, const std::string& format) {
  if (format == "json") {
    for (const auto& rec : records) {
      ordered_json doc;
      doc["id"] = rec.id;
      doc["params"] = params_json(rec.params);
      if (rec.exact_is_number)
        doc["exact"] = ordered_json::parse(rec.exact);
      else
        doc["exact"] = rec.exact;
      if (rec.numeric_is_number)
        doc["numeric"] = ordered_json::parse(rec.numeric);
      else
        doc["numeric"] = rec.numeric;
      doc["abs_error"] = rec.abs_error;
      doc["rel_error"] = rec.rel_error;
      doc["passed"] = rec.passed;
      if (rec.tolerance) doc["tolerance"] = *rec.tolerance;
      if (rec.paper_variant) doc["paper_variant_lhs"] = *rec.paper_variant;
      if (!rec.note.empty()) doc["note"] = rec.note;
      std::cout << doc.dump() << "\n";
    }
  } else if (format == "csv") {
    std::cout << "id,params,exact,numeric,abs_error,rel_error,passed,tolerance,note\n";
    for (const auto& rec : records) {
      std::cout << rec.id << "," << join_params(rec.params) << "," << rec.exact << ","
                << rec.numeric << "," << format_real(rec.abs_error) << ","
                << format_real(rec.rel_error) << "," << (rec.passed ? "true" : "false")
                << "," << (rec.tolerance ? format_real(*rec.tolerance) : "") << ","
                << rec.note << "\n";
    }
  } else {
    for (const auto& rec : records) {
      std::cout << (rec.passed ? "ok   " : "FAIL ") << rec.id;
      for (const auto& [name, value] : rec.params) std::cout << " " << name << "=" << value;
      std::cout << " exact=" << rec.exact << " numeric=" << rec.numeric
                << " rel=" << format_real(rec.rel_error);
      if (rec.paper_variant) std::cout << " printed_variant=" << *rec.paper_variant;
      if (!rec.note.empty()) std::cout << " note=\"" << rec.note << "\"";
      std::cout << "\n";
    }
  }
}

int run_verify(const std::string& suite, std::optional<double> tol,
               std::optional<unsigned long> n_max, std::optional<unsigned long> k_max,
               const std::string& format) {
  if (suite != "integrals" && suite != "identities" && suite != "all")
    throw UsageError("unknown suite '" + suite + "'");
  if (tol && *tol <= 0) throw UsageError("--tol must be positive");

  std::vector<Record> records;
  if (suite == "integrals" || suite == "all") {
    facsum::IntegralSuiteConfig config;
    if (tol) {
      config.tolerance = *tol;
      config.moment_tolerance = *tol;
    }
    if (n_max) {
      config.rising_n_max = *n_max;
      config.eq22_n_max = *n_max;
      config.igamma_n_max = std::min<unsigned long>(*n_max, 10);
      config.rft_degree_max = std::min<unsigned long>(*n_max, 12);
    }
    for (const auto& report : facsum::run_integral_suite(config))
      records.push_back(to_record(report));
  }
  if (suite == "identities" || suite == "all") {
    facsum::SuiteConfig config;
    if (n_max) config.n_values = facsum::index_range(0, *n_max);
    if (k_max) config.k_values = facsum::index_range(0, *k_max);
    for (const auto& result : facsum::run_suite(config))
      records.push_back(to_record(result));
  }

  emit_records(records, format);
  for (const auto& rec : records)
    if (!rec.passed) return kExitVerifyFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact summation reduction for combinatorial sequences, factorial-basis "
               "transforms, and their quadrature-backed verification."};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  std::optional<double> tol;
  app.add_option("--tol", tol, "verification tolerance (relative)");
  bool trace = false;
  app.add_flag("--trace", trace, "emit reduction coefficient vectors");

  auto* table = app.add_subcommand("table", "print rows 0..n of a sequence triangle");
  table->fallthrough();
  std::string table_kind;
  unsigned long table_n = 0;
  std::optional<unsigned> table_r;
  table->add_option("kind", table_kind, "binomial|stirling1|stirling2|rstirling1|rstirling2")
      ->required();
  table->add_option("--n", table_n, "last row to print")->required();
  table->add_option("--r", table_r, "r parameter for the r-variants");

  auto* sum = app.add_subcommand("sum", "reduce sum(k=n0..n) A(n,k), optionally weighted");
  sum->fallthrough();
  std::string sum_kind;
  unsigned long sum_n = 0;
  std::optional<unsigned long> sum_n0;
  std::string sum_weight, sum_x;
  sum->add_option("kind", sum_kind, "binomial|stirling1|stirling2")->required();
  sum->add_option("--n", sum_n, "upper summation bound")->required();
  sum->add_option("--n0", sum_n0, "lower summation bound (default preset bound)");
  sum->add_option("--weight", sum_weight, "power|rising");
  sum->add_option("--x", sum_x, "weight evaluation point, exact p/q");

  auto* transform = app.add_subcommand("transform", "apply a factorial transform");
  transform->fallthrough();
  std::string transform_op, transform_coeffs;
  int transform_power = 1;
  transform->add_option("op", transform_op, "rft|fft")->required();
  transform->add_option("--power", transform_power, "transform power (rft only)");
  transform->add_option("--coeffs", transform_coeffs, "power-basis coefficients, p/q list")
      ->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::string verify_suite;
  std::optional<unsigned long> verify_n_max, verify_k_max;
  verify->add_option("suite", verify_suite, "integrals|identities|all")->required();
  verify->add_option("--n-max", verify_n_max, "cap the grid's n range");
  verify->add_option("--k-max", verify_k_max, "cap the grid's k range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return run_table(table_kind, table_n, table_r, format);
    if (*sum) return run_sum(sum_kind, sum_n, sum_n0, sum_weight, sum_x, trace, format);
    if (*transform) return run_transform(transform_op, transform_power, transform_coeffs, format);
    if (*verify) return run_verify(verify_suite, tol, verify_n_max, verify_k_max, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
