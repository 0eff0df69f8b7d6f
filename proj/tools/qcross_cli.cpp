#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "qcross/qcross.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

void check(qcross_status s) {
  if (s != QCROSS_OK) throw CliError{kExitUsage, std::string(qcross_status_name(s)) + ": " + qcross_last_error()};
}

struct PolyDeleter {
  void operator()(qcross_poly* p) const { qcross_poly_free(p); }
};
using Poly = std::unique_ptr<qcross_poly, PolyDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qcross_string_free(s); }
};

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owner(s);
  return s == nullptr ? std::string() : std::string(s);
}

std::string poly_string(const qcross_poly* p) {
  char* s = nullptr;
  check(qcross_poly_to_string(p, &s));
  return take(s);
}

nlohmann::ordered_json poly_json(const qcross_poly* p) {
  char* s = nullptr;
  check(qcross_poly_to_json(p, &s));
  return nlohmann::ordered_json::parse(take(s));
}

// "@file" reads a file, "-" reads stdin, anything else is the text itself.
std::string read_input(const std::string& arg) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw CliError{kExitUsage, "cannot read " + arg.substr(1)};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot write " + path};
  out << text;
}

void emit_poly(const qcross_poly* p, const std::string& format, nlohmann::ordered_json meta) {
  if (format == "json") {
    meta["value"] = poly_string(p);
    meta["poly"] = poly_json(p);
    std::cout << meta.dump(2) << "\n";
  } else {
    std::cout << poly_string(p) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moments of q-Hermite, q-Charlier and q-Laguerre polynomials, computed and cross-checked exactly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qcross_version()));

  const unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string family, method, suite, format, input, mode = "penaud", kind, report_path, output;
  int n = 0, k = -1, order = 0, max_n = 0, from = 0;
  unsigned jobs = default_jobs;
  bool unsafe = false, timings = false, symbolic = false;

  std::map<CLI::App*, std::string> formats;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    std::string& slot = formats[sub] = choices.front();
    sub->add_option("--format", slot, "Output format")->check(CLI::IsMember(choices))->capture_default_str();
  };

  auto* moments = app.add_subcommand("moments", "Moment polynomial of a family");
  moments->add_option("--family", family, "hermite, charlier, charlier*, laguerre")->required();
  moments->add_option("--n", n, "Moment index (Hermite: moment 2n)")->required();
  method = "formula";
  moments->add_option("--method", method, "brute, paths or formula")->capture_default_str();
  moments->add_option("--jobs", jobs, "Worker threads for brute force")->check(CLI::PositiveNumber);
  moments->add_flag("--unsafe-n", unsafe, "Lift the size guards");
  add_format(moments, {"text", "json"});

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("--family", family,
                      "hermite|touchard, charlier, charlier*, laguerre, qstirling, trinomial, ballot, prefix, schroeder")
      ->required();
  formula->add_option("--n", n, "n")->required();
  formula->add_option("--k", k, "k (per-k forms)");
  formula->add_flag("--unsafe-n", unsafe, "Lift the size guard");
  add_format(formula, {"text", "json"});

  auto* expand = app.add_subcommand("expand", "Expand the K continued fraction of a family in t");
  expand->add_option("--family", family, "hermite, charlier, charlier*, laguerre")->required();
  expand->add_option("--order", order, "Truncation order in t")->required();
  std::string expand_method = "cf";
  expand->add_option("--method", expand_method, "cf, closed, hypergeometric, functional")->capture_default_str();
  expand->add_flag("--symbolic", symbolic, "Keep the free parameter (c or b) symbolic");
  expand->add_flag("--unsafe-n", unsafe, "Lift the order guard");
  add_format(expand, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", suite, "theorems, bijections, decomposition, series, inverse, orthogonality, appendixC, all")
      ->required();
  verify->add_option("--max-n", max_n, "Largest size per check (each check keeps its own cap)")->required();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_path, "Write the JSON report to this file");
  verify->add_flag("--timings", timings, "Include timings (reports then differ between runs)");
  add_format(verify, {"text", "json"});

  auto* decompose = app.add_subcommand("decompose", "Decompose a path, object or core word");
  decompose->add_option("--input", input, "Text, @file, or - for stdin")->required();
  decompose->add_option("--mode", mode, "penaud, histoire, object, theta")
      ->check(CLI::IsMember({"penaud", "histoire", "object", "theta"}))
      ->capture_default_str();
  decompose->add_option("--family", family, "Family (specialises penaud; required for histoire/object)");
  add_format(decompose, {"json", "text"});

  auto* table = app.add_subcommand("table", "Emit a table of closed-form values");
  table->add_option("--kind", kind, "touchard, charlier, charlier*, laguerre, qstirling, ballot, prefix")->required();
  table->add_option("--max-n", max_n, "Last n")->required();
  table->add_option("--from", from, "First n")->capture_default_str();
  table->add_option("--output", output, "Write to this file instead of stdout");
  table->add_flag("--unsafe-n", unsafe, "Lift the size guard");
  add_format(table, {"csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, f] : formats)
    if (sub->parsed()) format = f;

  try {
    if (moments->parsed()) {
      qcross_poly* raw = nullptr;
      check(qcross_moments(family.c_str(), n, method.c_str(), jobs, unsafe, &raw));
      Poly p(raw);
      emit_poly(p.get(), format, {{"family", family}, {"n", n}, {"method", method}});
    } else if (formula->parsed()) {
      qcross_poly* raw = nullptr;
      check(qcross_formula(family.c_str(), n, k, unsafe, &raw));
      Poly p(raw);
      nlohmann::ordered_json meta{{"formula", family}, {"n", n}};
      if (k >= 0) meta["k"] = k;
      emit_poly(p.get(), format, meta);
    } else if (expand->parsed()) {
      qcross_poly* raw = nullptr;
      check(qcross_expand(family.c_str(), order, expand_method.c_str(), symbolic, unsafe, &raw));
      Poly p(raw);
      emit_poly(p.get(), format,
                {{"family", family}, {"order", order}, {"method", expand_method}, {"symbolic", symbolic}});
    } else if (verify->parsed()) {
      int passed = 0;
      char* text = nullptr;
      char* json = nullptr;
      check(qcross_verify(suite.c_str(), max_n, jobs, timings, &passed, &text, &json));
      const std::string report_text = take(text), report_json = take(json);
      std::cout << (format == "json" ? report_json : report_text);
      if (!report_path.empty()) write_file(report_path, report_json);
      return passed ? kExitOk : kExitFailure;
    } else if (decompose->parsed()) {
      std::string text = read_input(input);
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      char* json = nullptr;
      if (mode == "penaud") {
        check(qcross_decompose(text.c_str(), family.empty() ? nullptr : family.c_str(), &json));
      } else if (mode == "theta") {
        check(qcross_theta(text.c_str(), &json));
      } else {
        if (family.empty()) throw CliError{kExitUsage, "--mode " + mode + " needs --family"};
        check(mode == "histoire" ? qcross_histoire(family.c_str(), text.c_str(), &json)
                                 : qcross_object(family.c_str(), text.c_str(), &json));
      }
      const auto j = nlohmann::ordered_json::parse(take(json));
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else if (mode == "penaud") {
        std::cout << "prefix: " << j["prefix"]["compact"].get<std::string>() << "\n"
                  << "core: " << j["core"]["compact"].get<std::string>() << "\n"
                  << "k: " << j["k"].get<int>() << "\n";
      } else if (mode == "theta") {
        std::cout << j["image"]["word"].get<std::string>() << "\n";
      } else if (mode == "histoire") {
        std::cout << j["histoire"]["compact"].get<std::string>() << "\n";
      } else {
        std::cout << j["object"].get<std::string>() << "\n";
      }
    } else if (table->parsed()) {
      char* out = nullptr;
      check(qcross_table(kind.c_str(), from, max_n, format.c_str(), unsafe, &out));
      const std::string text = take(out);
      if (output.empty())
        std::cout << text;
      else
        write_file(output, text);
    }
  } catch (const CliError& e) {
    std::cerr << "qcross: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "qcross: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
