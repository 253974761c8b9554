// equichar: command-line front end over the C API.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "equichar/equichar.h"

namespace {

constexpr int kUsageError = 2;
constexpr std::int64_t kDefaultMaxDim = 512;

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

std::optional<std::int64_t> env_max_dim() {
  const char* v = std::getenv("EQUICHAR_MAX_DIM");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long long x = std::strtoll(v, &end, 10);
  if (*end != '\0' || x < 1) return std::nullopt;
  return x;
}

// Writes the document and returns the exit code.
int emit(equichar_result* res, const std::string& output, bool text) {
  if (!res) {
    std::cerr << "equichar: out of memory\n";
    return 4;
  }
  const int code = static_cast<int>(equichar_result_status(res));
  const std::string kind = equichar_result_error_kind(res);
  const bool has_report = kind.empty() || kind == "CheckFailed";
  if (has_report) {
    const char* doc = equichar_result_document(res, text ? EQUICHAR_FORMAT_TEXT : EQUICHAR_FORMAT_JSON);
    if (output.empty() || output == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out || !(out << doc)) {
        std::cerr << "equichar: cannot write " << output << "\n";
        equichar_result_free(res);
        return kUsageError;
      }
    }
  }
  if (code != 0) std::cerr << "equichar: " << kind << ": " << equichar_result_message(res) << "\n";
  equichar_result_free(res);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois-module structure of de Rham cohomology of curves from ramification data"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(equichar_version()));

  std::string input, output, format = "json";
  std::uint64_t seed = 42;
  std::optional<std::int64_t> max_dim;
  app.add_option("--output", output, "Write the result here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--max-dim", max_dim, "Largest module the matrix oracle accepts")->check(CLI::PositiveNumber);

  auto* cyclic = app.add_subcommand("cyclic", "H^1_dR of a Z/p^n-cover");
  auto* semidirect = app.add_subcommand("semidirect", "H^1_dR of a Z/p x| Z/c-cover");
  auto* superelliptic = app.add_subcommand("superelliptic", "H^1_dR of y^m = prod_{v in V}(x - v)");
  auto* validate = app.add_subcommand("validate", "Run all consistency checks on an input document");
  auto* oracle = app.add_subcommand("oracle", "Brute-force matrix oracle");
  for (auto* sub : {cyclic, semidirect, validate, superelliptic})
    sub->add_option("--input", input, "Input JSON document (default stdin)");

  std::optional<std::int64_t> p, m, n;
  superelliptic->add_option("-p", p, "Odd prime p");
  superelliptic->add_option("-m", m, "Exponent m, prime to p");
  superelliptic->add_option("-n", n, "F_p-dimension of the root set V");

  bool selfcheck = false;
  std::int64_t count = 200, sample_dim = 200;
  oracle->add_flag("--selfcheck", selfcheck, "Compare the formulas with the oracle on random modules");
  oracle->add_option("--count", count, "Random modules per suite")->check(CLI::NonNegativeNumber);
  oracle->add_option("--sample-dim", sample_dim, "Largest random module")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }
  const bool text = format == "text";

  if (oracle->parsed()) {
    if (!selfcheck) {
      std::cerr << "equichar: oracle needs --selfcheck\n";
      return kUsageError;
    }
    const std::int64_t cap = max_dim ? *max_dim : env_max_dim().value_or(kDefaultMaxDim);
    equichar_result* res = nullptr;
    equichar_oracle_selfcheck(seed, count, sample_dim, cap, &res);
    return emit(res, output, text);
  }

  std::string verb;
  std::string doc;
  if (superelliptic->parsed() && (p || m || n)) {
    if (!(p && m && n) || !input.empty()) {
      std::cerr << "equichar: superelliptic takes either -p, -m, -n together or --input\n";
      return kUsageError;
    }
    std::ostringstream os;
    os << "{\"p\": " << *p << ", \"m\": " << *m << ", \"n\": " << *n << "}";
    doc = os.str();
    verb = "superelliptic";
  } else {
    for (auto* sub : {cyclic, semidirect, superelliptic, validate})
      if (sub->parsed()) verb = sub->get_name();
    if (!read_input(input, doc)) {
      std::cerr << "equichar: cannot read " << input << "\n";
      return kUsageError;
    }
  }
  equichar_result* res = nullptr;
  equichar_run(verb.c_str(), doc.c_str(), &res);
  return emit(res, output, text);
}
