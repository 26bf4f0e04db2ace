// qmod: components and moduli spaces of representations of quadratic
// monomial algebras.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmod/catalog.hpp"
#include "qmod/error.hpp"
#include "qmod/moduli.hpp"
#include "qmod/report.hpp"
#include "qmod/strings.hpp"

using namespace qmod;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kUnsupported = 3, kOracleScale = 4, kFailure = 5 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Malformed:
    case ErrorCode::UnknownVertex:
    case ErrorCode::UnknownArrow:
    case ErrorCode::NonComposable:
    case ErrorCode::DuplicateId:
      return kParse;
    case ErrorCode::CyclicQuiver:
    case ErrorCode::NotGentle:
    case ErrorCode::NotString:
    case ErrorCode::UnsupportedClass:
      return kUnsupported;
    case ErrorCode::OracleScaleExceeded:
      return kOracleScale;
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownCatalogEntry:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NotCanonicalForm:
    case ErrorCode::NotSubmodule:
      return kUsage;
    default:
      return kFailure;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path to an algebra document, or the name of a catalog entry.
AlgebraPtr load_algebra(const std::string& source) {
  if (std::filesystem::is_regular_file(source))
    return std::make_shared<const Algebra>(parse_algebra(read_file(source)));
  return catalog_algebra(source);
}

template <class V>
V parse_vector(const Algebra& alg, const std::string& text, const char* what) {
  std::vector<int> values = parse_int_list(text);
  if (values.size() != alg.vertex_count())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs " + std::to_string(alg.vertex_count()) +
                                                " entries, got " + std::to_string(values.size()));
  return V(std::move(values));
}

DimVector parse_dim(const Algebra& alg, const std::string& text) {
  DimVector d = parse_vector<DimVector>(alg, text, "dimension vector");
  for (int v : d.values())
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "dimension vector entries must be non-negative");
  return d;
}

std::string set_text(const std::set<DimVector>& s) {
  std::string out;
  for (const DimVector& d : s) out += (out.empty() ? "" : " ") + to_string(d);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Components and moduli spaces of representations of quadratic monomial algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qmod 1.0.0");

  std::string source, dim_text, theta_text, format = "text";
  std::uint64_t seed = 0;
  int trials = 5, threads = 1;
  std::uint32_t prime = kDefaultPrime, oracle_prime = 5;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Classify an algebra and print certificates");
  validate->add_option("file", source, "Algebra document or catalog name")->required();
  add_format(validate);

  auto* components = app.add_subcommand("components", "List irreducible components of mod(A, d)");
  components->add_option("file", source, "Algebra document or catalog name")->required();
  components->add_option("-d,--dim", dim_text, "Dimension vector, comma separated")->required();
  add_format(components);

  auto* moduli = app.add_subcommand("moduli", "Moduli spaces of theta-semistable components");
  moduli->add_option("file", source, "Algebra document or catalog name")->required();
  moduli->add_option("-d,--dim", dim_text, "Dimension vector, comma separated")->required();
  moduli->add_option("-t,--theta", theta_text, "Weight, comma separated")->required();
  moduli->add_option("--seed", seed, "Random seed")->capture_default_str();
  moduli->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str()->check(CLI::PositiveNumber);
  moduli->add_option("--prime", prime, "Sampling prime")->capture_default_str();
  moduli->add_option("--oracle-prime", oracle_prime, "Prime for exhaustive checks")
      ->capture_default_str()
      ->check(CLI::IsMember({2, 3, 5}));
  moduli->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(moduli);

  std::string action, module_file, walk_text;
  std::uint32_t band = 0;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive checks on one explicit module");
  oracle->add_option("file", source, "Algebra document or catalog name")->required();
  oracle->add_option("action", action, "submodules, semistable, stable or gr")
      ->required()
      ->check(CLI::IsMember({"submodules", "semistable", "stable", "gr"}));
  oracle->add_option("--module", module_file, "Module document");
  oracle->add_option("--walk", walk_text, "String (or band with --band) such as \"a b^-1\"");
  oracle->add_option("--band", band, "Band parameter");
  oracle->add_option("-t,--theta", theta_text, "Weight, comma separated");
  oracle->add_option("--oracle-prime", oracle_prime, "Field for --walk modules")
      ->capture_default_str()
      ->check(CLI::IsMember({2, 3, 5}));

  std::string catalog_action, catalog_name;
  auto* catalog = app.add_subcommand("catalog", "Bundled algebras");
  catalog->add_option("action", catalog_action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  catalog->add_option("name", catalog_name, "Entry to show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) {
      if (catalog_action == "list") {
        for (const std::string& n : catalog_names()) std::cout << n << "\n";
      } else {
        if (catalog_name.empty()) throw Error(ErrorCode::InvalidArgument, "catalog show needs a name");
        std::cout << catalog_document(catalog_name) << "\n";
      }
      return kOk;
    }
    AlgebraPtr alg = load_algebra(source);
    if (validate->parsed()) {
      std::cout << (format == "json" ? validate_json(*alg) : validate_text(*alg));
    } else if (components->parsed()) {
      const DimVector d = parse_dim(*alg, dim_text);
      const auto comps = enumerate_components(alg, d);
      std::cout << (format == "json" ? components_json(*alg, d, comps) : components_text(*alg, d, comps));
    } else if (moduli->parsed()) {
      if (!is_prime(prime)) throw Error(ErrorCode::InvalidArgument, "--prime must be prime");
      const DimVector d = parse_dim(*alg, dim_text);
      const Weight theta = parse_vector<Weight>(*alg, theta_text, "weight");
      StabilityOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.prime = prime;
      opt.oracle_prime = oracle_prime;
      const ModuliReport report = moduli_shape(alg, d, theta, opt, threads);
      std::cout << (format == "json" ? report_json(report) : report_text(report));
    } else if (oracle->parsed()) {
      if (module_file.empty() == walk_text.empty())
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --module and --walk");
      const Module m = !module_file.empty() ? parse_module(alg, read_file(module_file))
                       : band                ? band_module(alg, Field(oracle_prime), parse_walk(*alg, walk_text), band)
                                             : string_module(alg, Field(oracle_prime), parse_walk(*alg, walk_text));
      require_oracle_scale(m);
      if (action == "submodules") {
        std::cout << set_text(submodule_dimension_vectors(m)) << "\n";
        return kOk;
      }
      if (theta_text.empty()) throw Error(ErrorCode::InvalidArgument, "--theta is required for " + action);
      const Weight theta = parse_vector<Weight>(*alg, theta_text, "weight");
      if (action == "semistable") {
        std::cout << "semistable: " << (is_semistable(m, theta) ? "yes" : "no") << "\n";
      } else if (action == "stable") {
        std::cout << "stable: " << (is_stable(m, theta) ? "yes" : "no") << "\n";
      } else {
        for (const PolystableFactor& f : gr_theta(m, theta))
          std::cout << f.multiplicity << " x " << to_string(f.module.dim()) << " " << module_json(f.module) << "\n";
      }
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "qmod: " << e.what() << "\n";
    return exit_code(e.code());
  }
}
