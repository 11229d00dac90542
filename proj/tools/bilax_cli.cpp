// Command-line front end. Links only the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "bilax/bilax_c.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_for_status(int status) {
  switch (status) {
    case BILAX_ERR_ARGUMENT:
    case BILAX_ERR_INVALID_CONFIG:
    case BILAX_ERR_INVALID_TABLE:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

int report_error(int status) {
  std::cerr << "bilax: " << bilax_last_error() << "\n";
  return exit_for_status(status);
}

bool emit(char* json, const std::string& out_path) {
  bool ok = true;
  if (out_path.empty()) {
    std::fputs(json, stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << json;
    ok = static_cast<bool>(out);
    if (!ok) std::cerr << "bilax: cannot write " << out_path << "\n";
  }
  bilax_string_free(json);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence checker for the two tensor products on the Drinfeld centre of Rep(G)"};
  app.require_subcommand(1);

  std::string group = "z2", spec, out, suite = "all", product = "sym";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int cap = 16;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", group, "builtin group: z2, z3, z4, z2xz2, s3, d4, q8");
    sub->add_option("--spec", spec, "group-spec JSON file (overrides --group)");
    sub->add_option("--tol", tol, "pass tolerance for relative deviations");
    sub->add_option("--seed", seed, "seed for irreps, pool and sampled tuples");
    sub->add_option("--cap", cap, "largest dimension of a pool object");
    sub->add_option("--out", out, "write JSON here instead of stdout");
  };
  CLI::App* coherence = app.add_subcommand("coherence", "run coherence suites and write a report");
  common(coherence);
  coherence->add_option("--suite", suite, "lax, oplax, braided, lemmas or all")
      ->check(CLI::IsMember({"lax", "oplax", "braided", "lemmas", "all"}));
  CLI::App* info = app.add_subcommand("info", "irrep dimensions, D, dim I_s and idempotent ranks on the pool");
  common(info);
  CLI::App* table = app.add_subcommand("table", "product table over the pool");
  common(table);
  table->add_option("--product", product, "sym or conv")->check(CLI::IsMember({"sym", "conv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bilax_config cfg;
  bilax_config_init(&cfg);
  cfg.group = group.c_str();
  cfg.spec_path = spec.empty() ? nullptr : spec.c_str();
  cfg.tolerance = tol;
  cfg.seed = seed;
  cfg.cap = cap;

  bilax_engine* engine = nullptr;
  if (int st = bilax_engine_create(&cfg, &engine); st != BILAX_OK) return report_error(st);

  int exit_code = 0;
  char* json = nullptr;
  if (*coherence) {
    static const std::map<std::string, unsigned> suites{{"lax", BILAX_SUITE_LAX},
                                                        {"oplax", BILAX_SUITE_OPLAX},
                                                        {"braided", BILAX_SUITE_BRAIDED},
                                                        {"lemmas", BILAX_SUITE_LEMMAS},
                                                        {"all", BILAX_SUITE_ALL}};
    int all_pass = 0;
    if (int st = bilax_coherence_json(engine, suites.at(suite), &all_pass, &json); st != BILAX_OK) {
      exit_code = report_error(st);
    } else {
      if (!emit(json, out)) exit_code = kExitUsage;
      if (exit_code == 0 && !all_pass) {
        std::cerr << "bilax: some diagrams do not commute within tolerance\n";
        exit_code = kExitFail;
      }
    }
  } else if (*info) {
    if (int st = bilax_info_json(engine, &json); st != BILAX_OK)
      exit_code = report_error(st);
    else if (!emit(json, out))
      exit_code = kExitUsage;
  } else if (*table) {
    const int which = product == "sym" ? BILAX_PRODUCT_SYM : BILAX_PRODUCT_CONV;
    if (int st = bilax_table_json(engine, which, &json); st != BILAX_OK)
      exit_code = report_error(st);
    else if (!emit(json, out))
      exit_code = kExitUsage;
  }
  bilax_engine_destroy(engine);
  return exit_code;
}
