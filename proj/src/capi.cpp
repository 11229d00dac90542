#include "bilax/bilax_c.h"

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <string>

#include "bilax/coherence.hpp"

struct bilax_engine {
  std::shared_ptr<const bilax::RepCategory> cat;
  std::shared_ptr<const bilax::Centre> centre;
  std::unique_ptr<bilax::CoherenceChecker> checker;
};

namespace {

thread_local std::string last_error;

int fail(int code, std::string message) {
  last_error = std::move(message);
  return code;
}

// Runs body, translating exceptions into status codes.
template <class F>
int guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BILAX_OK;
  } catch (const bilax::Error& e) {
    return fail(static_cast<int>(e.code()), std::string(bilax::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(BILAX_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Degree dimensions summed over each conjugacy class. They are ranks, so they
// must come out integral.
nlohmann::ordered_json class_grading(const bilax::Centre& z, const bilax::CentreObject& c) {
  const auto& g = z.category().group();
  const auto per_element = z.degree_dimensions(c);
  auto out = nlohmann::ordered_json::array();
  for (const auto& cls : g.classes()) {
    double sum = 0;
    for (int e : cls) sum += per_element[e];
    const double rounded = std::round(sum);
    if (std::abs(sum - rounded) > 1e-6)
      throw bilax::Error(bilax::ErrorCode::NonIntegral, "class fibre dimension " + std::to_string(sum));
    out.push_back(static_cast<long long>(rounded));
  }
  return out;
}

bool within_ambient(const bilax::CoherenceChecker& ch, const bilax::PoolObject& a, const bilax::PoolObject& b) {
  return a.object.dim() * b.object.dim() <= ch.config().ambient_cap;
}

}  // namespace

extern "C" {

void bilax_config_init(bilax_config* cfg) {
  if (!cfg) return;
  cfg->group = "z2";
  cfg->spec_path = nullptr;
  cfg->tolerance = 1e-9;
  cfg->seed = 0;
  cfg->cap = 16;
  cfg->samples = 4;
}

int bilax_engine_create(const bilax_config* cfg, bilax_engine** out) {
  if (!cfg || !out) return fail(BILAX_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    using bilax::Error;
    using bilax::ErrorCode;
    if (!(cfg->tolerance > 0) || !std::isfinite(cfg->tolerance))
      throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
    if (cfg->samples <= 0) throw Error(ErrorCode::InvalidConfig, "samples must be positive");
    bilax::FiniteGroup group = cfg->spec_path ? bilax::FiniteGroup::from_json_file(cfg->spec_path)
                                              : bilax::FiniteGroup::builtin(cfg->group ? cfg->group : "");
    if (cfg->cap < group.order())
      throw Error(ErrorCode::InvalidConfig, "cap " + std::to_string(cfg->cap) + " is below the group order " +
                                                std::to_string(group.order()));
    bilax::Tolerance tol;
    auto engine = std::make_unique<bilax_engine>();
    engine->cat = std::make_shared<bilax::RepCategory>(std::move(group), cfg->seed, tol);
    engine->centre = std::make_shared<bilax::Centre>(engine->cat);
    bilax::CheckConfig check;
    check.pool.cap = cfg->cap;
    check.pool.seed = cfg->seed;
    check.samples = cfg->samples;
    check.ambient_cap = static_cast<bilax::Index>(cfg->cap) * cfg->cap;
    check.tolerance = cfg->tolerance;
    engine->checker = std::make_unique<bilax::CoherenceChecker>(engine->centre, check);
    *out = engine.release();
  });
}

void bilax_engine_destroy(bilax_engine* engine) { delete engine; }

const char* bilax_last_error(void) { return last_error.c_str(); }

int bilax_coherence_json(bilax_engine* engine, unsigned suites, int* all_pass, char** out_json) {
  if (!engine || !out_json) return fail(BILAX_ERR_ARGUMENT, "null argument");
  if (suites == 0 || (suites & ~static_cast<unsigned>(BILAX_SUITE_ALL)))
    return fail(BILAX_ERR_INVALID_CONFIG, "unknown suite selection");
  return guarded([&] {
    const auto report = engine->checker->run(suites, engine->cat->group().name());
    if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
    *out_json = copy_out(report.to_json());
  });
}

int bilax_info_json(bilax_engine* engine, char** out_json) {
  if (!engine || !out_json) return fail(BILAX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& cat = *engine->cat;
    const auto& ch = *engine->checker;
    nlohmann::ordered_json j;
    j["group"] = cat.group().name();
    j["order"] = cat.group().order();
    auto dims = nlohmann::ordered_json::array();
    for (int i = 0; i < cat.num_simples(); ++i) dims.push_back(cat.dim(i));
    j["irrep_dims"] = dims;
    j["global_dimension"] = cat.global_dim();
    j["sym_unit_dim"] = engine->centre->sym_unit().dim();
    auto pool = nlohmann::ordered_json::array();
    for (const auto& p : ch.pool()) pool.push_back({{"name", p.name}, {"dim", p.object.dim()}});
    j["pool"] = pool;
    auto ranks = nlohmann::ordered_json::array();
    for (const auto& a : ch.pool())
      for (const auto& b : ch.pool()) {
        if (!within_ambient(ch, a, b)) continue;
        const auto& prod = ch.sym().product(a.object, b.object);
        ranks.push_back({{"left", a.name}, {"right", b.name}, {"rank", prod.object.dim()}});
      }
    j["idempotent_ranks"] = ranks;
    *out_json = copy_out(j.dump(2) + "\n");
  });
}

int bilax_table_json(bilax_engine* engine, int product, char** out_json) {
  if (!engine || !out_json) return fail(BILAX_ERR_ARGUMENT, "null argument");
  if (product != BILAX_PRODUCT_SYM && product != BILAX_PRODUCT_CONV)
    return fail(BILAX_ERR_INVALID_CONFIG, "product must be sym or conv");
  return guarded([&] {
    const auto& z = *engine->centre;
    const auto& ch = *engine->checker;
    const bilax::Monoidal& m = product == BILAX_PRODUCT_SYM ? ch.sym() : ch.conv();
    nlohmann::ordered_json j;
    j["group"] = z.category().group().name();
    j["product"] = product == BILAX_PRODUCT_SYM ? "sym" : "conv";
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cls : z.category().group().classes()) classes.push_back(cls);
    j["classes"] = classes;
    auto objects = nlohmann::ordered_json::array();
    for (const auto& p : ch.pool())
      objects.push_back({{"name", p.name}, {"dim", p.object.dim()}, {"grading", class_grading(z, p.object)}});
    j["objects"] = objects;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& a : ch.pool())
      for (const auto& b : ch.pool()) {
        if (!within_ambient(ch, a, b)) continue;
        const auto& prod = m.product(a.object, b.object);
        entries.push_back({{"left", a.name},
                           {"right", b.name},
                           {"dim", prod.object.dim()},
                           {"grading", class_grading(z, prod.object)}});
      }
    j["entries"] = entries;
    *out_json = copy_out(j.dump(2) + "\n");
  });
}

int bilax_builtin_groups_json(char** out_json) {
  if (!out_json) return fail(BILAX_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_out(nlohmann::json(bilax::FiniteGroup::builtin_names()).dump()); });
}

void bilax_string_free(char* s) { std::free(s); }

}  // extern "C"
