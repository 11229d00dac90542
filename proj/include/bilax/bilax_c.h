#ifndef BILAX_C_H
#define BILAX_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 10 and up mirror the engine's error kinds. */
enum {
  BILAX_OK = 0,
  BILAX_ERR_ARGUMENT = 1,
  BILAX_ERR_INTERNAL = 2,
  BILAX_ERR_DIMENSION_MISMATCH = 10,
  BILAX_ERR_NOT_IDEMPOTENT = 11,
  BILAX_ERR_RANK_UNSTABLE = 12,
  BILAX_ERR_INVALID_TABLE = 13,
  BILAX_ERR_CONVERGENCE = 14,
  BILAX_ERR_NON_INTEGRAL = 15,
  BILAX_ERR_SINGULAR_PAIRING = 16,
  BILAX_ERR_CONVERSION = 17,
  BILAX_ERR_INVALID_CONFIG = 18,
  BILAX_ERR_NOT_IN_CENTRE = 19
};

enum {
  BILAX_SUITE_LAX = 1,
  BILAX_SUITE_OPLAX = 2,
  BILAX_SUITE_BRAIDED = 4,
  BILAX_SUITE_LEMMAS = 8,
  BILAX_SUITE_ALL = 15
};

enum { BILAX_PRODUCT_SYM = 0, BILAX_PRODUCT_CONV = 1 };

typedef struct bilax_config {
  const char* group;     /* builtin name, ignored when spec_path is set */
  const char* spec_path; /* group-spec JSON file, or NULL */
  double tolerance;      /* > 0 */
  uint64_t seed;
  int cap;               /* pool dimension cap, >= |G| */
  int samples;           /* sampled tuples per diagram family, > 0 */
} bilax_config;

typedef struct bilax_engine bilax_engine;

/* Fills in defaults: group "z2", tolerance 1e-9, seed 0, cap 16, samples 4. */
void bilax_config_init(bilax_config* cfg);

int bilax_engine_create(const bilax_config* cfg, bilax_engine** out);
void bilax_engine_destroy(bilax_engine* engine);

/* Message for the last failing call on this thread; empty if none. */
const char* bilax_last_error(void);

/* JSON results are allocated by the library and released with bilax_string_free. */
int bilax_coherence_json(bilax_engine* engine, unsigned suites, int* all_pass, char** out_json);
int bilax_info_json(bilax_engine* engine, char** out_json);
int bilax_table_json(bilax_engine* engine, int product, char** out_json);
/* Builtin group names as a JSON array. */
int bilax_builtin_groups_json(char** out_json);
void bilax_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
