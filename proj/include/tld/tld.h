#ifndef TLD_TLD_H
#define TLD_TLD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TLD_API __declspec(dllexport)
#else
#define TLD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one of these; on failure a
 * message for the calling thread is available from tld_last_error(). */
typedef enum tld_status {
  TLD_OK = 0,
  TLD_ERR_PARSE = 1,
  TLD_ERR_MALFORMED_EDGE = 2,
  TLD_ERR_OVERLAPPING_PARALLEL_EDGES = 3,
  TLD_ERR_DELTA_OUT_OF_RANGE = 4,
  TLD_ERR_EVENT_BLOWUP = 5,
  TLD_ERR_INVALID_PROFILE = 6,
  TLD_ERR_EMPTY_RANKING = 7,
  TLD_ERR_BROKEN_CHAIN = 8,
  TLD_ERR_NON_CONFLUENT_INPUT = 9,
  TLD_ERR_PRECONDITION_VIOLATED = 10,
  TLD_ERR_NOT_RETROSPECTIVE = 11,
  TLD_ERR_CAP_EXCEEDED = 12,
  TLD_ERR_SCALE_EXCEEDED = 13,
  TLD_ERR_INFEASIBLE = 14,
  TLD_ERR_MALFORMED_TMST_INSTANCE = 15,
  TLD_ERR_INVALID_PARAMS = 16,
  TLD_ERR_INVALID_ARGUMENT = 100,
  TLD_ERR_INTERNAL = 101
} tld_status;

typedef enum tld_rule {
  TLD_RULE_CONFLUENT = 0,
  TLD_RULE_TC_RETRO,
  TLD_RULE_TC_WALKS,
  TLD_RULE_EXACT,
  TLD_RULE_ORACLE_TREE,
  TLD_RULE_ORACLE_PATHS,
  TLD_RULE_ORACLE_WALKS
} tld_rule;

typedef struct tld_graph tld_graph;
typedef struct tld_result tld_result;

typedef struct tld_solve_options {
  tld_rule rule;
  int has_delta;         /* nonzero when delta is set */
  int delta;             /* common horizon for walks rules */
  size_t terminal_cap;   /* exact rule; 0 selects the default */
} tld_solve_options;

typedef struct tld_graph_info {
  size_t voters;
  size_t casting;
  size_t abstaining;
  size_t delegating;
  size_t edges;
  size_t events;
  int lifespan;
  int retrospective;
} tld_graph_info;

TLD_API const char* tld_last_error(void);
TLD_API const char* tld_status_name(tld_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
TLD_API void tld_string_free(char* s);

TLD_API tld_status tld_rule_from_name(const char* name, tld_rule* out);
TLD_API const char* tld_rule_name(tld_rule rule);

/* Accepts an election document (with "rounds") or a graph document (with "edges"). */
TLD_API tld_status tld_graph_from_json(const char* text, tld_graph** out);
TLD_API tld_status tld_graph_to_json(const tld_graph* g, char** out);
TLD_API tld_status tld_graph_info_get(const tld_graph* g, tld_graph_info* out);
TLD_API tld_status tld_graph_snapshot(const tld_graph* g, int t, tld_graph** out);
TLD_API void tld_graph_free(tld_graph* g);

TLD_API tld_status tld_solve(const tld_graph* g, const tld_solve_options* options, tld_result** out);
TLD_API int64_t tld_result_objective(const tld_result* r);
TLD_API size_t tld_result_resolved_count(const tld_result* r);
TLD_API size_t tld_result_unresolved_count(const tld_result* r);
TLD_API tld_status tld_result_to_json(const tld_result* r, char** out);
TLD_API void tld_result_free(tld_result* r);

/* Validates a solution document against g. *valid is set to 1 when no
 * validity clause is violated; *report receives the JSON report. */
TLD_API tld_status tld_check_json(const tld_graph* g, const char* solution, int* valid, char** report);

/* Random election document from a JSON parameter object. */
TLD_API tld_status tld_generate_json(const char* params, char** out);

/* kind is "tmst" or "restless" (input is the instance document) or
 * "steiner" (input is an election or graph document). */
TLD_API tld_status tld_reduce_json(const char* kind, const char* input, char** out);

#ifdef __cplusplus
}
#endif

#endif
