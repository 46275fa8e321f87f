#ifndef IFCWOD_H
#define IFCWOD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes double as process exit codes. */
#define IFCWOD_OK 0
#define IFCWOD_E_USAGE 1
#define IFCWOD_E_PARSE 2
#define IFCWOD_E_PARITY 3
#define IFCWOD_E_INTERNAL 4

/* Message for the last failing call on this thread; empty string if none. */
const char* ifcwod_last_error(void);

/* Frees any char* returned by this library. */
void ifcwod_string_free(char* s);

typedef struct ifcwod_schema ifcwod_schema; /* parsed EXPRESS schema */
typedef struct ifcwod_model ifcwod_model;   /* parsed STEP model */
typedef struct ifcwod_graph ifcwod_graph;   /* RDF graph */
typedef struct ifcwod_store ifcwod_store;   /* indexed triple store */

int ifcwod_schema_load(const char* path, ifcwod_schema** out);
void ifcwod_schema_free(ifcwod_schema* schema);

int ifcwod_model_load(const char* path, ifcwod_model** out);
int ifcwod_model_parse(const char* text, ifcwod_model** out);
void ifcwod_model_free(ifcwod_model* model);

/* Core vocabulary + relationship properties (+ pset properties when psd_dir
 * is non-NULL). ifcowl_ns NULL selects the default namespace. */
int ifcwod_tbox_build(const ifcwod_schema* schema, const char* psd_dir, const char* ifcowl_ns,
                      ifcwod_graph** out);

/* Pset property mapping only. */
int ifcwod_tbox_psd(const char* psd_dir, const char* ifcowl_ns, ifcwod_graph** out);

/* mode: "ifcowl", "ifcwod", or "both". base NULL selects the default. */
int ifcwod_convert(const ifcwod_model* model, const ifcwod_schema* schema,
                   const ifcwod_graph* tbox, const char* mode, const char* base,
                   const char* ifcowl_ns, ifcwod_graph** out);

size_t ifcwod_graph_size(const ifcwod_graph* graph);

/* format: "turtle" or "ntriples". */
int ifcwod_graph_serialize(const ifcwod_graph* graph, const char* format, char** out);
int ifcwod_graph_parse(const char* text, const char* format, ifcwod_graph** out);
void ifcwod_graph_free(ifcwod_graph* graph);

int ifcwod_store_create(ifcwod_store** out);
int ifcwod_store_load(ifcwod_store* store, const ifcwod_graph* graph);
size_t ifcwod_store_size(const ifcwod_store* store);

/* CSV lists of property IRIs; inverse entries are "p -> q". NULL = none.
 * budget 0 selects the default triple budget. */
int ifcwod_store_materialize(ifcwod_store* store, const char* transitive, const char* symmetric,
                             const char* inverse, int subproperty, size_t budget);

int ifcwod_store_graph(const ifcwod_store* store, ifcwod_graph** out);

/* Evaluates a SPARQL-subset query; *json_out gets {"variables", "solutions",
 * "intermediate_rows", "wall_seconds", "warnings"}. */
int ifcwod_store_query(const ifcwod_store* store, const char* query_text, char** json_out);

void ifcwod_store_free(ifcwod_store* store);

/* Space-separated key=value tokens (walls, external, doors, refs, spaces,
 * tall, processes, seed); *spf_out gets the STEP text. */
int ifcwod_generate_synthetic(const char* params, char** spf_out);

/* Runs the paired-query benchmark described by the config file; *json_out
 * always gets the report when one was produced. Returns IFCWOD_E_PARITY when
 * any pair's result multisets differ. */
int ifcwod_bench_run(const char* config_path, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* IFCWOD_H */
