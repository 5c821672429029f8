#ifndef OCP_OCP_H
#define OCP_OCP_H

#include <stddef.h>
#include <stdint.h>

#if defined(OCP_BUILDING_LIBRARY)
#define OCP_API __attribute__((visibility("default")))
#else
#define OCP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1.. mirror ocp::ErrorKind. */
typedef enum ocp_status {
  OCP_OK = 0,
  OCP_ERR_PARSE,
  OCP_ERR_RANGE,
  OCP_ERR_DUPLICATE_EDGE_ID,
  OCP_ERR_UNKNOWN_EDGE,
  OCP_ERR_NOT_INCIDENT,
  OCP_ERR_REPEATED_VERTEX,
  OCP_ERR_MIXED_ENDPOINTS,
  OCP_ERR_SAME_ENDPOINTS,
  OCP_ERR_ADJACENT_ENDPOINTS,
  OCP_ERR_BAD_PARAMETERS,
  OCP_ERR_PRECONDITION_FAILED,
  OCP_ERR_INFEASIBLE,
  OCP_ERR_LIMIT_EXCEEDED,
  OCP_ERR_FORBIDDEN_TOO_LARGE,
  OCP_ERR_SEGMENT_BLOCKED,
  OCP_ERR_NOTHING_FOUND,
  OCP_ERR_MINIMALITY_BREACH,
  OCP_ERR_HYPOTHESIS_VIOLATED,
  OCP_ERR_EMPTY_FAMILY,
  OCP_ERR_NOT_EDGE_DISJOINT,
  OCP_ERR_BAD_SEGMENT_FAMILY,
  OCP_ERR_ENDPOINT_MISMATCH,
  OCP_ERR_NOT_A_TERMINAL,
  OCP_ERR_TERMINAL_EXISTS,
  OCP_ERR_NO_TERMINAL_AT_LEVEL,
  OCP_ERR_LEVEL_EXHAUSTED,
  OCP_ERR_INTERNAL,
  OCP_ERR_NULL_ARGUMENT = 100
} ocp_status;

typedef struct ocp_graph ocp_graph;
typedef struct ocp_system ocp_system;
typedef struct ocp_instance ocp_instance;

/* Message of the last failed call on this thread ("" when none). */
OCP_API const char* ocp_last_error(void);
/* Input line of the last parse error, 0 when unknown. */
OCP_API int ocp_last_error_line(void);
OCP_API const char* ocp_status_name(ocp_status status);

/* Strings and arrays handed out by the library. */
OCP_API void ocp_string_free(char* s);
OCP_API void ocp_ints_free(int* values);

/* ---- graphs (`ocg 1`) ---- */
OCP_API ocp_status ocp_graph_parse(const char* text, ocp_graph** out);
OCP_API ocp_status ocp_graph_serialize(const ocp_graph* g, char** out);
OCP_API int ocp_graph_vertex_count(const ocp_graph* g);
OCP_API int ocp_graph_edge_count(const ocp_graph* g);
OCP_API void ocp_graph_free(ocp_graph* g);

/* ---- path systems ---- */
OCP_API ocp_status ocp_system_parse(const ocp_graph* g, const char* text,
                                    ocp_system** out);
OCP_API ocp_status ocp_system_serialize(const ocp_system* s, char** out);
OCP_API size_t ocp_system_size(const ocp_system* s);
OCP_API int ocp_system_source(const ocp_system* s);
OCP_API int ocp_system_sink(const ocp_system* s);
OCP_API void ocp_system_free(ocp_system* s);

/* Sets *ok to 1 when the system is edge-disjoint and order-compatible.
   Otherwise *certificate (if given) receives the certificate line. */
OCP_API ocp_status ocp_verify(const ocp_graph* g, const ocp_system* s, int* ok,
                              char** certificate);
/* 1 when the certificate line is a true statement about the system. */
OCP_API ocp_status ocp_certificate_holds(const ocp_graph* g, const ocp_system* s,
                                         const char* line, int* holds);

/* ---- connectivity ---- */
/* Witnesses are optional outputs. */
OCP_API ocp_status ocp_kappa_e(const ocp_graph* g, int a, int b, int* value,
                               ocp_system** witness);
OCP_API ocp_status ocp_kappa_v(const ocp_graph* g, int a, int b, int* value,
                               ocp_system** witness);
OCP_API ocp_status ocp_separator(const ocp_graph* g, int a, int b,
                                 int** vertices, size_t* count);
/* `aux <x> <y>` lines of the auxiliary graph at threshold theta. */
OCP_API ocp_status ocp_auxiliary_graph(const ocp_graph* g, int theta,
                                       char** text);

/* ---- minimal systems ---- */
/* k <= 0 asks for kappa_e paths. seed may be NULL. */
OCP_API ocp_status ocp_dirac(const ocp_graph* g, int a, int b, int k,
                             const uint64_t* seed, ocp_system** out,
                             int64_t* total_edges, int64_t* flow_cost);

/* ---- backbones ---- */
/* `backbone ... ; floors ...` into *line; survivors optional. */
OCP_API ocp_status ocp_backbone(const ocp_graph* g, const ocp_system* family,
                                int tau, char** line, ocp_system** survivors);
/* Extracts the backbone, takes an internally disjoint family between each
   consecutive pair and weaves up to r paths. line is optional. */
OCP_API ocp_status ocp_weave(const ocp_graph* g, const ocp_system* family,
                             int tau, int r, char** line, ocp_system** out);
OCP_API ocp_status ocp_lift(const ocp_graph* g, const int* walk,
                            size_t walk_length, int theta,
                            const int* forbidden_vertices, size_t vertex_count,
                            const int* forbidden_edges, size_t edge_count, int r,
                            ocp_system** out);

/* ---- composition ---- */
/* hit_cap and max_depth <= 0 select the defaults. report (optional) gets
   `strategy`, per-strategy sizes and the cascade's `level` lines. */
OCP_API ocp_status ocp_compose(const ocp_graph* g, const ocp_system* p,
                               const ocp_system* q, int hit_cap, int max_depth,
                               ocp_system** out, char** report);

/* ---- generators ---- */
typedef enum ocp_gen_kind {
  OCP_GEN_RANDOM = 0,
  OCP_GEN_BACKBONE,
  OCP_GEN_TERMINAL_RICH,
  OCP_GEN_TERMINAL_FREE,
  OCP_GEN_CASCADE,
  OCP_GEN_WEAVE,
  OCP_GEN_LIFT
} ocp_gen_kind;

/* Fields a kind does not use are ignored.
   random:   n, m, multiplicity
   backbone: segments, width, seg_length
   terminal_rich / terminal_free: size
   cascade:  size (width), depth
   weave:    segments, width, seg_length, extra (merges)
   lift:     segments, width, seg_length, extra (noise edges) */
typedef struct ocp_gen_params {
  ocp_gen_kind kind;
  uint64_t seed;
  int n;
  int m;
  int multiplicity;
  int segments;
  int width;
  int seg_length;
  int size;
  int depth;
  int extra;
} ocp_gen_params;

OCP_API ocp_gen_params ocp_gen_defaults(ocp_gen_kind kind);
OCP_API ocp_status ocp_gen_kind_parse(const char* name, ocp_gen_kind* kind);
OCP_API ocp_status ocp_generate(const ocp_gen_params* params, ocp_instance** out);
OCP_API ocp_status ocp_instance_graph(const ocp_instance* inst, ocp_graph** out);
OCP_API size_t ocp_instance_system_count(const ocp_instance* inst);
OCP_API const char* ocp_instance_system_name(const ocp_instance* inst, size_t i);
OCP_API ocp_status ocp_instance_system(const ocp_instance* inst, size_t i,
                                       ocp_system** out);
/* `meta <key> <value>` sidecar text. */
OCP_API ocp_status ocp_instance_meta(const ocp_instance* inst, char** out);
OCP_API void ocp_instance_free(ocp_instance* inst);

/* ---- exhaustive oracle ---- */
typedef struct ocp_oracle_limits {
  int max_vertices;
  int max_edges;
  size_t max_paths;
} ocp_oracle_limits;

typedef struct ocp_oracle_report {
  int kappa_e;
  int kappa_v;
  int max_order_compatible;
  int64_t min_total_edges; /* for kappa_e paths, -1 when a-b disconnected */
  size_t path_count;
} ocp_oracle_report;

OCP_API ocp_oracle_limits ocp_oracle_default_limits(void);
/* limits may be NULL; witness (optional) is a largest order-compatible
   system. */
OCP_API ocp_status ocp_oracle(const ocp_graph* g, int a, int b,
                              const ocp_oracle_limits* limits,
                              ocp_oracle_report* report, ocp_system** witness);

/* ---- acceptance corpus ---- */
/* criterion 0 runs all of them. *table gets one line per criterion. */
OCP_API ocp_status ocp_corpus_run(uint64_t seed, int criterion, char** table,
                                  int* passed, int* total);

#ifdef __cplusplus
}
#endif

#endif /* OCP_OCP_H */
