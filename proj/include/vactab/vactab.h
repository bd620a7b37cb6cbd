/*
 * vactab: growth-diagram combinatorics of vacillating tableaux.
 *
 * C surface over the C++ core. All functions return vt_status; on failure
 * vt_last_error() describes the problem. Strings handed out through char**
 * are heap-allocated and released with vt_string_free(); enumerations come
 * back as an opaque vt_list released with vt_list_free().
 *
 * Text conventions: partitions are comma-separated parts ("3,2,1"), the
 * compact digit form ("321", parts <= 9), or "-" for the empty partition.
 * Vacillating tableaux join compact partitions alternately with '>' and
 * '<' ("321>32<42>41<51>5<6"). Set partitions list blocks as
 * "1 2 3 | 4 6 | 5". Fillings are JSON:
 * {"rows": [lengths bottom-to-top], "crosses": [[row, col], ...]}.
 */
#ifndef VACTAB_VACTAB_H
#define VACTAB_VACTAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vt_status {
    VT_OK = 0,
    VT_ERR_PARSE = 1,    /* malformed text or JSON */
    VT_ERR_INVALID = 2,  /* precondition violated: range, shape, endpoints */
    VT_ERR_RULE = 3,     /* input outside a bijection's domain */
    VT_ERR_INTERNAL = 4
} vt_status;

const char* vt_version(void);
const char* vt_last_error(void); /* message of this thread's last failure */
void vt_string_free(char* s);

typedef struct vt_list vt_list;
size_t vt_list_size(const vt_list* l);
const char* vt_list_get(const vt_list* l, size_t i);
void vt_list_free(vt_list* l);

/* ---- partitions ---- */

vt_status vt_partition_normalize(const char* text, char** out);
vt_status vt_partition_unite(const char* a, const char* b, char** out);
vt_status vt_partition_intersect(const char* a, const char* b, char** out);
vt_status vt_partition_conjugate(const char* a, char** out);
vt_status vt_partition_contains(const char* a, const char* b, int* out);

/* ---- counting ---- */

vt_status vt_count_vactab(const char* from, const char* to, int k, uint64_t* out);
vt_status vt_count_syt(const char* shape, uint64_t* out);
vt_status vt_stirling(int k, int l, uint64_t* out);
vt_status vt_bell(int m, uint64_t* out);

/* ---- enumeration (canonical order) ----
 * as_json = 0: items in the text forms above; as_json != 0: items as JSON
 * values (vacillating tableau -> array of part arrays, standard tableau ->
 * array of rows, set partition -> array of blocks). */

vt_status vt_enum_vactab(const char* from, const char* to, int k, int as_json, vt_list** out);
vt_status vt_enum_syt(const char* shape, int as_json, vt_list** out);
vt_status vt_enum_set_partitions(int k, int blocks /* -1 = all */, int as_json, vt_list** out);

/* ---- the identity bijections ----
 * id selects the pipeline: "1.1" sequence <-> "SYT\nvactab", "1.4" the same
 * with --mu, "1.3" set partition <-> vactab (n)->(n), "1.5" set partition
 * <-> vactab (n)->(1^n), "1.2" vactab (n)->(n) of length 2k <-> its two
 * halves ("half\nhalf"), "1.6" filling JSON <-> vactab
 * (n-1,1)->(n-1,1). vt_map runs forward, vt_unmap backward; mu is only
 * read for "1.4" and may be NULL otherwise. */

vt_status vt_map(const char* id, int n, int k, const char* mu, const char* input, int as_json,
                 char** out);
vt_status vt_unmap(const char* id, int n, int k, const char* mu, const char* input, int as_json,
                   char** out);

/* ---- identity verification ----
 * Both sides computed independently; *ok says whether they agree and
 * *detail carries the one-line report ("41 = 41 ok"). mu: see vt_map. */

vt_status vt_verify(const char* id, int n, int k, const char* mu, uint64_t* lhs, uint64_t* rhs,
                    int* ok, char** detail);

/* ---- appendix reproduction ----
 * which is 'A', 'B' or 'C'. Emits the enumerated tableaux in canonical
 * order, one per line, then a "total N" line. The enumeration is checked
 * against the transcribed listing; a disagreement is reported as
 * VT_ERR_INTERNAL. */

vt_status vt_appendix(char which, char** out);

/* ---- growth-diagram harness ----
 * Forward growth, the chain-statistic oracle at every corner, and backward
 * reconstruction on the filling in the JSON. *ok = 1 when everything
 * agrees (and, if the JSON carries a "boundary" string, when the computed
 * boundary matches it). The report's first line states the result. */

vt_status vt_growth_roundtrip(const char* json, int* ok, char** report);
vt_status vt_growth_render(const char* json, char** out);

/* ---- limiting truncated middles ----
 * The (1.1) middle tableau for seq ("3,4,2") at this n, every entry with
 * its first part dropped; entries joined with spaces. Requires
 * n >= max(seq[t] + t - 1). */

vt_status vt_limiting_vactab(int k, const char* seq, int n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* VACTAB_VACTAB_H */
