/*
 * C interface to the Gallai coloring engine.
 *
 * Every function that can fail returns a gallai_status; on failure a
 * thread-local message is available from gallai_last_error(). Objects are
 * opaque handles owned by the caller and released with the matching _free.
 * Colors are encoded 0 = red, 1 = green, 2 = blue.
 */
#ifndef GALLAI_GALLAI_H
#define GALLAI_GALLAI_H

#include <stddef.h>
#include <stdint.h>

#if defined(GALLAI_BUILDING_LIBRARY)
#define GALLAI_API __attribute__((visibility("default")))
#else
#define GALLAI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gallai_status {
    GALLAI_OK = 0,
    GALLAI_E_INVALID_ARGUMENT = 1,
    GALLAI_E_NOT_GALLAI = 2,
    GALLAI_E_UNSUPPORTED_SIZE = 3,
    GALLAI_E_PARSE = 4,
    GALLAI_E_BUFFER_TOO_SMALL = 5,
    GALLAI_E_INTERNAL = 6
} gallai_status;

typedef enum gallai_kind {
    GALLAI_MONOCHROMATIC = 0,
    GALLAI_TWO_COLOR_VERTEX_SPECIAL = 1,
    GALLAI_TWO_COLOR_EDGE_SPECIAL = 2,
    GALLAI_THREE_COLOR_VERTEX_SPECIAL = 3,
    GALLAI_THREE_COLOR_EDGE_SPECIAL = 4,
    GALLAI_NON_SPECIAL = 5
} gallai_kind;

GALLAI_API const char* gallai_last_error(void);
GALLAI_API const char* gallai_status_name(gallai_status status);
GALLAI_API const char* gallai_kind_name(int kind);

/* ---- colorings ---------------------------------------------------------- */

typedef struct gallai_coloring gallai_coloring;

/* Text format: "<n>\n<n(n-1)/2 chars over r,g,b>", optional final LF.
 * On GALLAI_E_PARSE, *error_offset (if non-null) receives the byte offset. */
GALLAI_API gallai_status gallai_coloring_parse(const char* text, size_t length, gallai_coloring** out,
                                               size_t* error_offset);
/* shape colors: base, accent, second (see make_special in coloring.hpp). */
GALLAI_API gallai_status gallai_coloring_make_special(int n, int kind, int base, int accent, int second,
                                                      gallai_coloring** out);
GALLAI_API gallai_status gallai_coloring_clone(const gallai_coloring* phi, gallai_coloring** out);
GALLAI_API void gallai_coloring_free(gallai_coloring* phi);

GALLAI_API int gallai_coloring_vertex_count(const gallai_coloring* phi);
/* Writes the text form plus a NUL. *needed receives the required size
 * including the NUL, also when the buffer is too small. */
GALLAI_API gallai_status gallai_coloring_format(const gallai_coloring* phi, char* buffer, size_t capacity,
                                                size_t* needed);
GALLAI_API gallai_status gallai_coloring_is_gallai(const gallai_coloring* phi, int* out);
/* Bit k set when color k appears. */
GALLAI_API gallai_status gallai_coloring_colors_used(const gallai_coloring* phi, unsigned* out);
GALLAI_API gallai_status gallai_coloring_restrict(const gallai_coloring* phi, int vertex, gallai_coloring** out);
/* n <= 8 */
GALLAI_API gallai_status gallai_coloring_canonical_code(const gallai_coloring* phi, uint64_t* out);

typedef struct gallai_class_info {
    int kind;             /* gallai_kind */
    int colors_used;      /* number of distinct colors */
    int witness_vertex;   /* -1 when absent */
    int witness_edges;    /* 0, 1 or 2 */
    int edge_lo[2];
    int edge_hi[2];
} gallai_class_info;

GALLAI_API gallai_status gallai_coloring_classify(const gallai_coloring* phi, gallai_class_info* out);

/* ---- extensions --------------------------------------------------------- */

typedef struct gallai_extension_count {
    uint64_t total;
    uint64_t all_three_colors;
} gallai_extension_count;

GALLAI_API gallai_status gallai_count_extensions(const gallai_coloring* phi, gallai_extension_count* out);

/* star: NUL-terminated r/g/b string, colors of the edges from the new vertex
 * to vertices 0..n-1. Called in lexicographic order. */
typedef void (*gallai_star_fn)(const char* star, void* user);
GALLAI_API gallai_status gallai_list_extensions(const gallai_coloring* phi, gallai_star_fn fn, void* user);

/* ---- exhaustive counts -------------------------------------------------- */

typedef struct gallai_counts {
    int n;
    uint64_t c1, c2, c3, c;
    double elapsed_ms;
    int workers;
} gallai_counts;

typedef void (*gallai_progress_fn)(uint64_t done, uint64_t total, void* user);

/* 2 <= n <= 8; progress may be null. */
GALLAI_API gallai_status gallai_count(int n, int threads, gallai_progress_fn progress, void* user,
                                      gallai_counts* out);
/* 3 <= n <= 7, via the sum of extension counts over K_{n-1}. */
GALLAI_API gallai_status gallai_count_by_extension(int n, gallai_counts* out);

/* ---- isomorphism catalogs ----------------------------------------------- */

typedef struct gallai_class_filter {
    int colors_used;          /* 0 = any, else 1..3 */
    int special;              /* -1 = any, 0 = non-special, 1 = special */
    int has_mono_vertex;      /* -1 = any, 0 / 1 */
} gallai_class_filter;

typedef struct gallai_catalog gallai_catalog;

/* 2 <= n <= 6; filter may be null. */
GALLAI_API gallai_status gallai_catalog_build(int n, const gallai_class_filter* filter, gallai_catalog** out);
GALLAI_API size_t gallai_catalog_size(const gallai_catalog* catalog);
/* Borrowed pointer, valid until the catalog is freed. */
GALLAI_API const gallai_coloring* gallai_catalog_coloring(const gallai_catalog* catalog, size_t index);
GALLAI_API gallai_status gallai_catalog_entry(const gallai_catalog* catalog, size_t index, uint64_t* code,
                                              uint64_t* orbit_size, gallai_class_info* info);
GALLAI_API void gallai_catalog_free(gallai_catalog* catalog);

/* ---- bounds --------------------------------------------------------------- */

typedef enum gallai_bound_field {
    GALLAI_BOUND_EXACT_C = 0,   /* "" when unknown */
    GALLAI_BOUND_LOWER = 1,
    GALLAI_BOUND_UPPER = 2,
    GALLAI_BOUND_F = 3,
    GALLAI_BOUND_K = 4,         /* "p/q" or integer */
    GALLAI_BOUND_RATIO_UPPER_OVER_C = 5,
    GALLAI_BOUND_RATIO_C_OVER_LOWER = 6
} gallai_bound_field;

typedef struct gallai_bound_table gallai_bound_table;

/* Rows 2..max_n. exact[i].n and exact[i].c supply known c(n). */
GALLAI_API gallai_status gallai_bound_table_build(int max_n, const gallai_counts* exact, size_t exact_count,
                                                  gallai_bound_table** out);
GALLAI_API size_t gallai_bound_table_rows(const gallai_bound_table* table);
GALLAI_API int gallai_bound_table_n(const gallai_bound_table* table, size_t row);
/* Decimal strings owned by the table. */
GALLAI_API const char* gallai_bound_table_field(const gallai_bound_table* table, size_t row, int field);
GALLAI_API void gallai_bound_table_free(gallai_bound_table* table);

/* ---- verification --------------------------------------------------------- */

typedef struct gallai_counts_row {
    int n;
    uint64_t c1, c2, c3, c;
} gallai_counts_row;

/* Embedded reference counts for n = 2..8. */
GALLAI_API size_t gallai_reference_counts(const gallai_counts_row** rows);

typedef struct gallai_bounds_row {
    int n;
    uint64_t c, lower, upper;
    const char* ratio_upper_over_c;
    const char* ratio_c_over_lower;
} gallai_bounds_row;

/* Embedded reference bound comparison for n = 2..8. */
GALLAI_API size_t gallai_reference_bounds(const gallai_bounds_row** rows);

typedef void (*gallai_check_fn)(int criterion, const char* name, int passed, const char* detail, void* user);

/* Runs the verification suite. reference may be null to use the embedded
 * counts. *all_passed receives 1 iff every check passed. */
GALLAI_API gallai_status gallai_verify(int deep, int threads, const gallai_counts_row* reference,
                                       size_t reference_count, gallai_check_fn fn, void* user,
                                       int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* GALLAI_GALLAI_H */
