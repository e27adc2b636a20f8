/* permutoric: toric kernel for the permutohedral blowups of P3 and P1xP1xP1
 * with a Gromov-Witten class calculus.
 *
 * C interface of the shared library. All functions return a ptx_status;
 * output strings are heap-allocated and must be released with ptx_free().
 */
#ifndef PERMUTORIC_H
#define PERMUTORIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PTX_VERSION "1.0.0"

typedef int ptx_status;

enum {
  PTX_OK = 0,
  PTX_CHECK_FAILED = 1,     /* a verification ran and failed */
  PTX_PARSE_ERROR = 2,      /* malformed class spec or table */
  PTX_MODEL_MISMATCH = 3,   /* class model incompatible with the operation */
  PTX_DOMAIN_ERROR = 4,     /* bad cone / fan preconditions */
  PTX_VDIM_ERROR = 5,       /* reduction query with nonzero dimension surplus */
  PTX_INVALID_ARGUMENT = 6,
  PTX_INTERNAL_ERROR = 7
};

const char* ptx_version(void);
const char* ptx_status_name(ptx_status s);
void ptx_free(char* s);

/* ---- fans ---------------------------------------------------------- */

typedef struct ptx_fan ptx_fan;

/* model: "p3" | "cube" | "perm-p3" | "perm-cube" */
ptx_status ptx_fan_build(const char* model, ptx_fan** out, char** err);
void ptx_fan_free(ptx_fan* fan);

int ptx_fan_ray_count(const ptx_fan* fan);
int ptx_fan_wall_count(const ptx_fan* fan);
int ptx_fan_max_cone_count(const ptx_fan* fan);
int ptx_fan_is_smooth(const ptx_fan* fan);
int ptx_fan_is_complete(const ptx_fan* fan);
/* coords receives the ray; label_buf (if non-NULL) its symbolic name. */
ptx_status ptx_fan_ray(const ptx_fan* fan, int index, long long coords[3],
                       char* label_buf, size_t label_buf_len);

/* ---- commands ------------------------------------------------------ */
/* format: "text" or "json"; NULL means "text". Reports are deterministic. */

ptx_status ptx_build_report(const char* model, const char* format, char** report, char** err);

/* check: "iso" | "zeta" | "tau" | "nef" | "involutions".
 * Returns PTX_OK on pass, PTX_CHECK_FAILED on fail; report is set either way. */
ptx_status ptx_verify(const char* check, unsigned seed, int trials, const char* format,
                      char** report, char** err);

/* rule: "cremona-p3" | "cremona-cube" | "tau" | "thm1" | "thm4". */
ptx_status ptx_transform(const char* rule, const char* class_spec, const char* format,
                         char** report, char** err);
/* Image class only, in the class-spec grammar. */
ptx_status ptx_transform_class(const char* rule, const char* class_spec, char** image, char** err);

/* table_text: base-table file contents, or NULL for the built-in table. */
ptx_status ptx_reduce(int genus, int points, const char* class_spec, const char* table_text,
                      const char* format, char** report, char** err);

/* Built-in base table in the table file grammar. */
ptx_status ptx_default_table(char** out);

#ifdef __cplusplus
}
#endif

#endif /* PERMUTORIC_H */
