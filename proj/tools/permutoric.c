/* permutoric command-line driver. Links only the C API of libpermutoric.
 *
 * Exit codes: 0 = ok / all checks passed, 1 = a check failed (or the
 * reduction was refused), 2 = usage, parse or model errors.
 */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "permutoric.h"

static const char* usage_text =
    "usage:\n"
    "  permutoric build <p3|cube|perm-p3|perm-cube> [--format text|json]\n"
    "  permutoric verify <iso|zeta|tau|nef|involutions> [--seed N] [--trials N]\n"
    "                    [--format text|json]\n"
    "  permutoric transform <cremona-p3|cremona-cube|tau|thm1|thm4> \"<class>\"\n"
    "                    [--format text|json]\n"
    "  permutoric reduce --genus G --points N \"<class>\" [--table PATH]\n"
    "                    [--format text|json]\n"
    "\n"
    "class grammar:  P3(k=6): d=3; a=1,1,1,1,1,1\n"
    "                CUBE(k=4): d=1,1,1; a=1,0,1,1\n"
    "                PERM-P3(k=4): d=1; a=0,0,0,0; b=0\n";

static int usage(void) {
  fputs(usage_text, stderr);
  return 2;
}

static int exit_code_for(ptx_status s) {
  switch (s) {
    case PTX_OK:
      return 0;
    case PTX_CHECK_FAILED:
    case PTX_VDIM_ERROR:
      return 1;
    default:
      return 2;
  }
}

static int finish(ptx_status s, char* report, char* err) {
  if (report) {
    fputs(report, stdout);
    ptx_free(report);
  }
  if (err) {
    fprintf(stderr, "error: %s\n", err);
    ptx_free(err);
  }
  return exit_code_for(s);
}

static char* read_file(const char* path) {
  FILE* f = fopen(path, "rb");
  if (!f) return NULL;
  fseek(f, 0, SEEK_END);
  long n = ftell(f);
  fseek(f, 0, SEEK_SET);
  if (n < 0) {
    fclose(f);
    return NULL;
  }
  char* buf = (char*)malloc((size_t)n + 1);
  if (!buf) {
    fclose(f);
    return NULL;
  }
  size_t got = fread(buf, 1, (size_t)n, f);
  fclose(f);
  buf[got] = '\0';
  return buf;
}

struct flags {
  const char* format;
  const char* table;
  unsigned seed;
  int trials;
  int genus;
  int points;
  int have_genus;
  int have_points;
};

/* Consumes --flag value pairs; positional arguments are collected in order. */
static int parse_args(int argc, char** argv, struct flags* fl, const char** pos, int max_pos,
                      int* npos) {
  int i;
  fl->format = "text";
  fl->table = NULL;
  fl->seed = 0;
  fl->trials = 1000;
  fl->genus = 0;
  fl->points = 0;
  fl->have_genus = 0;
  fl->have_points = 0;
  *npos = 0;
  for (i = 0; i < argc; ++i) {
    const char* a = argv[i];
    if (strncmp(a, "--", 2) == 0) {
      const char* name = a + 2;
      if (i + 1 >= argc) {
        fprintf(stderr, "error: flag %s needs a value\n", a);
        return -1;
      }
      const char* val = argv[++i];
      if (strcmp(name, "format") == 0)
        fl->format = val;
      else if (strcmp(name, "table") == 0)
        fl->table = val;
      else if (strcmp(name, "seed") == 0)
        fl->seed = (unsigned)strtoul(val, NULL, 10);
      else if (strcmp(name, "trials") == 0)
        fl->trials = atoi(val);
      else if (strcmp(name, "genus") == 0) {
        fl->genus = atoi(val);
        fl->have_genus = 1;
      } else if (strcmp(name, "points") == 0) {
        fl->points = atoi(val);
        fl->have_points = 1;
      } else {
        fprintf(stderr, "error: unknown flag %s\n", a);
        return -1;
      }
    } else {
      if (*npos >= max_pos) {
        fprintf(stderr, "error: unexpected argument '%s'\n", a);
        return -1;
      }
      pos[(*npos)++] = a;
    }
  }
  return 0;
}

int main(int argc, char** argv) {
  if (argc < 2) return usage();
  const char* cmd = argv[1];
  struct flags fl;
  const char* pos[2];
  int npos = 0;
  if (parse_args(argc - 2, argv + 2, &fl, pos, 2, &npos) != 0) return 2;

  char* report = NULL;
  char* err = NULL;
  ptx_status s;

  if (strcmp(cmd, "build") == 0) {
    if (npos != 1) return usage();
    s = ptx_build_report(pos[0], fl.format, &report, &err);
    return finish(s, report, err);
  }
  if (strcmp(cmd, "verify") == 0) {
    if (npos != 1) return usage();
    s = ptx_verify(pos[0], fl.seed, fl.trials, fl.format, &report, &err);
    return finish(s, report, err);
  }
  if (strcmp(cmd, "transform") == 0) {
    if (npos != 2) return usage();
    s = ptx_transform(pos[0], pos[1], fl.format, &report, &err);
    return finish(s, report, err);
  }
  if (strcmp(cmd, "reduce") == 0) {
    if (npos != 1 || !fl.have_genus || !fl.have_points) return usage();
    char* table_text = NULL;
    if (fl.table) {
      table_text = read_file(fl.table);
      if (!table_text) {
        fprintf(stderr, "error: cannot read table file %s\n", fl.table);
        return 2;
      }
    }
    s = ptx_reduce(fl.genus, fl.points, pos[0], table_text, fl.format, &report, &err);
    free(table_text);
    return finish(s, report, err);
  }
  return usage();
}
