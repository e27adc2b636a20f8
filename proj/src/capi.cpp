#include "permutoric.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "error.hpp"
#include "fan.hpp"

using ptx::CommandResult;
using ptx::Errc;
using ptx::Error;

struct ptx_fan {
  ptx::LatticeFan fan;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ptx_status status_of(const Error& e) {
  switch (e.code) {
    case Errc::ParseError:
      return PTX_PARSE_ERROR;
    case Errc::BasisModelMismatch:
      return PTX_MODEL_MISMATCH;
    case Errc::CenterNotInFan:
    case Errc::NonSmoothInput:
    case Errc::NonCompleteInput:
    case Errc::NotAWall:
    case Errc::RayPermutationFailure:
      return PTX_DOMAIN_ERROR;
    case Errc::NonVdimZero:
      return PTX_VDIM_ERROR;
    case Errc::InvalidArgument:
      return PTX_INVALID_ARGUMENT;
    case Errc::Internal:
      return PTX_INTERNAL_ERROR;
  }
  return PTX_INTERNAL_ERROR;
}

void set_err(char** err, const Error& e) {
  if (err) *err = dup_string(std::string(ptx::errc_name(e.code)) + ": " + e.what());
}

template <typename F>
ptx_status guarded(char** err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    set_err(err, e);
    return status_of(e);
  } catch (const std::exception& e) {
    if (err) *err = dup_string(std::string("Internal: ") + e.what());
    return PTX_INTERNAL_ERROR;
  }
}

std::string fmt_of(const char* format) { return format ? format : "text"; }

}  // namespace

extern "C" {

const char* ptx_version(void) { return PTX_VERSION; }

const char* ptx_status_name(ptx_status s) {
  switch (s) {
    case PTX_OK: return "ok";
    case PTX_CHECK_FAILED: return "check-failed";
    case PTX_PARSE_ERROR: return "parse-error";
    case PTX_MODEL_MISMATCH: return "model-mismatch";
    case PTX_DOMAIN_ERROR: return "domain-error";
    case PTX_VDIM_ERROR: return "vdim-error";
    case PTX_INVALID_ARGUMENT: return "invalid-argument";
    case PTX_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

void ptx_free(char* s) { std::free(s); }

ptx_status ptx_fan_build(const char* model, ptx_fan** out, char** err) {
  if (!model || !out) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    std::string m = model;
    ptx::LatticeFan f;
    if (m == "p3")
      f = ptx::LatticeFan::p3();
    else if (m == "cube")
      f = ptx::LatticeFan::cube();
    else if (m == "perm-p3")
      f = ptx::LatticeFan::permutohedral_p3();
    else if (m == "perm-cube")
      f = ptx::LatticeFan::permutohedral_cube();
    else
      ptx::fail(Errc::InvalidArgument, "unknown model '" + m + "'");
    *out = new ptx_fan{std::move(f)};
    return PTX_OK;
  });
}

void ptx_fan_free(ptx_fan* fan) { delete fan; }

int ptx_fan_ray_count(const ptx_fan* fan) { return fan ? fan->fan.ray_count() : -1; }
int ptx_fan_wall_count(const ptx_fan* fan) { return fan ? fan->fan.wall_count() : -1; }
int ptx_fan_max_cone_count(const ptx_fan* fan) { return fan ? fan->fan.max_cone_count() : -1; }
int ptx_fan_is_smooth(const ptx_fan* fan) { return fan && fan->fan.is_smooth() ? 1 : 0; }
int ptx_fan_is_complete(const ptx_fan* fan) { return fan && fan->fan.is_complete() ? 1 : 0; }

ptx_status ptx_fan_ray(const ptx_fan* fan, int index, long long coords[3], char* label_buf,
                       size_t label_buf_len) {
  if (!fan || !coords) return PTX_INVALID_ARGUMENT;
  if (index < 0 || index >= fan->fan.ray_count()) return PTX_INVALID_ARGUMENT;
  const ptx::Vec3& v = fan->fan.rays()[index];
  coords[0] = v.x;
  coords[1] = v.y;
  coords[2] = v.z;
  if (label_buf && label_buf_len > 0) {
    const std::string& l = fan->fan.label(index);
    std::snprintf(label_buf, label_buf_len, "%s", l.c_str());
  }
  return PTX_OK;
}

ptx_status ptx_build_report(const char* model, const char* format, char** report, char** err) {
  if (!model || !report) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    CommandResult res = ptx::cmd_build(model);
    *report = dup_string(res.report.render(fmt_of(format)));
    return PTX_OK;
  });
}

ptx_status ptx_verify(const char* check, unsigned seed, int trials, const char* format,
                      char** report, char** err) {
  if (!check || !report) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    CommandResult res = ptx::cmd_verify(check, seed, trials);
    *report = dup_string(res.report.render(fmt_of(format)));
    return res.pass ? PTX_OK : PTX_CHECK_FAILED;
  });
}

ptx_status ptx_transform(const char* rule, const char* class_spec, const char* format,
                         char** report, char** err) {
  if (!rule || !class_spec || !report) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    CommandResult res = ptx::cmd_transform(rule, class_spec);
    *report = dup_string(res.report.render(fmt_of(format)));
    return PTX_OK;
  });
}

ptx_status ptx_transform_class(const char* rule, const char* class_spec, char** image,
                               char** err) {
  if (!rule || !class_spec || !image) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    CommandResult res = ptx::cmd_transform(rule, class_spec);
    for (const auto& [k, v] : res.report.items())
      if (k == "output") {
        *image = dup_string(v);
        return PTX_OK;
      }
    ptx::fail(Errc::Internal, "transform produced no output");
  });
}

ptx_status ptx_reduce(int genus, int points, const char* class_spec, const char* table_text,
                      const char* format, char** report, char** err) {
  if (!class_spec || !report) return PTX_INVALID_ARGUMENT;
  return guarded(err, [&]() -> ptx_status {
    CommandResult res =
        ptx::cmd_reduce(genus, points, class_spec, table_text ? table_text : "");
    *report = dup_string(res.report.render(fmt_of(format)));
    return PTX_OK;
  });
}

ptx_status ptx_default_table(char** out) {
  if (!out) return PTX_INVALID_ARGUMENT;
  *out = dup_string(ptx::default_table_text());
  return PTX_OK;
}

}  // extern "C"
