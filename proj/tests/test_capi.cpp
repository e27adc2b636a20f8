#include <doctest.h>

#include <cstring>
#include <string>

#include "permutoric.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ptx_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: fan handles") {
  ptx_fan* fan = nullptr;
  char* err = nullptr;
  REQUIRE(ptx_fan_build("perm-p3", &fan, &err) == PTX_OK);
  REQUIRE(fan != nullptr);
  CHECK(ptx_fan_ray_count(fan) == 14);
  CHECK(ptx_fan_wall_count(fan) == 36);
  CHECK(ptx_fan_max_cone_count(fan) == 24);
  CHECK(ptx_fan_is_smooth(fan) == 1);
  CHECK(ptx_fan_is_complete(fan) == 1);

  long long coords[3];
  char label[16];
  REQUIRE(ptx_fan_ray(fan, 0, coords, label, sizeof label) == PTX_OK);
  CHECK(coords[0] == -1);
  CHECK(coords[1] == -1);
  CHECK(coords[2] == -1);
  CHECK(std::strcmp(label, "v1") == 0);
  CHECK(ptx_fan_ray(fan, 99, coords, nullptr, 0) == PTX_INVALID_ARGUMENT);
  ptx_fan_free(fan);

  fan = nullptr;
  char* msg = nullptr;
  CHECK(ptx_fan_build("p4", &fan, &msg) == PTX_INVALID_ARGUMENT);
  CHECK(fan == nullptr);
  std::string m = take(msg);
  CHECK(m.find("unknown model") != std::string::npos);
}

TEST_CASE("c api: reports") {
  char* report = nullptr;
  char* err = nullptr;
  REQUIRE(ptx_build_report("cube", "text", &report, &err) == PTX_OK);
  std::string text = take(report);
  CHECK(text.find("max-cones: 8") != std::string::npos);

  report = nullptr;
  REQUIRE(ptx_build_report("p3", "json", &report, &err) == PTX_OK);
  std::string json = take(report);
  CHECK(json.find("\"rays\": \"4\"") != std::string::npos);
}

TEST_CASE("c api: verify") {
  char* report = nullptr;
  char* err = nullptr;
  CHECK(ptx_verify("involutions", 0, 50, "text", &report, &err) == PTX_OK);
  std::string text = take(report);
  CHECK(text.find("result: pass") != std::string::npos);

  report = nullptr;
  err = nullptr;
  CHECK(ptx_verify("nonesuch", 0, 10, "text", &report, &err) == PTX_INVALID_ARGUMENT);
  take(err);
}

TEST_CASE("c api: transform") {
  char* image = nullptr;
  char* err = nullptr;
  REQUIRE(ptx_transform_class("thm1", "P3(k=6): d=3; a=1,1,1,1,1,1", &image, &err) == PTX_OK);
  CHECK(take(image) == "CUBE(k=4): d=1,1,1; a=1,0,1,1");

  image = nullptr;
  err = nullptr;
  CHECK(ptx_transform_class("thm1", "P3(k=6): d=oops", &image, &err) == PTX_PARSE_ERROR);
  std::string msg = take(err);
  CHECK(msg.find("col") != std::string::npos);

  image = nullptr;
  err = nullptr;
  CHECK(ptx_transform_class("thm4", "P3(k=4): d=1; a=0,0,0,0", &image, &err) ==
        PTX_MODEL_MISMATCH);
  take(err);
}

TEST_CASE("c api: reduce") {
  char* report = nullptr;
  char* err = nullptr;
  REQUIRE(ptx_reduce(0, 3, "CUBE(k=0): d=1,1,1", nullptr, "text", &report, &err) == PTX_OK);
  std::string text = take(report);
  CHECK(text.find("outcome: value") != std::string::npos);
  CHECK(text.find("value: 1") != std::string::npos);

  report = nullptr;
  err = nullptr;
  CHECK(ptx_reduce(0, 0, "P3(k=0): d=1", nullptr, "text", &report, &err) == PTX_VDIM_ERROR);
  std::string msg = take(err);
  CHECK(msg.find("NonVdimZero") != std::string::npos);

  char* table = nullptr;
  REQUIRE(ptx_default_table(&table) == PTX_OK);
  std::string t = take(table);
  CHECK(t.find("P3 0 d=3;n=6 1 PAPER") != std::string::npos);

  // a custom table is honored
  report = nullptr;
  err = nullptr;
  REQUIRE(ptx_reduce(0, 2, "P3(k=0): d=1", "P3 0 d=1;n=2 5 DERIVED\n", "text", &report, &err) ==
          PTX_OK);
  std::string custom = take(report);
  CHECK(custom.find("value: 5") != std::string::npos);
}

TEST_CASE("c api: reports are byte-stable") {
  auto render = [](const char* fmt) {
    char* report = nullptr;
    char* err = nullptr;
    REQUIRE(ptx_reduce(0, 3, "CUBE(k=0): d=1,1,1", nullptr, fmt, &report, &err) == PTX_OK);
    return take(report);
  };
  CHECK(render("text") == render("text"));
  CHECK(render("json") == render("json"));

  char* r1 = nullptr;
  char* r2 = nullptr;
  char* err = nullptr;
  REQUIRE(ptx_verify("involutions", 42, 25, "text", &r1, &err) == PTX_OK);
  REQUIRE(ptx_verify("involutions", 42, 25, "text", &r2, &err) == PTX_OK);
  CHECK(take(r1) == take(r2));
}
