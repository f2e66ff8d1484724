// Exercises the shared library through its C header only.

#include "doctest.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "modbrauer/modbrauer.h"

namespace {

std::string fixture_path(const char* name) { return std::string(MB_FIXTURE_DIR) + "/" + name + ".json"; }

std::string take(char* s) {
  std::string out = s ? s : "";
  mb_string_free(s);
  return out;
}

struct Form {
  mb_form* p = nullptr;
  ~Form() { mb_form_free(p); }
};

struct Class {
  mb_class* p = nullptr;
  ~Class() { mb_class_free(p); }
};

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::strcmp(mb_status_name(MB_OK), "ok") == 0);
  CHECK(std::strcmp(mb_status_name(MB_ERR_PARSE), "parse-error") == 0);
  char* out = nullptr;
  CHECK(mb_symbols("0", "3", 0, &out) == MB_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(mb_last_error()) > 0);
  CHECK(mb_symbols("-1", "-1", 0, &out) == MB_OK);
  CHECK(std::strlen(mb_last_error()) == 0);
  CHECK(take(out) == "2 oo");
  CHECK(mb_symbols("-1", "-1", 1, &out) == MB_OK);
  CHECK(take(out) == "2 ∞");
  CHECK(mb_symbols("1/2", "x", 0, &out) == MB_ERR_PARSE);
  CHECK(mb_symbols(nullptr, "1", 0, &out) == MB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("class of a fixture") {
  Form f;
  REQUIRE(mb_form_load(fixture_path("19B3").c_str(), &f.p) == MB_OK);
  int64_t level = 0;
  int weight = 0;
  CHECK(mb_form_level(f.p, &level) == MB_OK);
  CHECK(mb_form_weight(f.p, &weight) == MB_OK);
  CHECK(level == 19);
  CHECK(weight == 3);
  char* s = nullptr;
  CHECK(mb_form_name(f.p, &s) == MB_OK);
  CHECK(take(s) == "19B3");

  Class c;
  REQUIRE(mb_form_class(f.p, &c.p) == MB_OK);
  CHECK(mb_class_finite_count(c.p) == 1);
  CHECK(mb_class_finite_prime(c.p, 0) == 13);
  CHECK(mb_class_finite_prime(c.p, 5) == 0);
  CHECK(mb_class_infinite(c.p) == 1);
  CHECK(mb_class_string(c.p, &s) == MB_OK);
  CHECK(take(s) == "finite: 13; infinite: yes");
  CHECK(mb_class_provenance(c.p, 0, &s) == MB_OK);
  CHECK(take(s).find("13 ramified") != std::string::npos);

  int passed = 0;
  CHECK(mb_form_check(f.p, 1e-9, 0, &passed, &s) == MB_OK);
  take(s);
  CHECK(passed == 1);

  std::string peers = std::string(MB_FIXTURE_DIR) + "/peers/";
  CHECK(mb_form_label(f.p, (peers + "no_such_file.json").c_str(), 0, &s) == MB_ERR_IO);
}

TEST_CASE("serialize, parse and truncate") {
  Form f;
  REQUIRE(mb_form_load(fixture_path("28A").c_str(), &f.p) == MB_OK);
  char* s = nullptr;
  REQUIRE(mb_form_serialize(f.p, &s) == MB_OK);
  std::string text = take(s);
  std::ifstream in(fixture_path("28A"));
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(text == ss.str());

  Form g;
  REQUIRE(mb_form_parse(text.data(), text.size(), &g.p) == MB_OK);
  Class c;
  REQUIRE(mb_form_class(g.p, &c.p) == MB_OK);
  CHECK(mb_class_string(c.p, &s) == MB_OK);
  CHECK(take(s) == "finite: 2 3; infinite: no");

  Form t;
  CHECK(mb_form_truncate(f.p, 112, &t.p) == MB_OK);
  Form too_far;
  CHECK(mb_form_truncate(f.p, 1000000, &too_far.p) == MB_ERR_INSUFFICIENT_DATA);
  Form too_small;
  CHECK(mb_form_truncate(f.p, 10, &too_small.p) == MB_ERR_INSUFFICIENT_DATA);
}

TEST_CASE("errors through the boundary") {
  Form f;
  CHECK(mb_form_load("/nonexistent.json", &f.p) == MB_ERR_IO);
  CHECK(f.p == nullptr);
  CHECK(mb_form_parse("{", 1, &f.p) == MB_ERR_PARSE);
  CHECK(mb_form_parse(nullptr, 0, &f.p) == MB_ERR_INVALID_ARGUMENT);
  CHECK(mb_form_level(nullptr, nullptr) == MB_ERR_INVALID_ARGUMENT);
  mb_form_free(nullptr);
  mb_class_free(nullptr);
  mb_string_free(nullptr);
}

TEST_CASE("directory listings") {
  char* s = nullptr;
  REQUIRE(mb_label_dir(MB_FIXTURE_DIR, 0, &s) == MB_OK);
  auto labels = take(s);
  CHECK(labels.find("19B3.json 19B^3_[9]") != std::string::npos);
  REQUIRE(mb_table_dir(MB_FIXTURE_DIR, 0, 0, 1, &s) == MB_OK);
  auto machine = take(s);
  CHECK(machine.find(R"({"label":"28A_[1,1]","ram_finite":[2,3],"ram_inf":false,"slopes":["RPS","1"]})") !=
        std::string::npos);
  CHECK(machine.find("11A") == std::string::npos);
}
