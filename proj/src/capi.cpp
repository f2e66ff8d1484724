#include "modbrauer/modbrauer.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <future>
#include <map>
#include <new>
#include <string>

#include "modbrauer/brauer.hpp"
#include "modbrauer/error.hpp"
#include "modbrauer/formdata.hpp"
#include "modbrauer/symbols.hpp"
#include "modbrauer/twists.hpp"

using namespace modbrauer;
namespace fs = std::filesystem;

struct mb_form {
  NewformData data;
};

struct mb_class {
  BrauerClass cls;
};

namespace {

thread_local std::string g_last_error;

mb_status set_error(ErrorCode code, const std::string& msg) {
  g_last_error = msg;
  return static_cast<mb_status>(code);
}

template <class F>
mb_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return MB_OK;
  } catch (const Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ErrorCode::kInternal, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

void give_string(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

NewformData truncated(const NewformData& f, std::int64_t bound) {
  if (bound > f.bound)
    fail(ErrorCode::kInsufficientData, "coefficients are only given up to " + std::to_string(f.bound));
  NewformData g = f;
  g.bound = bound;
  std::erase_if(g.coeffs, [&](const auto& kv) { return kv.first > bound; });
  return make_newform(std::move(g));
}

std::vector<fs::path> form_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) fail(ErrorCode::kIo, dir.string() + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string label_of(const NewformData& f, const fs::path& dir, bool pretty) {
  fs::path peer = dir / "peers" / peer_file_name(f.level, f.weight, f.eps.encode());
  return make_label(f, parse_peer_file(read_text_file(peer)), pretty);
}

std::string check_report(const NewformData& f, double tol, bool strict, bool& passed) {
  std::string out;
  passed = true;
  auto line = [&](bool ok, const std::string& what) {
    out += (ok ? "ok   " : "FAIL ") + what + "\n";
    passed = passed && ok;
  };
  TwistData td = analyze_twists(f);
  BrauerClass cls = global_class(f, td);
  out += "class " + cls.to_string() + "\n";
  auto rep = consistency_report(f, td, cls);
  line(rep.passed, "consistency report");
  for (const auto& msg : rep.failures) out += "     " + msg + "\n";
  for (const auto& pp : factor_integer(f.level)) {
    auto bc = classify_bad_prime(f, pp.prime);
    std::string what = "bad prime " + std::to_string(pp.prime) + " " + bad_prime_label(bc.kind);
    if (bc.kind == BadPrimeKind::kRps) {
      bool split = rps_split_criterion(f, pp.prime) == RpsVerdict::kSplit;
      what += split ? " (criterion: split)" : " (criterion: unknown)";
      line(split || !strict, what);
    } else {
      line(true, what);
    }
  }
  if (td.group.elements.size() >= 2) {
    auto cr = cocycle_check_numeric(f, td.group, tol);
    char buf[160];
    std::snprintf(buf, sizeof buf, "cocycle identity (%zu triples, max error %.3g, lattice %.3g)",
                  cr.triples_checked, cr.max_identity_error, cr.max_lattice_error);
    line(cr.passed, buf);
    for (const auto& msg : cr.failures) out += "     " + msg + "\n";
  } else {
    out += "skip cocycle identity (trivial twist group)\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* mb_status_name(mb_status status) {
  if (status == MB_OK) return "ok";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* mb_last_error(void) { return g_last_error.c_str(); }

void mb_string_free(char* s) { std::free(s); }

mb_status mb_form_parse(const char* text, size_t len, mb_form** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new mb_form{parse_form_file(std::string_view(text, len))};
  });
}

mb_status mb_form_load(const char* path, mb_form** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mb_form{load_form_file(path)};
  });
}

void mb_form_free(mb_form* form) { delete form; }

mb_status mb_form_serialize(const mb_form* form, char** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    give_string(serialize_form(form->data), out);
  });
}

mb_status mb_form_truncate(const mb_form* form, int64_t bound, mb_form** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = new mb_form{truncated(form->data, bound)};
  });
}

mb_status mb_form_level(const mb_form* form, int64_t* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = form->data.level;
  });
}

mb_status mb_form_weight(const mb_form* form, int* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = form->data.weight;
  });
}

mb_status mb_form_name(const mb_form* form, char** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    give_string(form->data.name, out);
  });
}

mb_status mb_form_class(const mb_form* form, mb_class** out) {
  return guarded([&] {
    require(form, "form");
    require(out, "out");
    *out = new mb_class{global_class(form->data)};
  });
}

void mb_class_free(mb_class* cls) { delete cls; }

size_t mb_class_finite_count(const mb_class* cls) { return cls ? cls->cls.finite_ramified.size() : 0; }

int64_t mb_class_finite_prime(const mb_class* cls, size_t index) {
  if (!cls || index >= cls->cls.finite_ramified.size()) return 0;
  return cls->cls.finite_ramified[index];
}

int mb_class_infinite(const mb_class* cls) { return cls && cls->cls.infinite_ramified ? 1 : 0; }

mb_status mb_class_string(const mb_class* cls, char** out) {
  return guarded([&] {
    require(cls, "cls");
    require(out, "out");
    give_string(cls->cls.to_string(), out);
  });
}

mb_status mb_class_provenance(const mb_class* cls, int pretty, char** out) {
  return guarded([&] {
    require(cls, "cls");
    require(out, "out");
    std::string s;
    for (const auto& d : cls->cls.provenance)
      s += d.place.to_string(pretty != 0) + (d.ramified ? " ramified " : " split ") +
           source_name(d.source) + "\n";
    give_string(s, out);
  });
}

mb_status mb_form_check(const mb_form* form, double tolerance, int strict, int* passed, char** report) {
  return guarded([&] {
    require(form, "form");
    require(passed, "passed");
    require(report, "report");
    bool ok = false;
    std::string text = check_report(form->data, tolerance, strict != 0, ok);
    *passed = ok ? 1 : 0;
    give_string(text, report);
  });
}

mb_status mb_form_label(const mb_form* form, const char* peer_path, int pretty, char** out) {
  return guarded([&] {
    require(form, "form");
    require(peer_path, "peer_path");
    require(out, "out");
    give_string(make_label(form->data, parse_peer_file(read_text_file(peer_path)), pretty != 0), out);
  });
}

mb_status mb_symbols(const char* a, const char* b, int pretty, char** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    Rational x = parse_rational(a), y = parse_rational(b);
    if (x == 0 || y == 0) fail(ErrorCode::kInvalidArgument, "Hilbert symbol needs nonzero arguments");
    std::string s;
    for (const auto& v : symbol_ramified_places(x, y)) s += (s.empty() ? "" : " ") + v.to_string(pretty != 0);
    give_string(s, out);
  });
}

mb_status mb_table_dir(const char* dir, int64_t bound, int pretty, int machine, char** out) {
  return guarded([&] {
    require(dir, "dir");
    require(out, "out");
    auto files = form_files(dir);
    // Forms are independent; the table is assembled afterwards in a fixed order.
    std::vector<std::future<TableRow>> jobs;
    for (const auto& path : files) {
      jobs.push_back(std::async(std::launch::async, [path, dir = fs::path(dir), bound] {
        NewformData f = load_form_file(path);
        if (bound > 0) f = truncated(f, bound);
        TwistData td = analyze_twists(f);
        BrauerClass cls = global_class(f, td);
        return make_table_row(f, label_of(f, dir, false), label_of(f, dir, true), td, cls);
      }));
    }
    std::vector<TableRow> rows;
    for (auto& j : jobs) rows.push_back(j.get());
    TableOptions opt{pretty != 0};
    give_string(machine ? emit_machine(std::move(rows), opt) : emit_table(std::move(rows), opt), out);
  });
}

mb_status mb_label_dir(const char* dir, int pretty, char** out) {
  return guarded([&] {
    require(dir, "dir");
    require(out, "out");
    std::string s;
    for (const auto& path : form_files(dir)) {
      NewformData f = load_form_file(path);
      s += path.filename().string() + " " + label_of(f, dir, pretty != 0) + "\n";
    }
    give_string(s, out);
  });
}

}  // extern "C"
