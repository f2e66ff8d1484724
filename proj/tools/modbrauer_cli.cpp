// Command-line driver. Talks to the library only through modbrauer.h.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "modbrauer/modbrauer.h"

namespace {

struct Options {
  long long bound = 0;
  bool pretty = false;
  bool machine = false;
  double tolerance = 1e-9;
  bool strict = false;
};

int report(mb_status st) {
  std::fprintf(stderr, "modbrauer: %s: %s\n", mb_status_name(st), mb_last_error());
  return static_cast<int>(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mb_string_free(s);
  return out;
}

// Loads a form and applies --bound.
mb_status load(const std::string& path, const Options& opt, mb_form** out) {
  mb_form* f = nullptr;
  mb_status st = mb_form_load(path.c_str(), &f);
  if (st != MB_OK || opt.bound <= 0) {
    *out = f;
    return st;
  }
  st = mb_form_truncate(f, opt.bound, out);
  mb_form_free(f);
  return st;
}

int cmd_class(const std::string& path, const Options& opt) {
  mb_form* f = nullptr;
  if (mb_status st = load(path, opt, &f); st != MB_OK) return report(st);
  mb_class* c = nullptr;
  mb_status st = mb_form_class(f, &c);
  mb_form_free(f);
  if (st != MB_OK) return report(st);
  char* s = nullptr;
  char* prov = nullptr;
  mb_class_string(c, &s);
  mb_class_provenance(c, opt.machine ? 0 : 1, &prov);
  mb_class_free(c);
  std::string line = take(s) + "; places:";
  std::string rest = take(prov);
  // "<place> <verdict> <source>" lines -> ", <place> <verdict> (<source>)"
  std::size_t pos = 0;
  bool first = true;
  while (pos < rest.size()) {
    std::size_t nl = rest.find('\n', pos);
    std::string entry = rest.substr(pos, nl - pos);
    std::size_t sp = entry.rfind(' ');
    line += (first ? " " : ", ") + entry.substr(0, sp) + " (" + entry.substr(sp + 1) + ")";
    first = false;
    pos = nl + 1;
  }
  std::printf("%s\n", line.c_str());
  return 0;
}

int cmd_check(const std::string& path, const Options& opt) {
  mb_form* f = nullptr;
  if (mb_status st = load(path, opt, &f); st != MB_OK) return report(st);
  int passed = 0;
  char* text = nullptr;
  mb_status st = mb_form_check(f, opt.tolerance, opt.strict ? 1 : 0, &passed, &text);
  mb_form_free(f);
  if (st != MB_OK) return report(st);
  std::fputs(take(text).c_str(), stdout);
  if (!passed) {
    std::fprintf(stderr, "modbrauer: consistency check failed for %s\n", path.c_str());
    return MB_ERR_CONSISTENCY;
  }
  return 0;
}

int cmd_table(const std::string& dir, const Options& opt) {
  char* out = nullptr;
  mb_status st = mb_table_dir(dir.c_str(), opt.bound, opt.pretty, opt.machine, &out);
  if (st != MB_OK) return report(st);
  std::fputs(take(out).c_str(), stdout);
  return 0;
}

int cmd_label(const std::string& dir, const Options& opt) {
  char* out = nullptr;
  mb_status st = mb_label_dir(dir.c_str(), opt.pretty, &out);
  if (st != MB_OK) return report(st);
  std::fputs(take(out).c_str(), stdout);
  return 0;
}

int cmd_symbols(const std::string& a, const std::string& b, const Options& opt) {
  char* out = nullptr;
  mb_status st = mb_symbols(a.c_str(), b.c_str(), opt.machine ? 0 : 1, &out);
  if (st != MB_OK) return report(st);
  std::printf("%s\n", take(out).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer classes of endomorphism algebras of modular motives"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--bound", opt.bound, "Use only coefficients a_p with p <= bound");
  app.add_flag("--pretty", opt.pretty, "Superscript weights, radical signs and the infinity glyph");
  app.add_flag("--machine", opt.machine, "Line-delimited JSON tables; 'oo' for the infinite place");
  app.add_option("--tolerance", opt.tolerance, "Tolerance of the cocycle identity check")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", opt.strict, "Fail on an Unknown verdict at an RPS prime");

  std::string path, dir, a, b;
  auto* cls = app.add_subcommand("class", "Brauer class of a form file, with provenance");
  cls->add_option("file", path)->required();
  auto* check = app.add_subcommand("check", "Consistency report and cocycle check");
  check->add_option("file", path)->required();
  auto* table = app.add_subcommand("table", "Table of the QM forms in a directory");
  table->add_option("dir", dir)->required();
  auto* label = app.add_subcommand("label", "Labels of the forms in a directory");
  label->add_option("dir", dir)->required();
  auto* sym = app.add_subcommand("symbols", "Places where the Hilbert symbol (a, b) is -1");
  sym->add_option("a", a)->required();
  sym->add_option("b", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return MB_ERR_INVALID_ARGUMENT;
  }

  if (*cls) return cmd_class(path, opt);
  if (*check) return cmd_check(path, opt);
  if (*table) return cmd_table(dir, opt);
  if (*label) return cmd_label(dir, opt);
  return cmd_symbols(a, b, opt);
}
