// Command-line surface over the kmss C API.
//
// Exit codes: 0 success, 2 validation error, 3 unclassified, 4 crosscheck
// disagreement.  KMSS_WINDOW overrides the default verification window.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kmss/kmss.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Freed {
  char* s = nullptr;
  ~Freed() { kmss_string_free(s); }
};

int finish(kmss_status st, char* out, char* err) {
  Freed fo{out}, fe{err};
  if (out != nullptr) std::cout << out << "\n";
  if (st != KMSS_OK && err != nullptr) std::cerr << "error: " << err << "\n";
  return static_cast<int>(st);
}

int default_window() {
  const char* env = std::getenv("KMSS_WINDOW");
  if (env == nullptr) return 3;
  int w = std::atoi(env);
  return w >= 1 ? w : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kmss: affine Kac-Moody real-form and symmetric-space atlas"};
  app.set_version_flag("--version", std::string(kmss_version()));
  app.require_subcommand(1);

  std::string vogan_path, series, case_name, table;
  std::string format = "ascii";
  int rank = 1, param = 2;
  int window = default_window();

  auto* list = app.add_subcommand("list-forms", "catalog rows for a diagram family");
  list->add_option("series", series)->required();
  list->add_option("rank", rank)->required();

  auto* reduce = app.add_subcommand("reduce", "canonical representative of a Vogan diagram");
  reduce->add_option("vogan", vogan_path, "Vogan JSON file")->required();

  auto* cls = app.add_subcommand("classify", "classify a Vogan diagram");
  cls->add_option("vogan", vogan_path)->required();

  auto* roots = app.add_subcommand("fixed-roots", "fixed-algebra simple roots");
  roots->add_option("vogan", vogan_path)->required();

  auto* verify = app.add_subcommand("verify", "run and cross-validate a worked case");
  verify->add_option("series", series)->required();
  verify->add_option("rank", rank)->required();
  verify->add_option("--case", case_name, "case name, e.g. case-I")->required();
  verify->add_option("--window", window, "degree window (default KMSS_WINDOW or 3)");

  auto* tab = app.add_subcommand("table", "regenerate a classification table");
  tab->add_option("family", table, "A1|A2|A-odd|A-even|B|C-odd|C-even|D-even|D-odd")->required();
  tab->add_option("--param", param, "rank parameter n")->required();
  std::string tfmt = "md";
  tab->add_option("--format", tfmt, "md|csv");

  auto* render = app.add_subcommand("render", "draw a Vogan diagram");
  render->add_option("vogan", vogan_path)->required();
  render->add_option("--format", format, "ascii|dot");

  auto* cases = app.add_subcommand("cases", "registered worked cases");
  cases->add_option("series", series)->required();
  cases->add_option("rank", rank)->required();

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  char* err = nullptr;

  if (list->parsed()) {
    kmss_status st = kmss_list_forms(series.c_str(), rank, &out, &err);
    return finish(st, out, err);
  }
  if (cases->parsed()) {
    kmss_status st = kmss_case_names(series.c_str(), rank, &out, &err);
    return finish(st, out, err);
  }
  if (verify->parsed()) {
    kmss_status st = kmss_verify_case(series.c_str(), rank, case_name.c_str(), window, &out, &err);
    return finish(st, out, err);
  }
  if (tab->parsed()) {
    kmss_status st = kmss_emit_table(table.c_str(), param, tfmt.c_str(), &out, &err);
    return finish(st, out, err);
  }

  // The remaining commands consume a Vogan document.
  std::string text;
  try {
    text = slurp(vogan_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  kmss_vogan* vd = nullptr;
  kmss_status st = kmss_vogan_parse(text.c_str(), &vd, &err);
  if (st != KMSS_OK) return finish(st, nullptr, err);

  if (reduce->parsed()) {
    kmss_vogan* red = nullptr;
    st = kmss_vogan_reduce(vd, &red, &err);
    if (st == KMSS_OK) {
      st = kmss_vogan_to_json(red, &out);
      kmss_vogan_free(red);
    }
  } else if (cls->parsed()) {
    st = kmss_classify(vd, &out, &err);
  } else if (roots->parsed()) {
    st = kmss_fixed_roots(vd, &out, &err);
  } else if (render->parsed()) {
    st = kmss_vogan_render(vd, format.c_str(), &out, &err);
  }
  kmss_vogan_free(vd);
  return finish(st, out, err);
}
