// Command-line front end for the dehnkit shared library.  Every subcommand
// is file based and deterministic for a fixed seed.  Exit codes: 0 success,
// 1 malformed input, 2 limits exhausted (result undecided).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dehn/dehnkit.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write " + path);
  out << content;
}

struct Owned {
  char* s = nullptr;
  ~Owned() { dk_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int fail(dk_status st) {
  std::cerr << "error: " << dk_last_error() << "\n";
  return st == DK_ERR_LIMIT ? 2 : 1;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

struct PresentationHandle {
  dk_presentation* p = nullptr;
  ~PresentationHandle() { dk_presentation_free(p); }
};
struct ComplexHandle {
  dk_complex* c = nullptr;
  ~ComplexHandle() { dk_complex_free(c); }
};
struct DiagramHandle {
  dk_diagram* d = nullptr;
  ~DiagramHandle() { dk_diagram_free(d); }
};

// "Exact 4" style summary from the area result JSON
std::string area_summary(const std::string& json_text) {
  auto field = [&](const std::string& key) -> std::string {
    auto pos = json_text.find("\"" + key + "\"");
    if (pos == std::string::npos) return {};
    pos = json_text.find(':', pos);
    auto end = json_text.find_first_of(",\n}", pos);
    std::string raw = json_text.substr(pos + 1, end - pos - 1);
    while (!raw.empty() && (raw.front() == ' ' || raw.front() == '"')) raw.erase(raw.begin());
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '"')) raw.pop_back();
    return raw;
  };
  std::string status = field("status");
  if (status == "exact") return "Exact " + field("area");
  if (status == "lower_bound") return "LowerBound " + field("area");
  if (status == "not_nullhomotopic") return "NotNullhomotopic";
  return "Unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial areas, Dehn functions, diagram collapse and PL pushing"};
  app.require_subcommand(1);

  std::string pres_path, word, out_path, complex_path, input_path, format = "table";
  std::string model_name;
  std::uint64_t seed = 0;
  std::int64_t n_max = 8, limit_area = 0, limit_wordlen = 0;
  int samples = 1000, max_exp = 10;
  double r = 0.12, v = 14;

  auto* area = app.add_subcommand("area", "combinatorial area of a word");
  area->add_option("presentation", pres_path)->required();
  area->add_option("word", word)->required();
  area->add_option("--limit-area", limit_area);
  area->add_option("--limit-wordlen", limit_wordlen);
  area->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  area->add_option("--out", out_path);

  auto* dehn = app.add_subcommand("dehn", "Dehn function table as CSV");
  dehn->add_option("presentation", pres_path)->required();
  dehn->add_option("--n", n_max)->required();
  dehn->add_option("--limit-area", limit_area);
  dehn->add_option("--limit-wordlen", limit_wordlen);
  dehn->add_option("--out", out_path);

  auto* classify = app.add_subcommand("classify", "growth classification of a CSV table");
  classify->add_option("table", input_path)->required();
  classify->add_option("--max-exp", max_exp);
  classify->add_option("--out", out_path);

  auto* reduce = app.add_subcommand("reduce", "collapse a degenerate diagram");
  reduce->add_option("diagram", input_path)->required();
  reduce->add_option("--out", out_path);

  auto* push = app.add_subcommand("push", "push a chain or loop into the 1-skeleton");
  push->add_option("complex", complex_path)->required();
  push->add_option("chain", input_path)->required();
  push->add_option("--r", r);
  push->add_option("--seed", seed);
  push->add_option("--out", out_path);

  auto* straighten = app.add_subcommand("straighten", "combinatorialize a skeleton loop");
  straighten->add_option("complex", complex_path)->required();
  straighten->add_option("loop", input_path)->required();
  straighten->add_option("--seed", seed);
  straighten->add_option("--out", out_path);

  auto* degree = app.add_subcommand("degree", "component degrees of a PL disc map");
  degree->add_option("discmap", input_path)->required();
  degree->add_option("--seed", seed);
  degree->add_option("--out", out_path);

  auto* alpha = app.add_subcommand("alpha", "estimate the bad-center measure alpha(v)");
  alpha->add_option("chain", input_path)->required();
  alpha->add_option("--v", v)->required();
  alpha->add_option("--samples", samples);
  alpha->add_option("--r", r);
  alpha->add_option("--seed", seed);
  alpha->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(area)) {
      PresentationHandle p;
      if (dk_status st = dk_presentation_parse(read_file(pres_path).c_str(), &p.p)) return fail(st);
      Owned out;
      dk_status st = dk_area(p.p, word.c_str(), limit_area, limit_wordlen, &out.s);
      if (st != DK_OK && st != DK_ERR_LIMIT) return fail(st);
      emit(format == "json" ? out.str() : area_summary(out.str()) + "\n", out_path);
      return st == DK_ERR_LIMIT ? 2 : 0;
    }
    if (app.got_subcommand(dehn)) {
      PresentationHandle p;
      if (dk_status st = dk_presentation_parse(read_file(pres_path).c_str(), &p.p)) return fail(st);
      Owned out;
      dk_status st = dk_dehn_table(p.p, n_max, limit_area, limit_wordlen, &out.s);
      if (st != DK_OK && st != DK_ERR_LIMIT) return fail(st);
      emit(out.str(), out_path);
      return st == DK_ERR_LIMIT ? 2 : 0;
    }
    if (app.got_subcommand(classify)) {
      Owned out;
      if (dk_status st = dk_classify_table(read_file(input_path).c_str(), max_exp, &out.s))
        return fail(st);
      emit(out.str(), out_path);
      return 0;
    }
    if (app.got_subcommand(reduce)) {
      DiagramHandle d;
      if (dk_status st = dk_diagram_parse(read_file(input_path).c_str(), &d.d)) return fail(st);
      DiagramHandle collapsed;
      Owned report;
      if (dk_status st = dk_diagram_collapse(d.d, &collapsed.d, &report.s)) return fail(st);
      Owned out_diag;
      if (dk_status st = dk_diagram_serialize(collapsed.d, &out_diag.s)) return fail(st);
      std::string prefix = out_path.empty() ? "reduce" : out_path;
      write_file(prefix + ".diagram.json", out_diag.str());
      write_file(prefix + ".report.json", report.str());
      std::cout << report.str();
      return 0;
    }
    if (app.got_subcommand(push)) {
      ComplexHandle c;
      if (dk_status st = dk_complex_parse(read_file(complex_path).c_str(), &c.c)) return fail(st);
      Owned rj, sj, cj;
      if (dk_status st = dk_push(c.c, read_file(input_path).c_str(), r, seed, &rj.s, &sj.s, &cj.s))
        return fail(st);
      std::string prefix = out_path.empty() ? "push" : out_path;
      write_file(prefix + ".R.json", rj.str());
      write_file(prefix + ".S.json", sj.str());
      write_file(prefix + ".cert.json", cj.str());
      std::cout << cj.str();
      return 0;
    }
    if (app.got_subcommand(straighten)) {
      ComplexHandle c;
      if (dk_status st = dk_complex_parse(read_file(complex_path).c_str(), &c.c)) return fail(st);
      Owned lj, cj;
      if (dk_status st = dk_straighten(c.c, read_file(input_path).c_str(), seed, &lj.s, &cj.s))
        return fail(st);
      std::string prefix = out_path.empty() ? "straighten" : out_path;
      write_file(prefix + ".loop.json", lj.str());
      write_file(prefix + ".cert.json", cj.str());
      std::cout << cj.str();
      return 0;
    }
    if (app.got_subcommand(degree)) {
      Owned out;
      if (dk_status st = dk_degree(read_file(input_path).c_str(), seed, &out.s)) return fail(st);
      emit(out.str(), out_path);
      return 0;
    }
    if (app.got_subcommand(alpha)) {
      Owned out;
      if (dk_status st = dk_alpha(read_file(input_path).c_str(), v, samples, r, seed, &out.s))
        return fail(st);
      emit(out.str(), out_path);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
