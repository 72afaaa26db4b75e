// wittflag: condition classification and Witt-ring presentations of complex
// flag varieties, named by a simple Dynkin type and a subset of its nodes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittflag/char_ring.hpp"
#include "wittflag/tables.hpp"

using nlohmann::ordered_json;
using namespace wittflag;

namespace {

constexpr const char* kSchema = "wittflag-report/1";

struct Options {
  bool json = false;
  bool timings = false;
  Limits limits;
};

const RootDatum& parse_type(const std::string& s) {
  auto t = SimpleType::parse(s);
  if (!t)
    throw std::invalid_argument("cannot parse simple type '" + s +
                                "' (expected e.g. A5, B3, E7; rank at most 8)");
  return RootDatum::get(*t);
}

std::string nodes_string(SubsetMask m, int rank) {
  std::string s;
  for (int a : m.nodes(rank)) {
    if (!s.empty()) s += ",";
    s += std::to_string(a);
  }
  return s.empty() ? "-" : s;
}

ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < w.n; ++i) a.push_back(w[i]);
  return a;
}

ordered_json condition_json(const RootDatum& rd, const ConditionVerdict& cv) {
  ordered_json j;
  j["status"] = to_string(cv.status);
  j["parameter_I"] = cv.parameter_I ? ordered_json(cv.parameter_I->mask_string(rd.rank()))
                                    : ordered_json(nullptr);
  ordered_json passing = ordered_json::array();
  for (auto m : cv.passing_I) passing.push_back(m.mask_string(rd.rank()));
  j["passing_I"] = passing;
  ordered_json inter = ordered_json::array();
  for (const auto& oi : cv.orbit_intersections) {
    ordered_json e;
    e["orbit_rep"] = oi.orbit_rep;
    e["orbit_weight"] = weight_json(oi.orbit_weight);
    e["tau"] = weight_json(oi.tau);
    inter.push_back(e);
  }
  j["orbit_intersections"] = inter;
  return j;
}

ordered_json witt_json(const RootDatum& rd, const WittPresentation& wp) {
  ordered_json j;
  j["status"] = to_string(wp.status);
  j["degree1_count"] = wp.degree1_count;
  j["degree3_count"] = wp.degree3_count;
  j["parameter_I"] = wp.parameter_I ? ordered_json(wp.parameter_I->mask_string(rd.rank()))
                                    : ordered_json(nullptr);
  j["provenance"] = to_string(wp.provenance);
  j["note"] = wp.note;
  return j;
}

std::string witt_text(const WittPresentation& wp) {
  if (wp.status == WittStatus::Exterior) {
    std::string s = "exterior algebra on " +
                    std::to_string(wp.degree1_count + wp.degree3_count) + " generator(s)";
    if (wp.degree1_count + wp.degree3_count > 0) {
      s += " (";
      if (wp.degree1_count) s += std::to_string(wp.degree1_count) + " of degree 1";
      if (wp.degree1_count && wp.degree3_count) s += ", ";
      if (wp.degree3_count) s += std::to_string(wp.degree3_count) + " of degree 3";
      s += ")";
    }
    return s;
  }
  if (wp.status == WittStatus::KnownNonExterior)
    return "not an exterior algebra on odd-degree generators";
  return "unknown";
}

void emit(const Options& opt, ordered_json& report, const std::string& text, double seconds) {
  if (opt.timings) report["timing"] = {{"seconds", seconds}};
  if (opt.json) {
    printf("%s\n", report.dump(2).c_str());
  } else {
    fputs(text.c_str(), stdout);
    if (opt.timings) printf("elapsed: %.3fs\n", seconds);
  }
}

int cmd_classify(const Options& opt, const std::string& type_str) {
  auto t0 = std::chrono::steady_clock::now();
  const RootDatum& rd = parse_type(type_str);
  ordered_json report;
  report["schema"] = kSchema;
  report["query"] = {{"command", "classify"}, {"type", rd.type().str()}};
  std::string text = "flag varieties under " + rd.type().str() +
                     " (one representative per equivalence class of node subsets)\n";
  ordered_json rows = ordered_json::array();
  for (SubsetMask h : subsets_up_to_equivalence(rd)) {
    ConditionVerdict cv = classify_condition(rd, h);
    WittPresentation wp = witt_presentation(rd, h, opt.limits);
    ordered_json row;
    row["subset"] = h.mask_string(rd.rank());
    row["nodes"] = nodes_string(h, rd.rank());
    row["connected"] = rd.connected_subdiagram(h);
    row["condition"] = condition_json(rd, cv);
    row["witt"] = witt_json(rd, wp);
    rows.push_back(row);
    char buf[256];
    snprintf(buf, sizeof buf, "  %-10s nodes %-16s %-12s %s\n", h.mask_string(rd.rank()).c_str(),
             nodes_string(h, rd.rank()).c_str(), to_string(cv.status), witt_text(wp).c_str());
    text += buf;
  }
  report["classes"] = rows;
  text += std::to_string(rows.size()) + " classes\n";
  emit(opt, report, text,
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return 0;
}

int cmd_witt(const Options& opt, const std::string& type_str, const std::string& subset_str) {
  auto t0 = std::chrono::steady_clock::now();
  const RootDatum& rd = parse_type(type_str);
  SubsetMask h = SubsetMask::parse(subset_str, rd.rank());
  ConditionVerdict cv = classify_condition(rd, h);
  WittPresentation wp = witt_presentation(rd, h, opt.limits);
  ordered_json report;
  report["schema"] = kSchema;
  report["query"] = {{"command", "witt"},
                     {"type", rd.type().str()},
                     {"subset", h.mask_string(rd.rank())}};
  report["condition"] = condition_json(rd, cv);
  report["witt"] = witt_json(rd, wp);
  std::string text;
  text += "type:      " + rd.type().str() + "\n";
  text += "subset:    " + h.mask_string(rd.rank()) + " (nodes " + nodes_string(h, rd.rank()) +
          ")\n";
  text += "condition: " + std::string(to_string(cv.status));
  if (cv.parameter_I) text += ", I = " + cv.parameter_I->mask_string(rd.rank());
  if (cv.passing_I.size() > 1) {
    text += " (all passing I:";
    for (auto m : cv.passing_I) text += " " + m.mask_string(rd.rank());
    text += ")";
  }
  text += "\n";
  text += "witt ring: " + witt_text(wp);
  if (wp.parameter_I) text += ", I = " + wp.parameter_I->mask_string(rd.rank());
  text += "\n";
  if (!wp.note.empty()) text += "note:      " + wp.note + "\n";
  if (!cv.orbit_intersections.empty()) {
    text += "orbit intersections with the fixed monoid:\n";
    for (const auto& oi : cv.orbit_intersections)
      text += "  W." + oi.orbit_weight.str() + " -> " + oi.tau.str() + "\n";
  }
  emit(opt, report, text,
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return 0;
}

int cmd_table(const Options& opt, const std::string& name) {
  auto t0 = std::chrono::steady_clock::now();
  Table t = make_table(name, opt.limits);
  ordered_json report;
  report["schema"] = kSchema;
  report["query"] = {{"command", "table"}, {"name", name}};
  report["header"] = t.header;
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  report["rows"] = rows;
  emit(opt, report, render_tsv(t),
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return 0;
}

int cmd_involution(const Options& opt, const std::string& type_str,
                   const std::string& subset_str) {
  auto t0 = std::chrono::steady_clock::now();
  const RootDatum& rd = parse_type(type_str);
  SubsetMask h = SubsetMask::parse(subset_str, rd.rank());
  DegreeSubsetEvidence ev =
      find_degree_subset_I_with_evidence(rd, h, opt.limits.conjugacy_budget);
  ordered_json report;
  report["schema"] = kSchema;
  report["query"] = {{"command", "involution"},
                     {"type", rd.type().str()},
                     {"subset", h.mask_string(rd.rank())}};
  report["ell_plus"] = ev.ell_plus;
  report["ell_minus"] = ev.ell_minus;
  report["I"] = ev.i_set.mask_string(rd.rank());
  report["conjugacy_class_size"] = ev.class_size;
  report["conjugating_word"] = ev.word;
  std::string text;
  text += "type:              " + rd.type().str() + "\n";
  text += "subset:            " + h.mask_string(rd.rank()) + " (nodes " +
          nodes_string(h, rd.rank()) + ")\n";
  text += "w_o^H eigenspaces: ell+ = " + std::to_string(ev.ell_plus) +
          ", ell- = " + std::to_string(ev.ell_minus) + "\n";
  text += "I:                 " + ev.i_set.mask_string(rd.rank()) + " (nodes " +
          nodes_string(ev.i_set, rd.rank()) + "), w_o^H conjugate to w_o w_o^I\n";
  text += "class size:        " + std::to_string(ev.class_size) + "\n";
  text += "conjugating word:  ";
  if (ev.word.empty()) text += "(identity)";
  for (size_t i = 0; i < ev.word.size(); ++i)
    text += (i ? " s" : "s") + std::to_string(ev.word[i]);
  text += "\n";
  emit(opt, report, text,
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dynkin-diagram combinatorics for Witt rings of complex flag varieties"};
  app.require_subcommand(1);
  Options opt;

  app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
  app.add_flag("--timings", opt.timings, "include wall-clock timing in the output");
  app.add_option("--budget", opt.limits.conjugacy_budget,
                 "conjugacy-search budget (elements visited)")
      ->envname("WITTFLAG_BUDGET");
  app.add_option("--threads", opt.limits.threads, "internal parallelism cap")
      ->envname("WITTFLAG_THREADS");
  app.add_option("--degree-cap", opt.limits.degree_cap,
                 "degree cap for free-generation checks");
  app.add_option("--product-cap", opt.limits.product_pair_cap,
                 "pairwise-term cap for character products");

  std::string type_str, subset_str, table_name;
  auto* classify = app.add_subcommand("classify", "list the flag varieties under a simple type");
  classify->add_option("type", type_str, "simple type, e.g. F4")->required();
  auto* witt = app.add_subcommand("witt", "condition verdict and Witt presentation");
  witt->add_option("type", type_str, "simple type, e.g. F4")->required();
  witt->add_option("subset", subset_str, "node subset: '2,3,4', mask 'o***', or 'none'")
      ->required();
  auto* table = app.add_subcommand("table", "regenerate a survey table");
  table->add_option("name", table_name, "results-connected | types | f4-cone | f4-orbits")
      ->required();
  auto* involution = app.add_subcommand("involution", "conjugacy data for w_o^H");
  involution->add_option("type", type_str, "simple type, e.g. B4")->required();
  involution->add_option("subset", subset_str, "node subset of H")->required();

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return cmd_classify(opt, type_str);
    if (witt->parsed()) return cmd_witt(opt, type_str, subset_str);
    if (table->parsed()) return cmd_table(opt, table_name);
    if (involution->parsed()) return cmd_involution(opt, type_str, subset_str);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const BudgetExceeded& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const TheoremViolation& e) {
    fprintf(stderr, "theorem-violation diagnostic: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
