#include "wittflag/tables.hpp"

#include <algorithm>

#include "wittflag/char_ring.hpp"

namespace wittflag {

std::string render_tsv(const Table& t) {
  std::string out;
  out += "#";
  for (size_t i = 0; i < t.header.size(); ++i) {
    out += i ? "\t" : " ";
    out += t.header[i];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += "\t";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string join_weights(const std::vector<Weight>& ws, const std::string& sep = ";") {
  std::string s;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) s += sep;
    s += ws[i].str();
  }
  return s.empty() ? "-" : s;
}

std::string paper_mark(const RootDatum& rd, SubsetMask h, const ConditionVerdict& cv,
                       const WittPresentation& wp) {
  (void)rd;
  (void)h;
  if (cv.status == ConditionStatus::SingleCell) return "sc";
  if (cv.status == ConditionStatus::OrbitBasis) return "ob";
  if (wp.status == WittStatus::Exterior) return "ext";
  if (wp.status == WittStatus::KnownNonExterior) return "x";
  return "?";
}

std::string degrees_string(const WittPresentation& wp) {
  if (wp.status != WittStatus::Exterior) return to_string(wp.status);
  return "ext(deg1=" + std::to_string(wp.degree1_count) +
         ",deg3=" + std::to_string(wp.degree3_count) + ")";
}

// subset classes of F_4 where the sign test fails (the fixed-cone tables)
std::vector<SubsetMask> f4_special_classes() {
  const RootDatum& rd = RootDatum::get({Family::F, 4});
  std::vector<SubsetMask> out;
  for (SubsetMask h : subsets_up_to_equivalence(rd)) {
    if (h == SubsetMask::full(4)) continue;
    if (!check_single_cell(rd, h)) out.push_back(h);
  }
  return out;
}

}  // namespace

Table table_results_connected(const Limits& limits) {
  Table t;
  t.name = "results-connected";
  t.header = {"type", "subset", "mark", "condition", "witt"};
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    SimpleType ty = *SimpleType::parse(name);
    const RootDatum& rd = RootDatum::get(ty);
    for (SubsetMask h : subsets_up_to_equivalence(rd)) {
      if (h == SubsetMask::full(rd.rank())) continue;  // G/G is a point
      if (!rd.connected_subdiagram(h)) continue;
      ConditionVerdict cv = classify_condition(rd, h);
      WittPresentation wp = witt_presentation(rd, h, limits);
      t.rows.push_back({ty.str(), h.mask_string(rd.rank()), paper_mark(rd, h, cv, wp),
                        to_string(cv.status), degrees_string(wp)});
    }
  }
  return t;
}

Table table_types() {
  Table t;
  t.name = "types";
  t.header = {"type", "nodes"};  // x complex, o quaternionic, * real
  for (SimpleType ty : all_simple_types()) {
    const RootDatum& rd = RootDatum::get(ty);
    std::string marks;
    for (int a = 1; a <= rd.rank(); ++a) {
      RepType r = fundamental_rep_type(rd, a);
      marks += r.tag == RepType::ComplexPair ? 'x' : r.tag == RepType::Quaternionic ? 'o' : '*';
    }
    t.rows.push_back({ty.str(), marks});
  }
  return t;
}

Table table_f4_cone() {
  const RootDatum& rd = RootDatum::get({Family::F, 4});
  Table t;
  t.name = "f4-cone";
  t.header = {"subset", "[H]w1", "[H]w2", "[H]w3", "[H]w4", "monoid-generators", "free",
              "relations"};
  for (SubsetMask h : f4_special_classes()) {
    Involution dual = duality(rd, h);
    std::vector<std::string> row{h.mask_string(4)};
    for (int i = 1; i <= 4; ++i) row.push_back(dual.element.apply(rd.fundamental_weight(i)).str());
    FixedConeMonoid m = hilbert_basis(rd, h);
    row.push_back(join_weights(m.hilbert_basis));
    row.push_back(m.is_free ? "yes" : "no");
    std::string rels;
    for (const auto& rel : m.relations) {
      if (!rels.empty()) rels += ";";
      std::string lhs, rhs;
      for (size_t k = 0; k < rel.size(); ++k) {
        if (rel[k] == 0) continue;
        std::string term = (std::llabs(rel[k]) == 1 ? "" : std::to_string(std::llabs(rel[k]))) +
                           "b" + std::to_string(k + 1);
        if (rel[k] > 0)
          lhs += (lhs.empty() ? "" : "+") + term;
        else
          rhs += (rhs.empty() ? "" : "+") + term;
      }
      rels += lhs + "=" + rhs;
    }
    row.push_back(rels.empty() ? "-" : rels);
    t.rows.push_back(row);
  }
  return t;
}

Table table_f4_orbits() {
  const RootDatum& rd = RootDatum::get({Family::F, 4});
  Table t;
  t.name = "f4-orbits";
  t.header = {"subset", "W.w1", "W.w2", "W.w3", "W.w4"};
  for (SubsetMask h : f4_special_classes()) {
    std::vector<std::string> row{h.mask_string(4)};
    for (int i = 1; i <= 4; ++i) {
      Restriction r = restrict_and_decompose(rd, h, rd.fundamental_weight(i));
      row.push_back(join_weights(r.fixed, "|"));
    }
    t.rows.push_back(row);
  }
  return t;
}

std::vector<std::string> table_names() {
  return {"results-connected", "types", "f4-cone", "f4-orbits"};
}

Table make_table(const std::string& name, const Limits& limits) {
  if (name == "results-connected") return table_results_connected(limits);
  if (name == "types") return table_types();
  if (name == "f4-cone") return table_f4_cone();
  if (name == "f4-orbits") return table_f4_orbits();
  throw std::invalid_argument("unknown table '" + name +
                              "'; available: results-connected, types, f4-cone, f4-orbits");
}

}  // namespace wittflag
