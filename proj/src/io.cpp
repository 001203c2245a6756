#include <coxbp/io.hpp>

#include <sstream>

namespace coxbp {

Json to_json(const Element& w) { return Json(w.word_one_based()); }

Json to_json(GenSet J) {
  Json a = Json::array();
  for (int s : J.members()) a.push_back(s + 1);
  return a;
}

Json to_json(const CoxeterSystem& sys) {
  Json m = Json::array();
  for (const auto& row : sys.coxeter_matrix()) {
    Json r = Json::array();
    for (int x : row) r.push_back(x == 0 ? Json(nullptr) : Json(x));  // null = infinity
    m.push_back(r);
  }
  return {{"type", sys.name()}, {"rank", sys.rank()}, {"coxeter_matrix", m}};
}

Json to_json(const Poly& p) { return Json(p); }

Json to_json(const Interval& iv) {
  Json ranks = Json::array();
  for (int i = 0; i < iv.size(); ++i) {
    const int r = iv.rank_of(i);
    while (static_cast<int>(ranks.size()) <= r) ranks.push_back(Json::array());
    ranks[r].push_back(to_json(iv.elements[i]));
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : iv.covers) covers.push_back({to_json(iv.elements[lo]), to_json(iv.elements[hi])});
  return {{"top", to_json(iv.top)},
          {"J", to_json(iv.J)},
          {"size", iv.size()},
          {"poincare", to_json(iv.poincare())},
          {"ranks", ranks},
          {"covers", covers}};
}

Json to_json(const BPFamily& f) {
  Json members = Json::array();
  for (GenSet J : f.members) members.push_back(to_json(J));
  return {{"rank", f.rank}, {"members", members}};
}

Json to_json(const BPPoset& p) {
  Json blocks = Json::array();
  for (GenSet b : p.blocks) blocks.push_back(to_json(b));
  Json rel = Json::array();
  for (const auto& [lo, hi] : p.covers) rel.push_back({lo, hi});
  return {{"blocks", blocks}, {"relations", rel}};
}

Json to_json(const LehmerCode& code) {
  Json entries = Json::array();
  for (std::size_t t = 0; t < code.size(); ++t)
    entries.push_back({{"tuple", code.tuple(t)}, {"word", to_json(code.images[t])}});
  return {{"chains", code.chains}, {"entries", entries}};
}

Json to_json(const SearchResult& r) {
  Json j{{"status", to_string(r.status)}};
  if (r.code) j["code"] = to_json(*r.code);
  j["exhausted"] = r.exhausted;
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  return j;
}

Json to_json(const StructureMatrix& m) {
  Json rows = Json::array(), cols = Json::array();
  for (const auto& u : m.rows) rows.push_back(to_json(u));
  for (const auto& v : m.cols) cols.push_back(to_json(v));
  return {{"w", to_json(m.w)},
          {"k", m.k},
          {"rows", rows},
          {"cols", cols},
          {"entries", m.entries},
          {"upper_unitriangular", m.upper_unitriangular()},
          {"order", m.provenance}};
}

Json to_json(const LemmaReport& r) {
  return {{"system", r.system}, {"lemma", r.lemma}, {"checked", r.checked}, {"violations", r.violations}, {"ok", r.ok()}};
}

Json to_json(const JStar& j, const RootSystem& rs) {
  Json arms = Json::array();
  for (const auto& [c, idx] : j.arms) arms.push_back({{"coefficient", c}, {"root", rs.to_string(idx)}});
  return {{"head", rs.to_string(j.head)}, {"arms", arms}, {"sum", rs.to_string(j.sum)}};
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

} // namespace

std::string to_dot(const Interval& iv) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (int i = 0; i < iv.size(); ++i) os << "  n" << i << " [label=" << quoted(iv.elements[i].to_string()) << "];\n";
  for (const auto& [lo, hi] : iv.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const BPPoset& p) {
  std::ostringstream os;
  os << "digraph bp {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) os << "  b" << i << " [label=" << quoted(p.blocks[i].to_string()) << "];\n";
  for (const auto& [lo, hi] : p.covers) os << "  b" << lo << " -> b" << hi << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace coxbp
