#pragma once

#include <coxbp/bp.hpp>
#include <coxbp/bruhat.hpp>
#include <coxbp/lehmer.hpp>
#include <coxbp/roots.hpp>
#include <coxbp/schubert.hpp>

#include <json.hpp>

#include <string>

namespace coxbp {

using Json = nlohmann::ordered_json;

Json to_json(const Element& w);  // 1-based word
Json to_json(GenSet J);          // 1-based generators
Json to_json(const CoxeterSystem& sys);
Json to_json(const Poly& p);
Json to_json(const Interval& iv);
Json to_json(const BPFamily& f);
Json to_json(const BPPoset& p);
Json to_json(const LehmerCode& code);
Json to_json(const SearchResult& r);
Json to_json(const StructureMatrix& m);
Json to_json(const LemmaReport& r);
Json to_json(const JStar& j, const RootSystem& rs);

std::string to_dot(const Interval& iv);
std::string to_dot(const BPPoset& p);

} // namespace coxbp
