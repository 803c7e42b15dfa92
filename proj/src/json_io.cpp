#include "commgroup/json_io.hpp"

namespace commgroup {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::Parse, "bad integer string " + j.dump());
    }
    return out;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::Parse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::Parse, std::string("bad ") + what + ": " + j.dump());
  }
}

}  // namespace

json to_json(const ModuleElement& m) {
  json terms = json::array();
  for (const auto& [s, c] : m.terms()) {
    terms.push_back({{"i", s.i}, {"j", s.j}, {"k", s.k}, {"c", integer_to_json(c)}});
  }
  return {{"rank", m.rank()}, {"case", to_string(m.module_case())}, {"terms", terms}};
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", integer_to_json(c)}});
  return {{"rank", p.rank()}, {"terms", terms}};
}

json to_json(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(integer_to_json(t));
  return {{"betti", h.betti}, {"torsion", torsion}};
}

ModuleElement module_from_json(const json& j) {
  const int rank = get_as<int>(field(j, "rank"), "rank");
  const std::string kind = get_as<std::string>(field(j, "case"), "case");
  ModuleCase c;
  if (kind == "free") {
    c = ModuleCase::Free;
  } else if (kind == "surface") {
    c = ModuleCase::Surface;
  } else {
    throw Error(ErrorCode::Parse, "case must be \"free\" or \"surface\"");
  }
  ModuleElement out(rank, c);
  for (const auto& t : get_as<json::array_t>(field(j, "terms"), "terms")) {
    TSymbol s{get_as<int>(field(t, "i"), "i"), get_as<int>(field(t, "j"), "j"),
              get_as<std::vector<Exponent>>(field(t, "k"), "k")};
    out.add_term(s, integer_from_json(field(t, "c")));
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly out(get_as<int>(field(j, "rank"), "rank"));
  for (const auto& t : get_as<json::array_t>(field(j, "terms"), "terms")) {
    out.add_term(get_as<std::vector<Exponent>>(field(t, "e"), "e"), integer_from_json(field(t, "c")));
  }
  return out;
}

}  // namespace commgroup
