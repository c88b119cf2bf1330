#include "csmkit/serialize.hpp"

#include "csmkit/error.hpp"

namespace csmkit {

using nlohmann::ordered_json;

ordered_json element_to_json(const WeylGroup& group, WeylElem w) {
  return group.type_a() ? ordered_json(group.permutation(w)) : ordered_json(group.reduced_word(w));
}

ordered_json to_json(const WeylGroup& group, const NilHeckeElem& a) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, f] : a.terms()) {
    terms.push_back({{"w", element_to_json(group, w)}, {"coeff", to_json(f)}});
  }
  return {{"basis", "nilhecke"}, {"terms", std::move(terms)}};
}

ordered_json to_json(const WordAlgElem& a) {
  ordered_json terms = ordered_json::array();
  for (const auto& [word, f] : a.terms()) terms.push_back({{"word", word}, {"coeff", to_json(f)}});
  return {{"basis", "word"}, {"terms", std::move(terms)}};
}

ordered_json to_json(const WeylGroup& group, const HomologyClass& xi) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : xi.terms()) {
    terms.push_back({{"w", element_to_json(group, w)}, {"coeff", rational_to_json(c)}});
  }
  return {{"basis", "schubert"}, {"terms", std::move(terms)}};
}

ordered_json to_json(const WeylGroup& group, const GroupVector& xi) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : xi.terms()) terms.push_back({{"w", element_to_json(group, w)}, {"coeff", c}});
  return {{"basis", "group"}, {"terms", std::move(terms)}};
}

NilHeckeElem nilhecke_from_json(const WeylGroup& group, const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("basis", "") != "nilhecke" || !doc.contains("terms")) {
    throw InvalidInput("expected a nil-Hecke element document");
  }
  NilHeckeElem out(group.rank());
  for (const auto& term : doc.at("terms")) {
    const auto key = term.at("w").get<std::vector<int>>();
    const WeylElem w = group.type_a() ? group.from_permutation(key) : group.from_word(key);
    out.add(w, root_poly_from_json(term.at("coeff"), group.rank()));
  }
  return out;
}

}  // namespace csmkit
