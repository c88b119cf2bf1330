#pragma once

// JSON forms of algebra elements and classes. Group elements print as
// one-line permutations in type A and as canonical reduced words otherwise.

#include "csmkit/csm.hpp"
#include "csmkit/fk.hpp"
#include "json.hpp"

namespace csmkit {

nlohmann::ordered_json element_to_json(const WeylGroup& group, WeylElem w);

// {"basis": "nilhecke", "terms": [{"w": ..., "coeff": poly}]}
nlohmann::ordered_json to_json(const WeylGroup& group, const NilHeckeElem& a);
// {"basis": "word", "terms": [{"word": [...], "coeff": poly}]}
nlohmann::ordered_json to_json(const WordAlgElem& a);
// {"basis": "schubert", "terms": [{"w": ..., "coeff": q}]}
nlohmann::ordered_json to_json(const WeylGroup& group, const HomologyClass& xi);
// {"basis": "group", "terms": [{"w": ..., "coeff": n}]}
nlohmann::ordered_json to_json(const WeylGroup& group, const GroupVector& xi);

NilHeckeElem nilhecke_from_json(const WeylGroup& group, const nlohmann::json& doc);

}  // namespace csmkit
