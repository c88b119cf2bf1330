#pragma once

// Per-element tables behind the exhaustive sweeps. Every kernel has a serial
// reference and an OpenMP version parallel over w; both return the same
// table, indexed by WeylElem id.

#include <vector>

#include "csmkit/csm.hpp"
#include "csmkit/fk.hpp"
#include "csmkit/nilhecke.hpp"
#include "csmkit/wordalg.hpp"

namespace csmkit {

enum class Exec { serial, parallel };

// Worker count for Exec::parallel; k <= 0 keeps the OpenMP default.
void set_workers(int k);
int workers();

std::vector<HomologyClass> csm_table(const WeylGroup& group, Exec exec);
std::vector<NilHeckeElem> equivariant_table(const WeylGroup& group, Exec exec);
std::vector<NilHeckeElem> localization_table(const WeylGroup& group, Exec exec);
std::vector<NilHeckeTensorElem> coproduct_table(const WeylGroup& group, Exec exec);
// Word-level coefficients of the canonical reduced word of each w.
std::vector<WordCoproduct> word_coproduct_table(const WeylGroup& group, Exec exec);
// Entry w.id * |W| + v.id holds w acted on by S_v(theta).
std::vector<GroupVector> fk_table(const FKContext& ctx, FKMode mode, Exec exec);

}  // namespace csmkit
