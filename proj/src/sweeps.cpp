#include "csmkit/sweeps.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

namespace csmkit {

namespace {

int worker_count = 0;

// Runs body(k) for k in [0, count), rethrowing the first exception after the
// loop since none may escape an OpenMP region.
template <typename Body>
void for_each_index(std::size_t count, Exec exec, Body body) {
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int threads = worker_count > 0 ? worker_count : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <typename T, typename Fn>
std::vector<T> per_element(const WeylGroup& group, Exec exec, Fn fn) {
  std::vector<T> out(group.size());
  for_each_index(group.size(), exec, [&](std::size_t k) {
    out[k] = fn(WeylElem{static_cast<std::uint32_t>(k)});
  });
  return out;
}

}  // namespace

void set_workers(int k) { worker_count = k; }
int workers() { return worker_count > 0 ? worker_count : omp_get_max_threads(); }

std::vector<HomologyClass> csm_table(const WeylGroup& group, Exec exec) {
  return per_element<HomologyClass>(group, exec, [&](WeylElem w) { return csm_cell(group, w); });
}

std::vector<NilHeckeElem> equivariant_table(const WeylGroup& group, Exec exec) {
  return per_element<NilHeckeElem>(group, exec,
                                   [&](WeylElem w) { return csm_cell_equivariant(group, w); });
}

std::vector<NilHeckeElem> localization_table(const WeylGroup& group, Exec exec) {
  return per_element<NilHeckeElem>(group, exec, [&](WeylElem w) { return weyl_as_nilhecke(group, w); });
}

std::vector<NilHeckeTensorElem> coproduct_table(const WeylGroup& group, Exec exec) {
  return per_element<NilHeckeTensorElem>(group, exec, [&](WeylElem w) { return coproduct_lr(group, w); });
}

std::vector<WordCoproduct> word_coproduct_table(const WeylGroup& group, Exec exec) {
  return per_element<WordCoproduct>(group, exec, [&](WeylElem w) {
    return word_coproduct(group.cartan(), group.reduced_word(w));
  });
}

std::vector<GroupVector> fk_table(const FKContext& ctx, FKMode mode, Exec exec) {
  const std::size_t size = ctx.group().size();
  std::vector<GroupVector> out(size * size);
  for_each_index(size, exec, [&](std::size_t w) {
    for (std::size_t v = 0; v < size; ++v) {
      out[w * size + v] = ctx.schubert_act(WeylElem{static_cast<std::uint32_t>(w)},
                                           WeylElem{static_cast<std::uint32_t>(v)}, mode);
    }
  });
  return out;
}

}  // namespace csmkit
