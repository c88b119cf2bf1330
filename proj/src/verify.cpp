#include "csmkit/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "csmkit/error.hpp"
#include "csmkit/serialize.hpp"

namespace csmkit {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;
using ElemPair = std::pair<WeylElem, WeylElem>;

ordered_json scope_of(const WeylGroup& group) {
  ordered_json scope = {{"type", group.cartan().type_label}, {"rank", group.rank()}, {"order", group.size()}};
  if (group.type_a()) scope["n"] = group.permutation_degree();
  return scope;
}

void require_type_a(const WeylGroup& group, std::string_view what) {
  if (!group.type_a()) throw InvalidInput(std::string(what) + " is only defined in type A");
}

std::string text(const Rational& q) { return rational_to_string(q); }

// Group element a word multiplies to, when the word is reduced.
std::optional<WeylElem> reduced_element(const WeylGroup& group, const Word& word) {
  const WeylElem w = group.from_word(word);
  if (group.length(w) != static_cast<int>(word.size())) return std::nullopt;
  return w;
}

// Sum of the word-level coefficients over first in R(u), second in R(v).
std::map<ElemPair, RootPoly> lr_aggregates(const WeylGroup& group, const WordCoproduct& wc) {
  std::map<ElemPair, RootPoly> out;
  for (const auto& [key, coeff] : wc.terms()) {
    const auto u = reduced_element(group, key.first);
    const auto v = reduced_element(group, key.second);
    if (!u || !v) continue;
    out.try_emplace({*u, *v}, group.rank()).first->second += coeff;
  }
  return out;
}

// c_T(w;v) by aggregation: first in R(v), any second.
std::map<WeylElem, RootPoly> ct_aggregates(const WeylGroup& group, const WordCoproduct& wc) {
  std::map<WeylElem, RootPoly> out;
  for (const auto& [key, coeff] : wc.terms()) {
    if (const auto v = reduced_element(group, key.first)) {
      out.try_emplace(*v, group.rank()).first->second += coeff;
    }
  }
  return out;
}

// f(w,v,u) by aggregation, keyed (v, u).
std::map<ElemPair, Rational> f_aggregates(const WeylGroup& group, const WordCoproduct& wc) {
  std::map<ElemPair, Rational> out;
  const std::size_t m = wc.word().size();
  for (const auto& [key, coeff] : wc.terms()) {
    if (key.first.size() + key.second.size() != m) continue;
    const auto v = reduced_element(group, key.first);
    if (!v) continue;
    out[{*v, group.from_word(key.second)}] += coeff.constant_term();
  }
  return out;
}

template <typename Map, typename Key>
auto lookup_or(const Map& map, const Key& key, typename Map::mapped_type fallback) {
  auto it = map.find(key);
  return it == map.end() ? fallback : it->second;
}

SweepReport verify_main(const WeylGroup& group, Exec exec) {
  require_type_a(group, "identity main");
  SweepReport report;
  const auto csm = csm_table(group, exec);
  FKContext ctx(group);
  const auto fk = fk_table(ctx, FKMode::extended, exec);
  const std::size_t size = group.size();
  for (WeylElem w : group.elements()) {
    for (WeylElem v : group.elements()) {
      ++report.checked;
      const Rational c = csm[w.id].coefficient(v);
      const long psi_value = psi(fk[w.id * size + v.id]);
      if (c != Rational(static_cast<signed long>(psi_value))) {
        report.violations.push_back({{"w", group.name(w)}, {"v", group.name(v)}, {"c", text(c)}, {"psi", psi_value}});
      }
    }
  }
  return report;
}

SweepReport verify_lr(const WeylGroup& group, Exec exec) {
  require_type_a(group, "identity lr");
  SweepReport report;
  const auto coproducts = coproduct_table(group, exec);
  const auto words = word_coproduct_table(group, exec);
  FKContext ctx(group);
  const auto fk = fk_table(ctx, FKMode::bruhat, exec);
  const std::size_t size = group.size();
  long uv_mismatch = 0;
  long vu_mismatch = 0;
  for (WeylElem w : group.elements()) {
    const auto aggregated = lr_aggregates(group, words[w.id]);
    for (WeylElem u : group.elements()) {
      for (WeylElem v : group.elements()) {
        if (group.length(w) != group.length(u) + group.length(v)) continue;
        ++report.checked;
        // coefficient of u in w . S_v
        const Rational fk_value = static_cast<signed long>(fk[w.id * size + v.id].coefficient(u));
        const RootPoly p_uv = coproducts[w.id].coefficient(u, v);
        const RootPoly p_vu = coproducts[w.id].coefficient(v, u);
        const RootPoly word_uv = lookup_or(aggregated, ElemPair{u, v}, RootPoly(group.rank()));
        if (!(p_uv == constant_poly(group.rank(), fk_value))) ++uv_mismatch;
        if (!(p_vu == constant_poly(group.rank(), fk_value))) ++vu_mismatch;
        if (!(p_uv == constant_poly(group.rank(), fk_value)) || !(word_uv == p_uv)) {
          report.violations.push_back({{"w", group.name(w)},
                                       {"u", group.name(u)},
                                       {"v", group.name(v)},
                                       {"fk", text(fk_value)},
                                       {"nilhecke", to_text(p_uv)},
                                       {"word", to_text(word_uv)}});
        }
      }
    }
  }
  report.details["orientation"] = {{"coefficient of u in w.S_v vs p^w_{u,v}", uv_mismatch},
                                   {"coefficient of u in w.S_v vs p^w_{v,u}", vu_mismatch}};
  return report;
}

SweepReport verify_ct(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto eq = equivariant_table(group, exec);
  const auto words = word_coproduct_table(group, exec);
  for (WeylElem w : group.elements()) {
    const auto aggregated = ct_aggregates(group, words[w.id]);
    for (WeylElem v : group.elements()) {
      ++report.checked;
      const RootPoly direct = eq[w.id].coefficient(v);
      const RootPoly agg = lookup_or(aggregated, v, RootPoly(group.rank()));
      if (!(direct == agg)) {
        report.violations.push_back(
            {{"w", group.name(w)}, {"v", group.name(v)}, {"product", to_text(direct)}, {"aggregate", to_text(agg)}});
      }
    }
  }
  return report;
}

SweepReport verify_top(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto eq = equivariant_table(group, exec);
  const auto loc = localization_table(group, exec);
  for (WeylElem w : group.elements()) {
    for (WeylElem v : group.elements()) {
      ++report.checked;
      const RootPoly top = eq[w.id].coefficient(v).homogeneous_part(group.length(v));
      const RootPoly sigma = loc[w.id].coefficient(v);
      if (!(top == sigma)) {
        report.violations.push_back(
            {{"w", group.name(w)}, {"v", group.name(v)}, {"top", to_text(top)}, {"localization", to_text(sigma)}});
      }
    }
  }
  return report;
}

SweepReport verify_fwvu(const WeylGroup& group, Exec exec) {
  require_type_a(group, "identity fwvu");
  SweepReport report;
  const auto words = word_coproduct_table(group, exec);
  FKContext ctx(group);
  const auto fk = fk_table(ctx, FKMode::extended, exec);
  const std::size_t size = group.size();
  for (WeylElem w : group.elements()) {
    const auto aggregated = f_aggregates(group, words[w.id]);
    for (WeylElem v : group.elements()) {
      const GroupVector& action = fk[w.id * size + v.id];
      for (WeylElem u : group.elements()) {
        ++report.checked;
        const Rational from_fk = static_cast<signed long>(action.coefficient(u));
        const Rational from_words = lookup_or(aggregated, ElemPair{v, u}, Rational(0));
        if (from_fk != from_words) {
          report.violations.push_back({{"w", group.name(w)},
                                       {"v", group.name(v)},
                                       {"u", group.name(u)},
                                       {"fk", text(from_fk)},
                                       {"aggregate", text(from_words)}});
        }
      }
    }
  }
  return report;
}

SweepReport verify_pushforward(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto csm = csm_table(group, exec);
  for (int k = 1; k <= group.rank(); ++k) {
    std::vector<int> parabolic;
    for (int i = 1; i <= group.rank(); ++i) {
      if (i != k) parabolic.push_back(i);
    }
    for (WeylElem w : group.elements()) {
      ++report.checked;
      const WeylElem rep = minimal_coset_rep(group, w, parabolic);
      if (!(parabolic_pushforward(group, csm[w.id], parabolic) ==
            parabolic_pushforward(group, csm[rep.id], parabolic))) {
        report.violations.push_back({{"parabolic", parabolic}, {"w", group.name(w)}, {"representative", group.name(rep)}});
      }
    }
  }
  return report;
}

SweepReport verify_redword(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto csm = csm_table(group, exec);
  const auto eq = equivariant_table(group, exec);
  const auto loc = localization_table(group, exec);
  const auto coproducts = coproduct_table(group, exec);
  for (WeylElem w : group.elements()) {
    if (!(specialize_zero(eq[w.id]) == csm[w.id])) {
      report.violations.push_back({{"w", group.name(w)}, {"check", "specialization"}});
    }
    for (const Word& word : group.reduced_words(w)) {
      ++report.checked;
      std::vector<std::string> failed;
      if (!(csm_cell_word(group, word) == csm[w.id])) failed.push_back("csm");
      if (!(csm_cell_equivariant_word(group, word) == eq[w.id])) failed.push_back("equivariant");
      if (!(word_as_nilhecke(group, word) == loc[w.id])) failed.push_back("group element");
      if (!(coproduct_of_word(group, word) == coproducts[w.id])) failed.push_back("coproduct");
      if (!failed.empty()) report.violations.push_back({{"w", group.name(w)}, {"word", word}, {"failed", failed}});
    }
  }
  return report;
}

SweepReport conjecture_csm_positivity(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto csm = csm_table(group, exec);
  for (WeylElem w : group.elements()) {
    for (WeylElem v : group.elements()) {
      if (!group.bruhat_leq(v, w)) continue;
      ++report.checked;
      const Rational c = csm[w.id].coefficient(v);
      if (c <= 0) {
        // Recompute along every reduced word and through the equivariant product.
        ordered_json trace = ordered_json::array();
        for (const Word& word : group.reduced_words(w)) {
          trace.push_back({{"word", word}, {"c", text(csm_cell_word(group, word).coefficient(v))}});
        }
        report.violations.push_back({{"w", group.name(w)},
                                     {"v", group.name(v)},
                                     {"c", text(c)},
                                     {"equivariant", to_text(csm_cell_equivariant(group, w).coefficient(v))},
                                     {"trace", std::move(trace)}});
      }
    }
  }
  report.details["pairs_v_le_w"] = report.checked;
  return report;
}

SweepReport conjecture_refined(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto csm = csm_table(group, exec);
  const auto coproducts = coproduct_table(group, exec);
  long tight = 0;
  for (WeylElem w : group.elements()) {
    std::map<WeylElem, Rational> sums;  // v -> sum_u p^w_{u,v}
    for (const auto& [key, p] : coproducts[w.id].terms()) sums[key.second] += p.constant_term();
    for (WeylElem v : group.elements()) {
      if (!group.bruhat_leq(v, w)) continue;
      ++report.checked;
      const Rational c = csm[w.id].coefficient(v);
      const Rational bound = lookup_or(sums, v, Rational(0));
      if (c == bound) ++tight;
      if (c < bound) {
        ordered_json terms = ordered_json::array();
        for (const auto& [key, p] : coproducts[w.id].terms()) {
          if (key.second == v && p.constant_term() != 0) {
            terms.push_back({{"u", group.name(key.first)}, {"p", text(p.constant_term())}});
          }
        }
        report.violations.push_back({{"w", group.name(w)},
                                     {"v", group.name(v)},
                                     {"c", text(c)},
                                     {"sum_p", text(bound)},
                                     {"trace", std::move(terms)}});
      }
    }
  }
  report.details["pairs_v_le_w"] = report.checked;
  report.details["equality_cases"] = tight;
  return report;
}

SweepReport conjecture_f_nonneg(const WeylGroup& group, Exec exec) {
  require_type_a(group, "conjecture f-nonneg");
  SweepReport report;
  FKContext ctx(group);
  const auto fk = fk_table(ctx, FKMode::extended, exec);
  const std::size_t size = group.size();
  ordered_json table = ordered_json::array();
  for (WeylElem w : group.elements()) {
    for (WeylElem v : group.elements()) {
      const GroupVector& action = fk[w.id * size + v.id];
      report.checked += static_cast<long>(size);
      for (const auto& [u, f] : action.terms()) {
        ordered_json row = {{"w", group.name(w)}, {"v", group.name(v)}, {"u", group.name(u)}, {"f", f}};
        if (f < 0) {
          row["trace"] = to_json(group, action);
          report.violations.push_back(row);
        }
        table.push_back(std::move(row));
      }
    }
  }
  report.details["nonzero"] = table.size();
  report.details["table"] = std::move(table);
  return report;
}

SweepReport conjecture_equivariant_positivity(const WeylGroup& group, Exec exec) {
  SweepReport report;
  const auto eq = equivariant_table(group, exec);
  for (WeylElem w : group.elements()) {
    for (const auto& [v, f] : eq[w.id].terms()) {
      ++report.checked;
      if (!f.has_integer_coefficients() || !f.has_nonnegative_coefficients()) {
        report.violations.push_back({{"w", group.name(w)}, {"v", group.name(v)}, {"c_T", to_text(f)}});
      }
    }
  }
  return report;
}

using Runner = std::function<SweepReport(const WeylGroup&, Exec)>;

const std::vector<std::pair<std::string, Runner>>& identity_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"main", verify_main}, {"lr", verify_lr},
      {"ct", verify_ct},     {"top", verify_top},
      {"fwvu", verify_fwvu}, {"pushforward", verify_pushforward},
      {"redword", verify_redword}};
  return table;
}

const std::vector<std::pair<std::string, Runner>>& conjecture_table() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"csm-positivity", conjecture_csm_positivity},
      {"refined", conjecture_refined},
      {"f-nonneg", conjecture_f_nonneg},
      {"equivariant-positivity", conjecture_equivariant_positivity}};
  return table;
}

std::vector<std::string> names_of(const std::vector<std::pair<std::string, Runner>>& table) {
  std::vector<std::string> out;
  for (const auto& entry : table) out.push_back(entry.first);
  return out;
}

SweepReport run(const std::vector<std::pair<std::string, Runner>>& table, std::string_view name,
                const WeylGroup& group, Exec exec, bool conjecture) {
  for (const auto& [key, runner] : table) {
    if (key != name) continue;
    const auto start = Clock::now();
    SweepReport report = runner(group, exec);
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    report.identity = key;
    report.scope = scope_of(group);
    report.conjecture = conjecture;
    return report;
  }
  throw InvalidInput("unknown " + std::string(conjecture ? "conjecture" : "identity") + " '" +
                     std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = names_of(identity_table());
  return names;
}

const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> names = names_of(conjecture_table());
  return names;
}

SweepReport verify_identity(std::string_view identity, const WeylGroup& group, Exec exec) {
  return run(identity_table(), identity, group, exec, false);
}

SweepReport check_conjecture(std::string_view name, const WeylGroup& group, Exec exec) {
  return run(conjecture_table(), name, group, exec, true);
}

ordered_json to_json(const SweepReport& report) {
  ordered_json doc = {{"identity", report.identity},
                      {"scope", report.scope},
                      {"checked", report.checked},
                      {"violations", report.violations},
                      {"elapsed_ms", report.elapsed_ms},
                      {"version", report.version},
                      {"status", report.status()}};
  if (report.conjecture) doc["conjecture"] = report.passed() ? "holds" : "counterexample";
  for (const auto& [key, value] : report.details.items()) doc[key] = value;
  return doc;
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "identity,type,order,checked,violations,status,elapsed_ms,version\n";
  out << report.identity << ',' << report.scope.value("type", "") << ',' << report.scope.value("order", 0)
      << ',' << report.checked << ',' << report.violations.size() << ',' << report.status() << ','
      << report.elapsed_ms << ',' << report.version << '\n';
  return out.str();
}

std::string to_markdown(const SweepReport& report) {
  std::ostringstream out;
  out << "## " << (report.conjecture ? "conjecture " : "verify ") << report.identity << "\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| type | " << report.scope.value("type", "") << " |\n";
  out << "| group order | " << report.scope.value("order", 0) << " |\n";
  out << "| checked | " << report.checked << " |\n";
  out << "| violations | " << report.violations.size() << " |\n";
  out << "| status | " << report.status() << " |\n";
  if (report.conjecture) out << "| conjecture | " << (report.passed() ? "holds" : "counterexample") << " |\n";
  out << "| elapsed | " << report.elapsed_ms << " ms |\n";
  out << "| version | " << report.version << " |\n";
  if (!report.violations.empty()) {
    out << "\n### Violations\n\n";
    for (const auto& v : report.violations) out << "- `" << v.dump() << "`\n";
  }
  return out.str();
}

}  // namespace csmkit
