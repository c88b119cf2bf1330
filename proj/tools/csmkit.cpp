// csmkit: CSM class tables, identity sweeps and conjecture sweeps.
//
// Exit codes: 0 success or conjecture report, 1 identity violation, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "csmkit/cache.hpp"
#include "csmkit/csm.hpp"
#include "csmkit/error.hpp"
#include "csmkit/verify.hpp"

namespace {

using namespace csmkit;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Sweeps refuse groups larger than S_6 unless forced.
constexpr std::size_t kSweepCap = 720;
constexpr std::size_t kForcedCap = 1'000'000;

struct Options {
  std::string type;
  int n = 0;
  std::string w;
  std::string v;
  bool have_v = false;
  bool equivariant = false;
  std::string out;
  bool csv = false;
  bool md = false;
  int jobs = 0;
  bool force = false;
  bool no_cache = false;
  std::string name;  // identity or conjecture
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct ResolvedType {
  CartanData cartan;
  std::string cache_label;
};

ResolvedType resolve_type(const Options& opt) {
  if (!opt.type.empty() && opt.n != 0) throw InvalidInput("give either --type or --n, not both");
  if (!opt.type.empty()) {
    if (std::filesystem::is_regular_file(opt.type)) {
      CartanData cd = cartan_from_json_text(read_file(opt.type));
      std::string label = "matrix";
      for (const auto& row : cd.matrix) {
        for (int a : row) label += "_" + std::to_string(a);
      }
      return {std::move(cd), label};
    }
    CartanData cd = cartan_from_label(opt.type);
    return {cd, cd.type_label};
  }
  if (opt.n != 0) {
    if (opt.n < 2) throw InvalidInput("--n must be at least 2");
    if (opt.n > 13) throw InvalidInput("--n must be at most 13");
    CartanData cd = cartan_from_label("A" + std::to_string(opt.n - 1));
    return {cd, cd.type_label};
  }
  throw InvalidInput("one of --type or --n is required");
}

std::unique_ptr<WeylGroup> make_group(const CartanData& cartan, std::size_t cap) {
  try {
    return std::make_unique<WeylGroup>(cartan, cap);
  } catch (const GroupTooLarge&) {
    throw InvalidInput("scope too large: the Weyl group has more than " + std::to_string(cap) +
                       " elements (pass --force to override)");
  }
}

// "" is the identity, "[2,3,1]" a one-line permutation, "1,2" a word.
WeylElem parse_element(const WeylGroup& group, std::string text) {
  std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
  if (text.empty() || text == "id") return group.identity();
  const bool perm = text.front() == '[';
  if (perm) {
    if (text.back() != ']') throw InvalidInput("unterminated permutation '" + text + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad element entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidInput("bad element entry '" + item + "'");
    values.push_back(value);
  }
  if (perm) {
    if (!group.type_a()) throw InvalidInput("permutations are only accepted in type A");
    return group.from_permutation(values);
  }
  return group.from_word(values);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + opt.out);
  out << text;
}

std::string value_text(const ordered_json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

std::string format_csm(const Options& opt, const ordered_json& doc) {
  if (opt.csv) {
    std::string out = "v,coefficient\n";
    for (const auto& [v, c] : doc.at("coefficients").items()) out += v + "," + value_text(c) + "\n";
    return out;
  }
  if (opt.md) {
    std::string out = "## csm " + doc.at("w").get<std::string>() + " (" + doc.at("type").get<std::string>() +
                      (doc.at("equivariant").get<bool>() ? ", equivariant" : "") + ")\n\n| v | coefficient |\n|---|---|\n";
    for (const auto& [v, c] : doc.at("coefficients").items()) out += "| " + v + " | " + value_text(c) + " |\n";
    return out;
  }
  return doc.dump(2) + "\n";
}

int cmd_csm(const Options& opt) {
  const ResolvedType type = resolve_type(opt);
  const auto group = make_group(type.cartan, opt.force ? kForcedCap : WeylGroup::kDefaultCap);
  const WeylElem w = parse_element(*group, opt.w);
  std::optional<WeylElem> only;
  if (opt.have_v) only = parse_element(*group, opt.v);

  const CacheKey key{opt.equivariant ? "csm-equivariant" : "csm", type.cache_label, group->rank(),
                     group->name(w), only ? group->name(*only) : ""};
  const ResultCache cache = ResultCache::from_environment();
  std::optional<std::string> text;
  if (!opt.no_cache) text = cache.load(key);
  if (!text) {
    ordered_json coefficients = ordered_json::object();
    if (opt.equivariant) {
      const NilHeckeElem eq = csm_cell_equivariant(*group, w);
      for (WeylElem v : group->elements()) {
        if (only ? v == *only : !eq.coefficient(v).is_zero()) coefficients[group->name(v)] = to_text(eq.coefficient(v));
      }
    } else {
      const HomologyClass c = csm_cell(*group, w);
      for (WeylElem v : group->elements()) {
        if (only ? v == *only : c.coefficient(v) != 0) coefficients[group->name(v)] = rational_to_json(c.coefficient(v));
      }
    }
    const ordered_json doc = {{"type", type.cartan.type_label},
                              {"w", group->name(w)},
                              {"equivariant", opt.equivariant},
                              {"coefficients", std::move(coefficients)}};
    text = doc.dump(2) + "\n";
    if (!opt.no_cache) cache.store(key, *text);
  }
  emit(opt, format_csm(opt, ordered_json::parse(*text)));
  return kExitOk;
}

std::string format_report(const Options& opt, const SweepReport& report) {
  if (opt.csv) return to_csv(report);
  if (opt.md) return to_markdown(report);
  return to_json(report).dump(2) + "\n";
}

int cmd_sweep(const Options& opt, bool conjecture) {
  const ResolvedType type = resolve_type(opt);
  const auto group = make_group(type.cartan, opt.force ? kForcedCap : kSweepCap);
  if (opt.jobs > 0) set_workers(opt.jobs);
  const Exec exec = opt.jobs == 1 ? Exec::serial : Exec::parallel;
  const SweepReport report =
      conjecture ? check_conjecture(opt.name, *group, exec) : verify_identity(opt.name, *group, exec);
  emit(opt, format_report(opt, report));
  if (conjecture) {
    if (!report.passed()) std::cerr << "COUNTEREXAMPLE to " << report.identity << " (see report)\n";
    return kExitOk;
  }
  return report.passed() ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--type", opt.type, "Cartan type label (A3, B2, G2, ...) or a JSON matrix file");
  cmd->add_option("--n", opt.n, "Symmetric group S_n, i.e. type A(n-1)");
  cmd->add_option("--out", opt.out, "Write output to a file");
  auto* csv = cmd->add_flag("--csv", opt.csv, "CSV output");
  cmd->add_flag("--md", opt.md, "Markdown output")->excludes(csv);
  cmd->add_option("--jobs", opt.jobs, "Worker threads (1 runs the serial reference)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--force", opt.force, "Allow groups larger than S_6");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Schwartz-MacPherson classes of Schubert cells and nil-Hecke structure constants"};
  app.set_version_flag("--version", std::string(CSMKIT_VERSION));
  app.require_subcommand(1);
  Options opt;

  auto* csm = app.add_subcommand("csm", "CSM class of a Schubert cell in the Schubert basis");
  add_common(csm, opt);
  csm->add_option("--w", opt.w, "Element: word \"1,2\", permutation \"[2,3,1]\", or \"\"")->required();
  csm->add_option("--v", opt.v, "Only report the coefficient of this element");
  csm->add_flag("--equivariant", opt.equivariant, "Equivariant coefficients c_T(w;v)");
  csm->add_flag("--no-cache", opt.no_cache, "Bypass the result cache");

  std::string identities;
  for (const auto& name : identity_names()) identities += (identities.empty() ? "" : ", ") + name;
  auto* verify = app.add_subcommand("verify", "Exhaustive identity check; exit 1 on any violation");
  add_common(verify, opt);
  verify->add_option("identity", opt.name, identities)->required()->check(CLI::IsMember(identity_names()));

  std::string conjectures;
  for (const auto& name : conjecture_names()) conjectures += (conjectures.empty() ? "" : ", ") + name;
  auto* conjecture = app.add_subcommand("conjecture", "Conjecture sweep; reports, never fails");
  add_common(conjecture, opt);
  conjecture->add_option("name", opt.name, conjectures)->required()->check(CLI::IsMember(conjecture_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opt.have_v = csm->count("--v") > 0;

  try {
    if (*csm) return cmd_csm(opt);
    if (*verify) return cmd_sweep(opt, false);
    return cmd_sweep(opt, true);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}
