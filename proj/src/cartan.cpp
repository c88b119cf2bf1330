#include "csmkit/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "csmkit/error.hpp"
#include "json.hpp"

namespace csmkit {

namespace {

std::vector<std::vector<int>> chain_matrix(int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

void link(std::vector<std::vector<int>>& a, int i, int j) {
  a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
}

void unlink(std::vector<std::vector<int>>& a, int i, int j) {
  a[i - 1][j - 1] = a[j - 1][i - 1] = 0;
}

}  // namespace

CartanData cartan_from_label(std::string_view label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0]))) {
    throw InvalidInput("unknown Cartan type label '" + std::string(label) + "'");
  }
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("unknown Cartan type label '" + std::string(label) + "'");
    }
    rank = rank * 10 + (c - '0');
    if (rank > 100) break;
  }
  CartanData cd;
  cd.rank = rank;
  cd.type_label = std::string(1, family) + std::to_string(rank);
  auto bad = [&] { return InvalidInput("unsupported Cartan type '" + std::string(label) + "'"); };
  if (rank < 1 || rank > 12) throw bad();
  cd.matrix = chain_matrix(rank);
  auto& a = cd.matrix;
  switch (family) {
    case 'A':
      break;
    case 'B':
      if (rank < 2) throw bad();
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) throw bad();
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 4) throw bad();
      unlink(a, rank - 1, rank);
      link(a, rank - 2, rank);
      break;
    case 'G':
      if (rank != 2) throw bad();
      a[0][1] = -3;
      break;
    case 'F':
      if (rank != 4) throw bad();
      a[2][1] = -2;
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw bad();
      // Bourbaki numbering: chain 1-3-4-...-r with node 2 attached to 4.
      a = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      link(a, 1, 3);
      for (int i = 3; i < rank; ++i) link(a, i, i + 1);
      link(a, 2, 4);
      break;
    default:
      throw bad();
  }
  return cd;
}

CartanData cartan_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed Cartan JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("matrix")) {
    throw InvalidInput("Cartan JSON needs \"rank\" and \"matrix\"");
  }
  CartanData cd;
  try {
    cd.rank = doc.at("rank").get<int>();
    cd.matrix = doc.at("matrix").get<std::vector<std::vector<int>>>();
    if (doc.contains("label")) cd.type_label = doc.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed Cartan JSON: ") + e.what());
  }
  validate_cartan(cd);
  if (cd.type_label.empty()) {
    cd.type_label = is_type_a(cd) ? "A" + std::to_string(cd.rank) : "custom" + std::to_string(cd.rank);
  }
  return cd;
}

void validate_cartan(const CartanData& cd) {
  if (cd.rank < 1 || cd.rank > 12) throw InvalidInput("Cartan rank must be in 1..12");
  if (cd.matrix.size() != static_cast<std::size_t>(cd.rank)) {
    throw InvalidInput("Cartan matrix has wrong number of rows");
  }
  for (int i = 0; i < cd.rank; ++i) {
    if (cd.matrix[i].size() != static_cast<std::size_t>(cd.rank)) {
      throw InvalidInput("Cartan matrix is not square");
    }
  }
  for (int i = 0; i < cd.rank; ++i) {
    if (cd.matrix[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (int j = 0; j < cd.rank; ++j) {
      if (i == j) continue;
      if (cd.matrix[i][j] > 0) throw InvalidInput("Cartan off-diagonal entries must be <= 0");
      if ((cd.matrix[i][j] == 0) != (cd.matrix[j][i] == 0)) {
        throw InvalidInput("Cartan matrix zero pattern must be symmetric");
      }
    }
  }
}

bool is_type_a(const CartanData& cd) { return cd.matrix == chain_matrix(cd.rank); }

template <class Tag>
bool LatticeVector<Tag>::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

template <class Tag>
bool LatticeVector<Tag>::is_negative() const {
  return (-*this).is_positive();
}

template <class Tag>
LatticeVector<Tag> LatticeVector<Tag>::operator-() const {
  LatticeVector out = *this;
  for (int& c : out.coords) c = -c;
  return out;
}

template struct LatticeVector<RootTag>;
template struct LatticeVector<CorootTag>;

Root simple_root(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("simple root index out of range");
  Root r{std::vector<int>(rank, 0)};
  r.coords[i - 1] = 1;
  return r;
}

Coroot simple_coroot(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("simple coroot index out of range");
  Coroot c{std::vector<int>(rank, 0)};
  c.coords[i - 1] = 1;
  return c;
}

struct WeylGroup::Memo {
  explicit Memo(std::size_t n)
      : words_once(new std::once_flag[n]),
        words(n),
        interval_once(new std::once_flag[n]),
        interval(n) {}
  std::map<std::vector<int>, std::uint32_t> index;
  std::unique_ptr<std::once_flag[]> words_once;
  std::vector<std::vector<Word>> words;
  std::unique_ptr<std::once_flag[]> interval_once;
  std::vector<std::vector<std::uint64_t>> interval;
};

WeylGroup::WeylGroup(CartanData cartan, std::size_t cap) : cartan_(std::move(cartan)) {
  validate_cartan(cartan_);
  type_a_ = is_type_a(cartan_);
  enumerate(cap);
  build_left_table();
  build_canonical_words();
  build_positive_roots();
}

WeylGroup::~WeylGroup() = default;

void WeylGroup::enumerate(std::size_t cap) {
  const int r = rank();
  std::map<std::vector<int>, std::uint32_t> index;
  std::vector<std::vector<int>> mats;

  std::vector<int> id_mat(r * r, 0);
  for (int j = 0; j < r; ++j) id_mat[j * r + j] = 1;
  std::vector<int> id_perm;
  if (type_a_) {
    id_perm.resize(r + 1);
    std::iota(id_perm.begin(), id_perm.end(), 1);
  }
  auto key_of = [&](const std::vector<int>& mat, const std::vector<int>& perm) {
    return type_a_ ? perm : mat;
  };

  mats.push_back(id_mat);
  perm_.push_back(id_perm);
  length_.push_back(0);
  index.emplace(key_of(id_mat, id_perm), 0);

  for (std::size_t cur = 0; cur < mats.size(); ++cur) {
    for (int i = 1; i <= r; ++i) {
      // (w s_i)(alpha_j) = w(alpha_j) - a[i][j] w(alpha_i)
      std::vector<int> mat = mats[cur];
      for (int j = 1; j <= r; ++j) {
        const int aij = cartan_.a(i, j);
        if (aij == 0) continue;
        for (int k = 0; k < r; ++k) mat[(j - 1) * r + k] -= aij * mats[cur][(i - 1) * r + k];
      }
      std::vector<int> perm;
      if (type_a_) {
        perm = perm_[cur];
        std::swap(perm[i - 1], perm[i]);
      }
      auto key = key_of(mat, perm);
      auto it = index.find(key);
      std::uint32_t target;
      if (it == index.end()) {
        if (mats.size() >= cap) {
          throw GroupTooLarge("Weyl group enumeration exceeded the cap of " +
                              std::to_string(cap) + " elements (not of finite type, or too large)");
        }
        target = static_cast<std::uint32_t>(mats.size());
        index.emplace(std::move(key), target);
        mats.push_back(std::move(mat));
        perm_.push_back(std::move(perm));
        length_.push_back(length_[cur] + 1);
      } else {
        target = it->second;
      }
      if (right_.size() < (cur + 1) * r) right_.resize((cur + 1) * r);
      right_[cur * r + (i - 1)] = target;
    }
  }
  right_.resize(mats.size() * r);
  root_images_.reserve(mats.size() * r * r);
  for (const auto& m : mats) root_images_.insert(root_images_.end(), m.begin(), m.end());
  if (!type_a_) perm_.clear();

  memo_ = std::make_unique<Memo>(mats.size());
  memo_->index = std::move(index);
}

WeylElem WeylGroup::lookup(const std::vector<int>& key) const {
  auto it = memo_->index.find(key);
  if (it == memo_->index.end()) throw InvalidInput("element not found in Weyl group");
  return WeylElem{it->second};
}

void WeylGroup::build_left_table() {
  const int r = rank();
  left_.resize(size() * r);
  for (std::uint32_t id = 0; id < size(); ++id) {
    for (int i = 1; i <= r; ++i) {
      std::vector<int> key;
      if (type_a_) {
        key = perm_[id];
        for (int& v : key) {
          if (v == i) v = i + 1;
          else if (v == i + 1) v = i;
        }
      } else {
        key.assign(root_images_.begin() + id * r * r, root_images_.begin() + (id + 1) * r * r);
        for (int j = 0; j < r; ++j) {
          int* col = key.data() + j * r;
          int pair = 0;
          for (int k = 0; k < r; ++k) pair += col[k] * cartan_.matrix[i - 1][k];
          col[i - 1] -= pair;
        }
      }
      left_[id * r + (i - 1)] = lookup(key).id;
    }
  }
}

void WeylGroup::build_canonical_words() {
  canonical_word_.resize(size());
  for (std::uint32_t id = 1; id < size(); ++id) {
    for (int i = 1; i <= rank(); ++i) {
      const WeylElem shorter = left_mul(i, WeylElem{id});
      if (length(shorter) < length_[id]) {
        Word word{i};
        const Word& rest = canonical_word_[shorter.id];
        word.insert(word.end(), rest.begin(), rest.end());
        canonical_word_[id] = std::move(word);
        break;
      }
    }
  }
}

void WeylGroup::build_positive_roots() {
  const int r = rank();
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<PositiveRoot> roots;
  for (int i = 1; i <= r; ++i) {
    roots.push_back({simple_root(r, i), simple_coroot(r, i), simple(i)});
    seen.emplace(roots.back().root.coords, roots.size() - 1);
  }
  for (std::size_t cur = 0; cur < roots.size(); ++cur) {
    for (int j = 1; j <= r; ++j) {
      const PositiveRoot& base = roots[cur];
      Root beta = base.root;
      beta.coords[j - 1] -= pairing(base.root, simple_coroot(r, j));
      if (!beta.is_positive() || seen.contains(beta.coords)) continue;
      Coroot cobeta = base.coroot;
      cobeta.coords[j - 1] -= pairing(simple_root(r, j), base.coroot);
      const WeylElem refl = left_mul(j, right_mul(base.reflection, j));
      seen.emplace(beta.coords, roots.size());
      roots.push_back({std::move(beta), std::move(cobeta), refl});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    const int ha = std::accumulate(a.root.coords.begin(), a.root.coords.end(), 0);
    const int hb = std::accumulate(b.root.coords.begin(), b.root.coords.end(), 0);
    if (ha != hb) return ha < hb;
    return a.root.coords > b.root.coords;
  });
  positive_roots_ = std::move(roots);
}

WeylElem WeylGroup::simple(int i) const {
  if (i < 1 || i > rank()) throw InvalidInput("simple reflection index out of range");
  return WeylElem{right_[i - 1]};
}

std::vector<WeylElem> WeylGroup::elements() const {
  std::vector<WeylElem> out(size());
  for (std::uint32_t id = 0; id < size(); ++id) out[id] = WeylElem{id};
  return out;
}

WeylElem WeylGroup::right_mul(WeylElem w, int i) const {
  if (i < 1 || i > rank()) throw InvalidInput("simple reflection index out of range");
  return WeylElem{right_[w.id * rank() + (i - 1)]};
}

WeylElem WeylGroup::left_mul(int i, WeylElem w) const {
  if (i < 1 || i > rank()) throw InvalidInput("simple reflection index out of range");
  return WeylElem{left_[w.id * rank() + (i - 1)]};
}

bool WeylGroup::is_right_descent(WeylElem w, int i) const {
  return length(right_mul(w, i)) < length(w);
}

WeylElem WeylGroup::multiply(WeylElem a, WeylElem b) const {
  for (int letter : canonical_word_[b.id]) a = right_mul(a, letter);
  return a;
}

WeylElem WeylGroup::inverse(WeylElem w) const {
  WeylElem out = identity();
  const Word& word = canonical_word_[w.id];
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = right_mul(out, *it);
  return out;
}

WeylElem WeylGroup::from_word(std::span<const int> word) const {
  WeylElem w = identity();
  for (int letter : word) w = right_mul(w, letter);
  return w;
}

bool WeylGroup::is_reduced(std::span<const int> word) const {
  return static_cast<std::size_t>(length(from_word(word))) == word.size();
}

const std::vector<Word>& WeylGroup::reduced_words(WeylElem w) const {
  std::call_once(memo_->words_once[w.id], [&] {
    std::vector<Word> out;
    if (length(w) == 0) {
      out.emplace_back();
    } else {
      for (int i = 1; i <= rank(); ++i) {
        const WeylElem shorter = right_mul(w, i);
        if (length(shorter) >= length(w)) continue;
        for (const Word& prefix : reduced_words(shorter)) {
          Word word = prefix;
          word.push_back(i);
          out.push_back(std::move(word));
        }
      }
      std::sort(out.begin(), out.end());
    }
    memo_->words[w.id] = std::move(out);
  });
  return memo_->words[w.id];
}

const std::vector<std::uint64_t>& WeylGroup::lower_interval(WeylElem w) const {
  std::call_once(memo_->interval_once[w.id], [&] {
    std::vector<std::uint64_t> bits((size() + 63) / 64, 0);
    std::vector<std::uint32_t> members{0};
    bits[0] = 1;
    // Products of all subwords of one reduced word of w.
    for (int letter : canonical_word_[w.id]) {
      const std::size_t count = members.size();
      for (std::size_t k = 0; k < count; ++k) {
        const std::uint32_t next = right_[members[k] * rank() + (letter - 1)];
        const std::uint64_t mask = std::uint64_t{1} << (next % 64);
        if ((bits[next / 64] & mask) == 0) {
          bits[next / 64] |= mask;
          members.push_back(next);
        }
      }
    }
    memo_->interval[w.id] = std::move(bits);
  });
  return memo_->interval[w.id];
}

bool WeylGroup::bruhat_leq(WeylElem v, WeylElem w) const {
  if (length(v) > length(w)) return false;
  const auto& bits = lower_interval(w);
  return (bits[v.id / 64] >> (v.id % 64)) & 1u;
}

std::vector<LoweringReflection> WeylGroup::lowering_reflections(WeylElem w) const {
  std::vector<LoweringReflection> out;
  for (const PositiveRoot& pr : positive_roots_) {
    const WeylElem target = multiply(w, pr.reflection);
    if (length(target) == length(w) - 1) out.push_back({pr.root, target});
  }
  return out;
}

int WeylGroup::pairing(const Root& lambda, const Coroot& c) const {
  const int r = rank();
  if (lambda.coords.size() != static_cast<std::size_t>(r) ||
      c.coords.size() != static_cast<std::size_t>(r)) {
    throw InvalidInput("root/coroot rank mismatch");
  }
  // <alpha_i, alpha_j^vee> = a[j][i]
  int total = 0;
  for (int i = 0; i < r; ++i) {
    if (lambda.coords[i] == 0) continue;
    for (int j = 0; j < r; ++j) total += lambda.coords[i] * c.coords[j] * cartan_.matrix[j][i];
  }
  return total;
}

Root WeylGroup::act_root(WeylElem w, const Root& rt) const {
  const int r = rank();
  if (rt.coords.size() != static_cast<std::size_t>(r)) throw InvalidInput("root rank mismatch");
  Root out{std::vector<int>(r, 0)};
  const int* m = root_images_.data() + static_cast<std::size_t>(w.id) * r * r;
  for (int j = 0; j < r; ++j) {
    if (rt.coords[j] == 0) continue;
    for (int k = 0; k < r; ++k) out.coords[k] += rt.coords[j] * m[j * r + k];
  }
  return out;
}

Coroot WeylGroup::act_coroot(WeylElem w, const Coroot& c) const {
  const int r = rank();
  if (c.coords.size() != static_cast<std::size_t>(r)) throw InvalidInput("coroot rank mismatch");
  Coroot out = c;
  const Word& word = canonical_word_[w.id];
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.coords[*it - 1] -= pairing(simple_root(r, *it), out);
  }
  return out;
}

std::vector<std::vector<int>> WeylGroup::root_matrix(WeylElem w) const {
  const int r = rank();
  std::vector<std::vector<int>> cols(r, std::vector<int>(r));
  const int* m = root_images_.data() + static_cast<std::size_t>(w.id) * r * r;
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) cols[j][k] = m[j * r + k];
  }
  return cols;
}

int WeylGroup::inversion_count(WeylElem w) const {
  int count = 0;
  for (const PositiveRoot& pr : positive_roots_) {
    if (act_root(w, pr.root).is_negative()) ++count;
  }
  return count;
}

const std::vector<int>& WeylGroup::permutation(WeylElem w) const {
  if (!type_a_) throw InvalidInput("permutations are only available in type A");
  return perm_[w.id];
}

WeylElem WeylGroup::from_permutation(std::span<const int> perm) const {
  if (!type_a_) throw InvalidInput("permutations are only available in type A");
  const int n = permutation_degree();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("permutation must have " + std::to_string(n) + " entries");
  }
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[k] != k + 1) throw InvalidInput("not a permutation of 1.." + std::to_string(n));
  }
  return lookup(std::vector<int>(perm.begin(), perm.end()));
}

WeylElem WeylGroup::transposition(int i, int j) const {
  const int n = permutation_degree();
  if (!type_a_) throw InvalidInput("transpositions are only available in type A");
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw InvalidInput("invalid transposition");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[i - 1], perm[j - 1]);
  return lookup(perm);
}

std::string WeylGroup::name(WeylElem w) const {
  const Word& word = canonical_word_[w.id];
  if (word.empty()) return "id";
  std::string out;
  for (int letter : word) out += "s" + std::to_string(letter);
  return out;
}

}  // namespace csmkit
