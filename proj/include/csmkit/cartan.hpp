#pragma once

// Finite root systems and their Weyl groups.
//
// Conventions. The Cartan matrix entry a[i][j] is the integer with
//   s_i(alpha_j) = alpha_j - a[i][j] alpha_i,
// so that <alpha_j, alpha_i^vee> = a[i][j] and dually
//   s_i(alpha_j^vee) = alpha_j^vee - a[j][i] alpha_i^vee.
// Indices of simple reflections, words and type labels are 1-based.
//
// A WeylGroup is enumerated once (breadth first, with an element cap) and
// elements are handed out as small integer handles. Type A groups are keyed by
// one-line permutations; other types by the matrix of simple-root images.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csmkit {

struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::string type_label;

  // 1-based accessor.
  int a(int i, int j) const { return matrix[i - 1][j - 1]; }
};

// "A3", "B2", "C3", "D4", "G2", "F4", "E6".."E8". Throws InvalidInput.
CartanData cartan_from_label(std::string_view label);

// {"rank": r, "matrix": [[...]], "label": optional}. Throws InvalidInput.
CartanData cartan_from_json_text(std::string_view text);

// Structural checks (diagonal 2, off-diagonal <= 0, symmetric zero pattern).
void validate_cartan(const CartanData& cartan);

// True when the matrix is the A_r Cartan matrix, enabling permutations.
bool is_type_a(const CartanData& cartan);

template <class Tag>
struct LatticeVector {
  std::vector<int> coords;

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  bool is_positive() const;
  bool is_negative() const;
  LatticeVector operator-() const;
};

struct RootTag {};
struct CorootTag {};
using Root = LatticeVector<RootTag>;
using Coroot = LatticeVector<CorootTag>;

Root simple_root(int rank, int i);
Coroot simple_coroot(int rank, int i);

using Word = std::vector<int>;

struct WeylElem {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(WeylElem, WeylElem) = default;
};

struct PositiveRoot {
  Root root;
  Coroot coroot;
  WeylElem reflection;
};

struct LoweringReflection {
  Root root;
  WeylElem target;  // w s_beta
  friend bool operator==(const LoweringReflection&, const LoweringReflection&) = default;
};

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  explicit WeylGroup(CartanData cartan, std::size_t cap = kDefaultCap);
  ~WeylGroup();
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  std::size_t size() const { return length_.size(); }
  bool type_a() const { return type_a_; }
  // n for type A_{n-1}; 0 otherwise.
  int permutation_degree() const { return type_a_ ? rank() + 1 : 0; }

  WeylElem identity() const { return WeylElem{0}; }
  WeylElem simple(int i) const;
  std::vector<WeylElem> elements() const;
  WeylElem longest() const { return WeylElem{static_cast<std::uint32_t>(size() - 1)}; }

  int length(WeylElem w) const { return length_[w.id]; }
  WeylElem right_mul(WeylElem w, int i) const;  // w s_i
  WeylElem left_mul(int i, WeylElem w) const;   // s_i w
  bool is_right_descent(WeylElem w, int i) const;
  WeylElem multiply(WeylElem a, WeylElem b) const;
  WeylElem inverse(WeylElem w) const;

  WeylElem from_word(std::span<const int> word) const;
  // True when the word has length equal to the length of its product.
  bool is_reduced(std::span<const int> word) const;
  // Lexicographically smallest reduced word.
  const Word& reduced_word(WeylElem w) const { return canonical_word_[w.id]; }
  // All reduced words, sorted lexicographically; memoized.
  const std::vector<Word>& reduced_words(WeylElem w) const;

  // Subword criterion against the canonical reduced word of w.
  bool bruhat_leq(WeylElem v, WeylElem w) const;

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  std::vector<LoweringReflection> lowering_reflections(WeylElem w) const;

  int pairing(const Root& lambda, const Coroot& c) const;
  Root act_root(WeylElem w, const Root& r) const;
  Coroot act_coroot(WeylElem w, const Coroot& c) const;
  // Column j holds w(alpha_{j+1}) in simple-root coordinates.
  std::vector<std::vector<int>> root_matrix(WeylElem w) const;
  int inversion_count(WeylElem w) const;

  // Type A only.
  const std::vector<int>& permutation(WeylElem w) const;
  WeylElem from_permutation(std::span<const int> perm) const;
  WeylElem transposition(int i, int j) const;

  // "id" or "s1s2..." from the canonical reduced word.
  std::string name(WeylElem w) const;

 private:
  struct Memo;

  void enumerate(std::size_t cap);
  void build_left_table();
  void build_canonical_words();
  void build_positive_roots();
  const std::vector<std::uint64_t>& lower_interval(WeylElem w) const;
  WeylElem lookup(const std::vector<int>& key) const;

  CartanData cartan_;
  bool type_a_ = false;
  std::vector<int> length_;
  std::vector<std::uint32_t> right_;  // id * rank + (i-1)
  std::vector<std::uint32_t> left_;
  std::vector<int> root_images_;      // id * rank * rank, column major
  std::vector<std::vector<int>> perm_;
  std::vector<Word> canonical_word_;
  std::vector<PositiveRoot> positive_roots_;
  std::unique_ptr<Memo> memo_;
};

}  // namespace csmkit
