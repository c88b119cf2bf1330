#include "doctest.h"

#include <algorithm>
#include <random>

#include "csmkit/csm.hpp"
#include "csmkit/error.hpp"
#include "csmkit/fk.hpp"
#include "support.hpp"

using namespace csmkit;
using testing::Perm;

namespace {

struct S3 {
  WeylGroup group{cartan_from_label("A2")};
  FKContext ctx{group};
  WeylElem p(Perm perm) const { return group.from_permutation(perm); }
  GroupVector e(Perm perm) const { return GroupVector::basis(p(std::move(perm))); }
};

const S3& s3() {
  static const S3 s;
  return s;
}

const WeylGroup& s4() {
  static const WeylGroup g(cartan_from_label("A3"));
  return g;
}

FKGenerator G(int a, int b) { return FKGenerator::make(a, b); }

}  // namespace

TEST_CASE("generators normalize with a sign") {
  CHECK(G(1, 3) == FKGenerator{1, 3, 1});
  CHECK(G(3, 1) == FKGenerator{1, 3, -1});
  CHECK_THROWS_AS(G(2, 2), InvalidInput);
}

TEST_CASE("Bruhat action") {
  const S3& s = s3();
  // s1s2 = [2,3,1]; t13 drops the length from 2 to 1 and lands on s2 = [1,3,2].
  CHECK(bruhat_act(s.ctx, s.e({2, 3, 1}), G(1, 3)) == s.e({1, 3, 2}));
  // w0 t12 = [2,3,1] = s1 s2, a drop by one.
  CHECK(bruhat_act(s.ctx, s.e({3, 2, 1}), G(1, 2)) == s.e({2, 3, 1}));
  // t13 = w0 drops w0 by three: bruhat mode ignores it, extended mode keeps it.
  CHECK(bruhat_act(s.ctx, s.e({3, 2, 1}), G(1, 3)).is_zero());
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      CHECK(bruhat_act(s.ctx, s.e({1, 2, 3}), G(i, j)).is_zero());
      CHECK(extended_act(s.ctx, s.e({1, 2, 3}), G(i, j)).is_zero());
    }
  }
  // Signed generator.
  GroupVector minus = s.e({1, 3, 2});
  minus *= -1;
  CHECK(bruhat_act(s.ctx, s.e({2, 3, 1}), G(3, 1)) == minus);
}

TEST_CASE("extended Bruhat action") {
  const S3& s = s3();
  CHECK(extended_act(s.ctx, s.e({3, 2, 1}), G(1, 3)) == s.e({1, 2, 3}));
  CHECK(extended_act(s.ctx, s.e({2, 3, 1}), G(2, 3)) == s.e({2, 1, 3}));
  // Agreement with the length-oracle on S_4.
  const WeylGroup& g = s4();
  const FKContext ctx(g);
  for (WeylElem w : g.elements()) {
    const Perm& p = g.permutation(w);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        Perm q = p;
        std::swap(q[i - 1], q[j - 1]);
        const int drop = testing::inversions(p) - testing::inversions(q);
        const GroupVector target = GroupVector::basis(g.from_permutation(q));
        CHECK(extended_act(ctx, GroupVector::basis(w), G(i, j)) == (drop > 0 ? target : GroupVector{}));
        CHECK(bruhat_act(ctx, GroupVector::basis(w), G(i, j)) == (drop == 1 ? target : GroupVector{}));
      }
    }
  }
}

TEST_CASE("Dunkl elements") {
  const S3& s = s3();
  const GroupVector s1s2 = s.e({2, 3, 1});
  CHECK(dunkl_act(s.ctx, s1s2, 1, FKMode::extended) == s.e({1, 3, 2}));
  GroupVector both = dunkl_act(s.ctx, s1s2, 1, FKMode::extended);
  both += dunkl_act(s.ctx, s1s2, 2, FKMode::extended);
  GroupVector expected = s.e({1, 3, 2});
  expected += s.e({2, 1, 3});
  CHECK(both == expected);
  for (int i = 1; i <= 3; ++i) CHECK(dunkl_act(s.ctx, s.e({1, 2, 3}), i, FKMode::extended).is_zero());
  CHECK_THROWS_AS(dunkl_act(s.ctx, s1s2, 4, FKMode::bruhat), InvalidInput);

  // Dunkl elements commute in both representations.
  const FKContext ctx(s4());
  for (auto mode : {FKMode::bruhat, FKMode::extended}) {
    for (WeylElem w : s4().elements()) {
      for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
          const GroupVector e = GroupVector::basis(w);
          CHECK(ctx.dunkl(ctx.dunkl(e, i, mode), j, mode) == ctx.dunkl(ctx.dunkl(e, j, mode), i, mode));
        }
      }
    }
  }
}

TEST_CASE("Schubert polynomials at Dunkl elements") {
  const S3& s = s3();
  const WeylElem s1s2 = s.p({2, 3, 1});
  CHECK(s.ctx.schubert_act(s1s2, s.p({2, 1, 3}), FKMode::extended) == s.e({1, 3, 2}));
  GroupVector expected = s.e({1, 3, 2});
  expected += s.e({2, 1, 3});
  const GroupVector act = s.ctx.schubert_act(s1s2, s.p({1, 3, 2}), FKMode::extended);
  CHECK(act == expected);
  for (WeylElem w : s.group.elements()) {
    CHECK(s.ctx.schubert_act(w, s.group.identity(), FKMode::bruhat) == GroupVector::basis(w));
  }

  CHECK(psi(act) == 2);
  CHECK(psi(GroupVector{}) == 0);
  GroupVector sample = s.e({1, 3, 2});
  sample *= 2;
  sample += s.e({2, 1, 3});
  CHECK(psi(sample) == 3);
  CHECK(Rational(psi(act)) == csm_cell(s.group, s1s2).coefficient(s.p({1, 3, 2})));

  CHECK(s.ctx.f_coeff(s1s2, s.p({1, 3, 2}), s.p({2, 1, 3})) == 1);
  CHECK(s.ctx.f_coeff(s1s2, s.p({2, 1, 3}), s.p({1, 3, 2})) == 1);
  for (WeylElem w : s.group.elements()) CHECK(s.ctx.f_coeff(w, s.group.identity(), w) == 1);
}

TEST_CASE("Fomin-Kirillov relations act as zero on ZS_4") {
  const WeylGroup& g = s4();
  const FKContext ctx(g);
  for (auto mode : {FKMode::bruhat, FKMode::extended}) {
    auto act2 = [&](const GroupVector& e, FKGenerator a, FKGenerator b) {
      return ctx.act(ctx.act(e, a, mode), b, mode);
    };
    long checked = 0;
    for (WeylElem w : g.elements()) {
      const GroupVector e = GroupVector::basis(w);
      for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
          if (i == j) continue;
          CHECK(act2(e, G(i, j), G(i, j)).is_zero());
          for (int k = 1; k <= 4; ++k) {
            if (k == i || k == j) continue;
            GroupVector rhs = act2(e, G(j, k), G(i, k));
            rhs += act2(e, G(i, k), G(i, j));
            CHECK(act2(e, G(i, j), G(j, k)) == rhs);
            GroupVector rhs2 = act2(e, G(i, k), G(j, k));
            rhs2 += act2(e, G(i, j), G(i, k));
            CHECK(act2(e, G(j, k), G(i, j)) == rhs2);
            for (int l = 1; l <= 4; ++l) {
              if (l == i || l == j || l == k) continue;
              CHECK(act2(e, G(i, j), G(k, l)) == act2(e, G(k, l), G(i, j)));
            }
            ++checked;
          }
        }
      }
    }
    CHECK(checked == 24 * 24);
  }
}

TEST_CASE("monomial expansion order does not matter") {
  const WeylGroup& g = s4();
  const FKContext ctx(g);
  std::mt19937 rng(5);
  for (auto mode : {FKMode::bruhat, FKMode::extended}) {
    for (WeylElem w : g.elements()) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> thetas;
        std::uniform_int_distribution<int> len(1, 5), idx(1, 4);
        for (int k = len(rng); k > 0; --k) thetas.push_back(idx(rng));
        const GroupVector base = ctx.dunkl_sequence(GroupVector::basis(w), thetas, mode);
        std::shuffle(thetas.begin(), thetas.end(), rng);
        CHECK(ctx.dunkl_sequence(GroupVector::basis(w), thetas, mode) == base);
      }
    }
  }
}

TEST_CASE("bruhat mode is the top-length part of extended mode") {
  const WeylGroup& g = s4();
  const FKContext ctx(g);
  for (WeylElem w : g.elements()) {
    for (WeylElem v : g.elements()) {
      const GroupVector ext = ctx.schubert_act(w, v, FKMode::extended);
      GroupVector filtered;
      for (const auto& [u, c] : ext.terms()) {
        CHECK(g.bruhat_leq(u, w));
        if (g.length(u) == g.length(w) - g.length(v)) filtered.add(u, c);
      }
      CHECK(ctx.schubert_act(w, v, FKMode::bruhat) == filtered);
    }
  }
}

TEST_CASE("FK actions need type A") {
  const WeylGroup b2(cartan_from_label("B2"));
  CHECK_THROWS_AS(FKContext{b2}, InvalidInput);
}
