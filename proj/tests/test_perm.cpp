#include <doctest.h>

#include "moufang/errors.hpp"
#include "moufang/perm.hpp"

using moufang::Permutation;

TEST_CASE("identity permutation") {
  Permutation id(4);
  CHECK(id.degree() == 4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);
  CHECK(id.lowest_moved_point() == -1);
  CHECK(id.inverse() == id);
}

TEST_CASE("image list validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), moufang::InputError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), moufang::InputError);
  CHECK_THROWS_AS(Permutation({-1, 0, 1}), moufang::InputError);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("composition applies the left factor first") {
  Permutation p({1, 2, 0});  // 3-cycle 0->1->2->0
  Permutation q({1, 0, 2});  // swaps 0 and 1
  Permutation pq = compose(p, q);
  CHECK(pq[0] == q[p[0]]);
  CHECK(pq.images() == std::vector<int>{0, 2, 1});
  Permutation qp = compose(q, p);
  CHECK(qp.images() == std::vector<int>{2, 1, 0});
  CHECK(pq != qp);
}

TEST_CASE("commutator of a 3-cycle and a transposition") {
  Permutation a({1, 2, 0});
  Permutation b({1, 0, 2});
  CHECK(commutator(a, b).images() == std::vector<int>{1, 2, 0});
  CHECK_FALSE(commute(a, b));
  CHECK(commute(a, a));
  CHECK(commute(a, compose(a, a)));
}

TEST_CASE("inverse and order") {
  Permutation p({1, 0, 3, 4, 2});  // (0 1)(2 3 4)
  CHECK(p.order() == 6);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(p.lowest_moved_point() == 0);
  Permutation q({0, 1, 3, 2});
  CHECK(q.order() == 2);
  CHECK(q.lowest_moved_point() == 2);
}

TEST_CASE("conjugate is b inverse times a times b") {
  Permutation a({1, 2, 0, 3});
  Permutation b({0, 2, 1, 3});
  Permutation expected = compose(compose(b.inverse(), a), b);
  CHECK(conjugate(a, b) == expected);
}

TEST_CASE("degree mismatch is rejected") {
  Permutation a({1, 0});
  Permutation b({1, 2, 0});
  CHECK_THROWS_AS(compose(a, b), moufang::InputError);
  CHECK_THROWS_AS(commutator(a, b), moufang::InputError);
}
