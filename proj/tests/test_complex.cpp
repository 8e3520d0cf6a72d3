#include "doctest.h"

#include "hcb/complex.hpp"
#include "hcb/errors.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::vec;

namespace {

ComplexIndex tetrahedron() {
  ComplexIndex index;
  for (Vertex v = 0; v < 4; ++v) index.add({v});
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) index.add({a, b});
  }
  index.add({0, 1, 2});
  index.add({0, 1, 3});
  index.add({0, 2, 3});
  index.add({1, 2, 3});
  index.add({0, 1, 2, 3});
  return index;
}

}  // namespace

TEST_CASE("simplex vertices are sorted and validated") {
  Simplex s{2, 0, 1};
  CHECK(s.dim() == 2);
  CHECK(s.vertices()[0] == 0);
  CHECK(s.vertices()[2] == 2);
  CHECK(s.facet(0) == Simplex{1, 2});
  CHECK(s.facet(2) == Simplex{0, 1});
  CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), std::invalid_argument);
}

TEST_CASE("index rejects missing faces and duplicates") {
  ComplexIndex index;
  index.add({0});
  CHECK_THROWS_AS(index.add({0, 1}), MissingFaceError);
  index.add({1});
  CHECK(index.add({0, 1}) == 2);
  CHECK_THROWS_AS(index.add({1}), std::invalid_argument);
  CHECK(index.find(Simplex{0, 1}) == 2);
  CHECK_FALSE(index.find(Simplex{0, 2}).has_value());
}

TEST_CASE("boundary of a triangle") {
  ComplexIndex index;
  index.add({0});
  index.add({1});
  index.add({2});
  index.add({0, 1});
  index.add({1, 2});
  index.add({0, 2});
  index.add({0, 1, 2});
  // d[0 1 2] = [1 2] - [0 2] + [0 1]
  CHECK(boundary_of_simplex(Simplex{0, 1, 2}, index) == vec({{3, 1}, {4, 1}, {5, -1}}));
  CHECK(boundary_of_simplex(Simplex{0}, index).empty());
  CHECK(index.cofacets(0).size() == 2);
}

TEST_CASE("boundary of boundary vanishes") {
  const ComplexIndex index = tetrahedron();
  for (std::size_t i = 0; i < index.size(); ++i) {
    const int p = index.dim(i);
    if (p < 1) continue;
    const SparseVector d = apply_boundary(SparseVector::unit(i), p, index);
    CHECK(apply_boundary(d, p - 1, index).empty());
  }
}

TEST_CASE("coboundary is adjoint to boundary") {
  const ComplexIndex index = tetrahedron();
  const SparseVector cochain = vec({{4, 2}, {5, -1}, {7, 3}, {9, 1}});
  const SparseVector chain = vec({{10, 1}, {11, -2}, {13, 5}});
  CHECK(apply_coboundary(cochain, 1, index).dot(chain) ==
        cochain.dot(apply_boundary(chain, 2, index)));
}

TEST_CASE("coboundary restricted to a prefix") {
  const ComplexIndex index = tetrahedron();
  const SparseVector edge = SparseVector::unit(4);  // [0 1]
  CHECK(apply_coboundary(edge, 1, index).size() == 2);
  CHECK(apply_coboundary(edge, 1, index, 11).size() == 1);
  CHECK(apply_coboundary(edge, 1, index, 10).empty());
}

TEST_CASE("operators reject chains of the wrong degree") {
  const ComplexIndex index = tetrahedron();
  CHECK_THROWS_AS(apply_boundary(vec({{0, 1}, {4, 1}}), 1, index), DegreeMismatchError);
  CHECK_THROWS_AS(apply_coboundary(SparseVector::unit(0), 1, index), DegreeMismatchError);
}
