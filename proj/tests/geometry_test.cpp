#include <gtest/gtest.h>

#include "psu4/geometry.hpp"

namespace psu4 {
namespace {

std::size_t count_type(const QuadraticSpace& s, PointType t) { return points_of_type(s, t).size(); }

TEST(Geometry, FieldArithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.reduce(-1), 6);
  EXPECT_EQ(f.mul(f.inv(3), 3), 1);
  EXPECT_TRUE(f.is_square(2));
  EXPECT_FALSE(f.is_square(3));
  EXPECT_FALSE(f.is_square(0));
  EXPECT_THROW(f.inv(0), GeometryError);
  EXPECT_THROW(PrimeField(9), GeometryError);
}

TEST(Geometry, ProjectivePointCounts) {
  const PrimeField f3(3);
  const auto pts = projective_points(5, f3);
  EXPECT_EQ(pts.size(), 121u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(projective_points(4, f3).size(), 40u);
  EXPECT_EQ(projective_points(3, PrimeField(5)).size(), 31u);
  for (const auto& p : pts) {
    const auto n = normalize(f3, f3.reduce(Vector(2 * p.coords)));
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(*n, p);
  }
  EXPECT_FALSE(normalize(f3, Vector::Zero(5)).has_value());
}

TEST(Geometry, DesignSpaceCounts) {
  const auto s = QuadraticSpace::design_space();
  EXPECT_EQ(count_type(s, PointType::Isotropic), 40u);
  EXPECT_EQ(count_type(s, PointType::SquareType), 36u);
  EXPECT_EQ(count_type(s, PointType::NonsquareType), 45u);
}

// The identity form has the other discriminant: the square and nonsquare
// classes swap sizes.
TEST(Geometry, IdentityFormCounts) {
  const auto s = QuadraticSpace::standard(5, 3);
  EXPECT_EQ(count_type(s, PointType::Isotropic), 40u);
  EXPECT_EQ(count_type(s, PointType::SquareType), 45u);
  EXPECT_EQ(count_type(s, PointType::NonsquareType), 36u);
}

TEST(Geometry, ClassifyExamples) {
  const auto s = QuadraticSpace::design_space();
  ProjectivePoint e1{Vector::Zero(5)};
  e1.coords(0) = 1;
  EXPECT_EQ(classify_point(s, e1), PointType::SquareType);
  ProjectivePoint e12 = e1;
  e12.coords(1) = 1;
  EXPECT_EQ(classify_point(s, e12), PointType::NonsquareType);
}

TEST(Geometry, PerpSizes) {
  const auto s = QuadraticSpace::design_space();
  const std::vector<std::pair<PointType, std::size_t>> expected{
      {PointType::SquareType, 15}, {PointType::NonsquareType, 12}, {PointType::Isotropic, 13}};
  for (auto [type, size] : expected) {
    const auto universe = points_of_type(s, type);
    for (const auto& x : universe) EXPECT_EQ(perp_set(s, x, universe).size(), size);
  }
}

TEST(Geometry, ReflectionsAreInvolutoryIsometries) {
  for (const auto& s : {QuadraticSpace::design_space(), QuadraticSpace::standard(5, 3)}) {
    for (const auto& x : projective_points(5, s.field())) {
      if (s.form(x.coords) == 0) {
        EXPECT_THROW(reflection(s, x.coords), GeometryError);
        continue;
      }
      const Matrix r = reflection(s, x.coords);
      EXPECT_TRUE(is_isometry(s, r));
      EXPECT_EQ(s.field().reduce(Matrix(r * r)), Matrix::Identity(5, 5));
      EXPECT_EQ(s.field().reduce(Vector(r * x.coords)), s.field().reduce(Vector(-x.coords)));
    }
  }
}

TEST(Geometry, RejectsBadGram) {
  const PrimeField f(3);
  Matrix g = Matrix::Identity(3, 3);
  g(0, 1) = 1;
  EXPECT_THROW(QuadraticSpace(f, g), GeometryError);
  EXPECT_THROW(QuadraticSpace(f, Matrix::Zero(3, 3)), GeometryError);
  EXPECT_THROW(QuadraticSpace(PrimeField(2), Matrix::Identity(3, 3)), GeometryError);
}

TEST(Geometry, Determinant) {
  const PrimeField f(5);
  Matrix m(3, 3);
  m << 1, 2, 3, 0, 1, 4, 5, 6, 0;  // det = 1 over Z
  EXPECT_EQ(determinant(f, f.reduce(m)), 1);
  EXPECT_EQ(determinant(f, Matrix::Identity(4, 4)), 1);
}

TEST(Geometry, Hyperplanes) {
  const PrimeField f(3);
  const auto h = pg_hyperplanes(4, f);
  ASSERT_EQ(h.size(), 40u);
  for (const auto& b : h) EXPECT_EQ(b.size(), 13u);
}

TEST(Geometry, TransvectionsPreserveSymplecticForm) {
  const PrimeField f(3);
  const Matrix j = symplectic_gram(4, f);
  for (const auto& u : projective_points(4, f)) {
    const Matrix t = transvection(f, j, u.coords);
    EXPECT_EQ(f.reduce(Matrix(t.transpose() * j * t)), j);
  }
}

}  // namespace
}  // namespace psu4
