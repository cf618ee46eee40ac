#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace psu4 {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Matrices and vectors over F_p hold canonical residues 0..p-1.
using Matrix = MatX<int>;
using Vector = VecX<int>;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// F_p for a prime p <= 257.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int modulus() const { return p_; }
  int reduce(long long x) const {
    const long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return reduce(-static_cast<long long>(a)); }
  /// Throws GeometryError on zero.
  int inv(int a) const;
  /// True for nonzero squares.
  bool is_square(int a) const;

  /// Entrywise reduction of an integer expression.
  template <typename Derived>
  typename Derived::PlainObject reduce(const Eigen::MatrixBase<Derived>& m) const {
    const int p = p_;
    return m.unaryExpr([p](int x) { return ((x % p) + p) % p; });
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

/// Determinant over F_p by Gaussian elimination.
int determinant(const PrimeField& f, const Matrix& m);

/// Nonzero vector with first nonzero coordinate 1.
struct ProjectivePoint {
  Vector coords;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);
};

/// std::nullopt for the zero vector.
std::optional<ProjectivePoint> normalize(const PrimeField& f, const Vector& x);

/// All (p^dim - 1)/(p - 1) points, lexicographic in normal form.
std::vector<ProjectivePoint> projective_points(int dim, const PrimeField& f);

/// Lookup from normal forms to positions in a point list.
class PointIndex {
 public:
  explicit PointIndex(std::span<const ProjectivePoint> points);
  std::optional<std::size_t> find(const ProjectivePoint& x) const;
  std::size_t size() const { return index_.size(); }

 private:
  std::map<std::vector<int>, std::size_t> index_;
};

/// Nondegenerate symmetric bilinear space over F_p, p odd.
class QuadraticSpace {
 public:
  QuadraticSpace(PrimeField field, Matrix gram);
  /// Identity Gram matrix.
  static QuadraticSpace standard(int dim, int p);
  /// F_3^5 with Gram diag(1,1,1,1,-1): 40 isotropic, 36 points with Q = 1,
  /// 45 with Q = -1. The identity form swaps the last two counts.
  static QuadraticSpace design_space();

  const PrimeField& field() const { return field_; }
  const Matrix& gram() const { return gram_; }
  int dim() const { return static_cast<int>(gram_.rows()); }

  int bilinear(const Vector& x, const Vector& y) const;
  int form(const Vector& x) const { return bilinear(x, x); }

 private:
  PrimeField field_;
  Matrix gram_;
};

enum class PointType { Isotropic, SquareType, NonsquareType };

/// Well defined on projective points: scaling multiplies the form by a square.
PointType classify_point(const QuadraticSpace& space, const ProjectivePoint& x);

std::vector<ProjectivePoint> points_of_type(const QuadraticSpace& space, PointType type);

/// Positions in `universe` of the points y with bilinear(x, y) = 0.
std::vector<std::size_t> perp_set(const QuadraticSpace& space, const ProjectivePoint& x,
                                  std::span<const ProjectivePoint> universe);

/// r_v(x) = x - (2 B(x,v) / Q(v)) v. Throws GeometryError for isotropic v.
Matrix reflection(const QuadraticSpace& space, const Vector& v);

/// M^T G M = G.
bool is_isometry(const QuadraticSpace& space, const Matrix& m);

/// One block per dual point u: the points x with u . x = 0. Block i belongs
/// to the i-th point of projective_points(dim, f); entries index that list.
std::vector<std::vector<std::size_t>> pg_hyperplanes(int dim, const PrimeField& f);

/// [[0, I], [-I, 0]] over F_p; dim must be even.
Matrix symplectic_gram(int dim, const PrimeField& f);

/// x -> x + B(x, u) u for the alternating form with Gram matrix j.
Matrix transvection(const PrimeField& f, const Matrix& j, const Vector& u);

}  // namespace psu4
