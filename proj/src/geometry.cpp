#include "psu4/geometry.hpp"

#include <algorithm>

#include "psu4/exactmath.hpp"

namespace psu4 {

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > 257 || !is_prime(static_cast<std::uint64_t>(p)))
    throw GeometryError("PrimeField: modulus must be a prime <= 257");
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw GeometryError("PrimeField: zero has no inverse");
  // Fermat: a^(p-2).
  int r = 1, b = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool PrimeField::is_square(int a) const {
  a = reduce(a);
  if (a == 0) return false;
  for (int t = 1; t < p_; ++t) {
    if (mul(t, t) == a) return true;
  }
  return false;
}

int determinant(const PrimeField& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw GeometryError("determinant: matrix is not square");
  Matrix a = f.reduce(m);
  const Eigen::Index n = a.rows();
  int det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    const int inv = f.inv(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const int factor = f.mul(a(r, col), inv);
      if (factor == 0) continue;
      a.row(r) = f.reduce(a.row(r) - factor * a.row(col));
    }
  }
  return det;
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  return std::lexicographical_compare(a.coords.data(), a.coords.data() + a.coords.size(),
                                      b.coords.data(), b.coords.data() + b.coords.size());
}

std::optional<ProjectivePoint> normalize(const PrimeField& f, const Vector& x) {
  Vector r = f.reduce(x);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i) != 0) {
      const int s = f.inv(r(i));
      return ProjectivePoint{f.reduce(s * r)};
    }
  }
  return std::nullopt;
}

std::vector<ProjectivePoint> projective_points(int dim, const PrimeField& f) {
  if (dim < 1) throw GeometryError("projective_points: dim must be >= 1");
  const int p = f.modulus();
  std::vector<ProjectivePoint> out;
  // Lexicographic order: leading 1 at position i, free coordinates after it.
  for (int lead = dim - 1; lead >= 0; --lead) {
    const int free = dim - 1 - lead;
    long long count = 1;
    for (int i = 0; i < free; ++i) count *= p;
    for (long long n = 0; n < count; ++n) {
      Vector x = Vector::Zero(dim);
      x(lead) = 1;
      long long rest = n;
      for (int i = dim - 1; i > lead; --i) {
        x(i) = static_cast<int>(rest % p);
        rest /= p;
      }
      out.push_back(ProjectivePoint{std::move(x)});
    }
  }
  return out;
}

PointIndex::PointIndex(std::span<const ProjectivePoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& c = points[i].coords;
    index_.emplace(std::vector<int>(c.data(), c.data() + c.size()), i);
  }
}

std::optional<std::size_t> PointIndex::find(const ProjectivePoint& x) const {
  auto it = index_.find(std::vector<int>(x.coords.data(), x.coords.data() + x.coords.size()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

QuadraticSpace::QuadraticSpace(PrimeField field, Matrix gram)
    : field_(field), gram_(field.reduce(gram)) {
  if (field_.modulus() == 2) throw GeometryError("QuadraticSpace: characteristic 2 unsupported");
  if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
    throw GeometryError("QuadraticSpace: Gram matrix must be square");
  if (gram_ != gram_.transpose()) throw GeometryError("QuadraticSpace: Gram matrix not symmetric");
  if (determinant(field_, gram_) == 0) throw GeometryError("QuadraticSpace: form is degenerate");
}

QuadraticSpace QuadraticSpace::standard(int dim, int p) {
  return QuadraticSpace(PrimeField(p), Matrix::Identity(dim, dim));
}

QuadraticSpace QuadraticSpace::design_space() {
  const PrimeField f(3);
  Matrix gram = Matrix::Identity(5, 5);
  gram(4, 4) = f.neg(1);
  return QuadraticSpace(f, gram);
}

int QuadraticSpace::bilinear(const Vector& x, const Vector& y) const {
  return field_.reduce(static_cast<long long>(x.dot(gram_ * y)));
}

PointType classify_point(const QuadraticSpace& space, const ProjectivePoint& x) {
  const int value = space.form(x.coords);
  if (value == 0) return PointType::Isotropic;
  return space.field().is_square(value) ? PointType::SquareType : PointType::NonsquareType;
}

std::vector<ProjectivePoint> points_of_type(const QuadraticSpace& space, PointType type) {
  std::vector<ProjectivePoint> out;
  for (auto& x : projective_points(space.dim(), space.field())) {
    if (classify_point(space, x) == type) out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::size_t> perp_set(const QuadraticSpace& space, const ProjectivePoint& x,
                                  std::span<const ProjectivePoint> universe) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (space.bilinear(x.coords, universe[i].coords) == 0) out.push_back(i);
  }
  return out;
}

Matrix reflection(const QuadraticSpace& space, const Vector& v) {
  const PrimeField& f = space.field();
  const int q = space.form(v);
  if (q == 0) throw GeometryError("reflection: vector is isotropic");
  const int scale = f.mul(2, f.inv(q));
  // x - scale * v (v^T G x)
  const Matrix rank_one = v * (space.gram() * v).transpose();
  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  return f.reduce(id - f.reduce(scale * rank_one));
}

bool is_isometry(const QuadraticSpace& space, const Matrix& m) {
  const PrimeField& f = space.field();
  return f.reduce(m.transpose() * space.gram() * m) == space.gram();
}

std::vector<std::vector<std::size_t>> pg_hyperplanes(int dim, const PrimeField& f) {
  if (dim < 2) throw GeometryError("pg_hyperplanes: dim must be >= 2");
  const auto points = projective_points(dim, f);
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(points.size());
  for (const auto& u : points) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (f.reduce(static_cast<long long>(u.coords.dot(points[i].coords))) == 0)
        block.push_back(i);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Matrix symplectic_gram(int dim, const PrimeField& f) {
  if (dim < 2 || dim % 2 != 0) throw GeometryError("symplectic_gram: dim must be even");
  const int half = dim / 2;
  Matrix j = Matrix::Zero(dim, dim);
  j.topRightCorner(half, half) = Matrix::Identity(half, half);
  j.bottomLeftCorner(half, half) = f.reduce(-Matrix::Identity(half, half));
  return j;
}

Matrix transvection(const PrimeField& f, const Matrix& j, const Vector& u) {
  // B(x, u) = x^T J u, so the map is I + u (J u)^T.
  const Matrix id = Matrix::Identity(u.size(), u.size());
  return f.reduce(id + u * (j * u).transpose());
}

}  // namespace psu4
