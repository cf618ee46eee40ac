#include "psu4/designs.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace psu4 {

IncidenceStructure::IncidenceStructure(std::size_t v,
                                       std::vector<std::vector<std::size_t>> blocks)
    : v_(v), blocks_(std::move(blocks)), incidence_(v * blocks_.size(), false) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= v) {
        throw std::invalid_argument("block " + std::to_string(i) + " contains point " +
                                    std::to_string(b[j]) + " >= v");
      }
      if (j > 0 && b[j] == b[j - 1]) {
        throw std::invalid_argument("block " + std::to_string(i) + " repeats point " +
                                    std::to_string(b[j]));
      }
      incidence_[i * v + b[j]] = true;
    }
  }
}

MatX<int> IncidenceStructure::incidence_matrix() const {
  MatX<int> n = MatX<int>::Zero(static_cast<Eigen::Index>(v_),
                                static_cast<Eigen::Index>(blocks_.size()));
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t x : blocks_[i]) n(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(i)) = 1;
  return n;
}

namespace {

constexpr std::pair<DesignKind, std::string_view> kKindNames[] = {
    {DesignKind::Menon36, "menon36"},
    {DesignKind::Minus45, "minus45"},
    {DesignKind::Higman40, "higman40"},
    {DesignKind::Pg33, "pg33"},
};

}  // namespace

std::string_view kind_name(DesignKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<DesignKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

GeometricDesign build_geometric(DesignKind kind) {
  if (kind == DesignKind::Pg33) {
    PrimeField f(3);
    auto points = projective_points(4, f);
    IncidenceStructure s(points.size(), pg_hyperplanes(4, f));
    return {kind, std::move(s), f, std::move(points)};
  }
  const auto space = QuadraticSpace::design_space();
  PointType type = PointType::Isotropic;
  if (kind == DesignKind::Menon36) type = PointType::SquareType;
  if (kind == DesignKind::Minus45) type = PointType::NonsquareType;
  auto points = points_of_type(space, type);
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(points.size());
  for (const auto& x : points) blocks.push_back(perp_set(space, x, points));
  IncidenceStructure s(points.size(), std::move(blocks));
  return {kind, std::move(s), space.field(), std::move(points)};
}

IncidenceStructure build(DesignKind kind) { return build_geometric(kind).structure; }

Verification verify_symmetric(const IncidenceStructure& d) {
  Verification out;
  auto fail = [&](std::string axiom, std::size_t a, std::size_t b, std::string detail) {
    out.failure = VerificationFailure{std::move(axiom), a, b, std::move(detail)};
    return out;
  };
  const std::size_t v = d.num_points();
  const std::size_t b = d.num_blocks();
  if (b != v) {
    return fail("square", v, b, std::to_string(b) + " blocks on " + std::to_string(v) + " points");
  }
  if (v < 2) return fail("nontriviality", v, 0, "fewer than two points");

  const MatX<int> n = d.incidence_matrix();
  const auto k = static_cast<int>(d.block(0).size());
  for (std::size_t i = 1; i < b; ++i) {
    if (static_cast<int>(d.block(i).size()) != k) {
      return fail("block size", 0, i,
                  "blocks 0 and " + std::to_string(i) + " have sizes " + std::to_string(k) +
                      " and " + std::to_string(d.block(i).size()));
    }
  }
  const VecX<int> replication = n.rowwise().sum();
  for (std::size_t x = 0; x < v; ++x) {
    if (replication(static_cast<Eigen::Index>(x)) != k) {
      return fail("replication", x, 0,
                  "point " + std::to_string(x) + " lies in " +
                      std::to_string(replication(static_cast<Eigen::Index>(x))) + " blocks");
    }
  }
  const MatX<int> points = n * n.transpose();
  const int lambda = points(0, 1);
  for (Eigen::Index x = 0; x < points.rows(); ++x) {
    for (Eigen::Index y = x + 1; y < points.cols(); ++y) {
      if (points(x, y) != lambda) {
        return fail("point pairs", static_cast<std::size_t>(x), static_cast<std::size_t>(y),
                    "pair lies in " + std::to_string(points(x, y)) + " blocks, expected " +
                        std::to_string(lambda));
      }
    }
  }
  const MatX<int> blocks = n.transpose() * n;
  for (Eigen::Index x = 0; x < blocks.rows(); ++x) {
    for (Eigen::Index y = x + 1; y < blocks.cols(); ++y) {
      if (blocks(x, y) != lambda) {
        return fail("block pairs", static_cast<std::size_t>(x), static_cast<std::size_t>(y),
                    "blocks meet in " + std::to_string(blocks(x, y)) + " points, expected " +
                        std::to_string(lambda));
      }
    }
  }
  const auto ku = static_cast<std::size_t>(k);
  if (ku <= 2 || ku + 1 >= v) {
    return fail("nontriviality", ku, v, "block size " + std::to_string(k));
  }
  out.params = SizeParams{v, ku, static_cast<std::size_t>(lambda)};
  return out;
}

IncidenceStructure complement(const IncidenceStructure& d) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(d.num_blocks());
  for (std::size_t i = 0; i < d.num_blocks(); ++i) {
    std::vector<std::size_t> c;
    for (std::size_t x = 0; x < d.num_points(); ++x)
      if (!d.incident(x, i)) c.push_back(x);
    blocks.push_back(std::move(c));
  }
  return IncidenceStructure(d.num_points(), std::move(blocks));
}

std::vector<std::pair<std::size_t, std::size_t>> flags(const IncidenceStructure& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < d.num_points(); ++x)
    for (std::size_t i = 0; i < d.num_blocks(); ++i)
      if (d.incident(x, i)) out.emplace_back(x, i);
  return out;
}

IncidenceStructure relabel(const IncidenceStructure& d, const std::vector<std::size_t>& perm) {
  if (perm.size() != d.num_points()) throw std::invalid_argument("relabel: wrong permutation size");
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(d.num_blocks());
  for (const auto& b : d.blocks()) {
    std::vector<std::size_t> image;
    image.reserve(b.size());
    for (std::size_t x : b) image.push_back(perm[x]);
    blocks.push_back(std::move(image));
  }
  return IncidenceStructure(d.num_points(), std::move(blocks));
}

bool is_isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                    const std::vector<std::size_t>& perm) {
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks() ||
      perm.size() != a.num_points()) {
    return false;
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t y : perm) {
    if (y >= perm.size() || seen[y]) return false;
    seen[y] = true;
  }
  auto mapped = relabel(a, perm).blocks();
  auto target = b.blocks();
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

namespace {

// Colour refinement state for one design.
struct SearchDesign {
  const IncidenceStructure* d;
  std::vector<std::vector<std::size_t>> point_blocks;
  // pair_relation[x][y]: sizes of the intersection of all blocks through x
  // and y, in the design and in its complement, packed into one int.
  std::vector<std::vector<int>> pair_relation;
};

int common_intersection(const IncidenceStructure& d, std::size_t x, std::size_t y) {
  std::vector<bool> in_all(d.num_points(), true);
  bool any = false;
  for (std::size_t i = 0; i < d.num_blocks(); ++i) {
    if (!d.incident(x, i) || !d.incident(y, i)) continue;
    any = true;
    for (std::size_t z = 0; z < d.num_points(); ++z)
      if (!d.incident(z, i)) in_all[z] = false;
  }
  if (!any) return 0;
  return static_cast<int>(std::count(in_all.begin(), in_all.end(), true));
}

SearchDesign prepare(const IncidenceStructure& d) {
  SearchDesign s{&d, std::vector<std::vector<std::size_t>>(d.num_points()), {}};
  for (std::size_t i = 0; i < d.num_blocks(); ++i)
    for (std::size_t x : d.block(i)) s.point_blocks[x].push_back(i);
  const auto c = complement(d);
  const std::size_t v = d.num_points();
  const int scale = static_cast<int>(v) + 1;
  s.pair_relation.assign(v, std::vector<int>(v, -1));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      const int r = common_intersection(d, x, y) * scale + common_intersection(c, x, y);
      s.pair_relation[x][y] = s.pair_relation[y][x] = r;
    }
  }
  return s;
}

struct Colouring {
  std::vector<int> points;
  std::vector<int> blocks;
};

using Signature = std::vector<long long>;

// Recolours both sides from a shared signature table; false when the colour
// histograms disagree.
template <typename SigFn>
bool recolour(std::size_t count_a, std::size_t count_b, SigFn sig_a, SigFn sig_b,
              std::vector<int>& out_a, std::vector<int>& out_b) {
  std::vector<Signature> sa(count_a), sb(count_b);
  std::map<Signature, std::pair<int, int>> table;
  for (std::size_t i = 0; i < count_a; ++i) {
    sa[i] = sig_a(i);
    ++table[sa[i]].first;
  }
  for (std::size_t i = 0; i < count_b; ++i) {
    sb[i] = sig_b(i);
    ++table[sb[i]].second;
  }
  std::map<Signature, int> ids;
  int next = 0;
  for (const auto& [sig, counts] : table) {
    if (counts.first != counts.second) return false;
    ids[sig] = next++;
  }
  out_a.resize(count_a);
  out_b.resize(count_b);
  for (std::size_t i = 0; i < count_a; ++i) out_a[i] = ids[sa[i]];
  for (std::size_t i = 0; i < count_b; ++i) out_b[i] = ids[sb[i]];
  return true;
}

std::size_t distinct(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

bool refine(const SearchDesign& a, const SearchDesign& b, Colouring& ca, Colouring& cb) {
  const std::size_t v = a.d->num_points();
  const std::size_t nb = a.d->num_blocks();
  std::size_t classes = distinct(ca.points) + distinct(ca.blocks);
  while (true) {
    auto block_sig = [](const SearchDesign& s, const Colouring& c) {
      return [&s, &c](std::size_t i) {
        Signature sig{c.blocks[i]};
        Signature inner;
        for (std::size_t x : s.d->block(i)) inner.push_back(c.points[x]);
        std::sort(inner.begin(), inner.end());
        sig.insert(sig.end(), inner.begin(), inner.end());
        return sig;
      };
    };
    std::vector<int> nba, nbb;
    {
      auto fa = block_sig(a, ca);
      auto fb = block_sig(b, cb);
      std::function<Signature(std::size_t)> ga = fa, gb = fb;
      if (!recolour(nb, nb, ga, gb, nba, nbb)) return false;
    }
    ca.blocks = std::move(nba);
    cb.blocks = std::move(nbb);

    auto point_sig = [v](const SearchDesign& s, const Colouring& c) {
      return [&s, &c, v](std::size_t x) {
        Signature sig{c.points[x]};
        Signature inner;
        for (std::size_t i : s.point_blocks[x]) inner.push_back(c.blocks[i]);
        std::sort(inner.begin(), inner.end());
        sig.insert(sig.end(), inner.begin(), inner.end());
        sig.push_back(-1);
        inner.clear();
        for (std::size_t y = 0; y < v; ++y) {
          if (y == x) continue;
          inner.push_back(static_cast<long long>(s.pair_relation[x][y]) * (1LL << 32) +
                          c.points[y]);
        }
        std::sort(inner.begin(), inner.end());
        sig.insert(sig.end(), inner.begin(), inner.end());
        return sig;
      };
    };
    std::vector<int> npa, npb;
    {
      std::function<Signature(std::size_t)> ga = point_sig(a, ca), gb = point_sig(b, cb);
      if (!recolour(v, v, ga, gb, npa, npb)) return false;
    }
    ca.points = std::move(npa);
    cb.points = std::move(npb);

    const std::size_t now = distinct(ca.points) + distinct(ca.blocks);
    if (now == classes) return true;
    classes = now;
  }
}

bool search(const SearchDesign& a, const SearchDesign& b, Colouring ca, Colouring cb,
            std::vector<std::size_t>& witness) {
  if (!refine(a, b, ca, cb)) return false;
  const std::size_t v = a.d->num_points();
  std::vector<std::size_t> cell_size(v, 0);
  for (int c : ca.points) ++cell_size[static_cast<std::size_t>(c)];

  // First point of a in a smallest non-singleton cell.
  std::optional<std::size_t> pick;
  for (std::size_t x = 0; x < v; ++x) {
    const auto sz = cell_size[static_cast<std::size_t>(ca.points[x])];
    if (sz > 1 && (!pick || sz < cell_size[static_cast<std::size_t>(ca.points[*pick])])) pick = x;
  }
  if (!pick) {
    std::vector<std::size_t> by_colour(v);
    for (std::size_t y = 0; y < v; ++y) by_colour[static_cast<std::size_t>(cb.points[y])] = y;
    std::vector<std::size_t> perm(v);
    for (std::size_t x = 0; x < v; ++x) perm[x] = by_colour[static_cast<std::size_t>(ca.points[x])];
    if (!is_isomorphism(*a.d, *b.d, perm)) return false;
    witness = std::move(perm);
    return true;
  }
  const int colour = ca.points[*pick];
  const int fresh = static_cast<int>(v);
  for (std::size_t y = 0; y < v; ++y) {
    if (cb.points[y] != colour) continue;
    Colouring na = ca, nb = cb;
    na.points[*pick] = fresh;
    nb.points[y] = fresh;
    if (search(a, b, std::move(na), std::move(nb), witness)) return true;
  }
  return false;
}

}  // namespace

IsomorphismResult are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  IsomorphismResult result;
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks()) return result;
  if (a.num_points() == 0) {
    result.isomorphic = a.num_blocks() == b.num_blocks();
    return result;
  }
  const auto sa = prepare(a);
  const auto sb = prepare(b);
  Colouring ca{std::vector<int>(a.num_points(), 0), std::vector<int>(a.num_blocks(), 0)};
  Colouring cb = ca;
  std::vector<std::size_t> witness;
  if (search(sa, sb, ca, cb, witness)) {
    result.isomorphic = true;
    result.witness = std::move(witness);
  }
  return result;
}

DesignParseError::DesignParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

void write_design(std::ostream& os, const IncidenceStructure& d) {
  os << d.num_points() << ' ' << d.num_blocks() << '\n';
  for (const auto& b : d.blocks()) {
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? " " : "") << b[j];
    os << '\n';
  }
}

std::string to_design_text(const IncidenceStructure& d) {
  std::ostringstream os;
  write_design(os, d);
  return os.str();
}

namespace {

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
      throw DesignParseError(line_no, "expected a non-negative integer, got '" + token + "'");
    }
    if (token.size() > 9) throw DesignParseError(line_no, "index too large: " + token);
    out.push_back(std::stoul(token));
  }
  return out;
}

}  // namespace

IncidenceStructure read_design(std::istream& is) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line)) throw DesignParseError(1, "missing header");
  const auto header = parse_indices(line, line_no);
  if (header.size() != 2) throw DesignParseError(1, "header must be 'v b'");
  const std::size_t v = header[0];
  const std::size_t b = header[1];
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(b);
  for (std::size_t i = 0; i < b; ++i) {
    ++line_no;
    if (!std::getline(is, line)) {
      throw DesignParseError(line_no, "expected " + std::to_string(b) + " blocks, found " +
                                          std::to_string(i));
    }
    auto block = parse_indices(line, line_no);
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (block[j] >= v) {
        throw DesignParseError(line_no, "point " + std::to_string(block[j]) + " out of range");
      }
      if (j > 0 && block[j] <= block[j - 1]) {
        throw DesignParseError(line_no, "block is not strictly increasing");
      }
    }
    blocks.push_back(std::move(block));
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw DesignParseError(line_no, "unexpected content after the last block");
    }
  }
  return IncidenceStructure(v, std::move(blocks));
}

}  // namespace psu4
