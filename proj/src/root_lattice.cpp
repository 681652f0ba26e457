#include "ricci/root_lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "ricci/parallel.hpp"
#include "ricci/rational.hpp"

namespace ricci {

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator*(std::int64_t k, const IntVector& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
  return c;
}

namespace {

std::string vector_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// Coordinates below are the usual ones times 2.
IntVector unit(std::size_t dim, std::size_t i, std::int64_t scale = 2) {
  IntVector v(dim, 0);
  v[i] = scale;
  return v;
}

struct Block {
  std::size_t dimension = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> simple;
};

void add_pm_pairs(Block& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::int64_t si : {-2, 2}) {
        for (std::int64_t sj : {-2, 2}) {
          IntVector v(b.dimension, 0);
          v[i] = si;
          v[j] = sj;
          b.roots.push_back(v);
        }
      }
    }
  }
}

std::vector<IntVector> difference_chain(std::size_t dim, std::size_t count) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(unit(dim, i) - unit(dim, i + 1));
  return out;
}

Block e8_block() {
  Block b{8, {}, {}};
  add_pm_pairs(b, 8);
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    IntVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    b.roots.push_back(v);
  }
  b.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  b.simple.push_back(unit(8, 0) + unit(8, 1));
  for (std::size_t i = 0; i < 6; ++i) b.simple.push_back(unit(8, i + 1) - unit(8, i));
  return b;
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<IntVector>& columns,
                                                    const IntVector& v) {
  const std::size_t rows = v.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Rational(columns[c][r]);
    m[r][cols] = Rational(v[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols] / m[i][pivot_col[i]];
  return x;
}

// E6 and E7 are the E8 roots whose last one or two simple-root coefficients
// vanish.
Block e_block(int rank) {
  Block e8 = e8_block();
  if (rank == 8) return e8;
  Block b{8, {}, {}};
  b.simple.assign(e8.simple.begin(), e8.simple.begin() + rank);
  for (const auto& r : e8.roots) {
    const auto c = solve_rational(e8.simple, r);
    bool inside = true;
    for (int i = rank; i < 8; ++i)
      if ((*c)[static_cast<std::size_t>(i)] != 0) inside = false;
    if (inside) b.roots.push_back(r);
  }
  return b;
}

Block make_block(RootComponent c) {
  const auto n = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case RootType::kA: {
      Block b{n + 1, {}, {}};
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          if (i != j) b.roots.push_back(unit(n + 1, i) - unit(n + 1, j));
      b.simple = difference_chain(n + 1, n);
      return b;
    }
    case RootType::kB:
    case RootType::kC: {
      const std::int64_t s = c.type == RootType::kB ? 2 : 4;
      Block b{n, {}, {}};
      add_pm_pairs(b, n);
      for (std::size_t i = 0; i < n; ++i) {
        b.roots.push_back(unit(n, i, s));
        b.roots.push_back(unit(n, i, -s));
      }
      b.simple = difference_chain(n, n - 1);
      b.simple.push_back(unit(n, n - 1, s));
      return b;
    }
    case RootType::kD: {
      Block b{n, {}, {}};
      add_pm_pairs(b, n);
      b.simple = difference_chain(n, n - 1);
      b.simple.push_back(unit(n, n - 2) + unit(n, n - 1));
      return b;
    }
    case RootType::kF: {
      Block b{4, {}, {}};
      add_pm_pairs(b, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        b.roots.push_back(unit(4, i));
        b.roots.push_back(unit(4, i, -2));
      }
      for (int mask = 0; mask < 16; ++mask) {
        IntVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        b.roots.push_back(v);
      }
      b.simple = {unit(4, 1) - unit(4, 2), unit(4, 2) - unit(4, 3), unit(4, 3), {1, -1, -1, -1}};
      return b;
    }
    case RootType::kE:
      return e_block(c.rank);
  }
  throw std::logic_error("unknown root type");
}

char type_letter(RootType t) { return "ABCDEF"[static_cast<int>(t)]; }

void check_invariants(const RootSystem& r) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error(r.label + ": " + what);
  };
  std::size_t expected = 0;
  for (const auto& c : r.components) expected += expected_root_count(c);
  if (r.roots.size() != expected) fail("wrong number of roots");
  const std::set<IntVector> all(r.roots.begin(), r.roots.end());
  if (all.size() != r.roots.size()) fail("duplicate roots");
  for (const auto& v : r.roots)
    if (!all.contains(-1 * v)) fail("not closed under negation");
  if (r.squared_lengths.size() == 2 && r.squared_lengths[1] != 2 * r.squared_lengths[0])
    fail("squared length ratio is not 2");
  if (r.has_two_lengths()) {
    const std::int64_t l2 = r.short_squared_length();
    for (const auto& v : r.roots) {
      if (dot(v, v) != l2) continue;
      for (const auto& u : r.roots) {
        const std::int64_t p = dot(u, v);
        if (p > l2) fail("inner product with a short root exceeds l^2");
        if (dot(u, u) != l2 && p != -l2 && p != 0 && p != l2)
          fail("long-short inner product outside {-l^2, 0, l^2}");
      }
    }
  }
  for (const auto& v : r.roots)
    if (!to_simple_coordinates(r, v)) fail("root outside the span of the simple roots");
}

}  // namespace

std::size_t expected_root_count(RootComponent c) {
  const auto n = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case RootType::kA: return n * (n + 1);
    case RootType::kB:
    case RootType::kC: return 2 * n * n;
    case RootType::kD: return 2 * n * (n - 1);
    case RootType::kF: return 48;
    case RootType::kE: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

RootSystem generate_roots(const std::string& label) {
  const std::regex whole(R"(([A-Ga-g]\d+)(\+?[A-Ga-g]\d+)*)");
  if (!std::regex_match(label, whole)) throw std::invalid_argument("bad root system label: " + label);
  RootSystem sys;
  const std::regex part(R"(([A-Ga-g])(\d+))");
  std::vector<Block> blocks;
  for (auto it = std::sregex_iterator(label.begin(), label.end(), part); it != std::sregex_iterator();
       ++it) {
    const char letter = static_cast<char>(std::toupper((*it)[1].str()[0]));
    const int rank = std::stoi((*it)[2].str());
    if (letter == 'G')
      throw std::domain_error("G2 is not supported: the flatness theorem covers all types except G_2");
    RootComponent c{static_cast<RootType>(letter - 'A'), rank};
    const bool ok = (letter == 'A' && rank >= 1) || ((letter == 'B' || letter == 'C') && rank >= 1) ||
                    (letter == 'D' && rank >= 2) || (letter == 'E' && rank >= 6 && rank <= 8) ||
                    (letter == 'F' && rank == 4);
    if (!ok) throw std::domain_error("no root system of type " + (*it)[0].str());
    sys.components.push_back(c);
    blocks.push_back(make_block(c));
  }
  for (const auto& b : blocks) {
    sys.offsets.push_back(sys.dimension);
    sys.dimension += b.dimension;
  }
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    auto place = [&](const IntVector& v) {
      IntVector w(sys.dimension, 0);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
      return w;
    };
    for (const auto& v : b.roots) sys.roots.push_back(place(v));
    for (const auto& v : b.simple) sys.simple_roots.push_back(place(v));
    offset += b.dimension;
  }
  for (std::size_t i = 0; i < sys.components.size(); ++i) {
    if (i) sys.label += "+";
    sys.label += type_letter(sys.components[i].type) + std::to_string(sys.components[i].rank);
  }
  std::sort(sys.roots.begin(), sys.roots.end());
  std::set<std::int64_t> lengths;
  for (const auto& v : sys.roots) lengths.insert(dot(v, v));
  if (lengths.size() > 2) throw std::domain_error(sys.label + " has more than two root lengths");
  sys.squared_lengths.assign(lengths.begin(), lengths.end());
  check_invariants(sys);
  return sys;
}

std::size_t RootSystem::component_of(const IntVector& root) const {
  std::size_t first = 0;
  while (first < root.size() && root[first] == 0) ++first;
  return static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), first) - offsets.begin()) - 1;
}

std::optional<IntVector> to_simple_coordinates(const RootSystem& system, const IntVector& v) {
  if (v.size() != system.dimension) throw std::domain_error("vector has the wrong dimension");
  const auto x = solve_rational(system.simple_roots, v);
  if (!x) return std::nullopt;
  IntVector out;
  for (const auto& c : *x) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num().get_si());
  }
  return out;
}

IntVector from_simple_coordinates(const RootSystem& system, const IntVector& coefficients) {
  if (coefficients.size() != system.rank())
    throw std::invalid_argument("expected " + std::to_string(system.rank()) + " coefficients");
  IntVector v(system.dimension, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) v = v + coefficients[i] * system.simple_roots[i];
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dimension, const std::vector<IntVector>& generators)
    : dimension_(dimension) {
  std::vector<IntVector> pool;
  for (const auto& g : generators) {
    if (g.size() != dimension) throw std::domain_error("generator has the wrong dimension");
    if (!is_zero(g)) pool.push_back(g);
  }
  for (std::size_t c = 0; c < dimension && !pool.empty(); ++c) {
    // Euclid on column c until a single vector has a nonzero entry there.
    while (true) {
      std::size_t best = pool.size();
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i][c] == 0) continue;
        ++nonzero;
        if (best == pool.size() || std::abs(pool[i][c]) < std::abs(pool[best][c])) best = i;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        IntVector row = pool[best];
        if (row[c] < 0) row = -1 * row;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        rows_.push_back(std::move(row));
        pivots_.push_back(c);
        break;
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == best || pool[i][c] == 0) continue;
        const std::int64_t q = pool[i][c] / pool[best][c];
        pool[i] = pool[i] - q * pool[best];
      }
      std::erase_if(pool, is_zero);
    }
  }
}

bool IntegerLattice::is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

IntVector IntegerLattice::reduce(IntVector v) const {
  if (v.size() != dimension_) throw std::domain_error("vector has the wrong dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::int64_t q = floor_div(v[pivots_[i]], rows_[i][pivots_[i]]);
    if (q != 0) v = v - q * rows_[i];
  }
  return v;
}

// ---------------------------------------------------------------------------

LatticeSpec make_lattice_spec(RootSystem system, std::vector<IntVector> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) throw std::domain_error("generating set is empty");
  for (const auto& s : generators) {
    if (!std::binary_search(system.roots.begin(), system.roots.end(), s))
      throw std::domain_error(vector_string(s) + " is not a root");
    if (!std::binary_search(generators.begin(), generators.end(), -1 * s))
      throw std::domain_error("generating set is not symmetric: missing -" + vector_string(s));
  }
  const IntegerLattice span(system.dimension, generators);
  for (const auto& a : system.simple_roots)
    if (!span.contains(a)) throw std::domain_error("generators do not span the root lattice");
  return {std::move(system), std::move(generators)};
}

LatticeSpec full_lattice_spec(const std::string& label) {
  RootSystem sys = generate_roots(label);
  auto roots = sys.roots;
  return make_lattice_spec(std::move(sys), std::move(roots));
}

LatticeSpec lattice_spec_from_indices(const std::string& label, const std::vector<std::size_t>& indices) {
  RootSystem sys = generate_roots(label);
  std::vector<IntVector> gens;
  for (std::size_t i : indices) {
    if (i >= sys.roots.size()) throw std::domain_error("root index out of range");
    gens.push_back(sys.roots[i]);
    gens.push_back(-1 * sys.roots[i]);
  }
  return make_lattice_spec(std::move(sys), std::move(gens));
}

LatticeBall cayley_ball(const LatticeSpec& spec, int radius) {
  if (radius < 0) throw std::domain_error("radius must be nonnegative");
  if (spec.generators.empty()) throw std::domain_error("generating set is empty");
  LatticeBall ball;
  ball.radius = radius;
  const IntVector origin(spec.system.dimension, 0);
  ball.points.push_back(origin);
  ball.depth.push_back(0);
  ball.index.emplace(origin, 0);
  for (std::size_t head = 0; head < ball.points.size(); ++head) {
    if (ball.depth[head] == radius) continue;
    for (const auto& s : spec.generators) {
      IntVector p = ball.points[head] + s;
      if (ball.index.contains(p)) continue;
      ball.index.emplace(p, ball.points.size());
      ball.points.push_back(std::move(p));
      ball.depth.push_back(ball.depth[head] + 1);
    }
  }
  ball.graph = Graph(ball.points.size());
  for (Vertex v = 0; v < ball.points.size(); ++v) {
    for (const auto& s : spec.generators) {
      auto it = ball.index.find(ball.points[v] + s);
      if (it != ball.index.end() && v < it->second) ball.graph.add_edge(v, it->second);
    }
  }
  std::vector<bool> interior(ball.points.size());
  for (Vertex v = 0; v < ball.points.size(); ++v) interior[v] = ball.depth[v] <= radius - 2;
  ball.graph.set_interior(std::move(interior));
  return ball;
}

LatticePair lattice_pair_neighborhood(const LatticeSpec& spec, const IntVector& x, const IntVector& y) {
  const auto& gens = spec.generators;
  if (!std::binary_search(gens.begin(), gens.end(), y - x))
    throw std::domain_error("y - x is not a generator");
  LatticePair out;
  std::set<IntVector> pts{x, y};
  for (const auto& s : gens) {
    pts.insert(x + s);
    pts.insert(y + s);
  }
  out.points.assign(pts.begin(), pts.end());
  auto id = [&](const IntVector& p) {
    return static_cast<Vertex>(std::lower_bound(out.points.begin(), out.points.end(), p) -
                               out.points.begin());
  };
  const std::set<IntVector> gen_set(gens.begin(), gens.end());
  // Every pair here is within distance 3 because x and y are adjacent.
  auto dist = [&](const IntVector& a, const IntVector& b) {
    const IntVector d = b - a;
    if (std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c == 0; })) return 0;
    if (gen_set.contains(d)) return 1;
    for (const auto& s : gens)
      if (gen_set.contains(d - s)) return 2;
    return 3;
  };
  const std::size_t n = out.points.size();
  std::vector<int> table(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table[i * n + j] = table[j * n + i] = dist(out.points[i], out.points[j]);
    }
  }
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  auto& nb = out.neighborhood;
  nb.x = id(x);
  nb.y = id(y);
  for (const auto& s : gens) {
    nb.neighbors_x.push_back(id(x + s));
    nb.neighbors_y.push_back(id(y + s));
  }
  std::sort(nb.neighbors_x.begin(), nb.neighbors_x.end());
  std::sort(nb.neighbors_y.begin(), nb.neighbors_y.end());
  nb.metric = Metric(std::move(ids), std::move(table));
  nb.distance = 1;
  return out;
}

DistanceHypothesisReport distance_hypothesis_check(const LatticeSpec& spec, const IntVector& s, int n_max) {
  if (!std::binary_search(spec.generators.begin(), spec.generators.end(), s))
    throw std::domain_error(vector_string(s) + " is not a generator");
  DistanceHypothesisReport report;
  const LatticeBall ball = cayley_ball(spec, std::max(n_max, 0));
  for (int n = 1; n <= n_max; ++n) {
    auto it = ball.index.find(static_cast<std::int64_t>(n) * s);
    const int d = it == ball.index.end() ? n_max + 1 : ball.depth[it->second];
    report.witnesses.push_back({n, d});
    if (d != n) {
      report.ok = false;
      report.failures.push_back("d(0, " + std::to_string(n) + "s) = " + std::to_string(d));
    }
  }
  const auto& sys = spec.system;
  if (sys.has_two_lengths() && dot(s, s) == sys.short_squared_length()) {
    report.inner_product_checked = true;
    for (const auto& u : spec.generators) {
      if (dot(u, s) > sys.short_squared_length()) {
        report.inner_product_ok = false;
        report.ok = false;
        report.failures.push_back("<u, s> > l^2 for u = " + vector_string(u));
      }
    }
  }
  return report;
}

TranslationCoupling translation_coupling(const LatticeSpec& spec, const IntVector& x, const IntVector& y,
                                         const Rational& alpha) {
  TranslationCoupling out;
  out.pair = lattice_pair_neighborhood(spec, x, y);
  const auto& nb = out.pair.neighborhood;
  out.from = lazy_measure(nb, true, alpha);
  out.to = lazy_measure(nb, false, alpha);
  const IntVector shift = y - x;
  for (const auto& [v, mass] : out.from.support()) {
    const IntVector target = out.pair.points[v] + shift;
    const auto w = static_cast<Vertex>(
        std::lower_bound(out.pair.points.begin(), out.pair.points.end(), target) - out.pair.points.begin());
    out.coupling.entries[{v, w}] += mass;
  }
  out.cost = coupling_cost(out.coupling, nb.metric);
  out.verification = verify_coupling(out.coupling, out.from, out.to, nb.metric);
  return out;
}

LatticeFlatnessReport lattice_flatness_check(const LatticeSpec& spec, int radius, unsigned jobs) {
  if (radius < 4) throw std::domain_error("flatness sweeps need radius >= 4");
  if (spec.system.rank() > kMaxSweepRank)
    throw std::domain_error("rank " + std::to_string(spec.system.rank()) +
                            " is too large for a full sweep; check edge orbits instead");
  const LatticeBall ball = cayley_ball(spec, radius);
  LatticeFlatnessReport report;
  report.vertices = ball.points.size();
  for (const auto& r : edge_curvatures(ball.graph, jobs)) {
    ++report.edges_checked;
    if (r.kappa != 0) report.non_flat.emplace_back(r.edge(), r.kappa);
  }
  return report;
}

std::vector<IntVector> orbit_representatives(const LatticeSpec& spec) {
  if (spec.generators != spec.system.roots) return spec.generators;
  std::set<std::pair<std::size_t, std::int64_t>> seen;
  std::vector<IntVector> out;
  for (const auto& s : spec.generators)
    if (seen.emplace(spec.system.component_of(s), dot(s, s)).second) out.push_back(s);
  return out;
}

std::vector<std::pair<IntVector, Rational>> lattice_orbit_curvatures(const LatticeSpec& spec,
                                                                     std::vector<IntVector> generators,
                                                                     unsigned jobs) {
  if (generators.empty()) generators = spec.generators;
  std::vector<std::pair<IntVector, Rational>> out(generators.size());
  const IntVector origin(spec.system.dimension, 0);
  parallel_for(generators.size(), jobs, [&](std::size_t i) {
    const auto pair = lattice_pair_neighborhood(spec, origin, generators[i]);
    out[i] = {generators[i], kappa(pair.neighborhood).kappa};
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<IntVector> parse_sublattice(const RootSystem& system, const std::string& text) {
  std::vector<IntVector> basis;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::istringstream in(row);
    IntVector coeffs;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad sublattice entry: " + tok);
      }
      if (used != tok.size()) throw std::invalid_argument("bad sublattice entry: " + tok);
      coeffs.push_back(value);
    }
    if (coeffs.empty()) continue;
    basis.push_back(from_simple_coordinates(system, coeffs));
  }
  if (basis.empty()) throw std::invalid_argument("empty sublattice basis");
  return basis;
}

QuotientGraph quotient_graph(const QuotientSpec& q) {
  const auto& sys = q.spec.system;
  const IntegerLattice root_lattice(sys.dimension, sys.simple_roots);
  for (const auto& b : q.sublattice_basis)
    if (!root_lattice.contains(b)) throw std::domain_error(vector_string(b) + " is not in the root lattice");
  QuotientGraph out{Graph(), {}, IntegerLattice(sys.dimension, q.sublattice_basis), {}};
  if (out.sublattice.rank() != q.sublattice_basis.size())
    throw std::domain_error("sublattice basis is linearly dependent");
  if (out.sublattice.rank() != sys.rank()) throw std::domain_error("sublattice has infinite index");

  const LatticeBall gate = cayley_ball(q.spec, kMinCosetDistance - 1);
  for (Vertex v = 1; v < gate.points.size(); ++v) {
    if (out.sublattice.contains(gate.points[v])) {
      const auto coords = to_simple_coordinates(sys, gate.points[v]);
      throw QuotientRefused("sublattice element " + vector_string(*coords) + " is at distance " +
                                std::to_string(gate.depth[v]) + " < " + std::to_string(kMinCosetDistance),
                            gate.points[v], gate.depth[v]);
    }
  }

  out.representatives.push_back(out.sublattice.reduce(IntVector(sys.dimension, 0)));
  out.index.emplace(out.representatives[0], 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t head = 0; head < out.representatives.size(); ++head) {
    for (const auto& s : q.spec.generators) {
      IntVector t = out.sublattice.reduce(out.representatives[head] + s);
      auto [it, fresh] = out.index.try_emplace(t, out.representatives.size());
      if (fresh) out.representatives.push_back(std::move(t));
      edges.emplace_back(head, it->second);
    }
  }
  out.graph = Graph(out.representatives.size());
  for (auto [a, b] : edges) out.graph.add_edge(a, b);
  return out;
}

CoverMap quotient_projection(const QuotientGraph& from, const QuotientGraph& to) {
  for (const auto& b : from.sublattice.basis())
    if (!to.sublattice.contains(b)) throw std::domain_error("sublattices are not nested");
  CoverMap f{&from.graph, &to.graph, {}};
  for (const auto& r : from.representatives) f.mapping.push_back(to.vertex_of(r));
  return f;
}

}  // namespace ricci
