#include "ricci/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ricci/curvature.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.num_vertices();
  const std::size_t nh = h.num_vertices();
  Graph p(ng * nh);
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      for (Vertex w : h.neighbors(v))
        if (v < w) p.add_edge(u * nh + v, u * nh + w);
      for (Vertex w : g.neighbors(u))
        if (u < w) p.add_edge(u * nh + v, w * nh + v);
    }
  }
  if (g.has_interior_marking() || h.has_interior_marking()) {
    std::vector<bool> interior(ng * nh);
    for (Vertex u = 0; u < ng; ++u)
      for (Vertex v = 0; v < nh; ++v) interior[u * nh + v] = g.is_interior(u) && h.is_interior(v);
    p.set_interior(std::move(interior));
  }
  return p;
}

namespace {

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.num_vertices() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::map<Edge, Rational> curvature_table(const Graph& g, unsigned jobs) {
  std::map<Edge, Rational> table;
  for (const auto& r : edge_curvatures(g, jobs)) table.emplace(r.edge(), r.kappa);
  return table;
}

}  // namespace

ProductCurvatureReport product_curvature_check(const Graph& g, const Graph& h, unsigned jobs) {
  const auto dg = regular_degree(g);
  const auto dh = regular_degree(h);
  if (!dg || !dh) throw std::domain_error("theorem precondition unmet: factors must be regular");
  if (*dg + *dh == 0) throw std::domain_error("theorem precondition unmet: product has no edges");

  const auto kg = curvature_table(g, jobs);
  const auto kh = curvature_table(h, jobs);
  const Rational share_g = make_rational(static_cast<std::int64_t>(*dg),
                                         static_cast<std::int64_t>(*dg + *dh));
  const Rational share_h = 1 - share_g;

  const Graph p = cartesian_product(g, h);
  const auto edges = p.interior_edges();
  ProductCurvatureReport report;
  report.edges.resize(edges.size());
  parallel_for(edges.size(), jobs, [&](std::size_t i) {
    ProductEdgeCheck& c = report.edges[i];
    c.edge = edges[i];
    const auto a = product_coordinates(h, c.edge.u);
    const auto b = product_coordinates(h, c.edge.v);
    c.along_first = a.second == b.second;
    if (c.along_first) {
      c.factor_edge = Edge(a.first, b.first);
      c.factor_kappa = kg.at(c.factor_edge);
      c.predicted = share_g * c.factor_kappa;
    } else {
      c.factor_edge = Edge(a.second, b.second);
      c.factor_kappa = kh.at(c.factor_edge);
      c.predicted = share_h * c.factor_kappa;
    }
    c.kappa = kappa(p, c.edge.u, c.edge.v).kappa;
  });
  for (const auto& c : report.edges)
    if (c.kappa != c.predicted) report.mismatches.push_back(c);
  return report;
}

void CoverMap::validate() const {
  if (!source || !target) throw std::domain_error("cover map without graphs");
  if (mapping.size() != source->num_vertices())
    throw std::domain_error("cover map is not total on the source");
  for (Vertex v : mapping)
    if (!target->contains(v)) throw std::domain_error("cover map leaves the target");
}

CoverMap modular_cover(const Graph& source, const Graph& target) {
  if (target.num_vertices() == 0) throw std::domain_error("empty target");
  CoverMap f{&source, &target, {}};
  f.mapping.resize(source.num_vertices());
  for (Vertex v = 0; v < source.num_vertices(); ++v) f.mapping[v] = v % target.num_vertices();
  return f;
}

namespace {

std::vector<Vertex> closed_edge_neighborhood(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> out{u, v};
  for (Vertex w : g.neighbors(u)) out.push_back(w);
  for (Vertex w : g.neighbors(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CoverCheck strong_cover_check(const CoverMap& f) {
  f.validate();
  const Graph& g = *f.source;
  const Graph& h = *f.target;
  CoverCheck check;
  auto fail = [&](std::optional<Edge> e, std::string reason) {
    check.ok = false;
    check.edge = e;
    check.reason = std::move(reason);
    return check;
  };

  std::vector<bool> hit(h.num_vertices(), false);
  for (Vertex v : f.mapping) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return fail(std::nullopt, "not surjective");

  for (const Edge& e : g.edges()) {
    const Vertex fu = f(e.u);
    const Vertex fv = f(e.v);
    if (!h.has_edge(fu, fv)) return fail(e, "edge not preserved");
    const auto from = closed_edge_neighborhood(g, e.u, e.v);
    const auto to = closed_edge_neighborhood(h, fu, fv);
    std::vector<Vertex> image;
    for (Vertex a : from) image.push_back(f(a));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      return fail(e, "neighbourhood images collide");
    if (image != to) return fail(e, "neighbourhood image is not onto");
    for (std::size_t i = 0; i < from.size(); ++i) {
      for (std::size_t j = i + 1; j < from.size(); ++j) {
        if (g.has_edge(from[i], from[j]) != h.has_edge(f(from[i]), f(from[j])))
          return fail(e, "induced neighbourhoods differ");
      }
    }
  }
  return check;
}

CoverTransferReport cover_flatness_transfer(const CoverMap& f, unsigned jobs) {
  const auto check = strong_cover_check(f);
  if (!check.ok) throw std::domain_error("not a strong cover: " + check.reason);
  const auto kt = curvature_table(*f.target, jobs);
  const auto edges = f.source->edges();
  CoverTransferReport report;
  report.edges.resize(edges.size());
  parallel_for(edges.size(), jobs, [&](std::size_t i) {
    auto& c = report.edges[i];
    c.source_edge = edges[i];
    c.target_edge = Edge(f(edges[i].u), f(edges[i].v));
    c.source_kappa = kappa(*f.source, edges[i].u, edges[i].v).kappa;
    c.target_kappa = kt.at(c.target_edge);
  });
  for (const auto& c : report.edges)
    if (c.source_kappa != c.target_kappa) report.mismatches.push_back(c);
  return report;
}

}  // namespace ricci
