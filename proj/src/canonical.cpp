#include "ricci/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace ricci {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.num_vertices()) {}

  CanonicalLabeling run() {
    std::vector<int> colors(n_);
    for (Vertex v = 0; v < n_; ++v) colors[v] = static_cast<int>(g_.degree(v));
    search(std::move(colors));
    CanonicalLabeling result;
    result.form.num_vertices = n_;
    if (best_code_) result.form.code = *best_code_;
    result.order = best_order_;
    return result;
  }

 private:
  // Colour refinement to the coarsest equitable partition finer than the
  // input. New colours are ranks of (colour, sorted neighbour colours), so the
  // result depends only on the isomorphism class of (graph, colouring).
  void refine(std::vector<int>& colors) const {
    std::size_t classes = count_classes(colors);
    while (true) {
      std::vector<std::pair<std::vector<int>, Vertex>> signatures(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& sig = signatures[v].first;
        sig.push_back(colors[v]);
        for (Vertex w : g_.neighbors(v)) sig.push_back(colors[w]);
        std::sort(sig.begin() + 1, sig.end());
        signatures[v].second = v;
      }
      std::sort(signatures.begin(), signatures.end());
      int rank = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || signatures[i].first != signatures[i - 1].first) ++rank;
        colors[signatures[i].second] = rank;
      }
      const std::size_t refined = static_cast<std::size_t>(rank + 1);
      if (refined == classes) return;
      classes = refined;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  void search(std::vector<int> colors) {
    refine(colors);
    // Smallest colour whose class has more than one vertex.
    std::vector<int> counts(n_ + 1, 0);
    for (int c : colors) ++counts[static_cast<std::size_t>(c)];
    std::optional<int> target;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (!target) {
      leaf(colors);
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != *target) continue;
      std::vector<int> split(n_);
      for (Vertex w = 0; w < n_; ++w) {
        split[w] = 2 * colors[w] + ((colors[w] == *target && w != v) ? 1 : 0);
      }
      search(std::move(split));
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[static_cast<std::size_t>(colors[v])] = v;
    std::string code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        code.push_back(g_.has_edge(order[i], order[j]) ? '1' : '0');
      }
    }
    if (!best_code_ || code < *best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::optional<std::string> best_code_;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph canonical_relabel(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  Graph h = g.induced(labeling.order);
  std::vector<std::int64_t> labels(h.num_vertices());
  std::iota(labels.begin(), labels.end(), 0);
  h.set_labels(std::move(labels));
  return h;
}

}  // namespace ricci
