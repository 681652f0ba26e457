#pragma once

#include <random>
#include <string>

#include "ricci/graph.hpp"

namespace ricci {

// Labelings are fixed so golden files stay stable.

/// i ~ i+1 (mod n). Throws std::domain_error for n < 3.
Graph cycle_graph(std::size_t n);
/// i ~ i+1 for i < n-1; a finite path with two leaves.
Graph path_graph(std::size_t n);
/// Centre 0 joined to leaves 1..k.
Graph star_graph(std::size_t k);
Graph complete_graph(std::size_t n);
/// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
Graph petersen_graph();
/// Generalized Petersen graph GP(10, 2): outer 10-cycle 0..9, spokes
/// i ~ i+10, inner i+10 ~ (i+2 mod 10)+10.
Graph dodecahedral_graph();
/// Window of the infinite path: path_graph(n) with the two vertices at each
/// end marked non-interior, so every interior edge sees its full radius-2
/// neighbourhood. Requires n >= 6.
Graph infinite_path_window(std::size_t n);
/// a x b patch of the square grid Z^2; vertex (i, j) is i * b + j.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Uniform labelled tree on n vertices (Prüfer decoding).
Graph random_tree(std::size_t n, std::mt19937_64& rng);
/// Random connected graph of girth >= 5: a random tree plus up to
/// `extra_edges` random chords that keep every cycle at length >= 5.
Graph random_girth5_graph(std::size_t n, std::size_t extra_edges, std::mt19937_64& rng);
/// Erdős–Rényi G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace ricci
