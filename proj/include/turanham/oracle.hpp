#pragma once

#include <functional>
#include <map>
#include <vector>

#include "turanham/exact.hpp"

namespace turanham::oracle {

// Brute-force ground truth. Everything here enumerates diagrams explicitly
// and counts; no symmetry pruning beyond fixing block generation order.

// A diagram on points 0..N-1: blocks[i] is a strictly increasing point set,
// blocks are ordered by their minimum element. Every block has d points.
using Blocks = std::vector<std::vector<int>>;

// Calls visit for every partition of {0..n*d-1} into n blocks of size d,
// in canonical form.
void for_each_diagram(int d, int n, const std::function<void(const Blocks&)>& visit);

// Hard size caps, overridable through TURANHAM_ORACLE_MAX_POINTS.
int max_points_enumeration();   // default 14
int max_points_orbit();         // default 12
int max_points_backtracking();  // default 10

// Histogram of linear loop counts (adjacent same-block pairs on a line) over
// all diagrams.
std::map<int, ExactInt> enumerate_linear(int d, int n);

// Diagrams with no cyclic loop (adjacency wraps around).
ExactInt enumerate_chord_loopless(int d, int n);

// Loopless diagrams invariant under rotation by n*d/m positions, m | n*d.
ExactInt fixed_under_rotation(int d, int n, long long m);

enum class Axis {
    edge,    // between two points; requires n*d even
    vertex,  // through one point (n*d odd) or two antipodal points (n*d even)
};

// Loopless diagrams fixed by one representative reflection of the given axis
// class (counts agree across axes of a class by conjugacy).
ExactInt fixed_under_reflection(int d, int n, Axis axis);

enum class Group { cyclic, dihedral };

// Number of loopless-diagram classes under the group action, counted through
// canonical forms (minimum over group images), independent of any counting
// formula.
ExactInt orbit_count(int d, int n, Group group);

// Diagrams on m*v points invariant under rotation by v positions with exactly
// k loops in every sector of v consecutive points (adjacency within sectors
// only). Zero when m*v is not a multiple of d.
ExactInt enumerate_m_linear(int m, int d, int v, int k);

// Undirected Hamiltonian cycles (edge sets) in the complete n-partite graph
// with d vertices per part, counted by backtracking.
ExactInt hamiltonian_cycles_direct(int d, int n);

}  // namespace turanham::oracle
