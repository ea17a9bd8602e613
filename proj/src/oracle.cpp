#include "turanham/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace turanham::oracle {

namespace {

int env_cap(int fallback) {
    if (const char* raw = std::getenv("TURANHAM_ORACLE_MAX_POINTS")) {
        const int v = std::atoi(raw);
        if (v > 0) {
            return v;
        }
    }
    return fallback;
}

void require_points(int d, int n, int cap, const char* what) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument(std::string(what) + ": bad dimensions d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n));
    }
    const long long points = static_cast<long long>(d) * n;
    if (points > cap) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(points) +
                                    " points exceeds the enumeration bound " + std::to_string(cap));
    }
}

// Block id of every point, -1 while unassigned.
struct Assignment {
    std::vector<int> block_of;
    Blocks blocks;
};

void assign_blocks(int d, Assignment& a, const std::function<void(const Blocks&)>& visit) {
    const int total = static_cast<int>(a.block_of.size());
    int first = -1;
    for (int p = 0; p < total; ++p) {
        if (a.block_of[p] < 0) {
            first = p;
            break;
        }
    }
    if (first < 0) {
        visit(a.blocks);
        return;
    }
    // the smallest unassigned point always opens the next block, so each
    // unordered partition is generated exactly once
    const int block_id = static_cast<int>(a.blocks.size());
    std::vector<int> members{first};
    a.block_of[first] = block_id;

    std::function<void(int, int)> pick = [&](int from, int need) {
        if (need == 0) {
            a.blocks.push_back(members);
            assign_blocks(d, a, visit);
            a.blocks.pop_back();
            return;
        }
        for (int p = from; p <= total - need; ++p) {
            if (a.block_of[p] >= 0) {
                continue;
            }
            a.block_of[p] = block_id;
            members.push_back(p);
            pick(p + 1, need - 1);
            members.pop_back();
            a.block_of[p] = -1;
        }
    };
    pick(first + 1, d - 1);
    a.block_of[first] = -1;
}

int count_loops_linear(const std::vector<int>& block_of) {
    int loops = 0;
    for (std::size_t i = 0; i + 1 < block_of.size(); ++i) {
        loops += block_of[i] == block_of[i + 1];
    }
    return loops;
}

bool is_loopless_cyclic(const std::vector<int>& block_of) {
    const std::size_t n = block_of.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (block_of[i] == block_of[(i + 1) % n]) {
            return false;
        }
    }
    return true;
}

std::vector<int> block_ids(const Blocks& blocks, int total) {
    std::vector<int> ids(static_cast<std::size_t>(total), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int p : blocks[b]) {
            ids[static_cast<std::size_t>(p)] = static_cast<int>(b);
        }
    }
    return ids;
}

// Canonical encoding of the image of a diagram under the point permutation
// perm: blocks sorted internally and by first element.
Blocks apply_permutation(const Blocks& blocks, const std::vector<int>& perm) {
    Blocks image;
    image.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int p : block) {
            mapped.push_back(perm[static_cast<std::size_t>(p)]);
        }
        std::sort(mapped.begin(), mapped.end());
        image.push_back(std::move(mapped));
    }
    std::sort(image.begin(), image.end());
    return image;
}

std::vector<int> rotation_perm(int total, int shift) {
    std::vector<int> perm(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        perm[static_cast<std::size_t>(i)] = (i + shift) % total;
    }
    return perm;
}

// Reflection i -> (c - i) mod total. c = 0 fixes point 0 (and the antipode
// when total is even); c = 1 is the axis between points 0 and 1.
std::vector<int> reflection_perm(int total, int c) {
    std::vector<int> perm(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        perm[static_cast<std::size_t>(i)] = ((c - i) % total + total) % total;
    }
    return perm;
}

}  // namespace

int max_points_enumeration() { return env_cap(14); }
int max_points_orbit() { return env_cap(12); }
int max_points_backtracking() { return env_cap(10); }

void for_each_diagram(int d, int n, const std::function<void(const Blocks&)>& visit) {
    Assignment a;
    a.block_of.assign(static_cast<std::size_t>(d) * n, -1);
    if (n == 0) {
        visit(a.blocks);
        return;
    }
    assign_blocks(d, a, visit);
}

std::map<int, ExactInt> enumerate_linear(int d, int n) {
    require_points(d, n, max_points_enumeration(), "enumerate_linear");
    std::map<int, ExactInt> histogram;
    if (n == 0) {
        histogram[0] = 1;
        return histogram;
    }
    const int total = d * n;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        histogram[count_loops_linear(block_ids(blocks, total))] += 1;
    });
    return histogram;
}

ExactInt enumerate_chord_loopless(int d, int n) {
    require_points(d, n, max_points_enumeration(), "enumerate_chord_loopless");
    if (n == 0) {
        return 1;
    }
    const int total = d * n;
    ExactInt count = 0;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        count += is_loopless_cyclic(block_ids(blocks, total));
    });
    return count;
}

ExactInt fixed_under_rotation(int d, int n, long long m) {
    require_points(d, n, max_points_enumeration(), "fixed_under_rotation");
    const int total = d * n;
    if (m < 1 || total % m != 0) {
        throw std::invalid_argument("fixed_under_rotation: m=" + std::to_string(m) +
                                    " does not divide " + std::to_string(total));
    }
    const auto perm = rotation_perm(total, static_cast<int>(total / m));
    ExactInt count = 0;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        if (!is_loopless_cyclic(block_ids(blocks, total))) {
            return;
        }
        count += apply_permutation(blocks, perm) == blocks;
    });
    return count;
}

ExactInt fixed_under_reflection(int d, int n, Axis axis) {
    require_points(d, n, max_points_enumeration(), "fixed_under_reflection");
    const int total = d * n;
    if (axis == Axis::edge && total % 2 != 0) {
        throw std::invalid_argument("fixed_under_reflection: edge axis needs an even point count");
    }
    const auto perm = reflection_perm(total, axis == Axis::edge ? 1 : 0);
    ExactInt count = 0;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        if (!is_loopless_cyclic(block_ids(blocks, total))) {
            return;
        }
        count += apply_permutation(blocks, perm) == blocks;
    });
    return count;
}

ExactInt orbit_count(int d, int n, Group group) {
    require_points(d, n, max_points_orbit(), "orbit_count");
    const int total = d * n;
    std::vector<std::vector<int>> perms;
    for (int s = 0; s < total; ++s) {
        perms.push_back(rotation_perm(total, s));
    }
    if (group == Group::dihedral) {
        for (int c = 0; c < total; ++c) {
            perms.push_back(reflection_perm(total, c));
        }
    }
    std::vector<Blocks> canon;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        if (!is_loopless_cyclic(block_ids(blocks, total))) {
            return;
        }
        Blocks best = blocks;
        for (const auto& perm : perms) {
            Blocks image = apply_permutation(blocks, perm);
            if (image < best) {
                best = std::move(image);
            }
        }
        canon.push_back(std::move(best));
    });
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return static_cast<long long>(canon.size());
}

ExactInt enumerate_m_linear(int m, int d, int v, int k) {
    if (m < 1 || d < 1 || v < 0 || k < 0) {
        throw std::invalid_argument("enumerate_m_linear: bad arguments");
    }
    const long long points = static_cast<long long>(m) * v;
    if (points > max_points_orbit()) {
        throw std::invalid_argument("enumerate_m_linear: " + std::to_string(points) +
                                    " points exceeds the enumeration bound " +
                                    std::to_string(max_points_orbit()));
    }
    if (v == 0) {
        return k == 0 ? 1 : 0;
    }
    if (points % d != 0) {
        return 0;
    }
    const int total = static_cast<int>(points);
    const int n = total / d;
    const auto shift = rotation_perm(total, v);
    ExactInt count = 0;
    for_each_diagram(d, n, [&](const Blocks& blocks) {
        if (apply_permutation(blocks, shift) != blocks) {
            return;
        }
        const auto ids = block_ids(blocks, total);
        // loops of the first sector; every sector matches by invariance
        int loops = 0;
        for (int i = 0; i + 1 < v; ++i) {
            loops += ids[static_cast<std::size_t>(i)] == ids[static_cast<std::size_t>(i + 1)];
        }
        count += loops == k;
    });
    return count;
}

ExactInt hamiltonian_cycles_direct(int d, int n) {
    require_points(d, n, max_points_backtracking(), "hamiltonian_cycles_direct");
    const int total = d * n;
    if (n < 2 || total < 3) {
        return 0;  // no edges, or no simple cycle on fewer than 3 vertices
    }
    // vertices 0..total-1, vertex v in part v/d; edges join distinct parts
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    ExactInt directed = 0;
    std::function<void(int, int)> walk = [&](int vertex, int depth) {
        if (depth == total) {
            if (vertex / d != 0) {  // closing edge back to vertex 0
                directed += 1;
            }
            return;
        }
        for (int next = 1; next < total; ++next) {
            if (used[static_cast<std::size_t>(next)] || next / d == vertex / d) {
                continue;
            }
            used[static_cast<std::size_t>(next)] = true;
            walk(next, depth + 1);
            used[static_cast<std::size_t>(next)] = false;
        }
    };
    used[0] = true;
    walk(0, 1);
    // every undirected cycle was traced once per direction from the fixed
    // start vertex 0
    return exact_div(directed, 2);
}

}  // namespace turanham::oracle
