#include "turanham/counts.hpp"

#include <stdexcept>
#include <string>

namespace turanham {

CountingEngine::CountingEngine(Corrections corrections) : corrections_(corrections) {}

void CountingEngine::validate(int d, int n) {
    if (d < 2) {
        throw std::invalid_argument("part size d must be at least 2, got " + std::to_string(d));
    }
    if (n < 1) {
        throw std::invalid_argument("clique count n must be at least 1, got " + std::to_string(n));
    }
}

LabelledTriangle& CountingEngine::triangle(int d, int rows_needed) {
    auto it = triangles_.find(d);
    if (it == triangles_.end()) {
        it = triangles_.emplace(d, LabelledTriangle(d)).first;
    }
    it->second.extend(rows_needed);
    return it->second;
}

ExactInt CountingEngine::linear(int d, int n) {
    validate(d, n);
    return triangle(d, n).at(n, 0);
}

ExactInt CountingEngine::labelled(int d, int n) {
    validate(d, n);
    return b_labelled(d, n, triangle(d, n), corrections_.chord);
}

ExactInt CountingEngine::rotations(int d, int n) {
    validate(d, n);
    return b_rotational(d, n, sectors_);
}

ExactInt CountingEngine::all_symmetries(int d, int n) {
    validate(d, n);
    return b_dihedral(d, n, sectors_, corrections_.dihedral);
}

CountsRecord CountingEngine::record(int d, int n) {
    CountsRecord rec;
    rec.d = d;
    rec.n = n;
    rec.linear = linear(d, n);
    rec.labelled = labelled(d, n);
    rec.rotations = rotations(d, n);
    rec.all_symmetries = all_symmetries(d, n);
    return rec;
}

}  // namespace turanham
