#pragma once

#include "ergolab/phase_space.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ergolab {

// Finitely supported probability measure on a phase space. Atoms are kept
// sorted by location (PointLess order) with exactly-equal locations merged;
// weights are positive and sum to 1 within 1e-12.
struct EmpiricalMeasure {
    PhaseSpace space;
    std::vector<std::pair<Point, double>> atoms;
    std::int64_t n_source = 0; // orbit points merged in, 0 if synthetic

    std::size_t size() const { return atoms.size(); }
};

// Builds a measure from points and weights: canonicalizes, sorts, merges
// duplicates, validates the weight sum.
EmpiricalMeasure make_measure(const PhaseSpace& space,
                              std::vector<std::pair<Point, double>> atoms,
                              std::int64_t n_source = 0);

EmpiricalMeasure dirac(const PhaseSpace& space, const Point& p);

// Uniform measure on explicit support points (weights 1/n each).
EmpiricalMeasure uniform_on(const PhaseSpace& space, const std::vector<Point>& pts);

bool measure_equal(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

// Finitely supported probability measure whose atoms are measures.
struct MetaMeasure {
    PhaseSpace space;
    std::vector<std::pair<EmpiricalMeasure, double>> atoms;

    std::size_t size() const { return atoms.size(); }
};

MetaMeasure make_meta(const PhaseSpace& space,
                      std::vector<std::pair<EmpiricalMeasure, double>> atoms);

MetaMeasure meta_dirac(const EmpiricalMeasure& mu);

// Quantizes supports before O(k^2) lifted computations. Atoms falling in a
// common mesh cell merge at their weighted mean location (lowest word for the
// shift space), so isolated atoms are returned unchanged and
// W1(input, output) <= mesh always.
EmpiricalMeasure coarsen(const EmpiricalMeasure& mu, double mesh);

} // namespace ergolab
