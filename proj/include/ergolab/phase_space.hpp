#pragma once

#include <cstdint>
#include <vector>

namespace ergolab {

// The compact metric phase spaces the laboratory works on, together with
// their reference (uniform) measures and metrics.
//
//   UnitInterval  [0,1] with |x-y|
//   Circle        R/Z with arc-length metric, angles stored in [0,1)
//   Annulus       [0,1] x R/Z with max(|r-r'|, arc(t,t'))
//   BinaryShift   one-sided {0,1}^N truncated at shift_depth,
//                 d(w,w') = 2^-k, k = first differing index (0-based)

enum class SpaceKind : std::uint8_t { UnitInterval, Circle, Annulus, BinaryShift };

struct PhaseSpace {
    SpaceKind kind = SpaceKind::UnitInterval;
    int shift_depth = 20; // BinaryShift only, in [1,30]

    static PhaseSpace unit_interval() { return {SpaceKind::UnitInterval, 0}; }
    static PhaseSpace circle() { return {SpaceKind::Circle, 0}; }
    static PhaseSpace annulus() { return {SpaceKind::Annulus, 0}; }
    static PhaseSpace binary_shift(int depth = 20) { return {SpaceKind::BinaryShift, depth}; }

    bool operator==(const PhaseSpace& o) const {
        if (kind != o.kind) return false;
        return kind != SpaceKind::BinaryShift || shift_depth == o.shift_depth;
    }
};

// A point of one of the spaces. The payload in use depends on the kind:
// a = interval coordinate, circle angle or annulus radius; b = annulus angle;
// word = packed binary word, first symbol in the highest used bit so that
// integer order equals lexicographic order on words.
struct Point {
    SpaceKind kind = SpaceKind::UnitInterval;
    double a = 0.0;
    double b = 0.0;
    std::uint32_t word = 0;

    static Point interval(double x) { return {SpaceKind::UnitInterval, x, 0.0, 0}; }
    static Point circle(double angle);
    static Point annulus(double r, double angle);
    static Point shift_word(std::uint32_t bits, int depth);
    // Convenience: build a shift word from 0/1 symbols, first symbol first.
    static Point shift_symbols(const std::vector<int>& symbols, int depth);

    // Symbol at position i (0-based) of a shift point of the given depth.
    int symbol(int i, int depth) const;
};

// Wraps any real to [0,1). Values that round up to 1.0 map to 0.0.
double canonical_angle(double x);

double distance(const PhaseSpace& space, const Point& p, const Point& q);
double diameter(const PhaseSpace& space);

// Checks membership (kind match + coordinate ranges); throws input_error.
void require_in_space(const PhaseSpace& space, const Point& p);

// Deterministic i.i.d. draws from the reference measure (uniform per kind,
// uniform cylinder measure on the shift). Equal seeds give bitwise equal
// output on every platform and thread count.
std::vector<Point> sample_reference(const PhaseSpace& space, std::uint64_t seed, std::int64_t count);

// Strict weak order on points of one space: coordinate order for interval /
// circle, lexicographic (r, angle) for annulus, word order for the shift.
struct PointLess {
    SpaceKind kind = SpaceKind::UnitInterval;
    bool operator()(const Point& p, const Point& q) const;
};

bool point_equal(const PhaseSpace& space, const Point& p, const Point& q);

// Portable uniform double in [0,1) from a 64-bit generator output.
inline double uniform01(std::uint64_t r) {
    return static_cast<double>(r >> 11) * 0x1.0p-53;
}

} // namespace ergolab
