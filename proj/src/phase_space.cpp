#include "ergolab/phase_space.hpp"
#include "ergolab/errors.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace ergolab {

double canonical_angle(double x) {
    double y = x - std::floor(x);
    if (y >= 1.0) y = 0.0; // floor rounding at the seam
    return y;
}

Point Point::circle(double angle) {
    return {SpaceKind::Circle, canonical_angle(angle), 0.0, 0};
}

Point Point::annulus(double r, double angle) {
    return {SpaceKind::Annulus, r, canonical_angle(angle), 0};
}

Point Point::shift_word(std::uint32_t bits, int depth) {
    if (depth < 1 || depth > 30) throw input_error("shift depth must be in [1,30]");
    if (bits >> depth) throw input_error("shift word wider than depth");
    return {SpaceKind::BinaryShift, 0.0, 0.0, bits};
}

Point Point::shift_symbols(const std::vector<int>& symbols, int depth) {
    if (static_cast<int>(symbols.size()) != depth)
        throw input_error("shift symbol count must equal depth");
    std::uint32_t bits = 0;
    for (int s : symbols) {
        if (s != 0 && s != 1) throw input_error("shift symbols must be 0 or 1");
        bits = (bits << 1) | static_cast<std::uint32_t>(s);
    }
    return shift_word(bits, depth);
}

int Point::symbol(int i, int depth) const {
    return static_cast<int>((word >> (depth - 1 - i)) & 1u);
}

static double arc_distance(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

void require_in_space(const PhaseSpace& space, const Point& p) {
    if (p.kind != space.kind) throw input_error("point kind does not match space kind");
    switch (space.kind) {
        case SpaceKind::UnitInterval:
            if (!(p.a >= 0.0 && p.a <= 1.0)) throw input_error("interval coordinate out of [0,1]");
            break;
        case SpaceKind::Circle:
            if (!(p.a >= 0.0 && p.a < 1.0)) throw input_error("angle out of [0,1)");
            break;
        case SpaceKind::Annulus:
            if (!(p.a >= 0.0 && p.a <= 1.0)) throw input_error("radius out of [0,1]");
            if (!(p.b >= 0.0 && p.b < 1.0)) throw input_error("angle out of [0,1)");
            break;
        case SpaceKind::BinaryShift:
            if (space.shift_depth < 1 || space.shift_depth > 30)
                throw input_error("shift depth must be in [1,30]");
            if (p.word >> space.shift_depth) throw input_error("shift word wider than depth");
            break;
    }
}

double distance(const PhaseSpace& space, const Point& p, const Point& q) {
    require_in_space(space, p);
    require_in_space(space, q);
    switch (space.kind) {
        case SpaceKind::UnitInterval:
            return std::fabs(p.a - q.a);
        case SpaceKind::Circle:
            return arc_distance(p.a, q.a);
        case SpaceKind::Annulus:
            return std::max(std::fabs(p.a - q.a), arc_distance(p.b, q.b));
        case SpaceKind::BinaryShift: {
            std::uint32_t x = p.word ^ q.word;
            if (x == 0) return 0.0;
            // Highest differing bit h corresponds to word index depth-1-h.
            int h = 31 - std::countl_zero(x);
            int first_diff = space.shift_depth - 1 - h;
            return std::ldexp(1.0, -first_diff);
        }
    }
    throw internal_error("unreachable space kind");
}

double diameter(const PhaseSpace& space) {
    switch (space.kind) {
        case SpaceKind::UnitInterval: return 1.0;
        case SpaceKind::Circle: return 0.5;
        case SpaceKind::Annulus: return 1.0;
        case SpaceKind::BinaryShift: return 1.0; // 2^0, divergence at index 0
    }
    throw internal_error("unreachable space kind");
}

std::vector<Point> sample_reference(const PhaseSpace& space, std::uint64_t seed, std::int64_t count) {
    if (count < 1) throw input_error("sample count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        switch (space.kind) {
            case SpaceKind::UnitInterval:
                out.push_back(Point::interval(uniform01(rng())));
                break;
            case SpaceKind::Circle:
                out.push_back(Point::circle(uniform01(rng())));
                break;
            case SpaceKind::Annulus: {
                double r = uniform01(rng());
                double t = uniform01(rng());
                out.push_back(Point::annulus(r, t));
                break;
            }
            case SpaceKind::BinaryShift: {
                std::uint32_t bits = static_cast<std::uint32_t>(rng() >> (64 - space.shift_depth));
                out.push_back(Point::shift_word(bits, space.shift_depth));
                break;
            }
        }
    }
    return out;
}

bool PointLess::operator()(const Point& p, const Point& q) const {
    switch (kind) {
        case SpaceKind::UnitInterval:
        case SpaceKind::Circle:
            return p.a < q.a;
        case SpaceKind::Annulus:
            if (p.a != q.a) return p.a < q.a;
            return p.b < q.b;
        case SpaceKind::BinaryShift:
            return p.word < q.word;
    }
    return false;
}

bool point_equal(const PhaseSpace& space, const Point& p, const Point& q) {
    PointLess less{space.kind};
    return !less(p, q) && !less(q, p);
}

} // namespace ergolab
