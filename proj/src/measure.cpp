#include "ergolab/measure.hpp"
#include "ergolab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ergolab {

namespace {

void sort_and_merge(const PhaseSpace& space, std::vector<std::pair<Point, double>>& atoms) {
    PointLess less{space.kind};
    std::stable_sort(atoms.begin(), atoms.end(),
                     [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    std::size_t w = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (w > 0 && !less(atoms[w - 1].first, atoms[i].first)) {
            atoms[w - 1].second += atoms[i].second;
        } else {
            atoms[w++] = atoms[i];
        }
    }
    atoms.resize(w);
}

} // namespace

EmpiricalMeasure make_measure(const PhaseSpace& space,
                              std::vector<std::pair<Point, double>> atoms,
                              std::int64_t n_source) {
    if (atoms.empty()) throw input_error("measure needs at least one atom");
    double total = 0.0;
    for (auto& [p, w] : atoms) {
        require_in_space(space, p);
        if (!(w > 0.0)) throw input_error("atom weights must be positive");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw input_error("atom weights must sum to 1");
    sort_and_merge(space, atoms);
    return EmpiricalMeasure{space, std::move(atoms), n_source};
}

EmpiricalMeasure dirac(const PhaseSpace& space, const Point& p) {
    require_in_space(space, p);
    return EmpiricalMeasure{space, {{p, 1.0}}, 0};
}

EmpiricalMeasure uniform_on(const PhaseSpace& space, const std::vector<Point>& pts) {
    if (pts.empty()) throw input_error("measure needs at least one atom");
    std::vector<std::pair<Point, double>> atoms;
    atoms.reserve(pts.size());
    double w = 1.0 / static_cast<double>(pts.size());
    for (const Point& p : pts) {
        require_in_space(space, p);
        atoms.emplace_back(p, w);
    }
    sort_and_merge(space, atoms);
    return EmpiricalMeasure{space, std::move(atoms), static_cast<std::int64_t>(pts.size())};
}

bool measure_equal(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
    if (!(a.space == b.space) || a.atoms.size() != b.atoms.size()) return false;
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        if (!point_equal(a.space, a.atoms[i].first, b.atoms[i].first)) return false;
        if (a.atoms[i].second != b.atoms[i].second) return false;
    }
    return true;
}

MetaMeasure make_meta(const PhaseSpace& space,
                      std::vector<std::pair<EmpiricalMeasure, double>> atoms) {
    if (atoms.empty()) throw input_error("meta-measure needs at least one atom");
    double total = 0.0;
    for (auto& [m, w] : atoms) {
        if (!(m.space == space)) throw input_error("meta atoms must share one space");
        if (!(w > 0.0)) throw input_error("meta weights must be positive");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw input_error("meta weights must sum to 1");
    // Merge equal atom measures (exact equality on sorted supports).
    std::vector<std::pair<EmpiricalMeasure, double>> merged;
    for (auto& [m, w] : atoms) {
        bool found = false;
        for (auto& [mm, ww] : merged) {
            if (measure_equal(m, mm)) {
                ww += w;
                found = true;
                break;
            }
        }
        if (!found) merged.emplace_back(std::move(m), w);
    }
    return MetaMeasure{space, std::move(merged)};
}

MetaMeasure meta_dirac(const EmpiricalMeasure& mu) {
    return MetaMeasure{mu.space, {{mu, 1.0}}};
}

EmpiricalMeasure coarsen(const EmpiricalMeasure& mu, double mesh) {
    if (!(mesh > 0.0)) throw input_error("mesh must be positive");
    const PhaseSpace& sp = mu.space;

    auto cell_index = [&](double x) -> std::int64_t {
        auto cells = static_cast<std::int64_t>(std::ceil(1.0 / mesh));
        auto k = static_cast<std::int64_t>(std::floor(x / mesh));
        return std::min(k, cells - 1);
    };

    struct Agg {
        double w = 0.0, sa = 0.0, sb = 0.0;
        std::uint32_t word = 0;
        bool has_word = false;
    };
    std::map<std::pair<std::int64_t, std::int64_t>, Agg> cells;

    int trunc_depth = 0;
    if (sp.kind == SpaceKind::BinaryShift) {
        // Smallest depth d with tree displacement bound 2^(1-d) <= mesh.
        trunc_depth = 1;
        while (trunc_depth < sp.shift_depth && std::ldexp(1.0, 1 - trunc_depth) > mesh) ++trunc_depth;
    }

    for (const auto& [p, w] : mu.atoms) {
        std::pair<std::int64_t, std::int64_t> key{0, 0};
        switch (sp.kind) {
            case SpaceKind::UnitInterval:
            case SpaceKind::Circle:
                key.first = cell_index(p.a);
                break;
            case SpaceKind::Annulus:
                key = {cell_index(p.a), cell_index(p.b)};
                break;
            case SpaceKind::BinaryShift:
                key.first = static_cast<std::int64_t>(p.word >> (sp.shift_depth - trunc_depth));
                break;
        }
        Agg& a = cells[key];
        a.w += w;
        a.sa += w * p.a;
        a.sb += w * p.b;
        if (!a.has_word || p.word < a.word) {
            a.word = p.word;
            a.has_word = true;
        }
    }

    std::vector<std::pair<Point, double>> atoms;
    atoms.reserve(cells.size());
    for (const auto& [key, a] : cells) {
        (void)key;
        Point p;
        switch (sp.kind) {
            case SpaceKind::UnitInterval:
                p = Point::interval(a.sa / a.w);
                break;
            case SpaceKind::Circle:
                p = Point::circle(a.sa / a.w);
                break;
            case SpaceKind::Annulus:
                p = Point::annulus(a.sa / a.w, a.sb / a.w);
                break;
            case SpaceKind::BinaryShift:
                p = Point::shift_word(a.word, sp.shift_depth);
                break;
        }
        atoms.emplace_back(p, a.w);
    }
    sort_and_merge(sp, atoms);
    return EmpiricalMeasure{sp, std::move(atoms), mu.n_source};
}

} // namespace ergolab
