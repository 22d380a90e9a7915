#include "orthrus/objective.hpp"

#include <algorithm>
#include <cmath>

#include "orthrus/errors.hpp"
#include "orthrus/rng.hpp"

namespace orthrus {

bool ObjectiveVector::finite() const {
    return std::isfinite(delay) && std::isfinite(power) && std::isfinite(area);
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (!a.finite() || !b.finite()) {
        throw InvalidInputError("dominates: non-finite objective component");
    }
    bool strict = false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<std::size_t> pareto_front(std::span<const ObjectiveVector> y) {
    if (y.empty()) {
        throw InvalidInputError("pareto_front: empty objective set");
    }
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < y.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (j != i && dominates(y[j], y[i])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(i);
    }
    return front;
}

namespace {

// 2D staircase of mutually non-dominated (x, y) points under minimization,
// kept sorted by x ascending / y strictly descending.
class Staircase {
public:
    explicit Staircase(double ref_x, double ref_y) : ref_x_(ref_x), ref_y_(ref_y) {}

    void insert(double x, double y) {
        // Dominated by an existing step?
        for (const auto& [sx, sy] : steps_) {
            if (sx <= x && sy <= y) return;
        }
        std::erase_if(steps_, [&](const std::pair<double, double>& s) {
            return s.first >= x && s.second >= y;
        });
        auto it = std::lower_bound(steps_.begin(), steps_.end(), x,
                                   [](const std::pair<double, double>& s, double v) {
                                       return s.first < v;
                                   });
        steps_.insert(it, {x, y});
    }

    double area() const {
        double a = 0.0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            const double x0 = steps_[i].first;
            const double x1 = i + 1 < steps_.size() ? steps_[i + 1].first : ref_x_;
            a += (std::min(x1, ref_x_) - x0) * (ref_y_ - steps_[i].second);
        }
        return a;
    }

private:
    double ref_x_, ref_y_;
    std::vector<std::pair<double, double>> steps_;
};

}  // namespace

double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& y_ref) {
    if (!y_ref.finite()) {
        throw InvalidInputError("hypervolume: non-finite reference point");
    }
    // Clip to the reference point; boxes with a zero side contribute nothing.
    std::vector<ObjectiveVector> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (!p.finite()) {
            throw InvalidInputError("hypervolume: non-finite frontier point");
        }
        ObjectiveVector q{std::min(p.delay, y_ref.delay), std::min(p.power, y_ref.power),
                          std::min(p.area, y_ref.area)};
        if (q.delay < y_ref.delay && q.power < y_ref.power && q.area < y_ref.area) {
            pts.push_back(q);
        }
    }
    if (pts.empty()) return 0.0;

    // Sweep over the third coordinate; each slab contributes the area of the
    // 2D staircase of points already processed times the slab thickness.
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        if (a.area != b.area) return a.area < b.area;
        if (a.delay != b.delay) return a.delay < b.delay;
        return a.power < b.power;
    });

    Staircase stairs(y_ref.delay, y_ref.power);
    double volume = 0.0;
    double prev_z = pts.front().area;
    for (const auto& p : pts) {
        if (p.area > prev_z) {
            volume += stairs.area() * (p.area - prev_z);
            prev_z = p.area;
        }
        stairs.insert(p.delay, p.power);
    }
    volume += stairs.area() * (y_ref.area - prev_z);
    return volume;
}

void ParetoArchive::add(std::uint64_t config_id, const ObjectiveVector& y) {
    if (!y.finite()) {
        throw InvalidInputError("ParetoArchive::add: non-finite objective");
    }
    config_ids_.push_back(config_id);
    objectives_.push_back(y);
    frontier_ = pareto_front(objectives_);
}

std::vector<ObjectiveVector> ParetoArchive::frontier_points() const {
    std::vector<ObjectiveVector> pts;
    pts.reserve(frontier_.size());
    for (std::size_t i : frontier_) pts.push_back(objectives_[i]);
    return pts;
}

double ParetoArchive::hypervolume() const {
    const auto pts = frontier_points();
    return orthrus::hypervolume(pts, y_ref_);
}

double ehvi(const GaussianPosterior& posterior, const ParetoArchive& archive,
            std::size_t n_mc, std::uint64_t seed) {
    if (n_mc < 1) {
        throw InvalidInputError("ehvi: n_mc must be >= 1");
    }
    if (posterior.variance.delay < 0 || posterior.variance.power < 0 ||
        posterior.variance.area < 0) {
        throw InvalidInputError("ehvi: negative posterior variance");
    }
    const auto front = archive.frontier_points();
    const double hv_base = hypervolume(front, archive.y_ref());
    const ObjectiveVector sd{std::sqrt(posterior.variance.delay),
                             std::sqrt(posterior.variance.power),
                             std::sqrt(posterior.variance.area)};

    Rng rng(seed);
    std::vector<ObjectiveVector> augmented(front.begin(), front.end());
    augmented.emplace_back();
    double total = 0.0;
    for (std::size_t s = 0; s < n_mc; ++s) {
        ObjectiveVector y;
        for (std::size_t i = 0; i < 3; ++i) {
            y[i] = posterior.mean[i] + sd[i] * rng.gaussian();
        }
        augmented.back() = y;
        const double gain = hypervolume(augmented, archive.y_ref()) - hv_base;
        total += std::max(0.0, gain);
    }
    return total / static_cast<double>(n_mc);
}

}  // namespace orthrus
