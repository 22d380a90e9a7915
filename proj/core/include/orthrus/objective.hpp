#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orthrus {

/// One point in objective space: (delay, power, area), minimization convention.
/// Components are normalized to [0,1] before any hypervolume computation.
struct ObjectiveVector {
    double delay = 0.0;
    double power = 0.0;
    double area = 0.0;

    double operator[](std::size_t i) const {
        return i == 0 ? delay : (i == 1 ? power : area);
    }
    double& operator[](std::size_t i) {
        return i == 0 ? delay : (i == 1 ? power : area);
    }
    bool operator==(const ObjectiveVector&) const = default;

    bool finite() const;
};

/// Independent per-objective Gaussian marginals from a surrogate model.
struct GaussianPosterior {
    ObjectiveVector mean;
    ObjectiveVector variance;  // componentwise, >= 0
};

/// True iff a Pareto-dominates b: a <= b componentwise with at least one
/// strict inequality. Throws InvalidInputError on non-finite components.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Indices of the non-dominated members of y. Duplicates of a frontier point
/// are all included. Throws InvalidInputError on empty input.
std::vector<std::size_t> pareto_front(std::span<const ObjectiveVector> y);

/// Exact Lebesgue measure of the space dominated by `front` and bounded by
/// y_ref, computed by a sweep over the sorted third coordinate with an
/// incrementally maintained 2D staircase. Points that do not dominate y_ref
/// are clipped to it and contribute only their dominated intersection.
double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& y_ref);

/// Evaluated configurations, the current frontier, and the reference point.
class ParetoArchive {
public:
    explicit ParetoArchive(ObjectiveVector y_ref = {1.0, 1.0, 1.0}) : y_ref_(y_ref) {}

    /// Appends an evaluation and refreshes the frontier index set.
    void add(std::uint64_t config_id, const ObjectiveVector& y);

    const std::vector<ObjectiveVector>& objectives() const { return objectives_; }
    const std::vector<std::uint64_t>& config_ids() const { return config_ids_; }
    const std::vector<std::size_t>& frontier() const { return frontier_; }
    const ObjectiveVector& y_ref() const { return y_ref_; }
    std::size_t size() const { return objectives_.size(); }
    bool empty() const { return objectives_.empty(); }

    std::vector<ObjectiveVector> frontier_points() const;

    /// Hypervolume of the current frontier w.r.t. y_ref.
    double hypervolume() const;

private:
    std::vector<std::uint64_t> config_ids_;
    std::vector<ObjectiveVector> objectives_;
    std::vector<std::size_t> frontier_;
    ObjectiveVector y_ref_;
};

/// Monte Carlo estimate of E[max(0, HV(front ∪ {y}) - HV(front))] under the
/// posterior, using n_mc seeded draws. Deterministic given the seed; a
/// zero-variance posterior reproduces the exact hypervolume improvement of
/// the mean.
double ehvi(const GaussianPosterior& posterior, const ParetoArchive& archive,
            std::size_t n_mc, std::uint64_t seed);

}  // namespace orthrus
