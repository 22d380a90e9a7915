#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orthrus/objective.hpp"

namespace orthrus {

/// CART regression tree settings. The literature the surrogate follows does
/// not pin these, so they are all config-exposed.
struct TreeConfig {
    int max_depth = 12;
    std::size_t min_samples_leaf = 2;
    bool subsample_features = true;  // sqrt(d) features per split
};

class RegressionTree {
public:
    struct Node {
        int feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        double value = 0.0;
    };

    void fit(const std::vector<std::vector<double>>& x, std::span<const double> y,
             std::span<const std::size_t> sample_indices, const TreeConfig& cfg,
             std::uint64_t seed);

    double predict(std::span<const double> x) const;

    double min_leaf_value() const;
    double max_leaf_value() const;

    const std::vector<Node>& nodes() const { return nodes_; }
    void set_nodes(std::vector<Node> nodes) { nodes_ = std::move(nodes); }

private:
    int build(const std::vector<std::vector<double>>& x, std::span<const double> y,
              std::vector<std::size_t>& idx, std::size_t begin, std::size_t end, int depth,
              const TreeConfig& cfg, class Rng& rng);

    std::vector<Node> nodes_;
};

/// Probabilistic random forest: B regression trees per objective, each fit on
/// a bootstrap resample. predict() aggregates per-tree means into a Gaussian
/// with mean (1/B) Σ μ_b and population variance (1/B) Σ (μ_b − μ)².
class PrfModel {
public:
    static PrfModel fit(const std::vector<std::vector<double>>& x,
                        std::span<const ObjectiveVector> y, std::size_t n_trees,
                        std::uint64_t seed, const TreeConfig& cfg = {});

    GaussianPosterior predict(std::span<const double> x) const;

    std::size_t n_trees() const { return trees_[0].size(); }
    std::size_t feature_count() const { return feature_count_; }
    const std::vector<RegressionTree>& trees(std::size_t objective) const {
        return trees_[objective];
    }

    /// Versioned JSON document for run resumption.
    std::string to_json() const;
    static PrfModel from_json(const std::string& text);

private:
    std::array<std::vector<RegressionTree>, 3> trees_;
    std::size_t feature_count_ = 0;
};

}  // namespace orthrus
