#include "orthrus/prf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

#include "orthrus/errors.hpp"
#include "orthrus/rng.hpp"

namespace orthrus {

namespace {

double mean_of(std::span<const double> y, const std::vector<std::size_t>& idx,
               std::size_t begin, std::size_t end) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += y[idx[i]];
    return s / static_cast<double>(end - begin);
}

}  // namespace

void RegressionTree::fit(const std::vector<std::vector<double>>& x, std::span<const double> y,
                         std::span<const std::size_t> sample_indices, const TreeConfig& cfg,
                         std::uint64_t seed) {
    nodes_.clear();
    std::vector<std::size_t> idx(sample_indices.begin(), sample_indices.end());
    Rng rng(seed);
    build(x, y, idx, 0, idx.size(), 0, cfg, rng);
}

int RegressionTree::build(const std::vector<std::vector<double>>& x, std::span<const double> y,
                          std::vector<std::size_t>& idx, std::size_t begin, std::size_t end,
                          int depth, const TreeConfig& cfg, Rng& rng) {
    const std::size_t n = end - begin;
    const int node_id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[node_id].value = mean_of(y, idx, begin, end);

    if (depth >= cfg.max_depth || n < 2 * cfg.min_samples_leaf) return node_id;

    bool constant = true;
    for (std::size_t i = begin + 1; i < end && constant; ++i) {
        constant = y[idx[i]] == y[idx[begin]];
    }
    if (constant) return node_id;

    const std::size_t d = x[0].size();
    std::vector<std::size_t> feats(d);
    std::iota(feats.begin(), feats.end(), 0);
    std::size_t n_feats = d;
    if (cfg.subsample_features && d > 1) {
        n_feats = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(d)) + 0.5));
        rng.shuffle(feats);
    }

    // Variance-reduction split: minimize the summed SSE of the two children.
    double best_score = std::numeric_limits<double>::infinity();
    int best_feat = -1;
    double best_thresh = 0.0;

    std::vector<std::pair<double, double>> vals(n);  // (feature value, target)
    for (std::size_t f = 0; f < n_feats; ++f) {
        const std::size_t feat = feats[f];
        for (std::size_t i = 0; i < n; ++i) {
            vals[i] = {x[idx[begin + i]][feat], y[idx[begin + i]]};
        }
        std::sort(vals.begin(), vals.end());
        double left_sum = 0.0, left_sq = 0.0;
        double right_sum = 0.0, right_sq = 0.0;
        for (const auto& [xv, yv] : vals) {
            right_sum += yv;
            right_sq += yv * yv;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double yv = vals[i].second;
            left_sum += yv;
            left_sq += yv * yv;
            right_sum -= yv;
            right_sq -= yv * yv;
            if (vals[i].first == vals[i + 1].first) continue;
            const std::size_t nl = i + 1, nr = n - nl;
            if (nl < cfg.min_samples_leaf || nr < cfg.min_samples_leaf) continue;
            const double sse_l = left_sq - left_sum * left_sum / double(nl);
            const double sse_r = right_sq - right_sum * right_sum / double(nr);
            const double score = sse_l + sse_r;
            if (score < best_score) {
                best_score = score;
                best_feat = static_cast<int>(feat);
                best_thresh = 0.5 * (vals[i].first + vals[i + 1].first);
            }
        }
    }
    if (best_feat < 0) return node_id;

    const auto mid = std::partition(idx.begin() + begin, idx.begin() + end,
                                    [&](std::size_t s) { return x[s][best_feat] <= best_thresh; });
    const std::size_t split = static_cast<std::size_t>(mid - idx.begin());
    if (split == begin || split == end) return node_id;

    nodes_[node_id].feature = best_feat;
    nodes_[node_id].threshold = best_thresh;
    const int left = build(x, y, idx, begin, split, depth + 1, cfg, rng);
    const int right = build(x, y, idx, split, end, depth + 1, cfg, rng);
    nodes_[node_id].left = left;
    nodes_[node_id].right = right;
    return node_id;
}

double RegressionTree::predict(std::span<const double> x) const {
    int node = 0;
    while (nodes_[node].feature >= 0) {
        node = x[static_cast<std::size_t>(nodes_[node].feature)] <= nodes_[node].threshold
                   ? nodes_[node].left
                   : nodes_[node].right;
    }
    return nodes_[node].value;
}

double RegressionTree::min_leaf_value() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& nd : nodes_) {
        if (nd.feature < 0) m = std::min(m, nd.value);
    }
    return m;
}

double RegressionTree::max_leaf_value() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& nd : nodes_) {
        if (nd.feature < 0) m = std::max(m, nd.value);
    }
    return m;
}

PrfModel PrfModel::fit(const std::vector<std::vector<double>>& x,
                       std::span<const ObjectiveVector> y, std::size_t n_trees,
                       std::uint64_t seed, const TreeConfig& cfg) {
    if (x.size() != y.size()) {
        throw InvalidInputError("PrfModel::fit: |X| != |Y|");
    }
    if (x.size() < 2) {
        throw InsufficientDataError("PrfModel::fit: need at least 2 samples");
    }
    if (n_trees < 1) {
        throw InvalidInputError("PrfModel::fit: need at least 1 tree");
    }
    PrfModel model;
    model.feature_count_ = x[0].size();
    const std::size_t n = x.size();
    Rng master(seed);
    std::vector<double> targets(n);
    for (std::size_t obj = 0; obj < 3; ++obj) {
        for (std::size_t i = 0; i < n; ++i) targets[i] = y[i][obj];
        model.trees_[obj].resize(n_trees);
        for (std::size_t b = 0; b < n_trees; ++b) {
            Rng tree_rng = master.child(obj * n_trees + b);
            // Bootstrap with replacement, resample size = training size.
            std::vector<std::size_t> boot(n);
            for (auto& s : boot) s = tree_rng.uniform_index(n);
            model.trees_[obj][b].fit(x, targets, boot, cfg, tree_rng.next_u64());
        }
    }
    return model;
}

GaussianPosterior PrfModel::predict(std::span<const double> x) const {
    if (x.size() != feature_count_) {
        throw InvalidInputError("PrfModel::predict: feature vector has size " +
                                std::to_string(x.size()) + ", schema expects " +
                                std::to_string(feature_count_));
    }
    GaussianPosterior post;
    const double b = static_cast<double>(n_trees());
    for (std::size_t obj = 0; obj < 3; ++obj) {
        double mean = 0.0;
        std::vector<double> preds;
        preds.reserve(trees_[obj].size());
        for (const auto& t : trees_[obj]) {
            preds.push_back(t.predict(x));
            mean += preds.back();
        }
        mean /= b;
        double var = 0.0;
        for (double p : preds) var += (p - mean) * (p - mean);
        var /= b;
        post.mean[obj] = mean;
        post.variance[obj] = var;
    }
    return post;
}

std::string PrfModel::to_json() const {
    nlohmann::json doc;
    doc["version"] = "orthrus-prf-1";
    doc["feature_count"] = feature_count_;
    auto& objs = doc["objectives"];
    objs = nlohmann::json::array();
    for (const auto& forest : trees_) {
        nlohmann::json jforest = nlohmann::json::array();
        for (const auto& tree : forest) {
            nlohmann::json jnodes = nlohmann::json::array();
            for (const auto& nd : tree.nodes()) {
                jnodes.push_back({{"f", nd.feature},
                                  {"t", nd.threshold},
                                  {"l", nd.left},
                                  {"r", nd.right},
                                  {"v", nd.value}});
            }
            jforest.push_back(std::move(jnodes));
        }
        objs.push_back(std::move(jforest));
    }
    return doc.dump();
}

PrfModel PrfModel::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || doc.value("version", "") != std::string("orthrus-prf-1")) {
        throw ParseError("PrfModel::from_json: not an orthrus-prf-1 document");
    }
    PrfModel model;
    model.feature_count_ = doc.at("feature_count").get<std::size_t>();
    const auto& objs = doc.at("objectives");
    if (objs.size() != 3) {
        throw ParseError("PrfModel::from_json: expected 3 objective forests");
    }
    for (std::size_t obj = 0; obj < 3; ++obj) {
        for (const auto& jtree : objs[obj]) {
            RegressionTree tree;
            std::vector<RegressionTree::Node> nodes;
            for (const auto& jn : jtree) {
                RegressionTree::Node nd;
                nd.feature = jn.at("f").get<int>();
                nd.threshold = jn.at("t").get<double>();
                nd.left = jn.at("l").get<int>();
                nd.right = jn.at("r").get<int>();
                nd.value = jn.at("v").get<double>();
                nodes.push_back(nd);
            }
            tree.set_nodes(std::move(nodes));
            model.trees_[obj].push_back(std::move(tree));
        }
    }
    return model;
}

}  // namespace orthrus
