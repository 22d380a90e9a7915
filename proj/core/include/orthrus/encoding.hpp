#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orthrus/errors.hpp"

namespace orthrus {

/// One tunable field of a design space: a bounded continuous range or a
/// finite set of categorical levels.
struct FieldSpec {
    enum class Kind { Continuous, Categorical };

    std::string name;
    Kind kind = Kind::Continuous;
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::string> levels;

    static FieldSpec continuous(std::string name, double lo, double hi) {
        FieldSpec f;
        f.name = std::move(name);
        f.kind = Kind::Continuous;
        f.lo = lo;
        f.hi = hi;
        return f;
    }
    static FieldSpec categorical(std::string name, std::vector<std::string> levels) {
        FieldSpec f;
        f.name = std::move(name);
        f.kind = Kind::Categorical;
        f.levels = std::move(levels);
        return f;
    }
};

/// Fixed, ordered mapping from raw field values to a numeric feature vector:
/// continuous fields are min-max scaled to [0,1], categorical fields one-hot
/// encoded. Raw categorical values are level indices.
class EncodingSchema {
public:
    EncodingSchema() = default;
    explicit EncodingSchema(std::vector<FieldSpec> fields) : fields_(std::move(fields)) {}

    const std::vector<FieldSpec>& fields() const { return fields_; }

    std::size_t feature_count() const {
        std::size_t n = 0;
        for (const auto& f : fields_) {
            n += f.kind == FieldSpec::Kind::Continuous ? 1 : f.levels.size();
        }
        return n;
    }

    /// Validates every raw value against its field domain and encodes.
    /// Throws InvalidInputError naming the offending field.
    std::vector<double> encode(std::span<const double> raw) const {
        if (raw.size() != fields_.size()) {
            throw InvalidInputError("encode: expected " + std::to_string(fields_.size()) +
                                    " raw values, got " + std::to_string(raw.size()));
        }
        std::vector<double> out;
        out.reserve(feature_count());
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            const auto& f = fields_[i];
            const double v = raw[i];
            if (f.kind == FieldSpec::Kind::Continuous) {
                if (v < f.lo || v > f.hi) {
                    throw InvalidInputError("encode: field '" + f.name + "' value " +
                                            std::to_string(v) + " outside [" +
                                            std::to_string(f.lo) + ", " + std::to_string(f.hi) +
                                            "]");
                }
                out.push_back(f.hi > f.lo ? (v - f.lo) / (f.hi - f.lo) : 0.0);
            } else {
                const auto idx = static_cast<long long>(v);
                if (v != static_cast<double>(idx) || idx < 0 ||
                    idx >= static_cast<long long>(f.levels.size())) {
                    throw InvalidInputError("encode: field '" + f.name +
                                            "' has no level index " + std::to_string(v));
                }
                for (std::size_t l = 0; l < f.levels.size(); ++l) {
                    out.push_back(l == static_cast<std::size_t>(idx) ? 1.0 : 0.0);
                }
            }
        }
        return out;
    }

private:
    std::vector<FieldSpec> fields_;
};

}  // namespace orthrus
