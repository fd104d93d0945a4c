#pragma once

// Dimension- and weight-level checks of the symmetry-representation
// structure of the low resolution steps.  Everything here is character
// arithmetic: hook-shape dimensions, torus-weight multiplicities, and the
// conjectured linear-strand counts, compared against exactly computed data.

#include <map>
#include <string>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/util.hpp"

namespace apolar {

// The partition (d, 1^(c-d)): one row of length d plus a leg, c cells total.
struct HookShape {
    int c = 1;
    int d = 1;
};

// Dimension of the rank-n irreducible with highest weight (d, 1^(c-d)).
// Zero when the leg is taller than the rank allows.
inline long long hook_dim(HookShape s, int n) {
    return binom(s.c - 1, s.d - 1) * binom(n + s.d - 1, s.c);
}

inline long long narayana(int r, int i) {
    if (r < 1 || i < 1 || i > r) {
        throw UsageError("narayana(r, i) needs 1 <= i <= r");
    }
    return binom(r, i) * binom(r, i - 1) / r;
}

// Conjectured beta_{r,r+1}, as the Narayana-weighted binomial sum.
inline long long conjectured_linear_strand(int r, int n) {
    if (r < 1) throw UsageError("conjectured_linear_strand needs r >= 1");
    long long total = 0;
    for (int i = 1; i <= r; ++i) {
        total += narayana(r, i) * binom(n + i, r + 1) * binom(n + r - i + 1, r + 1);
    }
    return r * total;
}

// The same number as a sum of products of hook dimensions: summand i pairs
// the arm-(i+1) hook with the arm-(r+2-i) hook, both on r+1 cells.
inline long long conjectured_linear_strand_hook(int r, int n) {
    if (r < 1) throw UsageError("conjectured_linear_strand_hook needs r >= 1");
    long long total = 0;
    for (int i = 1; i <= r; ++i) {
        total += hook_dim({r + 1, i + 1}, n) * hook_dim({r + 1, r + 2 - i}, n);
    }
    return total;
}

// Number of semistandard tableaux of the hook shape with content w.  The
// corner takes the smallest occurring value; the leg picks c-d of the
// remaining distinct values; the first row is then forced.
inline long long weight_multiplicity_hook(HookShape s, const std::vector<int>& w) {
    int total = 0;
    int distinct = 0;
    for (int v : w) {
        if (v < 0) return 0;
        total += v;
        if (v > 0) ++distinct;
    }
    if (total != s.c) {
        throw UsageError("weight vector must sum to the cell count of the shape");
    }
    if (distinct == 0) return 0;
    return binom(distinct - 1, s.c - s.d);
}

enum class RepComponent { Generators, Relations, SecondSyzygies };

inline std::string rep_component_name(RepComponent c) {
    switch (c) {
        case RepComponent::Generators: return "generators";
        case RepComponent::Relations: return "relations";
        default: return "secondSyzygies";
    }
}

inline RepComponent parse_rep_component(const std::string& s) {
    if (s == "generators") return RepComponent::Generators;
    if (s == "relations") return RepComponent::Relations;
    if (s == "secondSyzygies") return RepComponent::SecondSyzygies;
    throw UsageError("unknown component '" + s +
                     "' (expected generators|relations|secondSyzygies)");
}

inline int rep_component_degree(RepComponent c) {
    switch (c) {
        case RepComponent::Generators: return 2;
        case RepComponent::Relations: return 3;
        default: return 4;
    }
}

// Predicted decomposition as (row-side hook, column-side hook) pairs, each
// with multiplicity one.  These are the i = 1..r summands of the linear
// strand prediction for r = degree - 1.
inline std::vector<std::pair<HookShape, HookShape>> rep_component_summands(
    RepComponent c) {
    int r = rep_component_degree(c) - 1;
    std::vector<std::pair<HookShape, HookShape>> out;
    for (int i = 1; i <= r; ++i) {
        out.push_back({HookShape{r + 1, i + 1}, HookShape{r + 1, r + 2 - i}});
    }
    return out;
}

inline long long rep_predicted_dimension(RepComponent c, const Multidegree& mu) {
    long long total = 0;
    for (const auto& [lam, eta] : rep_component_summands(c)) {
        total += weight_multiplicity_hook(lam, mu.row) *
                 weight_multiplicity_hook(eta, mu.col);
    }
    return total;
}

struct WeightRow {
    Multidegree mu;
    long long predicted = 0;
    long long computed = 0;
    bool have_computed = false;
    long long residual() const { return computed - predicted; }
};

struct WeightRefinedReport {
    RepComponent component = RepComponent::Generators;
    int n = 0;
    std::vector<WeightRow> rows;  // every balanced weight pair of the degree
    long long predicted_total = 0;
    long long computed_total = 0;
    bool complete = true;  // computed data covered every predicted multidegree

    bool ok() const {
        if (!complete) return false;
        for (const auto& r : rows) {
            if (r.have_computed && r.residual() != 0) return false;
            if (!r.have_computed && r.predicted != 0) return false;
        }
        return predicted_total == computed_total;
    }
};

namespace repcheck_detail {

inline void for_each_composition(int total, int parts,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> v(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            v[static_cast<std::size_t>(pos)] = left;
            fn(v);
            return;
        }
        for (int t = 0; t <= left; ++t) {
            v[static_cast<std::size_t>(pos)] = t;
            rec(pos + 1, left - t);
        }
    };
    if (parts > 0) rec(0, total);
}

}  // namespace repcheck_detail

// Per-multidegree comparison of predicted versus computed dimensions.  The
// computed map should refine the matching resolution step over a field of
// characteristic zero; multidegrees absent from it count as uncovered.
inline WeightRefinedReport weight_refined_check(
    RepComponent component, int n, const std::map<Multidegree, long long>& computed) {
    WeightRefinedReport rep;
    rep.component = component;
    rep.n = n;
    int deg = rep_component_degree(component);
    std::vector<std::vector<int>> weights;
    repcheck_detail::for_each_composition(deg, n, [&](const std::vector<int>& w) {
        weights.push_back(w);
    });
    for (const auto& rw : weights) {
        for (const auto& cw : weights) {
            WeightRow row;
            row.mu = Multidegree(rw, cw);
            row.predicted = rep_predicted_dimension(component, row.mu);
            auto it = computed.find(row.mu);
            if (it != computed.end()) {
                row.have_computed = true;
                row.computed = it->second;
                rep.computed_total += row.computed;
            } else if (row.predicted != 0) {
                rep.complete = false;
            }
            rep.predicted_total += row.predicted;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

inline std::string weight_report_to_json(const WeightRefinedReport& rep) {
    std::string s = "{\"component\":\"" + rep_component_name(rep.component) +
                    "\",\"n\":" + std::to_string(rep.n) + ",\"rows\":[";
    bool first = true;
    for (const auto& r : rep.rows) {
        if (r.predicted == 0 && !r.have_computed) continue;
        if (!first) s += ",";
        first = false;
        s += "{\"mu\":\"" + r.mu.to_string() + "\",\"predicted\":" +
             std::to_string(r.predicted);
        if (r.have_computed) {
            s += ",\"computed\":" + std::to_string(r.computed) +
                 ",\"residual\":" + std::to_string(r.residual());
        } else {
            s += ",\"computed\":null";
        }
        s += "}";
    }
    s += "],\"predicted_total\":" + std::to_string(rep.predicted_total) +
         ",\"computed_total\":" + std::to_string(rep.computed_total) +
         ",\"complete\":" + (rep.complete ? std::string("true") : std::string("false")) +
         ",\"verdict\":\"" + (rep.ok() ? "pass" : "fail") + "\"}";
    return s;
}

}  // namespace apolar
