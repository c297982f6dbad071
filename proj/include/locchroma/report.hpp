#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "locchroma/constructions.hpp"
#include "locchroma/exact.hpp"
#include "locchroma/formulas.hpp"
#include "locchroma/tree.hpp"

namespace locchroma {

enum class WitnessSource { construction, exact };

struct PalmWitnessEntry {
    int branch;
    int colors;
    std::string method;
};

/// Every bound the library knows how to evaluate for one tree. The
/// palm-sum entry is absent for paths (no end-palms); when present it
/// satisfies palm_sum <= l - beta + 2 <= l - b + 2.
struct BoundsReport {
    int n = 0;
    int delta = 0;
    int delta_lb = 0;
    int leaves = 0;
    int beta = 0;
    int b = 0;
    long long bound_l_beta = 0;
    long long bound_l_b = 0;
    std::optional<long long> palm_sum;
    std::vector<PalmWitnessEntry> palm_witnesses;
    std::optional<long long> chartrand_value;  // superseded bound, shown for contrast
    std::string witness_source;
};

inline BoundsReport bounds_report(const Tree& t,
                                  WitnessSource source = WitnessSource::construction,
                                  const ExactOptions& exact_opt = {}) {
    Decomposition d = decompose(t);
    BoundsReport r;
    r.n = t.size();
    r.delta = t.max_degree();
    r.delta_lb = delta_lower_bound(r.delta);
    r.leaves = d.leaf_count;
    r.beta = d.branches_with_end_path;
    r.b = d.end_branch_count;
    r.bound_l_beta = r.leaves - r.beta + 2;
    r.bound_l_b = r.leaves - r.b + 2;
    r.witness_source =
        source == WitnessSource::construction ? "construction" : "exact";
    if (!d.end_palms.empty()) {
        long long sum = 0;
        for (const EndPalm& palm : d.end_palms) {
            PalmSpec spec = end_palm_spec(palm);
            int q;
            std::string method;
            if (source == WitnessSource::construction) {
                PalmWitness w = best_palm_coloring(spec);
                q = w.coloring.k();
                method = w.method;
            } else {
                auto result = exact_chi_l(build_palm(spec), exact_opt);
                if (!result)
                    throw std::runtime_error("exact palm witness hit the color cap");
                q = result->chi_l;
                method = "exact";
            }
            sum += q;
            r.palm_witnesses.push_back({palm.branch, q, method});
        }
        r.palm_sum = 2 - 2 * static_cast<long long>(r.b) + sum;
        if (!(*r.palm_sum <= r.bound_l_beta && r.bound_l_beta <= r.bound_l_b))
            throw std::logic_error("bound chain violated: " +
                                   std::to_string(*r.palm_sum) + " <= " +
                                   std::to_string(r.bound_l_beta) + " <= " +
                                   std::to_string(r.bound_l_b));
    }
    if (r.delta >= 3) r.chartrand_value = chartrand_bound(r.delta_lb);
    return r;
}

inline std::string format_bounds_text(const BoundsReport& r) {
    std::ostringstream out;
    out << "vertices            " << r.n << "\n";
    out << "max degree          " << r.delta << "\n";
    out << "chi_L lower (delta) " << r.delta_lb << "\n";
    out << "leaves              " << r.leaves << "\n";
    out << "beta                " << r.beta << "\n";
    out << "b                   " << r.b << "\n";
    out << "bound l-beta+2      " << r.bound_l_beta << "\n";
    out << "bound l-b+2         " << r.bound_l_b << "\n";
    if (r.palm_sum) {
        out << "bound palm sum      " << *r.palm_sum << "  (witnesses:";
        for (const auto& w : r.palm_witnesses)
            out << " branch " << w.branch << "=" << w.colors << "/" << w.method;
        out << ")\n";
    } else {
        out << "bound palm sum      n/a (path)\n";
    }
    if (r.chartrand_value)
        out << "chartrand bound     " << *r.chartrand_value << " at k=" << r.delta_lb
            << " (superseded)\n";
    return out.str();
}

inline std::string format_bounds_porcelain(const BoundsReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << "\n";
    out << "delta=" << r.delta << "\n";
    out << "delta_lb=" << r.delta_lb << "\n";
    out << "leaves=" << r.leaves << "\n";
    out << "beta=" << r.beta << "\n";
    out << "b=" << r.b << "\n";
    out << "bound_l_beta=" << r.bound_l_beta << "\n";
    out << "bound_l_b=" << r.bound_l_b << "\n";
    if (r.palm_sum) out << "palm_sum=" << *r.palm_sum << "\n";
    for (const auto& w : r.palm_witnesses)
        out << "palm_witness_" << w.branch << "=" << w.colors << "\n";
    if (r.chartrand_value) {
        out << "chartrand_k=" << r.delta_lb << "\n";
        out << "chartrand_bound=" << *r.chartrand_value << "\n";
        out << "chartrand_status=superseded\n";
    }
    out << "witness_source=" << r.witness_source << "\n";
    return out.str();
}

}  // namespace locchroma
