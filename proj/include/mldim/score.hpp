#pragma once

#include <string>
#include <vector>

namespace mldim {

enum class Measure { mld, ld, bc, cc, dc };

Measure measure_from_name(const std::string& name);
std::string measure_name(Measure m);

/// Compact parameter formatting: 2 -> "2", -0.5 -> "-0.5".
std::string format_q(double q);

/// Per-node scores for one measure, together with the direction in which
/// larger importance points. Nodes without a finite score (no locality scale)
/// carry NaN and are flagged; rankings place them last.
struct ScoreVector {
    std::string measure_id;        // e.g. "dc", "mld(q=2)"
    std::vector<double> scores;    // one entry per node, NaN when flagged
    std::vector<char> flagged;     // 1 = no finite score
    bool lower_is_better = false;
    bool reachable_only = false;   // closeness on a disconnected graph

    int size() const { return static_cast<int>(scores.size()); }
    int flagged_count() const;
};

}  // namespace mldim
