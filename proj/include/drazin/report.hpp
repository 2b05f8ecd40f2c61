#pragma once

#include <string>
#include <utility>
#include <vector>

namespace drazin {

enum class Verdict { verified, vacuous, violation };

const char* to_string(Verdict v);

/// Outcome of one theorem-instance evaluation.  VIOLATION only when every
/// hypothesis holds and some conclusion fails -- that is the harness's
/// alarm condition.  Notes carry informational booleans that do not affect
/// the verdict.
struct TheoremReport {
    std::string theorem;
    std::string mode;  // "gns", "pns", or "" when not applicable
    unsigned n = 0;

    std::vector<std::pair<std::string, bool>> hypotheses;
    std::vector<std::pair<std::string, bool>> conclusions;
    std::vector<std::pair<std::string, bool>> notes;

    Verdict verdict = Verdict::vacuous;

    bool all_hypotheses() const;
    bool all_conclusions() const;
    /// Standard verdict rule; ops with bespoke vacuousness set verdict
    /// themselves.
    void judge();
};

}  // namespace drazin
