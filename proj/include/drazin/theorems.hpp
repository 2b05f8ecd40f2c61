#pragma once

#include <optional>
#include <string_view>

#include "drazin/pierce.hpp"
#include "drazin/report.hpp"
#include "drazin/strong.hpp"

namespace drazin {

/// The additive statements the harness can verify on a concrete pair.
/// Each id exists in a GNS and a PNS flavour (mode argument); hypotheses
/// follow the printed statements exactly, including flavour differences.
enum class TheoremId {
    t2,       // a, b n-strong, ab = 0            => a + b n-strong
    theo,     // commuting n-strong pair: defect of ab forward, binomial-sum converse
    product,  // n-strong pair with a^2 b = aba (GNS) / a b^2 = bab (PNS) => ab n-strong
    l4,       // a nilpotent-part, b n-strong, a = a b^pi, b^pi ba = b^pi ab
    t3,       // a, b n-strong, a = a b^pi, b^pi b a^pi = b^pi b, b^pi a^pi ba = b^pi a^pi ab
    l5,       // a nilpotent-part, b n-strong, a b^pi = a, b^pi a b = 0
    t4,       // a, b n-strong, a = a b^pi, b = b a^pi, b^pi a b a^pi = 0
    theor,    // aba^pi = 0 (+ GNS: (1-a^pi)b n-strong): sum n-strong iff core sum n-strong
    equiv4,   // intertwined pair: four core-cut conditions pairwise equivalent
    mylemma,  // nilpotent-part pair with ab^2 = bab, a^2 b = aba => sum nilpotent-part
};

std::optional<TheoremId> theorem_from_name(std::string_view name);
std::string_view theorem_name(TheoremId id);
constexpr TheoremId kAllTheorems[] = {
    TheoremId::t2,    TheoremId::theo, TheoremId::product, TheoremId::l4,     TheoremId::t3,
    TheoremId::l5,    TheoremId::t4,   TheoremId::theor,   TheoremId::equiv4, TheoremId::mylemma,
};

/// Evaluates every named hypothesis and conclusion by independent predicate
/// calls and reports; math outcomes never throw.
TheoremReport theorem_check(TheoremId id, const Element& a, const Element& b, unsigned n,
                            StrongMode mode);

/// Hypothesis map alone (shared by theorem_check and the pair generators'
/// emit-time assertion).
std::vector<std::pair<std::string, bool>> theorem_hypotheses(TheoremId id, const Element& a,
                                                             const Element& b, unsigned n,
                                                             StrongMode mode);

/// Triangular transfer across a Pierce splitting: assembles
/// x = embed(a1) + (1-p) c p + embed(b2) and asserts the implication set
/// between corner and whole n-strong invertibility.  GNS checks the two
/// printed directions (corners => whole; whole and b-corner => a-corner);
/// PNS checks corners => whole and whole => each corner.
TheoremReport check_triangular_transfer(const CornerAlgebra& top, const CornerAlgebra& bottom,
                                        const Element& a1, const Element& b2, const Element& c,
                                        unsigned n, StrongMode mode);

}  // namespace drazin
