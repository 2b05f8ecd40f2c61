#pragma once

#include "drazin/algebra.hpp"
#include "drazin/report.hpp"
#include "drazin/spectral.hpp"

namespace drazin {

/// GNS: x in Comm^2(a), xax = x, a^n - ax nilpotent.
/// PNS: same with (a^n - ax)^k in J(A) for some k.
enum class StrongMode { gns, pns };

const char* to_string(StrongMode mode);

struct StrongKind {
    StrongMode mode;
    unsigned n;

    StrongKind(StrongMode mode_, unsigned n_);
    static StrongKind gns(unsigned n) { return {StrongMode::gns, n}; }
    static StrongKind pns(unsigned n) { return {StrongMode::pns, n}; }
};

/// Characterization test: a - a^{n+1} nilpotent (GNS) or in sqrt(J) (PNS).
/// Both equivalent forms (a - a^{n+1} and a^n - a^{2n}) are evaluated; a
/// mismatch is a defect, not a math outcome.
bool is_strong_invertible(const Element& a, const StrongKind& kind);

/// The n-strong inverse (it coincides with a^d when it exists).  Verifies
/// all three defining axioms on the result and fails loudly on any break.
/// Throws not_strong_invertible when the characterization test fails.
Element strong_inverse(const Element& a, const StrongKind& kind);

/// Per-axiom check of a candidate inverse x: (i) x in Comm^2(a),
/// (ii) x a x = x, (iii) a^n - ax nilpotent / in sqrt(J).
TheoremReport verify_strong_axioms(const Element& a, const Element& x, const StrongKind& kind);

/// Inclusion ladder: 1-strong => n-strong, Hirano (2-strong) => 2n-strong,
/// n-strong => 2n-strong, and the PNS counterpart pns => p2ns.  Vacuous
/// when no antecedent holds.
TheoremReport hierarchy_checks(const Element& a, unsigned n);

/// Fixed nonzero weight w; the twisted product a*b = awb.
class WeightedContext {
public:
    explicit WeightedContext(Element w);
    const Element& weight() const { return w_; }
    Element star(const Element& a, const Element& b) const;
    /// a^{*m} = a (w a)^{m-1}, m >= 1.
    Element star_pow(const Element& a, unsigned m) const;

private:
    Element w_;
};

/// Evaluates three equivalent routes and returns the common verdict:
/// (1) aw n-strong, (2) wa n-strong, (3) (a^{*n} - a^{*2n}) w nilpotent /
/// in sqrt(J).  Route disagreement is a defect.
bool is_weighted_strong_invertible(const Element& a, const WeightedContext& ctx,
                                   const StrongKind& kind);

/// x = ((aw)^d)^2 a; verifies the weighted axioms before returning.
/// Throws not_weighted_strong_invertible when the test above fails.
Element weighted_strong_inverse(const Element& a, const WeightedContext& ctx,
                                const StrongKind& kind);

/// Weighted axioms of a candidate: x*a = a*x, x*a*x = x, and the defect
/// condition (a^{*n} - a*x) w nilpotent (GNS) or some *-power of
/// a^{*n} - a*x landing in J (PNS).
TheoremReport verify_weighted_axioms(const Element& a, const Element& x,
                                     const WeightedContext& ctx, const StrongKind& kind);

}  // namespace drazin
