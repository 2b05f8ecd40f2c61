#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "drazin/theorems.hpp"

namespace drazin {

using Rng = std::mt19937_64;

/// Numerator uniform in [-bound, bound], denominator in [1, bound].
Rational random_rational(Rng& rng, int bound = 3);
Element random_element(const AlgebraPtr& algebra, Rng& rng, int bound = 3);
/// Draws until invertible (capped), falling back to the unit.
Element random_invertible(const AlgebraPtr& algebra, Rng& rng, int bound = 3);
/// Random idempotent: conjugated diagonal patterns for matrix algebras,
/// spectral idempotents split off rational eigenvalues otherwise.  May
/// return 0 or 1 when the algebra has nothing better (e.g. local algebras).
Element random_idempotent(const AlgebraPtr& algebra, Rng& rng, int bound = 3);
/// Conjugate of (idempotent + commuting nilpotent), scaled by a sign with
/// sign^n = 1; provably n-strong invertible in both modes.
Element random_strong_element(const AlgebraPtr& algebra, unsigned n, Rng& rng, int bound = 3);

enum class RecipeId {
    ab_zero,         // complementary-idempotent pair with ab = 0
    commuting,       // both strong, polynomials in shared data, conjugated together
    intertwined,     // a^2 b = aba and a b^2 = bab (commuting or ab = 0 construction)
    pi_conditioned,  // Pierce blocks assembled first, then a and b read off
    nilpotent_pair,  // two nilpotents satisfying both intertwine identities
};

std::optional<RecipeId> recipe_from_name(std::string_view name);
std::string_view recipe_name(RecipeId id);
/// The recipe that feeds each theorem id.
RecipeId recipe_for(TheoremId id);

struct PairRecipe {
    RecipeId id;
    AlgebraPtr algebra;
    unsigned n = 1;
    StrongMode mode = StrongMode::gns;
    std::uint64_t seed = 0;
    int entry_bound = 3;
    /// Refines the hypothesis set for pi_conditioned / intertwined recipes.
    std::optional<TheoremId> target;
};

/// Emits a pair provably satisfying the target hypothesis set; the set is
/// re-evaluated before returning and any miss is a defect.  Deterministic
/// under a fixed seed.
std::pair<Element, Element> generate_pair(const PairRecipe& recipe);

struct ViolationWitness {
    std::size_t index;
    std::uint64_t seed;
    unsigned n;
    Element a;
    Element b;
    TheoremReport report;
};

struct FuzzSummary {
    TheoremId theorem;
    StrongMode mode;
    std::size_t count = 0;
    std::size_t verified = 0;
    std::size_t vacuous = 0;
    std::size_t violations = 0;
    std::optional<ViolationWitness> first_violation;
};

/// Runs theorem_check on count recipe-generated pairs.  n = 0 cycles the
/// instance parameter through 1, 2, 3.  Deterministic under a fixed seed.
FuzzSummary fuzz(TheoremId id, const AlgebraPtr& algebra, std::size_t count, std::uint64_t seed,
                 StrongMode mode, unsigned n = 0);

}  // namespace drazin
