#pragma once

#include <map>

#include "rht/cdga.hpp"

namespace rht {

/// Label of a cohomology generator in a rank table. Checked classes are
/// pullbacks along the boundary inclusion, hat classes are coboundary
/// preimages of homology classes of the core complex.
struct ClassLabel {
    enum class Kind { Plain, Checked, Hat, Fundamental };
    std::string base;
    Kind kind = Kind::Plain;

    std::string text() const;
    bool operator==(const ClassLabel&) const = default;
};

struct ZeroProductFact {
    enum class Tag { DegreeReasons, ComputedInModel, PulledBackFromC, OddClassDuality };
    ClassLabel x, y;
    Tag tag = Tag::DegreeReasons;
};

std::string to_string(ZeroProductFact::Tag t);

struct MasseyFlag {
    int p1 = 0, p2 = 0, p3 = 0;
    std::string a1, a2, a3;  // base labels of the inputs
    std::string value;       // base label of the product class
    bool certified = false;  // indeterminacy certified zero on this space
};

/// Labeled graded rank data for a space, plus the product facts and Massey
/// bookkeeping the boundary/surgery arithmetic needs. Ranks are the label
/// counts per degree.
struct BettiTable {
    std::string label;
    bool manifold = false;
    int top = 0;     // manifold dimension, or top degree for a complex
    int conn = 1;    // the k of "(k-1)-connected"
    std::map<int, std::vector<ClassLabel>> classes;
    std::vector<ZeroProductFact> zero_products;
    std::optional<MasseyFlag> massey;
    bool k1_caveat = false;  // algebraic fixture only; see fixture notes
    int table_certified_through = 0;  // degrees where model ranks were checked

    int betti(int d) const;
    bool zero_product_known(const std::string& a, const std::string& b) const;
    bool poincare_symmetric() const;
};

/// A fixture: a truncated free CDGA model together with the rank table it
/// was validated against at build time.
struct Fixture {
    Cdga model;
    BettiTable table;
};

/// Two-cell-wedge cone fixtures. build_ck(k) carries ranks (1,1,1) in
/// degrees (k, k+1, 3k); build_ckprime(k) carries ranks (2,1) in degrees
/// (k, 3k-1). Both come with a canonical nonzero triple Massey product and
/// are validated against their tables before being returned.
Fixture build_ck(int k);
Fixture build_ckprime(int k);

/// One degree of the long-exact-sequence bookkeeping for the boundary of a
/// thickening: H^i(Z) splits as the pullback part and the coboundary part.
struct LESRule {
    int degree = 0;
    int pullback_rank = 0;   // b_i(C) - j_i
    int coboundary_rank = 0; // b_{n-i}(C) - j_{i+1}
    std::string j_note;
};

struct LESCertificate {
    BettiTable complex_table;
    int n = 0;  // boundary manifold dimension
    BettiTable z_table;
    std::vector<LESRule> rules;
};

/// Rank bookkeeping for the boundary Z of a regular neighborhood of a
/// complex C embedded with codimension >= conn+2 in (n+1)-space. The
/// connecting maps j* default to zero ranks; overrides are recorded.
LESCertificate boundary_les(const BettiTable& c, int n, const std::map<int, int>& j_ranks = {});

/// How one generator product in an indeterminacy summand was discharged.
enum class TransferRule { GroupVanishes, PulledBackProduct, OddHatDuality };

std::string to_string(TransferRule r);

struct SummandTrace {
    int group_degree = 0;
    bool certified = false;
    std::vector<std::pair<std::string, TransferRule>> generator_rules;

    bool uses(TransferRule r) const;
};

struct ObstructionCertificate {
    bool certified = false;
    SummandTrace left;   // a1 cup H^(p2+p3-1)
    SummandTrace right;  // H^(p1+p2-1) cup a3
    bool uses(TransferRule r) const { return left.uses(r) || right.uses(r); }
};

/// Attempts to certify that the Massey indeterminacy subspace on the
/// boundary manifold vanishes, generator by generator: (A) the relevant
/// group is zero, (B) a pulled-back product that already vanished in the
/// complex, (C) an odd hat class discharged through Poincare duality.
/// Non-certification is an outcome, not an error.
ObstructionCertificate transfer_massey(const LESCertificate& cert, int p1, int p2, int p3);

/// Marks the boundary table's Massey flag certified when the obstruction
/// certificate allows it.
BettiTable with_certified_massey(BettiTable table, const ObstructionCertificate& cert);

/// Rank arithmetic of an oriented connected sum: ranks add away from the
/// endpoints, the Massey flag persists from either summand.
BettiTable connected_sum(const BettiTable& m, const BettiTable& n);

/// Rank arithmetic of N = (M x S^1) with the circle surgered out:
/// b_k(N) = b_k(M) + b_{k-1}(M) in middle degrees. Requires a certified
/// Massey flag in degrees with p1+p2+p3 < dim M.
BettiTable s1_stabilize(const BettiTable& m, int p1, int p2, int p3);

enum class GeographyVerdict { FormalForced, NonformalExists };

/// Construction (or obstruction) tags for the geography answer.
enum class GeographyTag {
    DimAtMost4km2,        // n <= 4k-2 forces formality
    B1DimAtMost4k,        // b_k = 1, n <= 4k, k > 1 forces formality
    B0DimAtMost4kp2,      // b_k = 0, n <= 4k+2 forces formality
    K1B1LowDim,           // k = 1, b_1 = 1, n <= 4: cited low-dimensional result
    ShiftConnectivityUp,  // b_k = 0: use (k+1)-geography examples
    BoundaryOfCk,         // b_k = 1: boundary of thickened C_k
    StabilizedBoundary,   // b_k = 1, n = 5k: stabilize the (5k-1)-boundary
    CitedLowDimB1,        // k = 1, b_1 = 1, n = 5: cited example
    CitedSphereBundle,    // b_k = 2, n = 4k-1: cited sphere-bundle example
    BoundaryOfCkPrime,    // b_k = 2, n >= 4k: boundary of thickened C'_k
    CkPrimePlusSums       // b_k > 2: C'_k boundary plus connected sums
};

std::string to_string(GeographyTag t);

struct GeographyAnswer {
    int n = 0, k = 0, b = 0;
    GeographyVerdict verdict = GeographyVerdict::FormalForced;
    GeographyTag tag = GeographyTag::DimAtMost4km2;
    std::vector<std::string> recipe;
};

/// Existence of a non-formal compact orientable (k-1)-connected n-manifold
/// with b_k = b: yes exactly when n >= max(4k-1, 4k+3-2b).
GeographyAnswer geography(int n, int k, int b);

enum class ShortcutVerdict { FormalForced, Unknown };

struct ShortcutAnswer {
    ShortcutVerdict verdict = ShortcutVerdict::Unknown;
    std::string rule;
};

/// Sufficient conditions for formality from (n, k, b_k) and optionally
/// b_{k+1}; Unknown means the inputs alone do not force formality.
ShortcutAnswer formality_shortcut(int n, int k, int b_k, std::optional<int> b_k1 = {});

}  // namespace rht
