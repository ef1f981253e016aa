#pragma once

#include "logtoric/integers.hpp"
#include "logtoric/monoid.hpp"

#include <vector>

namespace logtoric {

// Whether a zero pairing with a facet functional counts as saturated.  Under
// `strict` (the default) every pairing must be +1 or -1; under `permissive`
// zero pairings are allowed as well.
enum class PairingConvention { strict, permissive };

// True when the image of `alpha` generates the sharpened group of every
// rank-1 localization of the monoid, i.e. when alpha pairs to +1 or -1 with
// each facet functional (zero also allowed under the permissive convention).
// Errors if alpha lies outside the monoid's group.
bool is_saturated_element(const AffineMonoid& m, const IntVec& alpha,
                          PairingConvention convention = PairingConvention::strict);

// Membership test for the (possibly unsaturated) monoid M + N·alpha: whether
// x = m' + k·alpha for some m' in M and integer k >= 0.
bool adjoined_contains(const AffineMonoid& m, const IntVec& alpha, const IntVec& x);

struct AdjoinResult {
    // Generators of M + N·alpha: the Hilbert basis of M together with alpha.
    std::vector<IntVec> generators;
    // The saturation of M + N·alpha inside its group.
    AffineMonoid saturation;
    // Whether M + N·alpha already equals its saturation.
    bool is_saturated;
};

// The monoid M + N·alpha for alpha in M's group, with its saturation and a
// flag telling whether the two coincide.
AdjoinResult adjoin_element(const AffineMonoid& m, const IntVec& alpha);

// A finite-index extension L' of the monoid's lattice L = group(M), stored in
// scaled form: `extended_lattice_basis` is an HNF basis of scale·L', an honest
// integer lattice, so L' itself is (1/scale)·extended_lattice_basis.  The
// extended monoid (the cone of M intersected with L') is likewise stored
// scaled: an element x of `extended_monoid` represents x/scale.
struct KummerExtension {
    AffineMonoid base_monoid;
    IntMat extended_lattice_basis;
    Int scale;
    // The group index [L' : L].
    Int index;
    AffineMonoid extended_monoid;
};

// The extension L' = L + Z·(alpha/n) of the monoid's group, n >= 1.
KummerExtension kummer_extension(const AffineMonoid& m, const IntVec& alpha, const Int& n);

struct RootResult {
    Int n;
    KummerExtension extension;
};

// The least n for which alpha/n becomes a saturated element of the extension
// by L + Z·(alpha/n): the lcm of the absolute facet pairings of alpha.
// Requires a sharp monoid and nonzero pairing with every facet.
RootResult minimal_saturating_root(const AffineMonoid& m, const IntVec& alpha);

enum class FiberKind { same_point, empty, line_total_space };

struct FiberDescription {
    FiberKind kind;
    // Generators of the fiber's monoid (for line_total_space: HB(M) + alpha).
    std::vector<IntVec> monoid_generators;
    // The saturation of that monoid (equals it when monoid_saturated).
    AffineMonoid monoid;
    bool monoid_saturated;
    // alpha, generating the ideal N·alpha in the line_total_space case.
    IntVec ideal_generator;
};

// Classifies the fiber over the point cut out by alpha: the same point when
// alpha is in M, empty when -alpha is in M but alpha is not, and otherwise a
// line whose total space carries the monoid M + N·alpha with ideal N·alpha.
FiberDescription fiber_trichotomy(const AffineMonoid& m, const IntVec& alpha);

std::string to_string(FiberKind k);

}  // namespace logtoric
