#pragma once
// Counting orbit points of Gamma = PSL2(Z[i]) by distance to the plane P.
//
// N(p, X) counts cosets in H\Gamma with sec v(gamma p) <= X, equivalently
// orbit points within hyperbolic distance arccosh X of P.  The enumerator
// walks coprime bottom rows (c, d): for sec v(gamma p) <= X the H-reduced
// representative of a coset satisfies
//
//   ||c p + d||^2 = y(p) / y(gamma p) <= 2 X y(p) / sqrt(3) =: B,
//
// because the reduced projection has e^u >= sqrt(3)/2 and cos v >= 1/X.  Each
// row is completed to one matrix; the remaining coset freedom inside a row is
// the purely imaginary translation (1, i n2; 0, 1), which shifts x2 by n2 and
// is scanned over the finite window |x2 + n2| <= y sqrt(X^2 - 1).  Kept
// matrices are deduplicated geometrically by coset_key, with sampled
// algebraic same_coset cross-checks guarding the dedup.
//
// The main term is (area(H\P) / vol(Gamma\H)) X^2 plus optional exceptional
// eigenvalue terms coeff * 2^{s-1}/s * X^s for s in (1, 2).  For the Picard
// group vol(Gamma\H) = Catalan/3 and area(H\P) = pi/6.

#include <cstdint>
#include <vector>

#include "sector/gaussian_int.hpp"
#include "sector/geometry.hpp"
#include "sector/reduction.hpp"
#include "sector/transforms.hpp"

namespace sector {

inline constexpr double kCatalan = 0.9159655941772190150546035149324;

struct ExceptionalTerm {
    double s;      // in (1, 2)
    double coeff;  // the combined period-times-eigenfunction coefficient
};

struct GroupConfig {
    double covolume = kCatalan / 3.0;
    double area_hp = 0.5235987755982988730771;  // pi/6
    std::vector<ExceptionalTerm> exceptional;

    static GroupConfig picard() { return GroupConfig{}; }
    double main_term(double X) const;
};

struct CountResult {
    std::int64_t n = 0;          // N(p, X)
    double main = 0.0;           // M(p, X)
    double err = 0.0;            // e(p, X) = n - main
    std::int64_t candidates_scanned = 0;
    std::int64_t cosets_kept = 0;
    double bound_B = 0.0;        // row-norm bound actually used (with safety)
    double audit_ratio = 0.0;    // max ||c_red p + d_red||^2 / B over kept cosets
};

struct CountOptions {
    int threads = 1;
    double safety = 1.05;           // inflation of the row bound B
    std::uint64_t check_seed = 1;   // seed for the dedup cross-check sampling
    int distinct_checks = 200;      // sampled distinct-key same_coset refutations
};

// N(p, X) over H\Gamma with the main term from cfg.  Requires X >= 1, y > 0,
// and a generic base point: an inconsistent dedup sample throws
// "dedup unsound at this base point".
CountResult count_sector(const Point& p, double X, const GroupConfig& cfg,
                         const CountOptions& opt = {});

struct OracleResult {
    std::int64_t count = 0;
    std::int64_t count_prev_depth = 0;
    bool stable = false;  // count == count at depth-1
};

// Brute-force reference: enumerates all determinant-1 matrices whose entries
// have |re|, |im| <= depth (up to +-I), filters sec v(gamma p) <= X, and
// deduplicates cosets pairwise with same_coset.  Cost grows like depth^8.
OracleResult oracle_count(const Point& p, double X, int depth);

// A(f)(p) = sum over H\Gamma of f(sec^2 v(gamma p)) for compactly supported
// f; with the sharp indicator of [1, X^2] this reproduces N(p, X).
double automorphic_sum(const Point& p, const RadialProfile& f, const GroupConfig& cfg,
                       const CountOptions& opt = {});

// Full-group ball count #{gamma in Gamma (mod +-I) : delta(p, gamma q) <= x},
// x >= 1; exact dedup by matrix identity.
std::int64_t ball_count(const Point& p, const Point& q, double x,
                        const CountOptions& opt = {});

// One deduplicated coset with its threshold data; exposed for the automorphic
// sum and for diagnostics.
struct CosetHit {
    CosetKey key;
    GMatrix reduced_rep;
    double sec_v;
};

struct EnumerationResult {
    std::vector<CosetHit> hits;  // sorted by key for deterministic order
    std::int64_t candidates_scanned = 0;
    double bound_B = 0.0;
    double audit_ratio = 0.0;
};

// Shared enumeration: all cosets with sec v(gamma p) <= threshold.
EnumerationResult enumerate_sector_cosets(const Point& p, double threshold,
                                          const CountOptions& opt = {});

}  // namespace sector
