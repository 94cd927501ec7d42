#ifndef FOURDESCENT_LOCALSOLVE_HPP
#define FOURDESCENT_LOCALSOLVE_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourdescent/covering.hpp"
#include "fourdescent/poly.hpp"
#include "fourdescent/rational.hpp"

namespace fourdescent {

// Raised when a residue tree hits its depth bound undecided. Must not happen
// on smooth models within the proven bound.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A certified local point. For a finite prime: coordinates modulo p^k
// (projective and primitive in the quadric case) together with the Hensel
// data that makes the point lift: a 2x2 Jacobian minor of valuation t with
// k >= 2t + 1. For the real place: a Newton approximation with its residual.
struct LocalWitness {
    Int prime;      // 0 encodes the real place
    int precision = 0;
    std::vector<Int> coords;

    // p-adic lifting data
    bool has_lifting_data = false;
    int minor_col_a = 0, minor_col_b = 0;
    int minor_valuation = 0;

    // real-place lifting data
    std::vector<double> real_coords;
    double residual = 0.0;
    double jacobian_min_sv = 0.0;
};

enum class Solubility { kSoluble, kInsoluble, kUnknown };

enum class CertificateKind {
    kLiftingWitness,
    kExhaustedResidueTree,
    kDefiniteForm,
    kSignAnalysis,
    kGoodReduction,
};

struct SolubilityVerdict {
    Int place;  // 0 encodes the real place; -1 the aggregate good-reduction entry
    Solubility status = Solubility::kUnknown;
    std::optional<LocalWitness> witness;
    CertificateKind certificate = CertificateKind::kSignAnalysis;
    std::string detail;

    bool soluble() const { return status == Solubility::kSoluble; }
};

struct BadPrimes {
    std::vector<Int> raw;       // provable superset of the bad-reduction primes
    std::vector<Int> filtered;  // raw minus primes certified redundant
};

// {2} together with the primes of lc * disc of the (square-content-reduced)
// quartic; a prime is filtered out only when the reduction mod p is smooth
// and carries a smooth F_p-point found by direct search.
BadPrimes bad_primes(const QuarticCurveModel& C);
// Same with the discriminant of the pencil determinant in place of lc * disc.
BadPrimes bad_primes(const QuadricIntersectionModel& QI);

// Decides Q_p-solubility of y^2 = g(x), negative x-valuations handled through
// the reversed-coefficient model. SOLUBLE carries a liftable stem; INSOLUBLE
// an exhausted residue tree.
SolubilityVerdict quartic_locally_soluble(const QuarticCurveModel& C, const Int& p,
                                          int depth_cap = 0);

// Level-by-level residue tree over primitive projective points mod p^k.
// Deterministic: the witness is the lexicographically least liftable node at
// the shallowest liftable depth.
SolubilityVerdict quadric_intersection_locally_soluble(const QuadricIntersectionModel& QI,
                                                       const Int& p, int depth_cap = 0);

// Re-checks a witness: both forms vanish mod p^k, and the lifting criterion
// holds. A witness carrying lifting data is re-checked in place; a bare seed
// (a bare "point mod p^k" seed) is extended branch-by-branch until the
// criterion fires or the branch dies.
bool verify_witness(const QuadricIntersectionModel& QI, const LocalWitness& w);

// Sign analysis: soluble iff the quartic attains a nonnegative value over R.
SolubilityVerdict real_soluble_quartic(const QuarticCurveModel& C);

// SOLUBLE by Newton certificate (residual < 1e-12, Jacobian rank 2);
// INSOLUBLE when some pencil member is definite (exact Sylvester-criterion
// test at rational samples separating the pencil-determinant roots);
// UNKNOWN otherwise; the one place where UNKNOWN is a legitimate verdict.
SolubilityVerdict real_soluble_quadric_intersection(const QuadricIntersectionModel& QI);

// Verdicts at the real place and at every filtered bad prime, plus a single
// aggregate entry recording solubility-by-good-reduction outside that set.
std::vector<SolubilityVerdict> everywhere_locally_soluble(const QuarticCurveModel& C,
                                                          int depth_cap = 0);
std::vector<SolubilityVerdict> everywhere_locally_soluble(const QuadricIntersectionModel& QI,
                                                          int depth_cap = 0);

// True when every entry is SOLUBLE.
bool all_soluble(const std::vector<SolubilityVerdict>& verdicts);

// Smooth F_p-point search on the reduction (Hensel certificate for
// good-reduction claims); exposed for the spot tests.
bool has_smooth_point_mod_p(const QuadricIntersectionModel& QI, const Int& p);
bool has_smooth_point_mod_p(const QuarticCurveModel& C, const Int& p);

}  // namespace fourdescent

#endif
