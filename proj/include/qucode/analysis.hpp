#ifndef QUCODE_ANALYSIS_HPP
#define QUCODE_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qucode/quasi_uniform.hpp"

namespace qucode {

struct QuasiUniformityWitness {
  CoordinateSet subset = 0;
  Word first_tuple, second_tuple;
  std::size_t first_count = 0, second_count = 0;
};

struct QuasiUniformityReport {
  bool ok = true;
  std::optional<QuasiUniformityWitness> witness;
};

/// Support sizes |lambda(X_A)| for every subset A, stored exactly; entropies
/// are log_q of these and never materialized as floating point.
struct EntropyProfile {
  std::size_t n = 0;
  std::vector<std::uint64_t> support_sizes;  // indexed by CoordinateSet; [0] = 1

  std::uint64_t operator[](CoordinateSet a) const { return support_sizes.at(a); }
  std::uint64_t full() const { return support_sizes.back(); }
};

/// Coefficients A_0..A_n of W(x,y) = sum_j A_j x^(n-j) y^j.
struct WeightEnumerator {
  std::vector<std::int64_t> coeffs;

  std::size_t length() const { return coeffs.size() - 1; }
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

struct DistanceProfile {
  std::size_t center = 0;
  std::vector<std::uint64_t> counts;  // counts[r] = #codewords at distance r
};

struct AlmostAffineReport {
  bool ok = true;
  std::uint64_t q = 0;
  std::optional<CoordinateSet> witness;
  std::string reason;
};

/// Checks every nonempty coordinate subset (size, then lexicographic order).
QuasiUniformityReport verify_quasi_uniform(const QuasiUniformCode& code);

/**
 * Projection sizes for every subset. Throws std::invalid_argument when the
 * code is not quasi-uniform, and InvariantViolation when a group-built code
 * breaks |lambda(X_A)| = |G|/|G_A|.
 */
EntropyProfile entropy_profile(const QuasiUniformCode& code);

/**
 * Weight enumerator from support sizes alone:
 *
 *   W(x,y) = sum_A (|lambda(X_N)| / |lambda(X_A)|) (x-y)^|A| y^(n-|A|)
 *
 * with the empty subset contributing |lambda(X_N)| y^n. Exact integer
 * arithmetic; a non-integer ratio or a negative coefficient throws
 * std::domain_error.
 */
WeightEnumerator weight_enumerator_formula(const EntropyProfile& profile);

/// Hamming-distance census from codeword `center`.
DistanceProfile distance_profile(const QuasiUniformCode& code, std::size_t center);

/// Direct census A_j = #{ordered pairs at distance j} / |C|. Throws
/// std::domain_error when a count is not divisible by |C|.
WeightEnumerator weight_enumerator_census(const QuasiUniformCode& code);

/// Whether distance_profile is the same for every center.
bool is_distance_invariant(const QuasiUniformCode& code);

/// Brute-force minimum pairwise Hamming distance. Needs at least two codewords.
std::size_t min_distance(const QuasiUniformCode& code);

/**
 * n - max{|A| : G_A strictly contains G_N}, or n if no such A exists. Valid for
 * normal subgroups only; throws std::invalid_argument otherwise.
 */
std::size_t min_distance_group(const FiniteGroup& g, const std::vector<Subgroup>& subs);

/**
 * Whether every projection size |C_A| is a power of q. Alphabet sizes that are
 * not powers of q fail with the offending singleton as witness. Throws
 * std::invalid_argument for q < 2.
 */
AlmostAffineReport is_almost_affine(const QuasiUniformCode& code, std::uint64_t q);

/// Same, with q taken as the common alphabet size. Throws
/// std::invalid_argument on mixed alphabet sizes.
AlmostAffineReport is_almost_affine(const QuasiUniformCode& code);

/// "x^4 + 8*x*y^3": nonzero terms by descending x-degree.
std::string format_polynomial(const WeightEnumerator& w);

}  // namespace qucode

#endif  // QUCODE_ANALYSIS_HPP
