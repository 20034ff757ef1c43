#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fps/rational.hpp"
#include "fps/series.hpp"

namespace fps {

/// Finite sequence of exact rationals. offset selects the index of
/// values[0]: the triangular transforms are 1-based, the sectioned
/// binomial involution is 0-based.
struct RationalSequence {
  int offset = 1;  // 0 or 1
  std::vector<Rational> values;

  int length() const { return static_cast<int>(values.size()); }

  friend bool operator==(const RationalSequence&, const RationalSequence&) = default;
};

enum class KernelDirection { forward, inverse };

/// Lower-triangular transform kernel. Forward entries are
/// K[n][m] = [x^{n-m}] f(x)^m, inverse entries K[n][m] = [x^{n-m}] f(x)^{-n},
/// for 1 <= m <= n <= size. Immutable after construction.
class TransformKernel {
public:
  TransformKernel(int size, KernelDirection direction, std::string descriptor,
                  std::vector<std::vector<Rational>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  KernelDirection direction() const { return direction_; }
  const std::string& descriptor() const { return descriptor_; }
  const Rational& at(int n, int m) const;

private:
  KernelDirection direction_;
  std::string descriptor_;
  std::vector<std::vector<Rational>> rows_;  // rows_[n-1] holds m = 1..n
};

/// Materializes the kernel for f (f(0) != 0, f.order() >= size-1). Only
/// integer powers of f are taken, so any nonzero rational constant term is
/// fine.
TransformKernel build_kernel(const Series& f, int size, KernelDirection direction);

/// Forward: a_n = n * sum_{m<=n} K[n][m] b_m.
/// Inverse: b_n = (1/n) * sum_{m<=n} K[n][m] a_m.
/// Input must be 1-based; the result has length min(input, kernel size).
RationalSequence transform_apply(const TransformKernel& kernel, const RationalSequence& s);

/// The k-sectioned binomial involution: t_n = sum_m w_k(n,m) s_m with
/// w_k(n,m) = (-1)^{n/k} binom(m/k, n/k) when k divides n, else 0.
/// Only sequences supported on multiples of k are accepted: anything else
/// makes the defining sum infinite. Applying the transform twice returns
/// the input. Input must be 0-based.
RationalSequence binomial_involution(int k, const RationalSequence& s);

/// The two orthogonality sums
///   sum_{m=k}^n (1/m) [x^{n-m}] f^m [x^{m-k}] f^{-m}
///   sum_{m=k}^n  m    [x^{m-k}] f^k [x^{n-m}] f^{-n}
/// both of which vanish for k < n and equal (1/n, n) at k = n.
std::pair<Rational, Rational> orthogonality_sums(const Series& f, int k, int n);

/// [x^{m+n}] of the m-th power of the compositional inverse of beta,
/// computed by the partition sum over multiplicity vectors of n (not by
/// actually inverting beta). beta(0) = 0, beta'(0) != 0, order >= n+1.
Rational inverse_power_coefficient(const Series& beta, int m, int n);

/// Coefficient transform between a pair of mutually inverse series
/// alpha(x) = -x + a_1 x^2 + ... + a_N x^{N+1} and
/// beta(x)  = -x + b_1 x^2 + ... + b_N x^{N+1}:
/// returns (b_1..b_N) from (a_1..a_N). The map is an involution.
std::vector<Rational> inverse_pair_transform(const std::vector<Rational>& alpha_coeffs, int N);

/// Self-inverse series alpha(x) = -x + a_1 x^2 + ... + a_N x^{N+1} with
/// alpha(alpha(x)) = x mod x^{N+2}. Even-index coefficients are determined
/// by the odd-index ones.
struct SelfInverseSeries {
  int order = 0;                 // N
  std::vector<Rational> coeffs;  // a_1..a_N

  Series to_series() const;  // order N+1
};

/// The partition sum over multiplicity vectors of n restricted to parts
/// < n, weighted by (w+n)!/prod(k_i!) and powers of the given coefficients.
/// Vanishes for odd n when the coefficients come from a self-inverse
/// series; equals -2 (n+1)! a_n for even n.
Rational self_inverse_partial_sum(const std::vector<Rational>& coeffs, int n);

/// Completes odd-index coefficients a_1, a_3, ... (odd_coeffs[j] = a_{2j+1})
/// to a full self-inverse series of order N, solving for each even-index
/// coefficient in increasing order and checking the odd-index vanishing
/// conditions along the way (ConsistencyError on failure).
SelfInverseSeries self_inverse_complete(const std::vector<Rational>& odd_coeffs, int N);

/// Closed forms for the first four even-index coefficients (a_2, a_4, a_6,
/// a_8) of a self-inverse series in terms of a_1, a_3, a_5, a_7.
std::array<Rational, 4> self_inverse_low_even_coeffs(const Rational& a1, const Rational& a3,
                                                     const Rational& a5, const Rational& a7);

}  // namespace fps
