#ifndef MFDECOMP_HILBERT_HPP
#define MFDECOMP_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace mfd {

/// The weighted projective line P(a, b).
struct WeightedLine {
    std::int64_t a;
    std::int64_t b;

    /// Throws std::invalid_argument unless a, b >= 1.
    WeightedLine(std::int64_t a_, std::int64_t b_);
};

/// dim H^0(P(a,b); O(m)): pairs (λ, μ) >= 0 with λa + μb = m.
std::int64_t h0_dim(const WeightedLine& line, std::int64_t m);
/// dim H^1(P(a,b); O(m)): pairs (λ, μ) < 0 with λa + μb = m.
std::int64_t h1_dim(const WeightedLine& line, std::int64_t m);

struct DualityReport {
    bool holds = true;
    std::int64_t checked = 0;
    /// First m with h0(m) != h1(-m-a-b).
    std::optional<std::int64_t> first_violation;
};

/// Checks h0(m) = h1(-m-a-b) for lo <= m <= hi.
DualityReport serre_duality_check(const WeightedLine& line, std::int64_t lo, std::int64_t hi);

/// Degree-indexed dimensions of a nonnegatively graded object, known for
/// degrees 0..top(). Values below degree 0 are zero.
class HilbertFunction {
  public:
    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<std::int64_t> values);

    /// h0_dim of P(a,b) in degrees 0..top, i.e. the Hilbert function of a
    /// free polynomial ring on generators of degrees a and b.
    static HilbertFunction weighted_polynomial_ring(const WeightedLine& line, std::int64_t top);

    std::int64_t top() const { return static_cast<std::int64_t>(values_.size()) - 1; }
    /// 0 for k < 0; throws std::out_of_range for k > top().
    std::int64_t at(std::int64_t k) const;
    const std::vector<std::int64_t>& values() const { return values_; }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

  private:
    std::vector<std::int64_t> values_;
};

/// Multiplicities c_i >= 0 of shifts i >= 0; finite support.
class TwistMultiset {
  public:
    TwistMultiset() = default;
    explicit TwistMultiset(std::vector<std::int64_t> mult);

    /// 0 outside the stored range.
    std::int64_t at(std::int64_t shift) const;
    void set(std::int64_t shift, std::int64_t value);
    /// Largest shift with nonzero multiplicity, or -1 when empty.
    std::int64_t max_shift() const;
    std::int64_t total() const;
    /// Multiplicities for shifts 0..width-1, zero-padded.
    std::vector<std::int64_t> padded(std::size_t width) const;

    friend bool operator==(const TwistMultiset& a, const TwistMultiset& b);

  private:
    std::vector<std::int64_t> mult_;
};

/// Σ_i mult(i)·block(k - i) for 0 <= k <= top.
HilbertFunction convolve(const TwistMultiset& mult, const HilbertFunction& block, std::int64_t top);
/// Convolution of two finitely supported multiplicity lists.
TwistMultiset convolve(const TwistMultiset& a, const TwistMultiset& b);

/// Recovers the multiset of shifted copies of `block` whose sum has Hilbert
/// function `target`.
///
/// Greedily solves c_i = target(i) - Σ_{j>=1} block(j)·c_{i-j} for
/// i = 0..max_shift, then verifies target(k) = Σ_i c_i·block(k-i) for every
/// k <= verify_through. Requires block.at(0) == 1 and both functions known
/// through verify_through.
///
/// Throws NegativeMultiplicity(i) when some c_i < 0 and ResidualMismatch(k)
/// when the convolution identity fails beyond max_shift.
TwistMultiset deconvolve(const HilbertFunction& target, const HilbertFunction& block, std::int64_t max_shift,
                         std::int64_t verify_through);

/// max_shift + a·b + max(a, b): one full period of the denominator
/// (1 - t^a)(1 - t^b) past the support.
std::int64_t default_verify_through(std::int64_t max_shift, const WeightedLine& block_weights);

}  // namespace mfd

#endif
