#include "mfdecomp/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "mfdecomp/errors.hpp"

namespace mfd {

WeightedLine::WeightedLine(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("weighted projective line needs positive weights");
}

std::int64_t h0_dim(const WeightedLine& line, std::int64_t m) {
    if (m < 0)
        return 0;
    std::int64_t count = 0;
    for (std::int64_t lambda = 0; lambda * line.a <= m; ++lambda)
        if ((m - lambda * line.a) % line.b == 0)
            ++count;
    return count;
}

std::int64_t h1_dim(const WeightedLine& line, std::int64_t m) {
    // μ <= -1 means λa = m - μb >= m + b.
    std::int64_t count = 0;
    for (std::int64_t lambda = -1; lambda * line.a >= m + line.b; --lambda) {
        const std::int64_t rest = m - lambda * line.a;
        if (rest % line.b == 0 && rest / line.b <= -1)
            ++count;
    }
    return count;
}

DualityReport serre_duality_check(const WeightedLine& line, std::int64_t lo, std::int64_t hi) {
    DualityReport report;
    for (std::int64_t m = lo; m <= hi; ++m) {
        ++report.checked;
        if (h0_dim(line, m) != h1_dim(line, -m - line.a - line.b)) {
            report.holds = false;
            if (!report.first_violation)
                report.first_violation = m;
        }
    }
    return report;
}

HilbertFunction::HilbertFunction(std::vector<std::int64_t> values) : values_(std::move(values)) {
    for (auto v : values_)
        if (v < 0)
            throw std::invalid_argument("Hilbert function values must be nonnegative");
}

HilbertFunction HilbertFunction::weighted_polynomial_ring(const WeightedLine& line, std::int64_t top) {
    std::vector<std::int64_t> v;
    for (std::int64_t k = 0; k <= top; ++k)
        v.push_back(h0_dim(line, k));
    return HilbertFunction(std::move(v));
}

std::int64_t HilbertFunction::at(std::int64_t k) const {
    if (k < 0)
        return 0;
    if (k > top())
        throw std::out_of_range("Hilbert function queried beyond its known range");
    return values_[static_cast<std::size_t>(k)];
}

TwistMultiset::TwistMultiset(std::vector<std::int64_t> mult) : mult_(std::move(mult)) {
    for (auto v : mult_)
        if (v < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
}

std::int64_t TwistMultiset::at(std::int64_t shift) const {
    if (shift < 0 || shift >= static_cast<std::int64_t>(mult_.size()))
        return 0;
    return mult_[static_cast<std::size_t>(shift)];
}

void TwistMultiset::set(std::int64_t shift, std::int64_t value) {
    if (shift < 0 || value < 0)
        throw std::invalid_argument("shift and multiplicity must be nonnegative");
    if (shift >= static_cast<std::int64_t>(mult_.size()))
        mult_.resize(static_cast<std::size_t>(shift) + 1, 0);
    mult_[static_cast<std::size_t>(shift)] = value;
}

std::int64_t TwistMultiset::max_shift() const {
    for (std::int64_t i = static_cast<std::int64_t>(mult_.size()) - 1; i >= 0; --i)
        if (mult_[static_cast<std::size_t>(i)] != 0)
            return i;
    return -1;
}

std::int64_t TwistMultiset::total() const {
    std::int64_t sum = 0;
    for (auto v : mult_)
        sum += v;
    return sum;
}

std::vector<std::int64_t> TwistMultiset::padded(std::size_t width) const {
    std::vector<std::int64_t> out(width, 0);
    for (std::size_t i = 0; i < width && i < mult_.size(); ++i)
        out[i] = mult_[i];
    return out;
}

bool operator==(const TwistMultiset& a, const TwistMultiset& b) {
    const auto width = std::max(a.mult_.size(), b.mult_.size());
    return a.padded(width) == b.padded(width);
}

HilbertFunction convolve(const TwistMultiset& mult, const HilbertFunction& block, std::int64_t top) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k <= top; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i <= std::min(k, mult.max_shift()); ++i)
            sum += mult.at(i) * block.at(k - i);
        out.push_back(sum);
    }
    return HilbertFunction(std::move(out));
}

TwistMultiset convolve(const TwistMultiset& a, const TwistMultiset& b) {
    const std::int64_t ta = a.max_shift(), tb = b.max_shift();
    if (ta < 0 || tb < 0)
        return TwistMultiset{};
    std::vector<std::int64_t> out(static_cast<std::size_t>(ta + tb + 1), 0);
    for (std::int64_t i = 0; i <= ta; ++i)
        for (std::int64_t j = 0; j <= tb; ++j)
            out[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    return TwistMultiset(std::move(out));
}

TwistMultiset deconvolve(const HilbertFunction& target, const HilbertFunction& block, std::int64_t max_shift,
                         std::int64_t verify_through) {
    if (block.at(0) != 1)
        throw std::invalid_argument("deconvolution block must satisfy block(0) = 1");
    if (max_shift < 0 || verify_through < max_shift)
        throw std::invalid_argument("need 0 <= max_shift <= verify_through");
    if (target.top() < verify_through || block.top() < verify_through)
        throw std::invalid_argument("Hilbert functions not known through verify_through");

    std::vector<std::int64_t> c(static_cast<std::size_t>(max_shift) + 1, 0);
    for (std::int64_t i = 0; i <= max_shift; ++i) {
        std::int64_t value = target.at(i);
        for (std::int64_t j = 1; j <= i; ++j)
            value -= block.at(j) * c[static_cast<std::size_t>(i - j)];
        if (value < 0)
            throw NegativeMultiplicity(static_cast<int>(i));
        c[static_cast<std::size_t>(i)] = value;
    }
    TwistMultiset result(std::move(c));
    for (std::int64_t k = 0; k <= verify_through; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i <= std::min(k, max_shift); ++i)
            sum += result.at(i) * block.at(k - i);
        if (sum != target.at(k))
            throw ResidualMismatch(static_cast<int>(k));
    }
    return result;
}

std::int64_t default_verify_through(std::int64_t max_shift, const WeightedLine& w) {
    return max_shift + w.a * w.b + std::max(w.a, w.b);
}

}  // namespace mfd
