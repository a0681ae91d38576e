#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace chainrad {

/// Single-excitation collective state (1/sqrt(N)) sum_i C_i |g..e_i..g>
/// with every C_i equal to +1 or -1.
class SignState {
public:
    /// Throws DomainError if coeffs is empty or holds anything but +-1.
    explicit SignState(std::vector<int> coeffs);

    std::size_t size() const noexcept { return coeffs_.size(); }
    int operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const int> coeffs() const noexcept { return coeffs_; }
    double norm_factor() const;

    /// "+-+" style pattern.
    std::string pattern() const;

    friend bool operator==(const SignState&, const SignState&) = default;

private:
    std::vector<int> coeffs_;
};

/// Initial-time correlations <B_i^+ B_j> = C_i C_j / N of a sign state.
class CorrelationMatrix {
public:
    explicit CorrelationMatrix(const SignState& state);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }
    double trace() const;

private:
    std::size_t dim_;
    std::vector<double> entries_;
};

SignState symmetric_state(int n);
/// C_k = (-1)^(k+1), starting with +1.
SignState alternating_state(int n);
CorrelationMatrix pair_correlations(const SignState& state);

inline constexpr int kMaxEnumeratedAtoms = 20;

/// All 2^n sign patterns, lexicographic with +1 ordered before -1.
std::vector<SignState> enumerate_sign_states(int n);

}  // namespace chainrad
