#include "chainrad/states.hpp"

#include <cmath>

#include "chainrad/errors.hpp"

namespace chainrad {

SignState::SignState(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a sign state needs at least one atom");
    long sum_sq = 0;
    for (int c : coeffs_) {
        if (c != 1 && c != -1) throw DomainError("sign state coefficients must be +1 or -1");
        sum_sq += c * c;
    }
    if (sum_sq != static_cast<long>(coeffs_.size()))
        throw DomainError("sign state normalization broken");
}

double SignState::norm_factor() const {
    return 1.0 / std::sqrt(static_cast<double>(coeffs_.size()));
}

std::string SignState::pattern() const {
    std::string s;
    s.reserve(coeffs_.size());
    for (int c : coeffs_) s.push_back(c > 0 ? '+' : '-');
    return s;
}

CorrelationMatrix::CorrelationMatrix(const SignState& state)
    : dim_(state.size()), entries_(dim_ * dim_) {
    const double inv_n = 1.0 / static_cast<double>(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) entries_[i * dim_ + j] = state[i] * state[j] * inv_n;
}

double CorrelationMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
    return t;
}

SignState symmetric_state(int n) {
    if (n < 1) throw DomainError("symmetric_state: n must be >= 1");
    return SignState(std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignState alternating_state(int n) {
    if (n < 1) throw DomainError("alternating_state: n must be >= 1");
    std::vector<int> c(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = k % 2 == 0 ? 1 : -1;
    return SignState(std::move(c));
}

CorrelationMatrix pair_correlations(const SignState& state) { return CorrelationMatrix(state); }

std::vector<SignState> enumerate_sign_states(int n) {
    if (n < 1 || n > kMaxEnumeratedAtoms)
        throw DomainError("enumerate_sign_states: n must lie in [1, " +
                          std::to_string(kMaxEnumeratedAtoms) + "]");
    const std::size_t count = std::size_t{1} << n;
    std::vector<SignState> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<int> c(static_cast<std::size_t>(n));
        // Most significant bit is atom 1; a set bit means -1.
        for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = (idx >> (n - 1 - k)) & 1 ? -1 : 1;
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace chainrad
