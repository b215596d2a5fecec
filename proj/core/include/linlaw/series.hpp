#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace linlaw {

using State = std::uint32_t;

/// Finite sequence of state indices drawn from {0, ..., alphabet_size - 1}.
class CategoricalSeries {
public:
  /// Throws BadParameter if the series is empty or an element is outside
  /// the alphabet.
  CategoricalSeries(std::vector<State> states, std::size_t alphabet_size);

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const State> states() const noexcept { return states_; }
  State operator[](std::size_t i) const { return states_[i]; }

  friend bool operator==(const CategoricalSeries&, const CategoricalSeries&) = default;

private:
  std::vector<State> states_;
  std::size_t alphabet_size_;
};

enum class Provenance { Analytic, Empirical };

/// Categorical autocorrelation C_k for lags k = 0..k_max.
struct AutocorrSequence {
  std::vector<double> values;
  Provenance provenance = Provenance::Empirical;

  std::size_t k_max() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

}  // namespace linlaw
