#include "linlaw/series.hpp"

#include <string>

#include "linlaw/error.hpp"

namespace linlaw {

CategoricalSeries::CategoricalSeries(std::vector<State> states, std::size_t alphabet_size)
    : states_(std::move(states)), alphabet_size_(alphabet_size) {
  if (states_.empty()) throw Error(ErrorCode::BadParameter, "series must not be empty");
  if (alphabet_size_ == 0) throw Error(ErrorCode::BadParameter, "alphabet size must be positive");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] >= alphabet_size_) {
      throw Error(ErrorCode::BadParameter,
                  "state " + std::to_string(states_[i]) + " at position " + std::to_string(i) +
                      " outside alphabet of size " + std::to_string(alphabet_size_));
    }
  }
}

}  // namespace linlaw
