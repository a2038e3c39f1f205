#pragma once

#include <cstddef>
#include <vector>

#include "sparsepde/env_core.hpp"
#include "sparsepde/rng.hpp"

namespace sparsepde {

// Ring storage with FIFO eviction at capacity; sampling is uniform with
// replacement over the stored items.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void add(Transition t);
  std::size_t size() const { return data_.size(); }
  std::size_t capacity() const { return capacity_; }
  const Transition& operator[](std::size_t i) const { return data_[i]; }

  std::vector<const Transition*> sample(int batch_size, Rng& rng) const;

 private:
  std::vector<Transition> data_;
  std::size_t capacity_;
  std::size_t next_ = 0;
};

}  // namespace sparsepde
