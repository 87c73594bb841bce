// Copyright 2026 The Chernoff Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHERNOFF_RANDOM_H_
#define CHERNOFF_RANDOM_H_

#include <cstdint>
#include <limits>

namespace chernoff {

// Counter-based stream keyed by (seed, stream). Each output is a SplitMix64
// finalization of key + counter * golden gamma, so stream j's sequence does
// not depend on how many other streams exist or in what order they run.
// Satisfies UniformRandomBitGenerator.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits. Bit-identical on every platform,
  // unlike std::uniform_real_distribution.
  double Uniform();

  // Uniform integer in [0, bound), bound >= 1, without modulo bias.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace chernoff

#endif  // CHERNOFF_RANDOM_H_
