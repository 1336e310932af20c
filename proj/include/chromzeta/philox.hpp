#pragma once

#include <array>
#include <cstdint>

namespace chromzeta {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11), matching the
/// Random123 reference. One call maps (counter, key) to four 32-bit words.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key) noexcept;
};

/// Random words for one Monte Carlo trial.
///
/// The key is the 64-bit run seed, counter words 2..3 hold the 64-bit trial
/// index and counter words 0..1 count 4-word blocks inside the trial. Any
/// trial can therefore be regenerated without touching the others.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept;

  std::uint32_t next_u32() noexcept;
  // Uniform on [1, n] for 1 <= n <= 2^32 - 1, rejecting the biased top range.
  std::uint32_t uniform_1_to(std::uint32_t n) noexcept;

 private:
  Philox4x32::Key key_;
  std::uint64_t trial_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace chromzeta
