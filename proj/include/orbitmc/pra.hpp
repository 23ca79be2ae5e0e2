#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitmc/group.hpp"
#include "orbitmc/perm.hpp"
#include "orbitmc/state.hpp"

namespace orbitmc {

/// Source of (near-)uniform random group elements. The reference returned by
/// next() stays valid until the following call.
class GroupElementSampler {
 public:
  virtual ~GroupElementSampler() = default;
  virtual const Permutation& next() = 0;
};

/// Product replacement sampler (plain variant, no accumulator).
///
/// Registers start as the generator list cycled to length r; each draw picks
/// distinct register indices i != j, a side and an exponent uniformly, replaces
/// register i with the one-multiplication product, and returns it. For the
/// trivial group every draw is the identity.
class PRASampler : public GroupElementSampler {
 public:
  static constexpr int kDefaultBurnin = 60;

  PRASampler(const PermGroup& group, std::uint64_t seed, int registers = -1,
             int burnin = kDefaultBurnin)
      : identity_(Permutation::identity(group.domain_size())), rng_(seed) {
    const auto& gens = group.generators();
    if (gens.empty()) return;  // trivial group: emit identity forever
    int k = static_cast<int>(gens.size());
    if (registers < 0) registers = std::max(10, 2 * k + 2);
    if (registers < k + 2) registers = k + 2;
    registers_.reserve(registers);
    for (int i = 0; i < registers; ++i) registers_.push_back(gens[i % k]);
    for (int i = 0; i < burnin; ++i) next();
  }

  const Permutation& next() override {
    if (registers_.empty()) return identity_;
    int r = static_cast<int>(registers_.size());
    std::uniform_int_distribution<int> pick(0, r - 1);
    int i = pick(rng_);
    int j = pick(rng_);
    while (j == i) j = pick(rng_);
    bool invert = coin(rng_) != 0;
    bool left = coin(rng_) != 0;
    const Permutation m = invert ? registers_[j].inverse() : registers_[j];
    registers_[i] = left ? compose(m, registers_[i]) : compose(registers_[i], m);
    return registers_[i];
  }

  const std::vector<Permutation>& registers() const { return registers_; }

 private:
  Permutation identity_;
  std::vector<Permutation> registers_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> coin{0, 1};
};

/// Exactly uniform draws over an explicitly enumerated group. Used wherever a
/// stationarity argument needs exact orbit uniformity (oracle paths, tests).
class ExactElementSampler : public GroupElementSampler {
 public:
  ExactElementSampler(const PermGroup& group, std::uint64_t seed,
                      std::size_t guard = 100'000)
      : elements_(enumerate_elements(group, guard)), rng_(seed) {}

  const Permutation& next() override {
    std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
    return elements_[pick(rng_)];
  }

  const std::vector<Permutation>& elements() const { return elements_; }

 private:
  std::vector<Permutation> elements_;
  std::mt19937_64 rng_;
};

/// One draw from the orbit of x: apply a (near-)uniform group element. By the
/// orbit-stabilizer theorem this is uniform on the orbit when the element draw
/// is uniform on the group.
inline State uniform_orbit_sample(const State& x, GroupElementSampler& sampler) {
  return act_on_state(sampler.next(), x);
}

}  // namespace orbitmc
