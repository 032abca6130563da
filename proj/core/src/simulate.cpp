#include "spg/simulate.hpp"

#include <array>
#include <cmath>
#include <random>

#include "spg/rational.hpp"

namespace spg {

namespace {

constexpr std::size_t kWords = 8;  // 512 bits
using Words = std::array<std::uint64_t, kWords>;  // most significant first

struct Threshold {
  bool full = false;  // exactly 2^512: always taken
  Words words{};
};

Threshold make_threshold(const Rational& cum) {
  Threshold t;
  BigInt x = ceil(Rational(cum * pow2(64 * kWords)));
  if (x >= pow2(64 * kWords)) {
    t.full = true;
    return t;
  }
  std::size_t count = 0;
  Words buf{};
  mpz_export(buf.data(), &count, 1, sizeof(std::uint64_t), 0, 0, x.get_mpz_t());
  // Right-align: mpz_export writes only the significant words.
  for (std::size_t i = 0; i < count; ++i) t.words[kWords - count + i] = buf[i];
  return t;
}

// Uniform 512-bit integer whose words are drawn only when needed.
class LazyUniform {
 public:
  explicit LazyUniform(std::mt19937_64& rng) : rng_(rng) {}

  std::uint64_t word(std::size_t i) {
    while (drawn_ <= i) words_[drawn_++] = rng_();
    return words_[i];
  }

  bool less_than(const Threshold& t) {
    if (t.full) return true;
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = word(i);
      if (w != t.words[i]) return w < t.words[i];
    }
    return false;
  }

 private:
  std::mt19937_64& rng_;
  Words words_{};
  std::size_t drawn_ = 0;
};

}  // namespace

SimReport simulate(const MarkovChain& mc, VertexId v0, const SimConfig& cfg) {
  const std::size_t n = mc.size();
  if (v0 >= n) throw DomainError("start vertex out of range");
  if (cfg.episodes == 0) throw DomainError("episodes must be at least 1");
  if (cfg.step_cap < n) throw DomainError("step cap must be at least |V|");

  std::vector<std::vector<Threshold>> thresholds(n);
  for (VertexId v = 0; v < n; ++v) {
    Rational cum = 0;
    for (const Transition& t : mc.transitions[v]) {
      cum += t.prob;
      thresholds[v].push_back(make_threshold(cum));
    }
    if (!mc.target[v] && mc.transitions[v].empty()) {
      throw DomainError("non-target vertex without transitions");
    }
  }

  std::mt19937_64 rng(cfg.seed);
  SimReport r;
  r.episodes = cfg.episodes;
  std::size_t reached = 0;
  double mean = 0, m2 = 0;
  for (std::size_t e = 0; e < cfg.episodes; ++e) {
    VertexId v = v0;
    long double tp = 0;
    std::size_t steps = 0;
    while (!mc.target[v] && steps < cfg.step_cap) {
      const auto& out = mc.transitions[v];
      std::size_t pick = 0;
      if (out.size() > 1) {
        LazyUniform u(rng);
        while (pick + 1 < out.size() && !u.less_than(thresholds[v][pick])) ++pick;
      }
      tp += static_cast<long double>(out[pick].weight);
      v = out[pick].dst;
      ++steps;
    }
    if (!mc.target[v]) {
      ++r.truncated;
      continue;
    }
    ++reached;
    double x = static_cast<double>(tp);
    double delta = x - mean;
    mean += delta / static_cast<double>(reached);
    m2 += delta * (x - mean);
  }
  r.reach_fraction = static_cast<double>(reached) / static_cast<double>(cfg.episodes);
  r.mean_tp = mean;
  if (reached > 1) {
    double var = m2 / static_cast<double>(reached - 1);
    r.stderr_tp = std::sqrt(var / static_cast<double>(reached));
  }
  return r;
}

}  // namespace spg
