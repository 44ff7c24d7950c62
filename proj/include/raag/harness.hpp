#ifndef RAAG_HARNESS_HPP_
#define RAAG_HARNESS_HPP_

// Randomised checking of quasi-root uniqueness on generated instances.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quasiroot.hpp"
#include "structure.hpp"

namespace raag {

struct HarnessResult {
  std::uint64_t seed = 0;
  std::size_t decompositions = 0;
  std::size_t qualifying = 0;  // strongly non-split primitive roots
  bool sound = true;
  bool planted_found = false;
  bool roots_unique = true;
  std::size_t uniqueness_checks = 0;
  std::size_t step3_checks = 0;
  std::vector<std::string> violations;

  bool ok() const {
    return sound && planted_found && roots_unique && violations.empty();
  }
};

// Searches h exhaustively, then holds every qualifying decomposition against
// the first one, both through the uniqueness check and the proof pipeline.
inline HarnessResult run_instance(Instance const& in, std::uint64_t seed = 0,
                                  std::size_t cap = kDefaultCap) {
  HarnessResult r;
  r.seed = seed;
  auto found = find_quasi_roots(in.params, in.h, {true, cap});
  r.decompositions = found.size();
  std::vector<QuasiRootDecomposition const*> good;
  std::set<std::pair<Element, std::size_t>> powers;
  for (auto const& d : found) {
    if (!verify_quasi_root(in.params, d).ok()) {
      r.sound = false;
      r.violations.push_back("unsound decomposition g=" + d.g.str());
    }
    if (d.key() == in.planted.key()) {
      r.planted_found = true;
    }
    if (powers.emplace(d.g, d.n).second) {
      Element m = power(d.g, d.n);
      if (extract_nth_roots(m, d.n, cap).size() > 1) {
        r.roots_unique = false;
        r.violations.push_back("several " + std::to_string(d.n)
                               + "th roots of " + m.str());
      }
    }
    if (is_strongly_non_split(d.g) && is_primitive(d.g, cap)) {
      good.push_back(&d);
    }
  }
  r.qualifying = good.size();
  if (good.empty()) {
    return r;
  }
  Rational bound = in.params.lambda * static_cast<std::int64_t>(in.h.length());
  auto const& ref = *good.front();
  for (auto const* d : good) {
    auto u = check_uniqueness(in.params, ref, *d, cap);
    ++r.uniqueness_checks;
    if (!u.ok()) {
      r.violations.push_back("uniqueness " + to_string(u.status) + " g=" + d->g.str());
    }
    auto s = check_step3(in.h, as_power(ref), as_power(*d), bound, bound, cap);
    ++r.step3_checks;
    if (s.status == CheckReport::Status::theorem_violation) {
      r.violations.push_back("step3 violation g=" + d->g.str());
    }
  }
  return r;
}

inline HarnessResult run_seed(std::uint64_t seed, InstanceLimits const& limits = {},
                              std::size_t cap = kDefaultCap) {
  return run_instance(generate_instance(seed, limits), seed, cap);
}

}  // namespace raag

#endif  // RAAG_HARNESS_HPP_
