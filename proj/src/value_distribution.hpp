#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>

#include "bigint.hpp"

namespace niho3 {

// Exact multiset of integer values with big-integer multiplicities
// (correlation spectra, S(a,b) spectra). Merging adds counts, so any
// reduction order over worker partials yields the same multiset.
class ValueDistribution {
 public:
  using Map = std::map<int64_t, BigInt>;

  void add(int64_t value, const BigInt& count = 1);
  void merge(const ValueDistribution& other);
  // Removes `count` occurrences; more than present is a contract violation.
  void remove(int64_t value, const BigInt& count);

  BigInt total() const;
  BigInt count_of(int64_t value) const;
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  ValueDistribution scaled(const BigInt& factor) const;
  // Divides every count exactly; a remainder raises NonIntegralResult.
  ValueDistribution divided(const BigInt& divisor) const;
  // sum of value^r * count over the multiset.
  BigInt moment(int r) const;

  friend bool operator==(const ValueDistribution& a,
                         const ValueDistribution& b) {
    return a.entries_ == b.entries_;
  }

  // {"value": "count"} with decimal strings, ascending by value.
  nlohmann::ordered_json to_json() const;

 private:
  Map entries_;
};

}  // namespace niho3
